#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "detset/aut.hpp"
#include "detset/caps.hpp"
#include "detset/group.hpp"

namespace detset {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// Dense n x n matrix over F_p.
class MatrixFp {
 public:
  MatrixFp(std::size_t n, std::uint32_t p);
  static MatrixFp identity(std::size_t n, std::uint32_t p);
  static MatrixFp scalar(std::size_t n, std::uint32_t p, std::uint32_t c);
  static MatrixFp diagonal(const std::vector<std::uint32_t>& d, std::uint32_t p);
  // J = sum of E_{i, n-i+1}
  static MatrixFp antidiagonal(std::size_t n, std::uint32_t p);
  // E_{i,j}, zero-based indices
  static MatrixFp unit(std::size_t n, std::uint32_t p, std::size_t i, std::size_t j);

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * n_ + j] = static_cast<std::uint32_t>(v % p_); }

  MatrixFp operator+(const MatrixFp& o) const;
  MatrixFp operator-(const MatrixFp& o) const;
  MatrixFp operator*(const MatrixFp& o) const;
  std::uint32_t det() const;
  // Throws InvalidArgument when singular.
  MatrixFp inverse() const;
  MatrixFp transpose() const;
  MatrixFp inverse_transpose() const { return inverse().transpose(); }
  // J X J, i.e. entry (i, j) becomes entry (n-1-i, n-1-j).
  MatrixFp reversed() const;

  bool is_upper_triangular() const;
  bool is_scalar() const;
  std::vector<std::uint32_t> diagonal_entries() const;
  // Integer code of the upper-triangular part, row-major base p.
  std::uint64_t upper_code() const;
  std::string label() const;  // "a,b,c;0,d,e;0,0,f"

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

struct TriangularSpec {
  std::size_t n = 2;
  std::uint32_t p = 3;
  bool det_one = true;  // ST_n(F_p) when set, T*_n(F_p) otherwise

  // (p-1)^(n-d) p^(n(n-1)/2), d = 1 for determinant one.
  std::uint64_t order() const;
  std::string descriptor() const;
};

// Concrete group of upper-triangular invertible matrices, identity first,
// the rest in increasing upper_code order.
struct TriangularGroup {
  TriangularSpec spec;
  GroupPtr group;
  std::vector<MatrixFp> matrices;
  std::unordered_map<std::uint64_t, Element> index;  // upper_code -> element
  std::vector<Element> generators;                   // greedy generating set

  std::optional<Element> find(const MatrixFp& m) const;
};

// Every matrix of the given shape in increasing upper_code order.
std::vector<MatrixFp> upper_triangular_matrices(const TriangularSpec& spec);

// Throws InvalidArgument for n < 2 or p not prime, CapExceeded above caps.max_order.
TriangularGroup st_group(const TriangularSpec& spec, const Caps& caps = {});

struct BCPair {
  MatrixFp b;  // diag(1, 2, ..., p-2)
  MatrixFp c;  // I + sum E_{i,i+1}
};
// Throws InvalidArgument unless p is a prime >= 5.
BCPair theorem_BC(std::uint32_t p);

// Dimension over F_p of the upper-triangular matrices commuting with every
// matrix in `with`, by exact Gaussian elimination.
std::size_t upper_triangular_centralizer_dim(const std::vector<MatrixFp>& with);
std::size_t joint_centralizer_dim(std::uint32_t p);

std::uint32_t case_ii_corner(std::uint32_t p);  // (1,1) entry of J B^-T J
bool case_ii_excluded(std::uint32_t p);

enum class StructuralCase { conjugation, inverse_transpose };

// Case conjugation: A -> Q A Q^-1. Case inverse_transpose: A -> Q (J A^-T J) Q^-1.
MatrixFp structural_image(const MatrixFp& q, StructuralCase c, const MatrixFp& a);
// The induced map on a concrete group, verified multiplicative on generators
// and bijective. Throws InvalidArgument when Q is singular or not upper
// triangular, Error when the map leaves the group or is not an automorphism.
Automorphism structural_automorphism(const TriangularGroup& g, const MatrixFp& q, StructuralCase c);

// Lower bound for gamma(ST_n(F_p)) from the surjection onto (F_p^*)^(n-1).
std::size_t diag_quotient_gamma_bound(const TriangularSpec& spec);

// tau: first n-1 diagonal entries, as a homomorphism onto Z_(p-1)^(n-1)
// (discrete logarithms to the smallest primitive root).
GroupHom tau_homomorphism(const TriangularGroup& g, const Caps& caps = {});

struct ConcreteBCChecks {
  std::uint64_t order = 0;
  std::uint64_t structural_maps = 0;        // maps built over all Q and both cases
  std::uint64_t structural_verified = 0;    // of which passed verification
  std::uint64_t distinct_conjugation_maps = 0;
  std::uint64_t expected_distinct = 0;      // |T*_n| / (p-1)
  std::uint64_t stabilizer_nontrivial = 0;  // maps fixing B and C that are not the identity
  bool tau_homomorphism = false;
  bool tau_surjective = false;
  std::size_t tau_kernel_size = 0;
  bool kernel_is_unitriangular = false;
  bool quotient_matches = false;            // G/ker tau isomorphic to the tau codomain
  std::size_t quotient_gamma = 0;
};

struct BCVerdict {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint32_t det_b = 0;
  std::uint32_t det_c = 0;
  std::size_t c_order = 0;
  bool nonabelian = false;  // B and C do not commute, so alpha >= 2
  std::size_t centralizer_dim = 0;
  std::uint32_t case_ii_corner = 0;
  bool case_ii_excluded = false;
  std::size_t gamma_lower_bound = 0;
  std::size_t alpha = 0;
  bool conditional = true;  // relies on the classification of Aut(ST_n(F_p))
  std::optional<ConcreteBCChecks> concrete;

  bool holds() const;
};

// Certifies that no structural automorphism fixes both B and C. With
// `concrete` set, also materializes ST_{p-2}(F_p) and checks the structural
// family, the stabilizer and the tau quotient on it.
BCVerdict verify_BC_determining(std::uint32_t p, bool concrete = false, const Caps& caps = {});

}  // namespace detset
