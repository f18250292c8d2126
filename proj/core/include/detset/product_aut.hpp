#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "detset/aut.hpp"
#include "detset/caps.hpp"
#include "detset/families.hpp"
#include "detset/group.hpp"

namespace detset {

// For an ordered list X = (g_1, ..., g_t) of product elements, entry (i, j) is
// the i-th component of g_j.
struct CharacteristicMatrix {
  std::vector<GroupPtr> factors;
  std::vector<std::vector<Element>> grid;  // grid[i][j], one row per factor

  std::size_t rows() const { return grid.size(); }
  std::size_t columns() const { return grid.empty() ? 0 : grid.front().size(); }
  // Distinct entries of row i as a subset of factor i.
  ElementSubset row_set(std::size_t i) const;
};

// Throws InvalidArgument if some element is not an element of the product.
CharacteristicMatrix characteristic_matrix(const DirectProduct& g, std::span<const Element> x);
std::vector<Element> reassemble(const DirectProduct& g, const CharacteristicMatrix& m);

// Matrix (phi_ij) of maps H_j -> H_i. Diagonal entries are automorphisms of
// H_i; off-diagonal entries are homomorphisms into the center of H_i.
struct BidwellMatrix {
  std::size_t m = 0;
  std::vector<GroupHom> entries;  // row-major, entries[i * m + j] : H_j -> H_i

  const GroupHom& at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }
  GroupHom& at(std::size_t i, std::size_t j) { return entries[i * m + j]; }
};

BidwellMatrix identity_bidwell(const DirectProduct& g);

// Component i of the image is phi_i1(h_1) ... phi_im(h_m), multiplied in H_i.
Element bidwell_apply(const DirectProduct& g, const BidwellMatrix& a, Element x);
// The induced map on the whole product.
std::vector<Element> bidwell_map(const DirectProduct& g, const BidwellMatrix& a);

struct BidwellAutGroup {
  AutGroup aut;                        // elements sorted, never capped
  std::vector<BidwellMatrix> matrices; // accepted matrices, same order as aut.elements
  std::uint64_t candidates = 0;        // grids examined
  std::uint64_t rejected = 0;          // grids whose induced map was not an automorphism
};

// Enumerates every candidate grid and keeps those that induce automorphisms.
// Requires pairwise coprime factor orders unless the caller asserts that the
// factors share no common direct factor; throws InvalidArgument otherwise.
// Throws CapExceeded when the number of grids exceeds caps.aut_cap.
BidwellAutGroup bidwell_aut_group(const DirectProduct& g, const Caps& caps = {},
                                  bool assert_no_common_direct_factor = false);

// For a determining set X of the product: true iff every row of its
// characteristic matrix is a determining set of the matching factor.
// Returns nullopt (check skipped) when X is not determining.
std::optional<bool> row_criterion_check(const DirectProduct& g, std::span<const Element> x);

bool pairwise_coprime(std::span<const GroupPtr> factors);

}  // namespace detset
