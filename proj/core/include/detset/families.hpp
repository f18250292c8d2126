#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detset/caps.hpp"
#include "detset/group.hpp"

namespace detset {

FiniteGroup cyclic(std::size_t n, const Caps& caps = {});
// Symmetries of the regular n-gon, order 2n. Elements r^i and s r^i.
FiniteGroup dihedral(std::size_t n, const Caps& caps = {});
// Permutations of {1..n} in lexicographic order (identity first).
FiniteGroup symmetric(std::size_t n, const Caps& caps = {});
FiniteGroup alternating(std::size_t n, const Caps& caps = {});
// Dicyclic group of order n = 4m, n >= 8; n = 8 is the quaternion group.
FiniteGroup dicyclic(std::size_t n, const Caps& caps = {});
FiniteGroup elementary_abelian(std::size_t p, std::size_t k, const Caps& caps = {});
FiniteGroup abelian(std::span<const std::size_t> factor_orders, const Caps& caps = {});
// Upper unitriangular n x n matrices over F_p.
FiniteGroup unitriangular(std::size_t n, std::size_t p, const Caps& caps = {});

// Dispatch by family name: cyclic, dihedral, symmetric, alternating,
// quaternion, dicyclic, elementary_abelian, abelian, unitriangular.
FiniteGroup construct(std::string_view family, std::span<const std::size_t> params,
                      const Caps& caps = {});

// H_1 x ... x H_m with mixed-radix indexing, first factor most significant.
class DirectProduct {
 public:
  explicit DirectProduct(std::vector<GroupPtr> factors, const Caps& caps = {},
                         std::string descriptor = {});

  const GroupPtr& group() const { return group_; }
  const std::vector<GroupPtr>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }

  std::vector<Element> decompose(Element x) const;
  Element compose(std::span<const Element> parts) const;
  Element component(Element x, std::size_t i) const {
    return static_cast<Element>((x / strides_[i]) % factors_[i]->order());
  }

  GroupHom embedding(std::size_t i) const;
  GroupHom projection(std::size_t i) const;

 private:
  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> strides_;
  GroupPtr group_;
};

inline DirectProduct direct_product(std::vector<GroupPtr> factors, const Caps& caps = {}) {
  return DirectProduct(std::move(factors), caps);
}

}  // namespace detset
