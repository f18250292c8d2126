#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "detset/caps.hpp"
#include "detset/group.hpp"

namespace detset {

// <S>: smallest subgroup containing S.
ElementSubset closure(const FiniteGroup& g, const ElementSubset& s);
ElementSubset closure(const FiniteGroup& g, const std::vector<Element>& gens);
bool generates(const FiniteGroup& g, const ElementSubset& s);

ElementSubset centralizer(const FiniteGroup& g, const ElementSubset& s);
ElementSubset center(const FiniteGroup& g);

std::size_t element_order(const FiniteGroup& g, Element x);
std::vector<std::size_t> element_orders(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

// Classes ordered by smallest member; the first class is {identity}.
std::vector<ElementSubset> conjugacy_classes(const FiniteGroup& g);
// Size of the conjugacy class of every element.
std::vector<std::size_t> conjugacy_class_sizes(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const ElementSubset& s);
bool is_normal(const FiniteGroup& g, const ElementSubset& s);

// Every subgroup, sorted by (size, members). Throws CapExceeded above caps.subgroup_scan.
std::vector<ElementSubset> subgroups(const FiniteGroup& g, const Caps& caps = {});
std::vector<ElementSubset> normal_subgroups(const FiniteGroup& g, const Caps& caps = {});
bool is_simple(const FiniteGroup& g, const Caps& caps = {});

// Builds a standalone group from a subgroup; members()[k] becomes index k.
FiniteGroup promote(const FiniteGroup& g, const ElementSubset& h);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
  std::vector<Element> representatives;  // smallest member of each coset
};
// Throws InvalidArgument when n is not a normal subgroup.
Quotient quotient(const GroupPtr& g, const ElementSubset& n);

ElementSubset derived_subgroup(const FiniteGroup& g);

struct NilpotencyReport {
  bool is_nilpotent = false;
  std::vector<ElementSubset> series;  // Z_0 = {1} ⊆ Z_1 ⊆ ... up to stabilization
};
NilpotencyReport upper_central_series(const GroupPtr& g);
inline bool is_nilpotent(const GroupPtr& g) { return upper_central_series(g).is_nilpotent; }

// Prime factorization helpers.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime_above(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
// Number of prime divisors of |G| counted with multiplicity.
unsigned chi(std::uint64_t order);
inline unsigned chi(const FiniteGroup& g) { return chi(g.order()); }
bool is_prime_power(std::uint64_t n);

}  // namespace detset
