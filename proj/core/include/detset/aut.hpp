#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "detset/caps.hpp"
#include "detset/group.hpp"

namespace detset {

// An automorphism stored as the image of every element.
struct Automorphism {
  std::vector<Element> image;

  static Automorphism identity(std::size_t order);

  Element operator()(Element x) const { return image[x]; }
  bool is_identity() const;
  bool fixes(const ElementSubset& s) const;
  // (this ∘ other)(x) = this(other(x))
  Automorphism after(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

// Exhaustive check: bijection, identity fixed, multiplicative.
bool is_automorphism(const FiniteGroup& g, std::span<const Element> image);

// Per-element invariants preserved by every automorphism (and by every
// isomorphism between groups). Equal fingerprints are necessary for x and
// sigma(x) to match, which is all the search relies on.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  std::size_t square_roots = 0;              // #{y : y^2 = x}
  std::vector<std::size_t> power_orders;     // orders of x^d for each divisor d of ord(x)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

std::vector<Fingerprint> fingerprints(const FiniteGroup& g);

// Generating set chosen greedily: repeatedly add the element of largest order
// (smallest index on ties) outside the closure of what has been chosen,
// starting from the closure of `start`.
std::vector<Element> greedy_generators(const FiniteGroup& g,
                                       const ElementSubset& start = {});

// Backtracking over images of a generating list. At every level the partial
// map is extended to the subgroup generated so far and checked for
// consistency, which makes every completed map a homomorphism.
struct HomSearchSpec {
  const FiniteGroup* domain = nullptr;
  const FiniteGroup* codomain = nullptr;
  std::vector<Element> generators;                // must generate the domain
  std::vector<std::vector<Element>> candidates;   // allowed images per generator
  bool injective = false;
};

struct HomSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  bool exhausted_budget = false;
};

// Calls `visit` with the full image array of every homomorphism found, in
// lexicographic order of generator images. Returning false stops the search.
HomSearchStats search_homomorphisms(
    const HomSearchSpec& spec,
    const std::function<bool(std::span<const Element>)>& visit,
    std::uint64_t node_budget = UINT64_MAX);

struct AutGroup {
  GroupPtr group;
  std::vector<Automorphism> generators;
  std::vector<Automorphism> elements;  // sorted; empty when capped
  std::uint64_t order = 0;             // always exact
  bool capped = false;                 // elements were not materialized
};

// Enumerates Aut(G) when it fits `caps.aut_cap` and `caps.aut_memory`;
// otherwise reports the exact order from a chain of stabilizer-orbit searches
// together with generators, and sets capped.
AutGroup automorphism_group(const GroupPtr& g, const Caps& caps = {});

// Generators of an enumerated automorphism group: one element per nontrivial
// orbit point along the stabilizer chain of `base`.
std::vector<Automorphism> transversal_generators(const std::vector<Automorphism>& elements,
                                                 const std::vector<Element>& base);

// Exact |Aut G| without materializing it, plus transversal generators.
std::pair<std::uint64_t, std::vector<Automorphism>> automorphism_order(const FiniteGroup& g);

// Nontrivial automorphism fixing every element of `fixed`, if one exists.
std::optional<Automorphism> stabilizer_witness(const FiniteGroup& g, const ElementSubset& fixed,
                                               HomSearchStats* stats = nullptr);

// Caches fingerprints for repeated stabilizer searches on one group.
class StabilizerSearch {
 public:
  explicit StabilizerSearch(const FiniteGroup& g);
  std::optional<Automorphism> witness(const ElementSubset& fixed,
                                      HomSearchStats* stats = nullptr) const;
  const std::vector<Fingerprint>& fingerprints() const { return fp_; }

 private:
  const FiniteGroup* g_;
  std::vector<Fingerprint> fp_;
  std::vector<std::size_t> orders_;
};

// All homomorphisms h -> k. Throws CapExceeded when the candidate product
// exceeds caps.hom_candidates.
std::vector<GroupHom> hom_set(const GroupPtr& h, const GroupPtr& k, const Caps& caps = {});

std::optional<GroupHom> isomorphism(const GroupPtr& g, const GroupPtr& h);
inline bool isomorphic(const GroupPtr& g, const GroupPtr& h) {
  return isomorphism(g, h).has_value();
}

// y -> g y g^-1
Automorphism inner_automorphism(const FiniteGroup& g, Element x);

// Oracle: every bijection fixing the identity, checked exhaustively.
// Only feasible for tiny groups; throws CapExceeded above `max_order`.
std::vector<Automorphism> exhaustive_automorphisms(const FiniteGroup& g, std::size_t max_order = 10);

}  // namespace detset
