#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "detset/aut.hpp"
#include "detset/caps.hpp"
#include "detset/group.hpp"

namespace detset {

struct DeterminingReport {
  std::string descriptor;
  std::size_t alpha = 0;
  ElementSubset witness;       // lexicographically least minimum determining set
  std::string method;          // enumerated-aut | constrained-search | exhaustive-oracle
  std::uint64_t nodes_explored = 0;
};

struct GeneratingReport {
  std::string descriptor;
  std::size_t gamma = 0;
  ElementSubset witness;       // lexicographically least minimum generating set
  std::uint64_t nodes_explored = 0;
};

// True iff only the identity automorphism fixes d pointwise.
bool is_determining_set(const FiniteGroup& g, const ElementSubset& d);

// Iterative deepening over subset sizes. Uses the materialized Aut(G) when it
// fits the caps, per-subset stabilizer searches otherwise. A precomputed
// AutGroup for the same group may be passed to avoid recomputation.
// Throws BudgetExceeded (with bounds) when caps.node_budget runs out.
DeterminingReport determining_number(const GroupPtr& g, const Caps& caps = {},
                                     const AutGroup* aut = nullptr);

// Throws BudgetExceeded when caps.node_budget runs out.
GeneratingReport generating_number(const GroupPtr& g, const Caps& caps = {});

struct DegVerdict {
  DeterminingReport alpha;
  GeneratingReport gamma;
  bool is_deg() const { return alpha.alpha == gamma.gamma; }
};
DegVerdict deg(const GroupPtr& g, const Caps& caps = {});
inline bool is_deg(const GroupPtr& g, const Caps& caps = {}) { return deg(g, caps).is_deg(); }

// Every determining set of size alpha(G), in lexicographic order.
// Throws BudgetExceeded when the listing exceeds caps.subset_budget.
std::vector<ElementSubset> minimum_determining_sets(const GroupPtr& g, const Caps& caps = {},
                                                    const AutGroup* aut = nullptr,
                                                    std::size_t alpha_hint = SIZE_MAX);

// Brute-force references: plain subset enumeration, no pruning.
// Throw CapExceeded above caps.oracle_order.
DeterminingReport oracle_determining_number(const GroupPtr& g, const Caps& caps = {});
GeneratingReport oracle_generating_number(const GroupPtr& g, const Caps& caps = {});

}  // namespace detset
