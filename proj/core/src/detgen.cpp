#include "detset/detgen.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "detset/errors.hpp"
#include "detset/structure.hpp"

namespace detset {

namespace {

// Calls visit(indices) for each k-subset of {0..n-1} in lexicographic order
// until it returns false.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return;
  std::vector<Element> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Element>(i);
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Subset search for determining sets of one fixed size. Elements that add no
// information given the prefix are skipped: a minimum determining set never
// contains one, so this loses no minimum set and keeps lexicographic order.
class DeterminingSearch {
 public:
  DeterminingSearch(const FiniteGroup& g, const AutGroup* aut, std::uint64_t budget)
      : g_(g), aut_(aut), budget_(budget) {
    if (!aut_ || aut_->capped) stab_search_.emplace(g);
  }

  const char* method() const { return stab_search_ ? "constrained-search" : "enumerated-aut"; }
  std::uint64_t nodes() const { return nodes_; }
  bool out_of_budget() const { return out_of_budget_; }

  // Visits every determining set of size k; visit returns false to stop.
  template <class Visit>
  void run(std::size_t k, Visit visit) {
    k_ = k;
    stop_ = false;
    std::vector<Element> prefix;
    if (stab_search_) {
      dfs_constrained(0, prefix, visit);
    } else {
      std::vector<std::uint32_t> stab(aut_->elements.size());
      for (std::uint32_t i = 0; i < stab.size(); ++i) stab[i] = i;
      dfs_enumerated(0, prefix, stab, visit);
    }
  }

 private:
  bool tick() {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  template <class Visit>
  void dfs_enumerated(Element start, std::vector<Element>& prefix,
                      const std::vector<std::uint32_t>& stab, Visit& visit) {
    if (prefix.size() == k_) {
      if (!tick()) return;
      if (stab.size() == 1 && !visit(ElementSubset(prefix))) stop_ = true;
      return;
    }
    const std::size_t remaining = k_ - prefix.size() - 1;
    const auto& elems = aut_->elements;
    std::vector<std::uint32_t> next;
    for (Element x = start; x < g_.order() && !stop_; ++x) {
      next.clear();
      for (std::uint32_t i : stab)
        if (elems[i](x) == x) next.push_back(i);
      if (next.size() == stab.size()) continue;  // x is fixed by the whole stabilizer
      // Each further element shrinks the stabilizer by at most its largest orbit (< n).
      std::uint64_t reach = 1;
      for (std::size_t r = 0; r < remaining && reach < next.size(); ++r) reach *= g_.order() - 1;
      if (reach < next.size()) {
        if (!tick()) return;
        continue;
      }
      prefix.push_back(x);
      dfs_enumerated(x + 1, prefix, next, visit);
      prefix.pop_back();
    }
  }

  template <class Visit>
  void dfs_constrained(Element start, std::vector<Element>& prefix, Visit& visit) {
    if (prefix.size() == k_) {
      if (!tick()) return;
      if (!stab_search_->witness(ElementSubset(prefix)) && !visit(ElementSubset(prefix)))
        stop_ = true;
      return;
    }
    const ElementSubset span = closure(g_, prefix);
    for (Element x = start; x < g_.order() && !stop_; ++x) {
      if (span.contains(x)) continue;  // fixed by every automorphism fixing the prefix
      prefix.push_back(x);
      dfs_constrained(x + 1, prefix, visit);
      prefix.pop_back();
    }
  }

  const FiniteGroup& g_;
  const AutGroup* aut_;
  std::optional<StabilizerSearch> stab_search_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t k_ = 0;
  bool stop_ = false;
  bool out_of_budget_ = false;
};

std::size_t generating_upper_bound(const FiniteGroup& g) { return greedy_generators(g).size(); }

}  // namespace

bool is_determining_set(const FiniteGroup& g, const ElementSubset& d) {
  return !stabilizer_witness(g, d).has_value();
}

DeterminingReport determining_number(const GroupPtr& gp, const Caps& caps, const AutGroup* aut) {
  const FiniteGroup& g = *gp;
  std::optional<AutGroup> own;
  if (!aut) {
    own = automorphism_group(gp, caps);
    aut = &*own;
  }
  DeterminingSearch search(g, aut, caps.node_budget);
  DeterminingReport report;
  report.descriptor = g.descriptor();
  for (std::size_t k = 0; k <= g.order(); ++k) {
    std::optional<ElementSubset> found;
    search.run(k, [&](ElementSubset d) {
      found = std::move(d);
      return false;
    });
    if (search.out_of_budget())
      throw BudgetExceeded("alpha search exceeded node budget for " + g.descriptor(), k,
                           generating_upper_bound(g));
    if (found) {
      report.alpha = k;
      report.witness = std::move(*found);
      report.method = search.method();
      report.nodes_explored = search.nodes();
      return report;
    }
  }
  throw Error("alpha search found no determining set");  // G itself always determines
}

std::vector<ElementSubset> minimum_determining_sets(const GroupPtr& gp, const Caps& caps,
                                                    const AutGroup* aut, std::size_t alpha_hint) {
  std::optional<AutGroup> own;
  if (!aut) {
    own = automorphism_group(gp, caps);
    aut = &*own;
  }
  const std::size_t alpha =
      alpha_hint != SIZE_MAX ? alpha_hint : determining_number(gp, caps, aut).alpha;
  DeterminingSearch search(*gp, aut, caps.subset_budget);
  std::vector<ElementSubset> out;
  search.run(alpha, [&](ElementSubset d) {
    out.push_back(std::move(d));
    return true;
  });
  if (search.out_of_budget())
    throw BudgetExceeded("minimum determining set listing exceeded subset budget", alpha, alpha);
  return out;
}

GeneratingReport generating_number(const GroupPtr& gp, const Caps& caps) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  GeneratingReport report;
  report.descriptor = g.descriptor();
  std::uint64_t nodes = 0;

  for (std::size_t k = 0; k <= n; ++k) {
    // (depth, subgroup) -> smallest last element already explored without success.
    std::map<std::pair<std::size_t, ElementSubset>, Element> failed;
    std::vector<Element> prefix;
    std::optional<ElementSubset> found;
    bool budget_hit = false;

    auto dfs = [&](auto&& self, Element start, const ElementSubset& span) -> bool {
      if (prefix.size() == k) {
        if (++nodes > caps.node_budget) {
          budget_hit = true;
          return true;
        }
        if (span.size() == n) {
          found = ElementSubset(prefix);
          return true;
        }
        return false;
      }
      for (Element x = start; x < n; ++x) {
        if (span.contains(x)) continue;  // adds nothing to the prefix
        prefix.push_back(x);
        ElementSubset next = closure(g, prefix);
        const auto key = std::make_pair(prefix.size(), next);
        auto it = failed.find(key);
        if (it != failed.end() && it->second <= x) {
          prefix.pop_back();
          continue;
        }
        if (self(self, x + 1, next)) return true;
        if (it == failed.end()) failed.emplace(key, x);
        else it->second = std::min(it->second, x);
        prefix.pop_back();
      }
      return false;
    };
    dfs(dfs, 0, closure(g, std::vector<Element>{}));
    if (budget_hit)
      throw BudgetExceeded("gamma search exceeded node budget for " + g.descriptor(), k,
                           generating_upper_bound(g));
    if (found) {
      report.gamma = k;
      report.witness = std::move(*found);
      report.nodes_explored = nodes;
      return report;
    }
  }
  throw Error("gamma search found no generating set");
}

DegVerdict deg(const GroupPtr& g, const Caps& caps) {
  return DegVerdict{determining_number(g, caps), generating_number(g, caps)};
}

DeterminingReport oracle_determining_number(const GroupPtr& gp, const Caps& caps) {
  const FiniteGroup& g = *gp;
  if (g.order() > caps.oracle_order)
    throw CapExceeded("oracle limited to order " + std::to_string(caps.oracle_order));
  Caps uncapped = caps;
  uncapped.aut_cap = UINT64_MAX;
  uncapped.aut_memory = UINT64_MAX;
  const AutGroup aut = automorphism_group(gp, uncapped);
  DeterminingReport report;
  report.descriptor = g.descriptor();
  report.method = "exhaustive-oracle";
  for (std::size_t k = 0; k <= g.order(); ++k) {
    std::optional<ElementSubset> found;
    for_each_combination(g.order(), k, [&](const std::vector<Element>& idx) {
      ++report.nodes_explored;
      ElementSubset d(idx);
      for (const auto& a : aut.elements)
        if (!a.is_identity() && a.fixes(d)) return true;
      found = std::move(d);
      return false;
    });
    if (found) {
      report.alpha = k;
      report.witness = std::move(*found);
      return report;
    }
  }
  throw Error("oracle found no determining set");
}

GeneratingReport oracle_generating_number(const GroupPtr& gp, const Caps& caps) {
  const FiniteGroup& g = *gp;
  if (g.order() > caps.oracle_order)
    throw CapExceeded("oracle limited to order " + std::to_string(caps.oracle_order));
  GeneratingReport report;
  report.descriptor = g.descriptor();
  for (std::size_t k = 0; k <= g.order(); ++k) {
    std::optional<ElementSubset> found;
    for_each_combination(g.order(), k, [&](const std::vector<Element>& idx) {
      ++report.nodes_explored;
      if (closure(g, idx).size() != g.order()) return true;
      found = ElementSubset(idx);
      return false;
    });
    if (found) {
      report.gamma = k;
      report.witness = std::move(*found);
      return report;
    }
  }
  throw Error("oracle found no generating set");
}

}  // namespace detset
