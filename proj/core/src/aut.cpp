#include "detset/aut.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detset/errors.hpp"
#include "detset/structure.hpp"

namespace detset {

namespace {

constexpr Element kUnmapped = static_cast<Element>(-1);

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

class Searcher {
 public:
  Searcher(const HomSearchSpec& spec, const std::function<bool(std::span<const Element>)>& visit,
           std::uint64_t budget)
      : spec_(spec), visit_(visit), budget_(budget) {
    const std::size_t depth = spec.generators.size();
    const std::size_t n = spec.domain->order();
    maps_.assign(depth + 1, std::vector<Element>(n, kUnmapped));
    mapped_.resize(depth + 1);
    used_.assign(depth + 1, std::vector<char>(spec.injective ? spec.codomain->order() : 0, 0));
    images_.assign(depth, kIdentity);
    maps_[0][kIdentity] = kIdentity;
    mapped_[0].push_back(kIdentity);
    if (spec.injective) used_[0][kIdentity] = 1;
  }

  HomSearchStats run() {
    if (spec_.candidates.size() != spec_.generators.size())
      throw InvalidArgument("hom search: one candidate list per generator required");
    dfs(0);
    return stats_;
  }

 private:
  bool assign(std::size_t level, Element y, Element v, std::vector<Element>& fresh) {
    auto& map = maps_[level];
    if (map[y] != kUnmapped) return map[y] == v;
    if (spec_.injective) {
      if (used_[level][v]) return false;
      used_[level][v] = 1;
    }
    map[y] = v;
    mapped_[level].push_back(y);
    fresh.push_back(y);
    return true;
  }

  // Fills level d+1 from level d with generator d sent to c.
  bool extend(std::size_t d, Element c) {
    const FiniteGroup& dom = *spec_.domain;
    const FiniteGroup& cod = *spec_.codomain;
    maps_[d + 1] = maps_[d];
    mapped_[d + 1] = mapped_[d];
    if (spec_.injective) used_[d + 1] = used_[d];
    images_[d] = c;
    const Element g = spec_.generators[d];
    auto& map = maps_[d + 1];
    if (map[g] != kUnmapped) return map[g] == c;

    std::vector<Element> fresh;
    const std::size_t old_count = mapped_[d].size();
    for (std::size_t k = 0; k < old_count; ++k) {
      const Element h = mapped_[d][k];
      if (!assign(d + 1, dom.mul(h, g), cod.mul(map[h], c), fresh)) return false;
    }
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Element h = fresh[k];
      for (std::size_t t = 0; t <= d; ++t) {
        if (!assign(d + 1, dom.mul(h, spec_.generators[t]), cod.mul(map[h], images_[t]), fresh))
          return false;
      }
    }
    return true;
  }

  void dfs(std::size_t d) {
    if (stop_) return;
    if (d == spec_.generators.size()) {
      if (mapped_[d].size() != spec_.domain->order())
        throw InvalidArgument("hom search: generators do not generate the domain");
      ++stats_.leaves;
      if (!visit_(maps_[d])) stop_ = true;
      return;
    }
    for (Element c : spec_.candidates[d]) {
      if (++stats_.nodes > budget_) {
        stats_.exhausted_budget = true;
        stop_ = true;
        return;
      }
      if (extend(d, c)) dfs(d + 1);
      if (stop_) return;
    }
  }

  const HomSearchSpec& spec_;
  const std::function<bool(std::span<const Element>)>& visit_;
  std::uint64_t budget_;
  std::vector<std::vector<Element>> maps_;
  std::vector<std::vector<Element>> mapped_;
  std::vector<std::vector<char>> used_;
  std::vector<Element> images_;
  HomSearchStats stats_;
  bool stop_ = false;
};

// Candidate images for each generator: elements with an equal fingerprint.
std::vector<std::vector<Element>> matching_candidates(const std::vector<Fingerprint>& from,
                                                      const std::vector<Fingerprint>& to,
                                                      const std::vector<Element>& gens) {
  std::map<Fingerprint, std::vector<Element>> buckets;
  for (Element x = 0; x < to.size(); ++x) buckets[to[x]].push_back(x);
  std::vector<std::vector<Element>> out;
  for (Element g : gens) {
    auto it = buckets.find(from[g]);
    out.push_back(it == buckets.end() ? std::vector<Element>{} : it->second);
  }
  return out;
}

}  // namespace

std::vector<Automorphism> transversal_generators(const std::vector<Automorphism>& elements,
                                                 const std::vector<Element>& base) {
  std::vector<const Automorphism*> stab;
  for (const auto& a : elements) stab.push_back(&a);
  std::vector<Automorphism> gens;
  for (Element b : base) {
    std::map<Element, const Automorphism*> reps;
    std::vector<const Automorphism*> next;
    for (const Automorphism* a : stab) {
      const Element img = (*a)(b);
      if (img == b) next.push_back(a);
      else reps.emplace(img, a);
    }
    for (auto& [img, a] : reps) gens.push_back(*a);
    stab = std::move(next);
  }
  return gens;
}

Automorphism Automorphism::identity(std::size_t order) {
  Automorphism a;
  a.image.resize(order);
  std::iota(a.image.begin(), a.image.end(), Element{0});
  return a;
}

bool Automorphism::is_identity() const {
  for (Element x = 0; x < image.size(); ++x)
    if (image[x] != x) return false;
  return true;
}

bool Automorphism::fixes(const ElementSubset& s) const {
  return std::all_of(s.begin(), s.end(), [&](Element x) { return image[x] == x; });
}

Automorphism Automorphism::after(const Automorphism& other) const {
  Automorphism out;
  out.image.resize(image.size());
  for (Element x = 0; x < image.size(); ++x) out.image[x] = image[other.image[x]];
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.image.resize(image.size());
  for (Element x = 0; x < image.size(); ++x) out.image[image[x]] = x;
  return out;
}

bool is_automorphism(const FiniteGroup& g, std::span<const Element> image) {
  const std::size_t n = g.order();
  if (image.size() != n || image[kIdentity] != kIdentity) return false;
  std::vector<char> seen(n, 0);
  for (Element v : image) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (image[g.mul(x, y)] != g.mul(image[x], image[y])) return false;
  return true;
}

std::vector<Fingerprint> fingerprints(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const auto orders = element_orders(g);
  const auto class_sizes = conjugacy_class_sizes(g);
  std::vector<std::size_t> roots(n, 0);
  for (Element y = 0; y < n; ++y) ++roots[g.mul(y, y)];
  std::vector<Fingerprint> out(n);
  for (Element x = 0; x < n; ++x) {
    Fingerprint& f = out[x];
    f.order = orders[x];
    f.class_size = class_sizes[x];
    f.centralizer_order = n / class_sizes[x];
    f.square_roots = roots[x];
    for (std::size_t d = 1; d <= f.order; ++d)
      if (f.order % d == 0) f.power_orders.push_back(orders[g.pow(x, static_cast<long long>(d))]);
  }
  return out;
}

std::vector<Element> greedy_generators(const FiniteGroup& g, const ElementSubset& start) {
  const auto orders = element_orders(g);
  std::vector<Element> base = start.members();
  std::vector<Element> chosen;
  ElementSubset current = closure(g, base);
  while (current.size() < g.order()) {
    Element best = kIdentity;
    std::size_t best_order = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (!current.contains(x) && orders[x] > best_order) {
        best = x;
        best_order = orders[x];
      }
    }
    chosen.push_back(best);
    base.push_back(best);
    current = closure(g, base);
  }
  return chosen;
}

HomSearchStats search_homomorphisms(const HomSearchSpec& spec,
                                    const std::function<bool(std::span<const Element>)>& visit,
                                    std::uint64_t node_budget) {
  Searcher s(spec, visit, node_budget);
  return s.run();
}

std::pair<std::uint64_t, std::vector<Automorphism>> automorphism_order(const FiniteGroup& g) {
  const auto gens = greedy_generators(g);
  const auto fp = fingerprints(g);
  const auto cands = matching_candidates(fp, fp, gens);
  std::uint64_t order = 1;
  std::vector<Automorphism> transversal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    // Orbit of gens[i] under the pointwise stabilizer of gens[0..i).
    HomSearchSpec spec{&g, &g, gens, cands, true};
    for (std::size_t j = 0; j < i; ++j) spec.candidates[j] = {gens[j]};
    std::uint64_t orbit = 0;
    for (Element x : cands[i]) {
      spec.candidates[i] = {x};
      std::optional<Automorphism> found;
      search_homomorphisms(spec, [&](std::span<const Element> img) {
        found = Automorphism{{img.begin(), img.end()}};
        return false;
      });
      if (found) {
        ++orbit;
        if (x != gens[i]) transversal.push_back(std::move(*found));
      }
    }
    order = saturating_mul(order, orbit);
  }
  return {order, std::move(transversal)};
}

AutGroup automorphism_group(const GroupPtr& gp, const Caps& caps) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  const auto gens = greedy_generators(g);
  const auto fp = fingerprints(g);
  const auto cands = matching_candidates(fp, fp, gens);

  AutGroup out;
  out.group = gp;
  auto fits = [&](std::uint64_t count) {
    return count <= caps.aut_cap && saturating_mul(count, n) <= caps.aut_memory;
  };

  std::uint64_t bound = 1;
  for (const auto& c : cands) bound = saturating_mul(bound, c.size());
  if (!fits(bound)) {
    auto [order, transversal] = automorphism_order(g);
    if (!fits(order)) {
      out.order = order;
      out.generators = std::move(transversal);
      out.capped = true;
      return out;
    }
  }

  HomSearchSpec spec{&g, &g, gens, cands, true};
  search_homomorphisms(spec, [&](std::span<const Element> img) {
    out.elements.push_back(Automorphism{{img.begin(), img.end()}});
    return true;
  });
  std::sort(out.elements.begin(), out.elements.end());
  out.order = out.elements.size();
  out.generators = transversal_generators(out.elements, gens);
  return out;
}

std::optional<Automorphism> stabilizer_witness(const FiniteGroup& g, const ElementSubset& fixed,
                                               HomSearchStats* stats) {
  return StabilizerSearch(g).witness(fixed, stats);
}

StabilizerSearch::StabilizerSearch(const FiniteGroup& g)
    : g_(&g), fp_(detset::fingerprints(g)), orders_(element_orders(g)) {}

std::optional<Automorphism> StabilizerSearch::witness(const ElementSubset& fixed,
                                                      HomSearchStats* stats) const {
  const FiniteGroup& g = *g_;
  std::vector<Element> pinned;
  for (Element x : fixed)
    if (x != kIdentity) pinned.push_back(x);

  // Greedy extension of <fixed> to a generating set (same rule as greedy_generators).
  std::vector<Element> base = pinned;
  std::vector<Element> extra;
  ElementSubset current = closure(g, base);
  while (current.size() < g.order()) {
    Element best = kIdentity;
    std::size_t best_order = 0;
    for (Element x = 0; x < g.order(); ++x)
      if (!current.contains(x) && orders_[x] > best_order) {
        best = x;
        best_order = orders_[x];
      }
    extra.push_back(best);
    base.push_back(best);
    current = closure(g, base);
  }
  if (stats) *stats = {};
  if (extra.empty()) return std::nullopt;  // fixed set generates G

  std::vector<Element> gens = pinned;
  gens.insert(gens.end(), extra.begin(), extra.end());
  auto cands = matching_candidates(fp_, fp_, gens);
  for (std::size_t j = 0; j < pinned.size(); ++j) cands[j] = {pinned[j]};

  std::optional<Automorphism> witness;
  HomSearchSpec spec{&g, &g, gens, std::move(cands), true};
  auto st = search_homomorphisms(spec, [&](std::span<const Element> img) {
    for (Element e : extra)
      if (img[e] != e) {
        witness = Automorphism{{img.begin(), img.end()}};
        return false;
      }
    return true;
  });
  if (stats) *stats = st;
  return witness;
}

std::vector<GroupHom> hom_set(const GroupPtr& h, const GroupPtr& k, const Caps& caps) {
  const auto gens = greedy_generators(*h);
  const auto h_orders = element_orders(*h);
  const auto k_orders = element_orders(*k);
  std::vector<std::vector<Element>> cands;
  std::uint64_t combos = 1;
  for (Element g : gens) {
    std::vector<Element> c;
    for (Element y = 0; y < k->order(); ++y)
      if (h_orders[g] % k_orders[y] == 0) c.push_back(y);
    combos = saturating_mul(combos, c.size());
    cands.push_back(std::move(c));
  }
  if (combos > caps.hom_candidates)
    throw CapExceeded("hom_set: " + std::to_string(combos) + " candidate combinations");
  std::vector<GroupHom> out;
  HomSearchSpec spec{h.get(), k.get(), gens, std::move(cands), false};
  search_homomorphisms(spec, [&](std::span<const Element> img) {
    out.push_back(GroupHom{h, k, {img.begin(), img.end()}});
    return true;
  });
  return out;
}

std::optional<GroupHom> isomorphism(const GroupPtr& g, const GroupPtr& h) {
  if (g->order() != h->order()) return std::nullopt;
  auto fg = fingerprints(*g);
  auto fh = fingerprints(*h);
  {
    auto a = fg, b = fh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const auto gens = greedy_generators(*g);
  HomSearchSpec spec{g.get(), h.get(), gens, matching_candidates(fg, fh, gens), true};
  std::optional<GroupHom> found;
  search_homomorphisms(spec, [&](std::span<const Element> img) {
    found = GroupHom{g, h, {img.begin(), img.end()}};
    return false;
  });
  return found;
}

Automorphism inner_automorphism(const FiniteGroup& g, Element x) {
  Automorphism a;
  a.image.resize(g.order());
  for (Element y = 0; y < g.order(); ++y) a.image[y] = g.conj(x, y);
  return a;
}

std::vector<Automorphism> exhaustive_automorphisms(const FiniteGroup& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order)
    throw CapExceeded("exhaustive automorphism scan limited to order " + std::to_string(max_order));
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Automorphism> out;
  do {
    if (is_automorphism(g, perm)) out.push_back(Automorphism{perm});
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

}  // namespace detset
