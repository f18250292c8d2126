#include "detset/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "detset/errors.hpp"

namespace detset {

namespace {

// Breadth-first closure of `gens`, starting from the identity.
std::vector<Element> generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Element h = members[head];
    for (Element s : gens) {
      const Element y = g.mul(h, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members;
}

struct ScannedSubgroup {
  ElementSubset members;
  std::vector<Element> gens;
};

// Closes a seed family of subgroups under pairwise joins.
std::vector<ElementSubset> join_closure(const FiniteGroup& g,
                                        std::vector<ScannedSubgroup> seeds) {
  std::set<ElementSubset> seen;
  std::vector<ScannedSubgroup> found;
  auto add = [&](ScannedSubgroup s) {
    if (seen.insert(s.members).second) found.push_back(std::move(s));
  };
  add({ElementSubset{kIdentity}, {}});
  std::vector<ScannedSubgroup> atoms;
  for (auto& s : seeds) {
    if (!seen.count(s.members)) atoms.push_back(s);
    add(std::move(s));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& atom : atoms) {
      if (atom.members.is_subset_of(found[i].members)) continue;
      std::vector<Element> gens = found[i].gens;
      gens.insert(gens.end(), atom.gens.begin(), atom.gens.end());
      ElementSubset joined(generated(g, gens));
      if (!seen.count(joined)) add({std::move(joined), std::move(gens)});
    }
  }
  std::vector<ElementSubset> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(std::move(s.members));
  std::sort(out.begin(), out.end(), [](const ElementSubset& a, const ElementSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

ElementSubset closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  return ElementSubset(generated(g, gens));
}

ElementSubset closure(const FiniteGroup& g, const ElementSubset& s) {
  return closure(g, s.members());
}

bool generates(const FiniteGroup& g, const ElementSubset& s) {
  return generated(g, s.members()).size() == g.order();
}

ElementSubset centralizer(const FiniteGroup& g, const ElementSubset& s) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Element y : s)
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(x);
  }
  return ElementSubset(std::move(out));
}

ElementSubset center(const FiniteGroup& g) { return centralizer(g, ElementSubset::all(g.order())); }

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != kIdentity; y = g.mul(y, x)) ++k;
  return k;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = element_order(g, x);
  return orders;
}

bool is_cyclic(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

std::vector<ElementSubset> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> done(n, 0);
  std::vector<ElementSubset> classes;
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < n; ++h) {
      const Element y = g.conj(h, x);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    classes.emplace_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> conjugacy_class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> sizes(g.order());
  for (const auto& cls : conjugacy_classes(g))
    for (Element x : cls) sizes[x] = cls.size();
  return sizes;
}

bool is_subgroup(const FiniteGroup& g, const ElementSubset& s) {
  if (!s.contains(kIdentity)) return false;
  for (Element x : s) {
    if (x >= g.order()) return false;
    for (Element y : s)
      if (!s.contains(g.mul(x, g.inv(y)))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSubset& s) {
  if (!is_subgroup(g, s)) return false;
  for (Element h = 0; h < g.order(); ++h)
    for (Element x : s)
      if (!s.contains(g.conj(h, x))) return false;
  return true;
}

std::vector<ElementSubset> subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.subgroup_scan)
    throw CapExceeded("subgroup scan limited to order " + std::to_string(caps.subgroup_scan));
  std::vector<ScannedSubgroup> cyclic;
  for (Element x = 1; x < g.order(); ++x) cyclic.push_back({closure(g, std::vector<Element>{x}), {x}});
  return join_closure(g, std::move(cyclic));
}

std::vector<ElementSubset> normal_subgroups(const FiniteGroup& g, const Caps& caps) {
  if (g.order() > caps.subgroup_scan)
    throw CapExceeded("normal subgroup scan limited to order " +
                      std::to_string(caps.subgroup_scan));
  // Every normal subgroup is a join of normal closures of single elements.
  std::vector<ScannedSubgroup> seeds;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.contains(kIdentity)) continue;
    seeds.push_back({closure(g, cls), cls.members()});
  }
  return join_closure(g, std::move(seeds));
}

bool is_simple(const FiniteGroup& g, const Caps& caps) {
  return g.order() >= 2 && normal_subgroups(g, caps).size() == 2;
}

FiniteGroup promote(const FiniteGroup& g, const ElementSubset& h) {
  const auto& m = h.members();
  if (m.empty() || m.front() != kIdentity) throw InvalidArgument("subset does not contain the identity");
  std::vector<Element> position(g.order(), static_cast<Element>(-1));
  for (std::size_t k = 0; k < m.size(); ++k) position[m[k]] = static_cast<Element>(k);
  const std::size_t n = m.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element p = position[g.mul(m[i], m[j])];
      if (p == static_cast<Element>(-1)) throw InvalidArgument("subset is not closed under multiplication");
      table[i * n + j] = p;
    }
  std::vector<std::string> labels;
  for (Element x : m) labels.push_back(g.label(x));
  return FiniteGroup(n, std::move(table), std::move(labels), "sub(" + g.descriptor() + ")", 0);
}

Quotient quotient(const GroupPtr& gp, const ElementSubset& nsub) {
  const FiniteGroup& g = *gp;
  if (!is_subgroup(g, nsub)) throw InvalidArgument("quotient: not a subgroup");
  if (!is_normal(g, nsub)) throw InvalidArgument("quotient: subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<Element> coset(n, static_cast<Element>(-1));
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != static_cast<Element>(-1)) continue;
    const Element id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : nsub) coset[g.mul(x, k)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  for (Element r : reps) labels.push_back(g.label(r) + "N");
  auto qg = share(FiniteGroup(q, std::move(table), std::move(labels),
                              g.descriptor() + "/N", 0));
  return Quotient{qg, GroupHom{gp, qg, std::move(coset)}, std::move(reps)};
}

ElementSubset derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
  ElementSubset gens(std::move(comms));
  return closure(g, gens);
}

NilpotencyReport upper_central_series(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  NilpotencyReport report;
  ElementSubset current{kIdentity};
  report.series.push_back(current);
  while (current.size() < g.order()) {
    // Z_{i+1} is the preimage of C(G/Z_i).
    Quotient q = quotient(gp, current);
    ElementSubset zq = center(*q.group);
    std::vector<Element> next;
    for (Element x = 0; x < g.order(); ++x)
      if (zq.contains(q.projection(x))) next.push_back(x);
    ElementSubset z(std::move(next));
    if (z.size() == current.size()) break;
    current = std::move(z);
    report.series.push_back(current);
  }
  report.is_nilpotent = current.size() == g.order();
  return report;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned chi(std::uint64_t order) {
  unsigned total = 0;
  for (auto [p, e] : factorize(order)) total += e;
  return total;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factorize(n).size() == 1; }

}  // namespace detset
