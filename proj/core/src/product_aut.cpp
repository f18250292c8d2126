#include "detset/product_aut.hpp"

#include <algorithm>
#include <numeric>

#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/structure.hpp"

namespace detset {

ElementSubset CharacteristicMatrix::row_set(std::size_t i) const {
  return ElementSubset(grid[i]);
}

CharacteristicMatrix characteristic_matrix(const DirectProduct& g, std::span<const Element> x) {
  CharacteristicMatrix m;
  m.factors = g.factors();
  m.grid.assign(g.factor_count(), std::vector<Element>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] >= g.group()->order())
      throw InvalidArgument("element " + std::to_string(x[j]) + " is not in the product");
    for (std::size_t i = 0; i < g.factor_count(); ++i) m.grid[i][j] = g.component(x[j], i);
  }
  return m;
}

std::vector<Element> reassemble(const DirectProduct& g, const CharacteristicMatrix& m) {
  std::vector<Element> out(m.columns());
  std::vector<Element> parts(m.rows());
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) parts[i] = m.grid[i][j];
    out[j] = g.compose(parts);
  }
  return out;
}

BidwellMatrix identity_bidwell(const DirectProduct& g) {
  const auto& f = g.factors();
  BidwellMatrix a;
  a.m = f.size();
  for (std::size_t i = 0; i < a.m; ++i)
    for (std::size_t j = 0; j < a.m; ++j) {
      GroupHom h{f[j], f[i], std::vector<Element>(f[j]->order(), kIdentity)};
      if (i == j) std::iota(h.image.begin(), h.image.end(), Element{0});
      a.entries.push_back(std::move(h));
    }
  return a;
}

Element bidwell_apply(const DirectProduct& g, const BidwellMatrix& a, Element x) {
  const auto parts = g.decompose(x);
  std::vector<Element> out(a.m, kIdentity);
  for (std::size_t i = 0; i < a.m; ++i) {
    const FiniteGroup& hi = *g.factors()[i];
    for (std::size_t j = 0; j < a.m; ++j) out[i] = hi.mul(out[i], a.at(i, j)(parts[j]));
  }
  return g.compose(out);
}

std::vector<Element> bidwell_map(const DirectProduct& g, const BidwellMatrix& a) {
  std::vector<Element> image(g.group()->order());
  for (Element x = 0; x < image.size(); ++x) image[x] = bidwell_apply(g, a, x);
  return image;
}

bool pairwise_coprime(std::span<const GroupPtr> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (std::gcd(factors[i]->order(), factors[j]->order()) != 1) return false;
  return true;
}

namespace {

// Bijective and multiplicative on a generating set, hence an automorphism.
bool induces_automorphism(const FiniteGroup& g, const std::vector<Element>& gens,
                          const std::vector<Element>& image) {
  std::vector<char> hit(g.order(), 0);
  for (Element y : image) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  for (Element x = 0; x < g.order(); ++x)
    for (Element s : gens)
      if (image[g.mul(x, s)] != g.mul(image[x], image[s])) return false;
  return true;
}

}  // namespace

BidwellAutGroup bidwell_aut_group(const DirectProduct& g, const Caps& caps,
                                  bool assert_no_common_direct_factor) {
  const auto& f = g.factors();
  if (!assert_no_common_direct_factor && !pairwise_coprime(f))
    throw InvalidArgument(
        "factor orders are not pairwise coprime; assert that no direct factor is shared");
  const std::size_t m = f.size();

  // Candidate image arrays for every cell, H_j -> H_i.
  std::vector<std::vector<std::vector<Element>>> cells(m * m);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const ElementSubset zi = center(*f[i]);
    const GroupPtr zgroup = share(promote(*f[i], zi));
    for (std::size_t j = 0; j < m; ++j) {
      auto& cell = cells[i * m + j];
      if (i == j) {
        const AutGroup aut = automorphism_group(f[i], caps);
        if (aut.capped) throw CapExceeded("Aut of factor " + f[i]->descriptor() + " is capped");
        for (const auto& a : aut.elements) cell.push_back(a.image);
      } else {
        for (const auto& h : hom_set(f[j], zgroup, caps)) {
          std::vector<Element> img(h.image.size());
          for (std::size_t x = 0; x < img.size(); ++x) img[x] = zi.members()[h.image[x]];
          cell.push_back(std::move(img));
        }
      }
      total *= cell.size();
      if (total > caps.aut_cap) throw CapExceeded("Bidwell candidate grid count exceeds aut_cap");
    }
  }

  BidwellAutGroup out;
  out.aut.group = g.group();
  const FiniteGroup& whole = *g.group();
  const auto gens = greedy_generators(whole);
  BidwellMatrix a = identity_bidwell(g);
  std::vector<std::size_t> pick(m * m, 0);
  std::vector<std::pair<Automorphism, BidwellMatrix>> accepted;
  while (true) {
    for (std::size_t c = 0; c < m * m; ++c) a.entries[c].image = cells[c][pick[c]];
    ++out.candidates;
    auto image = bidwell_map(g, a);
    if (induces_automorphism(whole, gens, image)) accepted.emplace_back(Automorphism{std::move(image)}, a);
    else ++out.rejected;

    std::size_t c = m * m;
    while (c > 0 && ++pick[c - 1] == cells[c - 1].size()) pick[--c] = 0;
    if (c == 0) break;
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [aut, mat] : accepted) {
    out.aut.elements.push_back(std::move(aut));
    out.matrices.push_back(std::move(mat));
  }
  out.aut.order = out.aut.elements.size();
  out.aut.generators = transversal_generators(out.aut.elements, gens);
  return out;
}

std::optional<bool> row_criterion_check(const DirectProduct& g, std::span<const Element> x) {
  std::vector<Element> xs(x.begin(), x.end());
  if (!is_determining_set(*g.group(), ElementSubset(xs))) return std::nullopt;
  const auto m = characteristic_matrix(g, x);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!is_determining_set(*g.factors()[i], m.row_set(i))) return false;
  return true;
}

}  // namespace detset
