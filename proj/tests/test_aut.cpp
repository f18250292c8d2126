#include <set>

#include "doctest.h"
#include "detset/aut.hpp"
#include "detset/errors.hpp"
#include "detset/families.hpp"
#include "detset/structure.hpp"
#include "oracles.hpp"

using namespace detset;

namespace {

GroupPtr make(FiniteGroup g) { return share(std::move(g)); }

std::vector<GroupPtr> small_groups() {
  return {make(cyclic(1)),     make(cyclic(2)),  make(cyclic(5)),
          make(cyclic(8)),     make(cyclic(10)), make(elementary_abelian(2, 2)),
          make(elementary_abelian(2, 3)),        make(dihedral(3)),
          make(dihedral(4)),   make(dihedral(5)), make(dicyclic(8)),
          direct_product({make(cyclic(2)), make(cyclic(4))}).group(),
          make(cyclic(9)),     make(elementary_abelian(3, 2))};
}

std::vector<std::vector<Element>> images(const std::vector<Automorphism>& v) {
  std::vector<std::vector<Element>> out;
  for (const auto& a : v) out.push_back(a.image);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(make(elementary_abelian(2, 2))).order == 6);
  CHECK(automorphism_group(make(cyclic(6))).order == 2);
  CHECK(automorphism_group(make(symmetric(3))).order == 6);
  CHECK(automorphism_group(make(dicyclic(8))).order == 24);
  CHECK(automorphism_group(make(dihedral(4))).order == 8);
  CHECK(automorphism_group(make(alternating(5))).order == 120);
  CHECK(automorphism_group(make(symmetric(4))).order == 24);
  CHECK(automorphism_group(make(elementary_abelian(2, 4))).order == 20160);
}

TEST_CASE("enumerated automorphism groups are groups") {
  for (const auto& g : small_groups()) {
    CAPTURE(g->descriptor());
    const auto aut = automorphism_group(g);
    REQUIRE_FALSE(aut.capped);
    CHECK(aut.order == aut.elements.size());
    const std::set<Automorphism> set(aut.elements.begin(), aut.elements.end());
    CHECK(set.count(Automorphism::identity(g->order())) == 1);
    for (const auto& a : aut.elements) {
      CHECK(is_automorphism(*g, a.image));
      CHECK(set.count(a.inverse()) == 1);
      for (const auto& b : aut.elements) CHECK(set.count(a.after(b)) == 1);
    }
  }
}

TEST_CASE("automorphisms preserve orders and classes, and fingerprints are invariant") {
  for (const auto& g : small_groups()) {
    const auto aut = automorphism_group(g);
    const auto fp = fingerprints(*g);
    const auto orders = element_orders(*g);
    const auto classes = conjugacy_class_sizes(*g);
    for (const auto& a : aut.elements)
      for (Element x = 0; x < g->order(); ++x) {
        CHECK(fp[x] == fp[a(x)]);
        CHECK(orders[x] == orders[a(x)]);
        CHECK(classes[x] == classes[a(x)]);
      }
  }
}

TEST_CASE("backtracking Aut agrees with exhaustive bijection scans") {
  for (const auto& g : small_groups()) {
    if (g->order() > 10) continue;
    CAPTURE(g->descriptor());
    const auto aut = automorphism_group(g);
    const auto scan = images(exhaustive_automorphisms(*g));
    CHECK(images(aut.elements) == scan);
    CHECK(oracle::automorphisms(*g) == scan);
  }
  CHECK_THROWS_AS(exhaustive_automorphisms(cyclic(11)), CapExceeded);
}

TEST_CASE("capped automorphism groups report exact orders") {
  Caps caps;
  caps.aut_cap = 100;
  const auto g = make(elementary_abelian(2, 4));
  const auto capped = automorphism_group(g, caps);
  CHECK(capped.capped);
  CHECK(capped.elements.empty());
  CHECK(capped.order == 20160);
  for (const auto& a : capped.generators) CHECK(is_automorphism(*g, a.image));
  const auto [order, gens] = automorphism_order(*make(dihedral(6)));
  CHECK(order == 12);
  CHECK_FALSE(gens.empty());
}

TEST_CASE("capped generators generate the full group") {
  Caps caps;
  caps.aut_cap = 10;
  const auto g = make(symmetric(4));
  const auto capped = automorphism_group(g, caps);
  REQUIRE(capped.capped);
  std::set<Automorphism> seen{Automorphism::identity(24)};
  std::vector<Automorphism> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Automorphism> next;
    for (const auto& a : frontier)
      for (const auto& s : capped.generators)
        if (seen.insert(s.after(a)).second) next.push_back(s.after(a));
    frontier = std::move(next);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("stabilizer witnesses") {
  const auto z6 = make(cyclic(6));
  CHECK_FALSE(stabilizer_witness(*z6, ElementSubset{2}).has_value());
  const auto z4 = make(cyclic(4));
  const auto w = stabilizer_witness(*z4, ElementSubset{2});
  REQUIRE(w.has_value());
  CHECK(w->image == std::vector<Element>{0, 3, 2, 1});
  const auto s3 = make(symmetric(3));
  const auto any = stabilizer_witness(*s3, ElementSubset{});
  REQUIRE(any.has_value());
  CHECK_FALSE(any->is_identity());
  CHECK(is_automorphism(*s3, any->image));
}

TEST_CASE("stabilizer witness matches the pointwise stabilizer of the enumerated group") {
  for (const auto& g : small_groups()) {
    const auto aut = automorphism_group(g);
    const StabilizerSearch search(*g);
    const std::size_t n = g->order();
    for (Element a = 0; a < n; ++a)
      for (Element b = a; b < n; ++b) {
        const ElementSubset d{a, b};
        std::size_t fixing = 0;
        for (const auto& s : aut.elements) fixing += s.fixes(d);
        const auto w = search.witness(d);
        CHECK(w.has_value() == (fixing > 1));
        if (w) {
          CHECK(w->fixes(d));
          CHECK_FALSE(w->is_identity());
        }
      }
  }
}

TEST_CASE("homomorphism sets") {
  const auto z2 = make(cyclic(2)), z3 = make(cyclic(3)), z4 = make(cyclic(4));
  CHECK(hom_set(z4, z2).size() == 2);
  CHECK(hom_set(make(symmetric(3)), z3).size() == 1);
  const auto homs = hom_set(z2, z4);
  REQUIRE(homs.size() == 2);
  std::set<Element> imgs;
  for (const auto& h : homs) imgs.insert(h(1));
  CHECK(imgs == std::set<Element>{0, 2});
  CHECK(hom_set(make(elementary_abelian(2, 2)), make(symmetric(3))).size() == 10);
}

TEST_CASE("hom sets contain the trivial map and are closed under codomain automorphisms") {
  const std::vector<std::pair<GroupPtr, GroupPtr>> pairs = {
      {make(cyclic(4)), make(dihedral(4))},
      {make(symmetric(3)), make(symmetric(3))},
      {make(elementary_abelian(2, 2)), make(cyclic(6))}};
  for (const auto& [h, k] : pairs) {
    const auto homs = hom_set(h, k);
    std::set<std::vector<Element>> set;
    for (const auto& f : homs) {
      CHECK(f.is_homomorphism());
      set.insert(f.image);
    }
    CHECK(set.count(std::vector<Element>(h->order(), 0)) == 1);
    for (const auto& a : automorphism_group(k).elements)
      for (const auto& f : homs) {
        std::vector<Element> composed(h->order());
        for (Element x = 0; x < h->order(); ++x) composed[x] = a(f(x));
        CHECK(set.count(composed) == 1);
      }
  }
  Caps tiny;
  tiny.hom_candidates = 4;
  CHECK_THROWS_AS(hom_set(make(elementary_abelian(2, 3)), make(symmetric(4)), tiny), CapExceeded);
}

TEST_CASE("isomorphisms") {
  const auto z6 = make(cyclic(6));
  const auto z2z3 = direct_product({make(cyclic(2)), make(cyclic(3))}).group();
  const auto iso = isomorphism(z2z3, z6);
  REQUIRE(iso.has_value());
  CHECK(iso->is_homomorphism());
  CHECK(iso->is_injective());
  CHECK_FALSE(isomorphic(make(cyclic(4)), make(elementary_abelian(2, 2))));
  CHECK(isomorphic(make(symmetric(3)), make(dihedral(3))));
  CHECK_FALSE(isomorphic(make(dihedral(4)), make(dicyclic(8))));
  CHECK_FALSE(isomorphic(make(cyclic(4)), make(cyclic(5))));
}

TEST_CASE("inner automorphisms") {
  const auto s3 = symmetric(3);
  CHECK(inner_automorphism(s3, 0).is_identity());
  const auto z = cyclic(5);
  CHECK(inner_automorphism(z, 3).is_identity());
  const Element t12 = *s3.find_label("213"), t13 = *s3.find_label("321"), t23 = *s3.find_label("132");
  const auto inn = inner_automorphism(s3, t12);
  CHECK(inn(t13) == t23);
  CHECK(inn(t23) == t13);
  const auto d5 = dihedral(5);
  for (Element g = 0; g < d5.order(); g += 3)
    for (Element h = 0; h < d5.order(); h += 4)
      CHECK(inner_automorphism(d5, g).after(inner_automorphism(d5, h)) ==
            inner_automorphism(d5, d5.mul(g, h)));
}

TEST_CASE("|Inn G| = |G| / |C(G)|") {
  for (const auto& g : small_groups()) {
    std::set<Automorphism> inn;
    for (Element x = 0; x < g->order(); ++x) inn.insert(inner_automorphism(*g, x));
    CHECK(inn.size() * center(*g).size() == g->order());
  }
}

TEST_CASE("greedy generators generate") {
  for (const auto& g : small_groups()) CHECK(generates(*g, ElementSubset(greedy_generators(*g))));
  const auto z12 = cyclic(12);
  CHECK(greedy_generators(z12) == std::vector<Element>{1});
}
