#include "doctest.h"
#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/families.hpp"
#include "detset/structure.hpp"
#include "oracles.hpp"

using namespace detset;

namespace {

GroupPtr make(FiniteGroup g) { return share(std::move(g)); }

GroupPtr product(std::initializer_list<std::size_t> orders) {
  return make(abelian(std::vector<std::size_t>(orders)));
}

std::vector<GroupPtr> sample() {
  return {make(cyclic(2)),         make(cyclic(6)),      make(cyclic(7)),
          make(elementary_abelian(2, 2)), make(elementary_abelian(2, 3)),
          make(symmetric(3)),      make(dihedral(4)),    make(dihedral(6)),
          make(dicyclic(8)),       make(dicyclic(12)),   make(alternating(4)),
          product({2, 4}),         product({2, 6}),      product({3, 3}),
          make(unitriangular(3, 2))};
}

}  // namespace

TEST_CASE("is_determining_set") {
  const auto z6 = make(cyclic(6));
  CHECK(is_determining_set(*z6, ElementSubset{2}));
  CHECK_FALSE(is_determining_set(*z6, ElementSubset{3}));
  CHECK_FALSE(is_determining_set(symmetric(3), ElementSubset{}));
  for (const auto& g : sample())
    CHECK(is_determining_set(*g, ElementSubset(greedy_generators(*g))));
}

TEST_CASE("determining numbers") {
  CHECK(determining_number(make(cyclic(2))).alpha == 0);
  CHECK(determining_number(make(elementary_abelian(3, 2))).alpha == 2);
  CHECK(determining_number(product({2, 4})).alpha == 2);
  CHECK(determining_number(make(symmetric(3))).alpha == 2);
  CHECK(determining_number(make(cyclic(1))).alpha == 0);
  const auto r = determining_number(make(cyclic(6)));
  CHECK(r.alpha == 1);
  CHECK(r.witness == ElementSubset{1});
  CHECK(r.method == "enumerated-aut");
}

TEST_CASE("the constrained search matches the enumerated search") {
  Caps capped;
  capped.aut_cap = 1;
  for (const auto& g : sample()) {
    CAPTURE(g->descriptor());
    const auto a = determining_number(g);
    const auto b = determining_number(g, capped);
    CHECK(b.method == (automorphism_group(g).order > 1 ? "constrained-search" : "enumerated-aut"));
    CHECK(a.alpha == b.alpha);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("generating numbers") {
  CHECK(generating_number(make(cyclic(6))).gamma == 1);
  CHECK(generating_number(make(elementary_abelian(2, 3))).gamma == 3);
  CHECK(generating_number(make(dicyclic(8))).gamma == 2);
  CHECK(generating_number(make(cyclic(1))).gamma == 0);
  const auto r = generating_number(make(symmetric(3)));
  CHECK(r.gamma == 2);
  CHECK(generates(symmetric(3), r.witness));
}

TEST_CASE("DEG predicate") {
  CHECK_FALSE(is_deg(make(cyclic(2))));
  CHECK(is_deg(make(cyclic(6))));
  CHECK(is_deg(make(symmetric(3))));
  const auto v = deg(make(cyclic(2)));
  CHECK(v.alpha.alpha == 0);
  CHECK(v.gamma.gamma == 1);
}

TEST_CASE("minimum determining sets") {
  CHECK(minimum_determining_sets(make(cyclic(6))) ==
        std::vector<ElementSubset>{{1}, {2}, {4}, {5}});
  CHECK(minimum_determining_sets(make(elementary_abelian(2, 2))) ==
        std::vector<ElementSubset>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(minimum_determining_sets(make(cyclic(2))) == std::vector<ElementSubset>{ElementSubset{}});
  Caps capped;
  capped.aut_cap = 1;
  for (const auto& g : sample())
    CHECK(minimum_determining_sets(g) == minimum_determining_sets(g, capped));
}

TEST_CASE("oracles") {
  CHECK(oracle_determining_number(make(elementary_abelian(2, 2))).alpha == 2);
  CHECK(oracle_generating_number(make(cyclic(12))).gamma == 1);
  const auto q8 = oracle_determining_number(make(dicyclic(8)));
  CHECK(q8.alpha == 2);
  CHECK(q8.method == "exhaustive-oracle");
  CHECK_THROWS_AS(oracle_determining_number(make(cyclic(25))), CapExceeded);
  CHECK_THROWS_AS(oracle_generating_number(make(cyclic(25))), CapExceeded);
}

TEST_CASE("searches agree with the test-side reference on small groups") {
  for (const auto& g : sample()) {
    CAPTURE(g->descriptor());
    CHECK(determining_number(g).alpha == oracle::alpha(*g));
    CHECK(generating_number(g).gamma == oracle::gamma(*g));
  }
}

TEST_CASE("witnesses are lexicographically least") {
  for (const auto& g : sample()) {
    const auto a = determining_number(g);
    const auto aut = oracle::automorphisms(*g);
    std::vector<Element> first;
    oracle::any_subset(g->order(), a.alpha, [&](const std::vector<Element>& d) {
      if (!oracle::determining(aut, d)) return false;
      first = d;
      return true;
    });
    CHECK(a.witness.members() == first);
  }
}

TEST_CASE("invariants over a sample") {
  for (const auto& g : sample()) {
    CAPTURE(g->descriptor());
    const auto a = determining_number(g);
    const auto c = generating_number(g);
    CHECK(a.alpha <= c.gamma);
    CHECK(c.gamma <= chi(*g));
    CHECK(is_determining_set(*g, a.witness));
    CHECK(centralizer(*g, a.witness) == center(*g));
    if (!g->is_abelian()) CHECK(a.alpha >= 2);
    const auto aut = automorphism_group(g);
    for (const auto& d : minimum_determining_sets(g)) {
      CHECK(generating_number(make(promote(*g, closure(*g, d)))).gamma == a.alpha);
      for (const auto& s : aut.elements) {
        std::vector<Element> img;
        for (Element x : d) img.push_back(s(x));
        CHECK(is_determining_set(*g, ElementSubset(img)));
      }
    }
  }
}

TEST_CASE("budget exhaustion reports bounds") {
  Caps caps;
  caps.node_budget = 3;
  try {
    determining_number(make(elementary_abelian(2, 4)), caps);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower_bound <= 4);
    CHECK(e.upper_bound >= 4);
  }
  CHECK_THROWS_AS(generating_number(make(elementary_abelian(2, 4)), caps), BudgetExceeded);
  Caps listing;
  listing.subset_budget = 2;
  CHECK_THROWS_AS(minimum_determining_sets(make(cyclic(6)), listing), BudgetExceeded);
}
