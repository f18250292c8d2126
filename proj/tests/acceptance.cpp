// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "detset/catalog.hpp"
#include "detset/cli.hpp"
#include "detset/constructions.hpp"
#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/expr.hpp"
#include "detset/families.hpp"
#include "detset/product_aut.hpp"
#include "detset/structure.hpp"
#include "detset/triangular.hpp"
#include "oracles.hpp"

using namespace detset;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

GroupPtr make(FiniteGroup g) { return share(std::move(g)); }

// Searched members of the default catalog with their alpha and gamma, shared
// by the catalog-wide criteria.
struct CatalogFacts {
  GroupPtr group;
  std::size_t alpha = 0;
  std::size_t gamma = 0;
  ElementSubset alpha_witness;
};

const std::vector<CatalogFacts>& catalog_facts() {
  static const std::vector<CatalogFacts> facts = [] {
    std::vector<CatalogFacts> out;
    for (const auto& entry : build_catalog()) {
      if (entry.info_only) continue;
      const auto a = determining_number(entry.group);
      out.push_back({entry.group, a.alpha, generating_number(entry.group).gamma, a.witness});
    }
    return out;
  }();
  return facts;
}

bool is_z2(const FiniteGroup& g) { return g.order() == 2; }
bool is_k4(const FiniteGroup& g) { return g.order() == 4 && !is_cyclic(g); }

Outcome criterion_1() {
  Outcome o;
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}};
  std::ostringstream detail;
  for (const auto& [p, n] : cases) {
    const auto start = Clock::now();
    const std::string expr = "Z(" + std::to_string(p) + ")^" + std::to_string(n);
    const auto g = evaluate(expr).group;
    const auto r = determining_number(g);
    const double t = seconds_since(start);
    o.require(r.alpha == n, expr + ": alpha " + std::to_string(r.alpha));
    o.require(oracle::determining(oracle::automorphisms(*g), r.witness.members()),
              expr + ": witness not determining");
    o.require(t < 30.0, expr + " took " + std::to_string(t) + " s");
    detail << expr << "=" << r.alpha << " ";
  }
  if (o.pass) o.detail = detail.str() + "(each < 30 s)";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  std::size_t zeros = 0, ones = 0;
  for (const auto& f : catalog_facts()) {
    const auto& g = *f.group;
    o.require((f.alpha == 0) == is_z2(g), g.descriptor() + ": alpha " + std::to_string(f.alpha));
    o.require((f.alpha == 1) == (is_cyclic(g) && g.order() >= 3),
              g.descriptor() + ": alpha " + std::to_string(f.alpha));
    zeros += f.alpha == 0;
    ones += f.alpha == 1;
  }
  if (o.pass)
    o.detail = std::to_string(catalog_facts().size()) + " groups, alpha=0 on " + std::to_string(zeros) +
               ", alpha=1 on " + std::to_string(ones) + " (all cyclic of order >= 3), 0 exceptions";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  std::size_t nilpotent = 0, simple = 0;
  std::vector<std::string> non_deg_small;
  for (const auto& f : catalog_facts()) {
    const auto& g = f.group;
    if (g->order() >= 3 && is_nilpotent(g)) {
      ++nilpotent;
      o.require(f.alpha == f.gamma, g->descriptor() + " nilpotent but not DEG");
    }
    if (g->order() >= 3 && is_simple(*g)) {
      ++simple;
      o.require(f.alpha == f.gamma, g->descriptor() + " simple but not DEG");
    }
    if (f.gamma <= 2 && f.alpha != f.gamma) non_deg_small.push_back(g->descriptor());
  }
  o.require(non_deg_small == std::vector<std::string>{"Z(2)"},
            "non-DEG groups with gamma <= 2: " + std::to_string(non_deg_small.size()));
  if (o.pass)
    o.detail = std::to_string(nilpotent) + " nilpotent and " + std::to_string(simple) +
               " simple groups DEG; Z(2) is the only non-DEG group with gamma <= 2";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  std::size_t count = 0;
  const Caps caps;
  for (std::size_t p : {2, 3})
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t l = 1; l <= 3; ++l) {
        std::size_t a = 1, b = 1;
        for (std::size_t i = 0; i < k; ++i) a *= p;
        for (std::size_t i = 0; i < l; ++i) b *= p;
        if (a * b > caps.max_order) continue;
        const std::string expr = "Z(" + std::to_string(a) + ") x Z(" + std::to_string(b) + ")";
        const auto r = determining_number(evaluate(expr).group);
        o.require(r.alpha == 2, expr + ": alpha " + std::to_string(r.alpha));
        ++count;
      }
  if (o.pass) o.detail = std::to_string(count) + " products, all alpha = 2";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  struct Case {
    const char* expr;
    std::uint64_t expected;
    bool assert_ndf;
  };
  const Case cases[] = {{"Z(2) x Z(4)", 8, true}, {"Z(3) x S(3)", 12, true}, {"Z(3) x Z(5)", 8, false}};
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto e = evaluate(c.expr);
    const auto b = bidwell_aut_group(*e.product, {}, c.assert_ndf);
    std::vector<std::vector<Element>> bidwell;
    for (const auto& a : b.aut.elements) bidwell.push_back(a.image);
    std::sort(bidwell.begin(), bidwell.end());
    std::vector<std::vector<Element>> brute;
    if (e.group->order() <= 10) {
      for (const auto& a : exhaustive_automorphisms(*e.group)) brute.push_back(a.image);
      std::sort(brute.begin(), brute.end());
      o.require(brute == oracle::automorphisms(*e.group), std::string(c.expr) + ": scans disagree");
    } else {
      brute = oracle::automorphisms(*e.group);
    }
    o.require(b.aut.order == c.expected && brute.size() == c.expected,
              std::string(c.expr) + ": " + std::to_string(b.aut.order) + " vs " +
                  std::to_string(brute.size()));
    o.require(bidwell == brute, std::string(c.expr) + ": automorphism sets differ");
    if (detail.tellp() > 0) detail << "; ";
    detail << c.expr << " " << b.aut.order << "=" << brute.size() << " (" << b.rejected
           << " grids rejected)";
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

// (n-1)!/(n-m-1)! compared against `aut`: -1 below, 0 equal, 1 above.
int compare_bound(std::uint64_t aut, std::uint64_t n, std::uint64_t m) {
  if (m >= n) return 1;
  long double bound = 1;
  for (std::uint64_t k = n - m; k <= n - 1; ++k) {
    bound *= static_cast<long double>(k);
    if (bound > 1e30L) return 1;
  }
  const auto exact = static_cast<long double>(aut);
  return bound < exact ? -1 : (bound == exact ? 0 : 1);
}

Outcome criterion_6() {
  Outcome o;
  std::vector<std::string> equality;
  for (const auto& f : catalog_facts()) {
    const auto& g = *f.group;
    o.require(f.alpha <= f.gamma && f.gamma <= chi(g), g.descriptor() + ": chain broken");
    const auto aut = automorphism_group(f.group).order;
    const int cmp = compare_bound(aut, g.order(), f.alpha);
    o.require(cmp >= 0, g.descriptor() + ": |Aut| above the bound");
    const bool expected = (is_cyclic(g) && is_prime(g.order())) || is_k4(g);
    o.require((cmp == 0) == expected, g.descriptor() + ": equality mismatch");
    if (cmp == 0) equality.push_back(g.descriptor());
  }
  if (o.pass)
    o.detail = "alpha <= gamma <= chi on " + std::to_string(catalog_facts().size()) + " groups; " +
               std::to_string(equality.size()) + " equality cases, all prime-order cyclic or K4";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::size_t sets = 0, witness_only = 0;
  for (const auto& f : catalog_facts()) {
    const auto& g = *f.group;
    std::vector<ElementSubset> minimum;
    try {
      minimum = minimum_determining_sets(f.group, {}, nullptr, f.alpha);
    } catch (const BudgetExceeded&) {
      minimum = {f.alpha_witness};
      ++witness_only;
    }
    const auto z = center(g);
    std::map<ElementSubset, std::size_t> span_gamma;
    for (const auto& d : minimum) {
      const auto h = closure(g, d);
      auto it = span_gamma.find(h);
      if (it == span_gamma.end())
        it = span_gamma.emplace(h, generating_number(make(promote(g, h))).gamma).first;
      o.require(it->second == f.alpha, g.descriptor() + ": gamma(<D>) differs from alpha");
      o.require(centralizer(g, d) == z, g.descriptor() + ": C(D) differs from C(G)");
      ++sets;
    }
  }
  if (o.pass)
    o.detail = std::to_string(sets) + " minimum determining sets checked" +
               (witness_only ? " (" + std::to_string(witness_only) + " groups witness only)" : "");
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::size_t compared = 0, aut_compared = 0;
  for (const auto& f : catalog_facts()) {
    const auto& g = f.group;
    if (g->order() > 24) continue;
    o.require(oracle_determining_number(g).alpha == f.alpha, g->descriptor() + ": alpha differs from oracle");
    o.require(oracle_generating_number(g).gamma == f.gamma, g->descriptor() + ": gamma differs from oracle");
    o.require(oracle::alpha(*g) == f.alpha, g->descriptor() + ": alpha differs from test reference");
    ++compared;
    if (g->order() <= 10) {
      const auto aut = automorphism_group(g);
      auto scan = exhaustive_automorphisms(*g);
      std::sort(scan.begin(), scan.end());
      o.require(aut.elements == scan, g->descriptor() + ": Aut differs from the bijection scan");
      ++aut_compared;
    }
  }
  if (o.pass)
    o.detail = std::to_string(compared) + " groups of order <= 24 match both oracles; Aut matches on " +
               std::to_string(aut_compared) + " groups of order <= 10";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto start = Clock::now();
  const auto v5 = verify_BC_determining(5, true);
  o.require(v5.concrete.has_value(), "p=5 concrete checks missing");
  if (v5.concrete) {
    const auto& c = *v5.concrete;
    o.require(c.order == 2000, "|ST(3,5)| = " + std::to_string(c.order));
    o.require(c.structural_maps > 0 && c.structural_verified == c.structural_maps,
              "structural maps verified " + std::to_string(c.structural_verified) + "/" +
                  std::to_string(c.structural_maps));
    o.require(c.distinct_conjugation_maps == c.expected_distinct, "conjugation maps not distinct mod scalars");
    o.require(c.stabilizer_nontrivial == 0, "structural stabilizer of {B, C} is nontrivial");
    o.require(c.tau_homomorphism && c.tau_surjective && c.kernel_is_unitriangular && c.quotient_matches,
              "tau quotient checks failed");
    o.require(c.quotient_gamma >= 2, "gamma of the tau quotient is " + std::to_string(c.quotient_gamma));
  }
  o.require(v5.centralizer_dim == 1, "p=5 centralizer dim " + std::to_string(v5.centralizer_dim));
  o.require(v5.case_ii_excluded, "p=5 case ii not excluded");
  o.require(v5.gamma_lower_bound >= 2, "p=5 gamma bound");
  o.require(v5.alpha == 2 && v5.conditional && v5.holds(), "p=5 verdict");
  for (std::uint32_t p : {7u, 11u}) {
    const auto v = verify_BC_determining(p);
    const std::string tag = "p=" + std::to_string(p);
    o.require(v.centralizer_dim == 1, tag + " centralizer dim " + std::to_string(v.centralizer_dim));
    o.require(v.case_ii_excluded, tag + " case ii not excluded");
    o.require(v.gamma_lower_bound == p - 3, tag + " gamma bound " + std::to_string(v.gamma_lower_bound));
    o.require(v.alpha == 2 && v.holds(), tag + " verdict");
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << "|ST(3,5)|=2000, " << v5.concrete->structural_maps
      << " structural maps verified, stabilizer trivial, gamma >= " << v5.concrete->quotient_gamma
      << "; alpha = 2 conditional on the classification of Aut; p=7,11 bounds 4,8 (" << static_cast<int>(t)
      << " s)";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  auto check = [&](const FiniteGroup& g, const Automorphism& a, const ElementSubset& m, const char* what) {
    o.require(is_automorphism(g, a.image) && a.fixes(m) && !a.is_identity(), what);
  };
  try {
    const auto z4 = cyclic(4);
    check(z4, index_p_fixing_automorphism(z4, {0, 2}, 1, 2), {0, 2}, "index-p map on Z(4)");
    const auto d4 = dihedral(4);
    const Element r = *d4.find_label("r");
    const auto rot = closure(d4, ElementSubset{r});
    check(d4, index_p_fixing_automorphism(d4, rot, *d4.find_label("s"), *d4.find_label("r^2")), rot,
          "index-p map on D(4)");
    const auto q8 = dicyclic(8);
    const auto qi = closure(q8, ElementSubset{*q8.find_label("i")});
    check(q8, index_p_fixing_automorphism(q8, qi, *q8.find_label("j"), *q8.find_label("-1")), qi,
          "index-p map on Q(8)");

    const auto z3 = cyclic(3);
    check(z3, odd_index_abelian_automorphism(z3, {0}), {0}, "odd-index map on Z(3)");
    const auto z15 = cyclic(15);
    const auto m15 = closure(z15, ElementSubset{3});
    check(z15, odd_index_abelian_automorphism(z15, m15), m15, "odd-index map on Z(15)");

    const auto z6 = cyclic(6);
    const auto shifted = shift_determining_set(z6, 3, ElementSubset{2});
    o.require(shifted == ElementSubset{5}, "shift on Z(6) did not give {5}");
    o.require(closure(z6, shifted).size() > closure(z6, ElementSubset{2}).size(), "shift closure not larger");

    for (const auto& h : {make(cyclic(2)), make(cyclic(3)), make(symmetric(3))}) {
      const auto c = tight_cover(h);
      o.require(is_deg(c.cover()), h->descriptor() + ": cover not DEG");
      o.require(isomorphic(tight_cover_recover(c), h), h->descriptor() + ": base not recovered");
    }
  } catch (const Error& e) {
    o.require(false, e.what());
  }
  if (o.pass)
    o.detail = "index-p maps on Z(4), D(4), Q(8); odd-index maps on Z(3), Z(15); Z(6) shift {2} -> {5}; "
               "covers of Z(2), Z(3), S(3) DEG and recovered";
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = run_command("verify", "", CliOptions{}, out, err);
  const double t = seconds_since(start);
  o.require(code == 0, "verify exited with " + std::to_string(code) + ": " + err.str());
  o.require(t < 600.0, "verify took " + std::to_string(t) + " s");
  if (o.pass) {
    const std::string text = out.str();
    const auto tail = text.rfind("pass ");
    o.detail = "exit 0 in " + std::to_string(static_cast<int>(t)) + " s; " +
               (tail == std::string::npos ? "" : text.substr(tail, text.find('\n', tail) - tail));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3},  {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7},  {8, criterion_8},
      {9, criterion_9}, {10, criterion_10}, {11, criterion_11}};
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
