#include "detset/suite.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "detset/aut.hpp"
#include "detset/constructions.hpp"
#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/product_aut.hpp"
#include "detset/structure.hpp"

namespace detset {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
  }
  return "unknown";
}

std::size_t SuiteReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const SuiteEntry& e) { return e.verdict == v; }));
}

namespace {

std::string labels_of(const FiniteGroup& g, const ElementSubset& s) {
  std::string out = "{";
  for (Element x : s) {
    if (out.size() > 1) out += ", ";
    out += g.label(x);
  }
  return out + "}";
}

std::string image_of(const FiniteGroup& g, const Automorphism& a) {
  std::string out = "[";
  for (Element x = 0; x < g.order(); ++x) {
    if (x) out += ", ";
    out += g.label(x) + "->" + g.label(a(x));
  }
  return out + "]";
}

ElementSubset apply(const Automorphism& a, const ElementSubset& s) {
  std::vector<Element> out;
  for (Element x : s) out.push_back(a(x));
  return ElementSubset(std::move(out));
}

// (n-1)!/(n-m-1)!, saturating.
std::uint64_t ordered_subsets(std::uint64_t n, std::uint64_t m) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t f = n - 1 - i;
    if (f != 0 && out > UINT64_MAX / f) return UINT64_MAX;
    out *= f;
  }
  return out;
}

class GroupChecker {
 public:
  GroupChecker(const SuiteGroup& entry, const SuiteOptions& options)
      : entry_(entry), gp_(entry.group), g_(*entry.group), caps_(options.caps), options_(options) {
    facts_.descriptor = g_.descriptor();
    facts_.order = g_.order();
  }

  std::pair<GroupFacts, std::vector<SuiteEntry>> run() {
    aut_ = automorphism_group(gp_, caps_);
    facts_.aut_order = aut_.order;
    facts_.aut_capped = aut_.capped;
    if (entry_.info_only || g_.order() < 2) return {facts_, entries_};

    try {
      alpha_ = determining_number(gp_, caps_, &aut_);
      facts_.alpha = alpha_->alpha;
      facts_.alpha_witness = alpha_->witness.members();
      facts_.alpha_method = alpha_->method;
      facts_.nodes += alpha_->nodes_explored;
    } catch (const BudgetExceeded&) {
      facts_.alpha_budget_hit = true;
    }
    try {
      gamma_ = generating_number(gp_, caps_);
      facts_.gamma = gamma_->gamma;
      facts_.gamma_witness = gamma_->witness.members();
      facts_.nodes += gamma_->nodes_explored;
    } catch (const BudgetExceeded&) {
      facts_.gamma_budget_hit = true;
    }

    abelian_ = g_.is_abelian();
    cyclic_ = is_cyclic(g_);
    nilpotent_ = is_nilpotent(gp_);
    chi_ = chi(g_);

    witness_checks();
    bound_checks();
    classification_checks();
    chi_equality_checks();
    aut_bound_checks();
    minimum_set_checks();
    structure_checks();
    if (entry_.product) product_checks();
    cover_checks();
    return {facts_, entries_};
  }

 private:
  void add(const char* check, bool ok, std::string detail = {}) {
    entries_.push_back({g_.descriptor(), check, ok ? Verdict::pass : Verdict::fail,
                        ok ? std::string{} : std::move(detail)});
  }
  void skip(const char* check, std::string reason) {
    entries_.push_back({g_.descriptor(), check, Verdict::skip, std::move(reason)});
  }
  // Emits a skip and returns false when a needed search ran out of budget.
  bool need(const char* check, bool alpha, bool gamma) {
    if ((alpha && !alpha_) || (gamma && !gamma_)) {
      skip(check, alpha && !alpha_ ? "alpha search budget exhausted" : "gamma search budget exhausted");
      return false;
    }
    return true;
  }

  void witness_checks() {
    if (alpha_)
      add("alpha-witness-determining", is_determining_set(g_, alpha_->witness),
          labels_of(g_, alpha_->witness));
    if (gamma_) {
      add("gamma-witness-generates", generates(g_, gamma_->witness), labels_of(g_, gamma_->witness));
      add("generating-set-determining", is_determining_set(g_, gamma_->witness),
          labels_of(g_, gamma_->witness));
    }
  }

  void bound_checks() {
    if (need("alpha-le-gamma", true, true))
      add("alpha-le-gamma", alpha_->alpha <= gamma_->gamma,
          "alpha " + std::to_string(alpha_->alpha) + " > gamma " + std::to_string(gamma_->gamma));
    if (need("gamma-le-chi", false, true))
      add("gamma-le-chi", gamma_->gamma <= chi_,
          "gamma " + std::to_string(gamma_->gamma) + " > chi " + std::to_string(chi_));
    if (need("alpha-le-chi", true, false))
      add("alpha-le-chi", alpha_->alpha <= chi_,
          "alpha " + std::to_string(alpha_->alpha) + " > chi " + std::to_string(chi_));
  }

  void classification_checks() {
    if (need("alpha-zero-iff-z2", true, false))
      add("alpha-zero-iff-z2", (alpha_->alpha == 0) == (g_.order() == 2),
          "alpha " + std::to_string(alpha_->alpha) + " at order " + std::to_string(g_.order()));
    if (need("alpha-one-iff-cyclic", true, false))
      add("alpha-one-iff-cyclic", (alpha_->alpha == 1) == (cyclic_ && g_.order() >= 3),
          "alpha " + std::to_string(alpha_->alpha) + (cyclic_ ? ", cyclic" : ", not cyclic"));
    if (!abelian_ && need("nonabelian-alpha-ge-2", true, false))
      add("nonabelian-alpha-ge-2", alpha_->alpha >= 2, "alpha " + std::to_string(alpha_->alpha));
    if (gamma_ && gamma_->gamma == 2 && need("gamma-two-alpha-two", true, false))
      add("gamma-two-alpha-two", alpha_->alpha == 2, "alpha " + std::to_string(alpha_->alpha));

    auto deg_check = [&](const char* check) {
      if (need(check, true, true))
        add(check, alpha_->alpha == gamma_->gamma,
            "alpha " + std::to_string(alpha_->alpha) + ", gamma " + std::to_string(gamma_->gamma));
    };
    if (g_.order() < 3) return;
    if (g_.order() <= caps_.subgroup_scan && is_simple(g_, caps_)) deg_check("simple-deg");
    if (is_prime_power(g_.order())) deg_check("p-group-deg");
    if (abelian_) deg_check("abelian-deg");
    if (nilpotent_) deg_check("nilpotent-deg");
  }

  void chi_equality_checks() {
    if (!alpha_ || alpha_->alpha != chi_) return;
    const auto orders = element_orders(g_);
    std::optional<Element> bad;
    for (Element x = 1; x < g_.order() && !bad; ++x)
      if (!is_prime(orders[x])) bad = x;
    add("alpha-chi-prime-orders", !bad,
        bad ? g_.label(*bad) + " has order " + std::to_string(orders[*bad]) : std::string{});

    if (g_.order() <= caps_.subgroup_scan) {
      std::string failure;
      for (const auto& h : subgroups(g_, caps_)) {
        if (h.size() == 1) continue;
        const auto hg = share(promote(g_, h));
        std::size_t gh;
        try {
          gh = generating_number(hg, caps_).gamma;
        } catch (const BudgetExceeded&) {
          skip("alpha-chi-subgroups", "gamma of subgroup " + labels_of(g_, h) + " exceeded budget");
          return;
        }
        if (gh != chi(h.size())) {
          failure = "subgroup " + labels_of(g_, h) + " has gamma " + std::to_string(gh) + ", chi " +
                    std::to_string(chi(h.size()));
          break;
        }
      }
      add("alpha-chi-subgroups", failure.empty(), failure);
    }

    if (nilpotent_) {
      // Single-prime form: G is elementary abelian.
      const auto f = factorize(g_.order());
      bool ok = abelian_ && f.size() == 1;
      for (Element x = 1; ok && x < g_.order(); ++x) ok = orders[x] == f[0].first;
      add("alpha-chi-nilpotent-elementary", ok, "not elementary abelian");
    }
  }

  void aut_bound_checks() {
    if (!need("aut-order-bound", true, false)) return;
    const std::uint64_t bound = ordered_subsets(g_.order(), alpha_->alpha);
    add("aut-order-bound", aut_.order <= bound,
        "|Aut| " + std::to_string(aut_.order) + " > " + std::to_string(bound));
    const bool special = (cyclic_ && is_prime(g_.order())) || (g_.order() == 4 && !cyclic_);
    add("aut-order-equality", (aut_.order == bound) == special,
        "|Aut| " + std::to_string(aut_.order) + ", bound " + std::to_string(bound));
  }

  void minimum_set_checks() {
    if (!alpha_) {
      for (const char* c : {"min-det-span-gamma", "min-det-centralizer", "min-det-aut-image"})
        skip(c, "alpha search budget exhausted");
      return;
    }
    std::vector<ElementSubset> sets;
    bool full = true;
    try {
      sets = minimum_determining_sets(gp_, caps_, &aut_, alpha_->alpha);
      facts_.minimum_determining_sets = sets.size();
    } catch (const BudgetExceeded&) {
      sets = {alpha_->witness};
      full = false;
    }

    const ElementSubset z = center(g_);
    std::map<ElementSubset, std::size_t> gamma_cache;
    std::string span_fail, cent_fail;
    bool span_skipped = false;
    for (const auto& d : sets) {
      const ElementSubset h = closure(g_, d);
      auto it = gamma_cache.find(h);
      if (it == gamma_cache.end()) {
        std::size_t gh;
        try {
          gh = generating_number(share(promote(g_, h)), caps_).gamma;
        } catch (const BudgetExceeded&) {
          span_skipped = true;
          break;
        }
        it = gamma_cache.emplace(h, gh).first;
      }
      if (span_fail.empty() && it->second != alpha_->alpha)
        span_fail = labels_of(g_, d) + " spans a subgroup with gamma " + std::to_string(it->second);
      if (cent_fail.empty() && centralizer(g_, d) != z)
        cent_fail = "C(" + labels_of(g_, d) + ") differs from the center";
    }
    if (span_skipped) skip("min-det-span-gamma", "gamma of a spanned subgroup exceeded budget");
    else add("min-det-span-gamma", span_fail.empty(), span_fail);
    add("min-det-centralizer", cent_fail.empty(), cent_fail);

    // Closed under the generators of Aut means closed under all of Aut.
    std::set<ElementSubset> known(sets.begin(), sets.end());
    std::string image_fail;
    for (const auto& a : aut_.generators) {
      for (const auto& d : sets) {
        const ElementSubset img = apply(a, d);
        const bool ok = full ? known.count(img) > 0 : is_determining_set(g_, img);
        if (!ok) {
          image_fail = image_of(g_, a) + " maps " + labels_of(g_, d) + " to a non-determining set";
          break;
        }
      }
      if (!image_fail.empty()) break;
    }
    add("min-det-aut-image", image_fail.empty(), image_fail);
  }

  void structure_checks() {
    const auto f = factorize(g_.order());
    if (f.size() == 1 && f[0].second == 2) add("prime-square-abelian", abelian_, "nonabelian");
    if (nilpotent_ && g_.order() <= caps_.subgroup_scan) {
      std::set<std::size_t> sizes;
      for (const auto& h : subgroups(g_, caps_)) sizes.insert(h.size());
      std::string missing;
      for (std::size_t m = 1; m <= g_.order(); ++m)
        if (g_.order() % m == 0 && !sizes.count(m)) {
          missing = "no subgroup of order " + std::to_string(m);
          break;
        }
      add("nilpotent-subgroup-orders", missing.empty(), missing);
    }
  }

  void product_checks() {
    const DirectProduct& dp = *entry_.product;
    const auto& fs = dp.factors();
    std::vector<std::size_t> fa;
    try {
      for (const auto& f : fs) fa.push_back(determining_number(f, caps_).alpha);
    } catch (const BudgetExceeded&) {
      skip("product-alpha-ge-max", "factor alpha search budget exhausted");
      return;
    }
    const std::size_t max_alpha = *std::max_element(fa.begin(), fa.end());
    if (!need("product-alpha-ge-max", true, false)) return;
    const std::size_t a = alpha_->alpha;
    const std::string detail = "alpha " + std::to_string(a) + ", max factor alpha " + std::to_string(max_alpha);
    add("product-alpha-ge-max", a >= max_alpha, detail);

    const auto rows = row_criterion_check(dp, alpha_->witness.members());
    if (rows) add("row-criterion", *rows, labels_of(g_, alpha_->witness));

    const bool coprime = pairwise_coprime(fs);
    if (coprime) add("coprime-alpha-max", a == max_alpha, detail);

    if (coprime || entry_.assert_no_common_direct_factor) {
      try {
        bool trivial = true;
        for (std::size_t i = 0; i < fs.size() && trivial; ++i) {
          const auto zi = share(promote(*fs[i], center(*fs[i])));
          for (std::size_t j = 0; j < fs.size() && trivial; ++j)
            if (i != j) trivial = hom_set(fs[j], zi, caps_).size() == 1;
        }
        if (trivial) add("trivial-cross-homs-alpha-max", a == max_alpha, detail);
        if (!aut_.capped) {
          const auto b = bidwell_aut_group(dp, caps_, true);
          add("bidwell-aut-group", b.aut.elements == aut_.elements,
              "Bidwell order " + std::to_string(b.aut.order) + ", search order " +
                  std::to_string(aut_.order));
        }
      } catch (const CapExceeded&) {
        // Too many candidates for an explicit comparison; not applicable.
      }
    }

    if (fs.size() == 2) {
      for (std::size_t k = 0; k < 2; ++k) {
        const FiniteGroup& h1 = *fs[k];
        if (fs[1 - k]->order() == 2 && center(h1).size() == 1) {
          const auto g1 = generating_number(fs[k], caps_).gamma;
          if (g1 == fa[k]) add("trivial-center-times-z2", a == fa[k], detail);
        }
      }
      const auto o1 = factorize(fs[0]->order()), o2 = factorize(fs[1]->order());
      if (o1.size() == 1 && o2.size() == 1 && o1[0].first == o2[0].first && is_cyclic(*fs[0]) &&
          is_cyclic(*fs[1]))
        add("cyclic-p-power-pair", a == 2, "alpha " + std::to_string(a));
    }
  }

  void cover_checks() {
    if (!gamma_) return;
    std::uint64_t order = g_.order();
    const std::uint64_t p = next_prime_above(g_.order());
    for (std::size_t i = 0; i < gamma_->gamma && order <= options_.cover_order_limit; ++i) order *= p;
    if (order > options_.cover_order_limit) return;
    const TightCover c = tight_cover(gp_, caps_);
    try {
      tight_cover_recover(c);
      add("tight-cover-recover", true);
    } catch (const Error& e) {
      add("tight-cover-recover", false, e.what());
    }
    try {
      const auto v = deg(c.cover(), caps_);
      add("tight-cover-deg", v.is_deg(),
          "cover alpha " + std::to_string(v.alpha.alpha) + ", gamma " + std::to_string(v.gamma.gamma));
    } catch (const BudgetExceeded&) {
      skip("tight-cover-deg", "cover search budget exhausted");
    }
  }

  const SuiteGroup& entry_;
  GroupPtr gp_;
  const FiniteGroup& g_;
  Caps caps_;
  const SuiteOptions& options_;
  GroupFacts facts_;
  std::vector<SuiteEntry> entries_;
  AutGroup aut_;
  std::optional<DeterminingReport> alpha_;
  std::optional<GeneratingReport> gamma_;
  bool abelian_ = false, cyclic_ = false, nilpotent_ = false;
  unsigned chi_ = 0;
};

// Covers of pairwise non-isomorphic small bases must be pairwise non-isomorphic.
SuiteEntry injectivity_sample(const std::vector<SuiteGroup>& catalog,
                              const std::vector<GroupFacts>& facts, const SuiteOptions& options) {
  struct Base {
    GroupPtr group;
    std::size_t gamma;
  };
  std::vector<Base> bases;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& g = catalog[i].group;
    if (catalog[i].info_only || g->order() < 2 || g->order() > options.injectivity_base_limit ||
        !facts[i].gamma)
      continue;
    bool duplicate = false;
    for (const auto& b : bases)
      if (b.group->order() == g->order() && b.gamma == *facts[i].gamma && isomorphic(b.group, g)) {
        duplicate = true;
        break;
      }
    if (!duplicate) bases.push_back({g, *facts[i].gamma});
  }

  std::size_t compared = 0;
  std::map<std::size_t, GroupPtr> covers;
  auto cover_of = [&](std::size_t i) -> GroupPtr {
    auto it = covers.find(i);
    if (it == covers.end()) it = covers.emplace(i, tight_cover(bases[i].group, options.caps).cover()).first;
    return it->second;
  };
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      // Cover order p^l |H| pins down |H| and l, so only those pairs can collide.
      if (bases[i].group->order() != bases[j].group->order() || bases[i].gamma != bases[j].gamma)
        continue;
      try {
        ++compared;
        if (isomorphic(cover_of(i), cover_of(j)))
          return {"catalog", "tight-cover-injective", Verdict::fail,
                  "covers of " + bases[i].group->descriptor() + " and " +
                      bases[j].group->descriptor() + " are isomorphic"};
      } catch (const CapExceeded&) {
        --compared;
      }
    }
  return {"catalog", "tight-cover-injective", Verdict::pass,
          std::to_string(bases.size()) + " bases, " + std::to_string(compared) + " cover pairs compared"};
}

}  // namespace

std::pair<GroupFacts, std::vector<SuiteEntry>> check_group(const SuiteGroup& entry,
                                                           const SuiteOptions& options) {
  return GroupChecker(entry, options).run();
}

SuiteReport theorem_suite(const std::vector<SuiteGroup>& catalog, const SuiteOptions& options,
                          std::string catalog_name) {
  std::vector<std::pair<GroupFacts, std::vector<SuiteEntry>>> results(catalog.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < catalog.size();) {
      try {
        results[i] = check_group(catalog[i], options);
      } catch (const Error& e) {
        results[i].first.descriptor = catalog[i].group->descriptor();
        results[i].first.order = catalog[i].group->order();
        results[i].second = {{catalog[i].group->descriptor(), "evaluation", Verdict::skip, e.what()}};
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, catalog.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.catalog = std::move(catalog_name);
  for (auto& [facts, entries] : results) {
    report.groups.push_back(std::move(facts));
    for (auto& e : entries) report.entries.push_back(std::move(e));
  }
  if (!catalog.empty()) report.entries.push_back(injectivity_sample(catalog, report.groups, options));
  return report;
}

}  // namespace detset
