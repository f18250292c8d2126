#include "detset/catalog.hpp"

#include <utility>

#include "detset/expr.hpp"
#include "detset/structure.hpp"

namespace detset {

namespace {

std::string cyclic_product(const std::vector<std::size_t>& orders) {
  std::string s;
  for (std::size_t o : orders) s += (s.empty() ? "Z(" : " x Z(") + std::to_string(o) + ")";
  return s;
}

// Invariant-factor lists d_1 | d_2 | ... with 2 or 3 terms, each d_1 >= 2.
void invariant_factors(std::size_t max_order, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  std::size_t prod = 1;
  for (std::size_t d : cur) prod *= d;
  if (cur.size() >= 2) out.push_back(cur);
  if (cur.size() == 3) return;
  const std::size_t step = cur.empty() ? 1 : cur.back();
  for (std::size_t d = cur.empty() ? 2 : step; prod * d <= max_order; d += step) {
    cur.push_back(d);
    invariant_factors(max_order, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CatalogEntry> catalog_entries(const CatalogSpec& spec) {
  std::vector<CatalogEntry> out;
  auto wanted = [&](const std::string& family) {
    if (family == "abelian" || family == "products")
      if (!spec.include_products) return false;
    return spec.families.empty() || spec.families.count(family) > 0;
  };
  auto add = [&](const std::string& family, std::size_t order, std::string expr, bool info_only = false,
                 bool assert_ndf = false) {
    if (!wanted(family)) return;
    if (!info_only && order > spec.max_order) return;
    out.push_back({std::move(expr), family, info_only, assert_ndf});
  };

  for (std::size_t n = 2; n <= spec.max_order; ++n) add("Z", n, "Z(" + std::to_string(n) + ")");

  for (std::size_t p : {2, 3, 5, 7})
    for (std::size_t k = 2, q = p * p; q <= 32; ++k, q *= p)
      add("EA", q, "EA(" + std::to_string(p) + "," + std::to_string(k) + ")");

  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  invariant_factors(48, cur, lists);
  for (const auto& l : lists) {
    std::size_t order = 1;
    bool elementary = is_prime(l.front());
    for (std::size_t d : l) {
      order *= d;
      elementary = elementary && d == l.front();
    }
    if (elementary) continue;  // already present as EA(p,k)
    add("abelian", order, cyclic_product(l));
  }

  for (std::size_t n = 3; n <= 12; ++n) add("D", 2 * n, "D(" + std::to_string(n) + ")");
  add("S", 6, "S(3)");
  add("S", 24, "S(4)");
  add("A", 60, "A(5)");
  add("S", 120, "S(5)", true);
  add("Q", 8, "Q(8)");
  add("Q", 12, "Q(12)");
  add("Q", 16, "Q(16)");
  add("U", 8, "U(3,2)");
  add("U", 27, "U(3,3)");
  add("ST", 6, "ST(2,3)");

  // Factors are directly indecomposable and pairwise non-isomorphic, so no
  // direct factor is shared.
  const std::pair<const char*, std::size_t> products[] = {
      {"S(3) x Z(2)", 12}, {"Z(3) x S(3)", 18}, {"Q(8) x Z(3)", 24}, {"D(4) x Z(3)", 24},
      {"D(4) x Z(5)", 40}, {"Q(8) x Z(5)", 40}, {"D(4) x Z(2)", 16}, {"Q(8) x Z(2)", 16}};
  for (const auto& [e, order] : products) add("products", order, e, false, true);
  return out;
}

std::vector<SuiteGroup> build_catalog(const CatalogSpec& spec, const Caps& caps) {
  std::vector<SuiteGroup> out;
  for (const auto& e : catalog_entries(spec)) {
    auto g = evaluate(e.expr, caps);
    out.push_back({g.group, g.product, e.assert_no_common_direct_factor, e.info_only});
  }
  return out;
}

}  // namespace detset
