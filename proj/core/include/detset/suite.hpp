#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detset/caps.hpp"
#include "detset/families.hpp"
#include "detset/group.hpp"

namespace detset {

// One catalog member. `product` is set when the group was built as a direct
// product of two or more factors (then group == product->group()), enabling
// the product checks.
struct SuiteGroup {
  GroupPtr group;
  std::shared_ptr<const DirectProduct> product;
  bool assert_no_common_direct_factor = false;
  bool info_only = false;  // report order and Aut only, no searches
};

enum class Verdict { pass, fail, skip };
const char* to_string(Verdict v);

struct SuiteEntry {
  std::string group;   // descriptor, or "catalog" for cross-group checks
  std::string check;   // stable check identifier
  Verdict verdict = Verdict::pass;
  std::string detail;  // witness on failure, reason on skip
};

// Per-group computed quantities, reported alongside the checks.
struct GroupFacts {
  std::string descriptor;
  std::size_t order = 0;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> gamma;
  std::optional<std::uint64_t> aut_order;
  bool aut_capped = false;
  bool alpha_budget_hit = false;
  bool gamma_budget_hit = false;
  std::vector<Element> alpha_witness;
  std::vector<Element> gamma_witness;
  std::string alpha_method;
  std::uint64_t nodes = 0;
  std::optional<std::size_t> minimum_determining_sets;  // count, when listed
};

struct SuiteOptions {
  Caps caps;
  unsigned workers = 1;
  std::size_t cover_order_limit = 300;     // tight covers checked for DEG up to this order
  std::size_t injectivity_base_limit = 12; // bases compared pairwise by their covers
};

struct SuiteReport {
  std::string catalog;
  std::vector<GroupFacts> groups;
  std::vector<SuiteEntry> entries;  // grouped by catalog order, then check order

  std::size_t count(Verdict v) const;
  bool has_failures() const { return count(Verdict::fail) > 0; }
};

// Evaluates every applicable theorem check on every catalog member. Caps
// never produce failures: a search that runs out of budget yields skip
// entries for the checks that needed it.
SuiteReport theorem_suite(const std::vector<SuiteGroup>& catalog, const SuiteOptions& options = {},
                          std::string catalog_name = "catalog");

// The checks for one group (the per-group part of theorem_suite).
std::pair<GroupFacts, std::vector<SuiteEntry>> check_group(const SuiteGroup& entry,
                                                           const SuiteOptions& options);

}  // namespace detset
