#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "detset/caps.hpp"
#include "detset/suite.hpp"

namespace detset {

struct CatalogSpec {
  std::size_t max_order = 63;
  // Atom families to include (Z, EA, abelian, D, S, A, Q, U, ST, products);
  // empty means all.
  std::set<std::string> families;
  bool include_products = true;
};

struct CatalogEntry {
  std::string expr;
  std::string family;
  bool info_only = false;
  bool assert_no_common_direct_factor = false;
};

// The catalog as expressions, in catalog order. Descriptors are distinct.
std::vector<CatalogEntry> catalog_entries(const CatalogSpec& spec = {});

// Evaluates every entry. Throws on evaluation errors (none are expected for
// the built-in entries).
std::vector<SuiteGroup> build_catalog(const CatalogSpec& spec = {}, const Caps& caps = {});

}  // namespace detset
