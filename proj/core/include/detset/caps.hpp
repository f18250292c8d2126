#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace detset {

// Resource limits shared by every search in the library.
struct Caps {
  std::size_t max_order = 10000;         // concrete group construction
  std::size_t subgroup_scan = 200;       // full subgroup / normal subgroup scans
  std::size_t assoc_check = 256;         // exhaustive associativity check
  std::uint64_t aut_cap = 1000000;       // materialized automorphisms
  std::uint64_t aut_memory = 20000000;   // |Aut| * |G| entries kept in memory
  std::uint64_t node_budget = 100000000; // subset tests in alpha/gamma searches
  std::uint64_t hom_candidates = 1000000;
  std::size_t oracle_order = 24;
  std::uint64_t subset_budget = 1000000; // minimum determining set listing

  // Applies "key=value,key=value" overrides (the DETSET_CAPS format).
  // Unknown keys or malformed values throw InvalidArgument.
  void apply_overrides(std::string_view text);
};

}  // namespace detset
