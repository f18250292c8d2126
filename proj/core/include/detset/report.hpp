#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detset/suite.hpp"

namespace detset {

// Result of one CLI command, serialized by emit_report.
struct Report {
  std::string command;
  std::string descriptor;
  std::size_t order = 0;  // group order; number of catalog members for verify/catalog
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> gamma;
  std::optional<std::uint64_t> aut_order;
  std::optional<bool> deg;
  std::map<std::string, bool> capped_flags;
  std::map<std::string, std::vector<std::string>> witnesses;  // element labels per quantity
  std::vector<std::vector<std::uint32_t>> aut_generators;     // permutation arrays
  std::map<std::string, std::string> info;                    // structural facts for `info`
  std::vector<std::string> catalog;                           // descriptors for `catalog`
  std::uint64_t nodes = 0;
  std::uint64_t millis = 0;
  std::optional<SuiteReport> suite;
  std::string error;
};

enum class ReportFormat { json, text };

std::string emit_report(const Report& r, ReportFormat format);

}  // namespace detset
