#include "detset/caps.hpp"

#include <charconv>
#include <string>

#include "detset/errors.hpp"

namespace detset {

void Caps::apply_overrides(std::string_view text) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgument("caps override '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size())
      throw InvalidArgument("caps override '" + std::string(item) + "' has a bad value");
    if (key == "max_order") max_order = v;
    else if (key == "subgroup_scan") subgroup_scan = v;
    else if (key == "assoc_check") assoc_check = v;
    else if (key == "aut_cap") aut_cap = v;
    else if (key == "aut_memory") aut_memory = v;
    else if (key == "node_budget") node_budget = v;
    else if (key == "hom_candidates") hom_candidates = v;
    else if (key == "oracle_order") oracle_order = v;
    else if (key == "subset_budget") subset_budget = v;
    else throw InvalidArgument("unknown caps key '" + std::string(key) + "'");
  }
}

}  // namespace detset
