#include "detset/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace detset {

namespace {

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["descriptor"] = r.descriptor;
  j["order"] = r.order;
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.gamma) j["gamma"] = *r.gamma;
  if (r.aut_order) j["aut_order"] = *r.aut_order;
  if (r.deg) j["deg"] = *r.deg;
  j["capped_flags"] = r.capped_flags;
  j["witnesses"] = r.witnesses;
  if (!r.aut_generators.empty()) j["aut_generators"] = r.aut_generators;
  if (!r.info.empty()) j["info"] = r.info;
  if (r.command == "catalog") j["catalog"] = r.catalog;
  j["nodes"] = r.nodes;
  j["millis"] = r.millis;
  if (r.suite) {
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : r.suite->entries) {
      nlohmann::ordered_json x;
      x["group"] = e.group;
      x["check"] = e.check;
      x["verdict"] = to_string(e.verdict);
      if (!e.detail.empty()) x["detail"] = e.detail;
      entries.push_back(std::move(x));
    }
    j["suite_entries"] = std::move(entries);
    auto groups = nlohmann::ordered_json::array();
    for (const auto& g : r.suite->groups) {
      nlohmann::ordered_json x;
      x["descriptor"] = g.descriptor;
      x["order"] = g.order;
      if (g.alpha) x["alpha"] = *g.alpha;
      if (g.gamma) x["gamma"] = *g.gamma;
      if (g.aut_order) x["aut_order"] = *g.aut_order;
      x["capped_flags"] = {{"aut", g.aut_capped},
                           {"alpha_budget", g.alpha_budget_hit},
                           {"gamma_budget", g.gamma_budget_hit}};
      if (!g.alpha_method.empty()) x["alpha_method"] = g.alpha_method;
      if (g.minimum_determining_sets) x["minimum_determining_sets"] = *g.minimum_determining_sets;
      x["nodes"] = g.nodes;
      groups.push_back(std::move(x));
    }
    j["suite_groups"] = std::move(groups);
    j["summary"] = {{"pass", r.suite->count(Verdict::pass)},
                    {"fail", r.suite->count(Verdict::fail)},
                    {"skip", r.suite->count(Verdict::skip)}};
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(20) << key << value << '\n';
  };
  row("command", r.command);
  row("descriptor", r.descriptor);
  row(r.command == "verify" || r.command == "catalog" ? "groups" : "order", std::to_string(r.order));
  if (r.alpha) row("alpha", std::to_string(*r.alpha));
  if (r.gamma) row("gamma", std::to_string(*r.gamma));
  if (r.aut_order) row("aut_order", std::to_string(*r.aut_order));
  if (r.deg) row("deg", *r.deg ? "true" : "false");
  for (const auto& [k, v] : r.witnesses) row("witness." + k, join(v));
  for (const auto& [k, v] : r.capped_flags)
    if (v) row("capped." + k, "true");
  for (const auto& [k, v] : r.info) row(k, v);
  if (!r.aut_generators.empty()) row("aut_gens", std::to_string(r.aut_generators.size()));
  for (const auto& d : r.catalog) row("member", d);
  if (r.nodes) row("nodes", std::to_string(r.nodes));
  if (r.millis) row("millis", std::to_string(r.millis));
  if (r.suite) {
    std::size_t width = 8;
    for (const auto& e : r.suite->entries) width = std::max(width, e.group.size() + 2);
    for (const auto& e : r.suite->entries) {
      out << std::left << std::setw(static_cast<int>(width)) << e.group << std::setw(32) << e.check
          << to_string(e.verdict);
      if (!e.detail.empty()) out << "  " << e.detail;
      out << '\n';
    }
    out << "pass " << r.suite->count(Verdict::pass) << ", fail " << r.suite->count(Verdict::fail)
        << ", skip " << r.suite->count(Verdict::skip) << '\n';
  }
  if (!r.error.empty()) row("error", r.error);
  return out.str();
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) return to_json(r).dump(2) + "\n";
  return to_text(r);
}

}  // namespace detset
