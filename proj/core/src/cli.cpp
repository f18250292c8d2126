#include "detset/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "detset/aut.hpp"
#include "detset/catalog.hpp"
#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/expr.hpp"
#include "detset/structure.hpp"

namespace detset {

Caps effective_caps(const CliOptions& options) {
  Caps caps;
  if (!options.caps_env.empty()) caps.apply_overrides(options.caps_env);
  if (options.aut_cap) caps.aut_cap = *options.aut_cap;
  if (options.node_budget) caps.node_budget = *options.node_budget;
  return caps;
}

namespace {

std::vector<std::string> labels(const FiniteGroup& g, const ElementSubset& s) {
  std::vector<std::string> out;
  for (Element x : s) out.push_back(g.label(x));
  return out;
}

std::set<std::string> split_families(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(item);
  return out;
}

void fill_alpha(Report& r, const FiniteGroup& g, const DeterminingReport& d) {
  r.alpha = d.alpha;
  r.witnesses["alpha"] = labels(g, d.witness);
  r.info["alpha_method"] = d.method;
  r.nodes += d.nodes_explored;
}

void fill_gamma(Report& r, const FiniteGroup& g, const GeneratingReport& d) {
  r.gamma = d.gamma;
  r.witnesses["gamma"] = labels(g, d.witness);
  r.nodes += d.nodes_explored;
}

int group_command(const std::string& command, const std::string& expr, const Caps& caps, Report& r) {
  const EvaluatedGroup eg = evaluate(expr, caps);
  const FiniteGroup& g = *eg.group;
  r.descriptor = g.descriptor();
  r.order = g.order();
  if (command == "alpha") {
    fill_alpha(r, g, determining_number(eg.group, caps));
  } else if (command == "gamma") {
    fill_gamma(r, g, generating_number(eg.group, caps));
  } else if (command == "deg") {
    const auto v = deg(eg.group, caps);
    fill_alpha(r, g, v.alpha);
    fill_gamma(r, g, v.gamma);
    r.deg = v.is_deg();
  } else if (command == "aut") {
    const AutGroup aut = automorphism_group(eg.group, caps);
    r.aut_order = aut.order;
    r.capped_flags["aut"] = aut.capped;
    for (const auto& a : aut.generators) r.aut_generators.push_back(a.image);
  } else {  // info
    auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
    r.info["chi"] = std::to_string(chi(g));
    r.info["abelian"] = yes(g.is_abelian());
    r.info["cyclic"] = yes(is_cyclic(g));
    r.info["nilpotent"] = yes(is_nilpotent(eg.group));
    r.info["center_order"] = std::to_string(center(g).size());
    r.info["conjugacy_classes"] = std::to_string(conjugacy_classes(g).size());
    r.info["derived_order"] = std::to_string(derived_subgroup(g).size());
    if (g.order() <= caps.subgroup_scan) r.info["simple"] = yes(is_simple(g, caps));
    if (eg.product) r.info["factors"] = std::to_string(eg.product->factor_count());
    const AutGroup aut = automorphism_group(eg.group, caps);
    r.aut_order = aut.order;
    r.capped_flags["aut"] = aut.capped;
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::string& command, const std::string& expr, const CliOptions& options,
                std::ostream& out, std::ostream& err) {
  static const std::set<std::string> group_commands{"alpha", "gamma", "aut", "deg", "info"};
  Report r;
  r.command = command;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    Caps caps = effective_caps(options);
    if (group_commands.count(command)) {
      if (expr.empty()) {
        err << "error: '" << command << "' needs a group expression\n";
        return kExitUsage;
      }
      if (options.max_order) caps.max_order = *options.max_order;
      code = group_command(command, expr, caps, r);
    } else if (command == "verify" || command == "catalog") {
      if (!expr.empty()) {
        err << "error: '" << command << "' takes no group expression\n";
        return kExitUsage;
      }
      CatalogSpec spec;
      if (options.max_order) spec.max_order = *options.max_order;
      spec.families = split_families(options.families);
      spec.include_products = !options.no_products;
      r.descriptor = "catalog(max_order=" + std::to_string(spec.max_order) + ")";
      if (command == "catalog") {
        for (const auto& e : catalog_entries(spec))
          r.catalog.push_back(e.info_only ? e.expr + " [info]" : e.expr);
        r.order = r.catalog.size();
      } else {
        const auto catalog = build_catalog(spec, caps);
        r.order = catalog.size();
        SuiteOptions so;
        so.caps = caps;
        so.workers = std::max(1u, options.workers);
        r.suite = theorem_suite(catalog, so, r.descriptor);
        for (const auto& g : r.suite->groups) r.nodes += g.nodes;
        if (r.suite->has_failures()) code = kExitViolation;
        else if (r.suite->count(Verdict::skip) > 0) code = kExitResourceCap;
      }
    } else {
      err << "error: unknown command '" << command
          << "' (expected alpha, gamma, aut, deg, info, verify or catalog)\n";
      return kExitUsage;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (bounds " << e.lower_bound << ".." << e.upper_bound
        << ")\n";
    r.error = e.what();
    r.capped_flags["budget"] = true;
    out << emit_report(r, options.format);
    return kExitResourceCap;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  if (options.timing)
    r.millis = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
  out << emit_report(r, options.format);
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determining and generating numbers of finite groups"};
  app.set_version_flag("--version", "detset 0.1.0");
  std::string command, expr, format = "text";
  CliOptions options;
  app.add_option("command", command, "alpha | gamma | aut | deg | info | verify | catalog")->required();
  app.add_option("expr", expr, "group expression, e.g. \"Z(2)^2 x Z(9)\"");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-order", options.max_order, "order cap (catalog max order for verify/catalog)");
  app.add_option("--aut-cap", options.aut_cap, "largest automorphism group to materialize");
  app.add_option("--node-budget", options.node_budget, "subset tests allowed per search");
  app.add_option("--workers", options.workers, "parallel catalog workers")->check(CLI::PositiveNumber);
  app.add_flag("--seedless", options.seedless, "accepted for compatibility; searches are deterministic");
  app.add_flag("--timing", options.timing, "report wall-clock milliseconds");
  app.add_option("--families", options.families, "comma-separated catalog families");
  app.add_flag("--no-products", options.no_products, "leave direct products out of the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << "detset 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  options.format = format == "json" ? ReportFormat::json : ReportFormat::text;
  if (const char* env = std::getenv("DETSET_CAPS")) options.caps_env = env;
  return run_command(command, expr, options, out, err);
}

}  // namespace detset
