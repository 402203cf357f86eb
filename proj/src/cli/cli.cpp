#include "invcurve/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "invcurve/cli/verify.hpp"
#include "invcurve/decisions/decisions.hpp"
#include "invcurve/error.hpp"
#include "invcurve/groups/groups.hpp"
#include "invcurve/io/json.hpp"
#include "invcurve/singularity/singularity.hpp"

namespace invcurve::cli {

using groups::GroupId;
using io::Json;

namespace {

struct Settings {
  std::string group;
  std::string coords = "standard";
  std::string kind;
  std::optional<unsigned> degree;
  unsigned max = 100;
  bool max_given = false;
  std::string output;
  std::vector<std::string> checks;
  bool json = false;
  bool deep = false;
  bool strict = false;
  bool timings = false;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
};

std::uint64_t effective_budget(const Settings& s) {
  if (s.budget) return *s.budget;
  if (const char* env = std::getenv("INVCURVE_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Error(std::string("INVCURVE_BUDGET is not a positive integer: ") + env);
  }
  return ideals::kDefaultBudget;
}

Json exponents_json(const std::vector<decisions::Exponents>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back({e[0], e[1], e[2]});
  return out;
}

Json nonsingular_json(GroupId g, unsigned d) {
  const auto dec = decisions::decide_nonsingular(g, d);
  Json j{{"group", groups::group_name(g)},
         {"degree", d},
         {"exists", dec.exists},
         {"failed_conditions", dec.failed_conditions},
         {"basis", exponents_json(decisions::basis(g, d).solutions)}};
  if (dec.low_degree_case) j["low_degree_case"] = decisions::low_degree_case_name(*dec.low_degree_case);
  return j;
}

Json classify_json(GroupId g, unsigned d) {
  const auto& p = groups::degree_profile(g);
  const auto cert = singularity::certify_irreducible(g, d);
  Json j{{"group", groups::group_name(g)}, {"degree", d}, {"type", singularity::type_name(cert.type)}};
  const auto m = singularity::intersection_multiplicity(cert.type);
  j["m"] = m ? Json(*m) : Json(nullptr);
  if (cert.type != singularity::SingularityType::Nonsingular && cert.type != singularity::SingularityType::Undefined) {
    j["locus"] = "V(F)∩V(Phi)";
    j["count"] = p.a * p.b;
  }
  j["irreducible"] = cert.irreducible;
  j["summary"] = cert.summary;
  j["refutations"] = cert.lines();
  return j;
}

Json integral_json(GroupId g, unsigned d) {
  Json j{{"group", groups::group_name(g)}, {"degree", d}, {"integral", singularity::decide_integral(g, d)}};
  j["nonsingular"] = decisions::decide_nonsingular(g, d).exists;
  j["type"] = singularity::type_name(singularity::classify(g, d));
  return j;
}

int emit_table(GroupId g, const std::string& kind, unsigned max, bool json, std::ostream& out) {
  const bool integral = kind == "integral";
  Json admissible = Json::array();
  std::string text = "degree  " + std::string(integral ? "integral  type" : "nonsingular") + "\n";
  for (unsigned d = 1; d <= max; ++d) {
    if (decisions::basis(g, d).solutions.empty()) continue;
    const bool yes = integral ? singularity::decide_integral(g, d) : decisions::decide_nonsingular(g, d).exists;
    if (yes) admissible.push_back(d);
    char line[96];
    if (integral)
      std::snprintf(line, sizeof line, "%6u  %-8s  %s\n", d, yes ? "yes" : "no",
                    singularity::type_name(singularity::classify(g, d)));
    else
      std::snprintf(line, sizeof line, "%6u  %s\n", d, yes ? "yes" : "no");
    text += line;
  }
  if (json)
    out << Json{{"group", groups::group_name(g)}, {"kind", kind}, {"max", max}, {"admissible", admissible}}.dump(2)
        << "\n";
  else
    out << text;
  return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const GroupId g = groups::parse_group(s.group);
  const inv::Coords c = inv::parse_coords(s.coords);
  std::vector<std::string> checks = s.checks.empty() ? default_checks(g, c) : s.checks;
  for (const auto& name : checks)
    if (!known_check(name)) throw Error("unknown check: " + name);
  VerifyOptions opt;
  opt.budget = effective_budget(s);
  opt.deep = s.deep;
  opt.threads = std::max(1u, s.threads);
  const auto results = verify(g, c, checks, opt);

  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : results) ++counts[static_cast<int>(r.status)];
  if (s.json) {
    Json list = Json::array();
    for (const auto& r : results) {
      Json e{{"name", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}};
      if (s.timings) e["seconds"] = r.seconds;
      list.push_back(std::move(e));
    }
    out << Json{{"group", groups::group_name(g)},
                {"coords", inv::coords_name(c)},
                {"deep", s.deep},
                {"checks", list},
                {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}}}}
               .dump(2)
        << "\n";
  } else {
    out << "verify " << groups::group_name(g) << " " << inv::coords_name(c) << "\n";
    for (const auto& r : results) {
      const std::string head = r.name + ": " + status_name(r.status);
      char line[160];
      std::snprintf(line, sizeof line, "  %-42s %8.3fs  ", head.c_str(), r.seconds);
      out << line << r.detail << "\n";
    }
    out << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " inconclusive\n";
  }
  if (counts[2] > 0) err << "warning: " << counts[2] << " check(s) inconclusive\n";
  if (counts[1] > 0 || (s.strict && counts[2] > 0)) return kExitCheckFailed;
  return kExitOk;
}

int cmd_decide(const Settings& s, std::ostream& out) {
  const GroupId g = groups::parse_group(s.group);
  if (!s.degree) return emit_table(g, s.kind, s.max, s.json, out);
  const Json j = s.kind == "integral" ? integral_json(g, *s.degree) : nonsingular_json(g, *s.degree);
  if (s.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << s.group << " degree " << *s.degree << ": ";
  if (s.kind == "integral") {
    out << (j["integral"].get<bool>() ? "integral member exists" : "no integral member") << " (type "
        << j["type"].get<std::string>() << ")\n";
    return kExitOk;
  }
  out << (j["exists"].get<bool>() ? "nonsingular member exists" : "no nonsingular member");
  if (!j["failed_conditions"].empty()) out << ", failed conditions " << j["failed_conditions"].dump();
  if (j.contains("low_degree_case")) out << ", " << j["low_degree_case"].get<std::string>();
  out << "\n  basis " << j["basis"].dump() << "\n";
  return kExitOk;
}

int cmd_classify(const Settings& s, std::ostream& out) {
  const GroupId g = groups::parse_group(s.group);
  const Json j = classify_json(g, *s.degree);
  if (s.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << s.group << " degree " << *s.degree << ": " << j["type"].get<std::string>();
  if (j.contains("locus"))
    out << ", m = " << j["m"] << " at the " << j["count"] << " points of " << j["locus"].get<std::string>();
  out << "\n" << (j["irreducible"].get<bool>() ? "irreducible" : "not certified irreducible") << ": "
      << j["summary"].get<std::string>() << "\n";
  for (const auto& line : j["refutations"]) out << "  " << line.get<std::string>() << "\n";
  return kExitOk;
}

int cmd_molien(const Settings& s, std::ostream& out) {
  const GroupId g = groups::parse_group(s.group);
  const unsigned n = s.max_given ? s.max : 30;
  const auto series = groups::molien_series(groups::closure(groups::generators(g)), n);
  if (s.json) {
    out << Json(series).dump() << "\n";
    return kExitOk;
  }
  const bool match = series == groups::expand_poincare(g, n);
  for (std::size_t d = 0; d < series.size(); ++d) out << (d ? " " : "") << series[d];
  out << "\nclosed form: " << (match ? "match" : "MISMATCH") << "\n";
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_build(const Settings& s, std::ostream& out) {
  const GroupId g = groups::parse_group(s.group);
  const inv::Coords c = inv::parse_coords(s.coords);
  const auto& t = inv::cached(g, c);
  Json j{{"group", groups::group_name(g)},
         {"coords", inv::coords_name(c)},
         {"field", t.field().id()},
         {"F", io::to_json(t.F)},
         {"Phi", io::to_json(t.Phi)},
         {"Psi", io::to_json(t.Psi)},
         {"X", io::to_json(t.X)}};
  if (s.output.empty()) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::ofstream file(s.output);
  if (!file) throw Error("cannot write " + s.output);
  file << j.dump(2) << "\n";
  out << "wrote " << s.output << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Invariant plane curves of the Valentiner, icosahedral and Klein groups", "invcurve"};
  app.require_subcommand(1);
  app.add_flag("--json", s.json, "Machine-readable output");
  app.add_flag("--deep", s.deep, "Run heavy Valentiner checks");
  app.add_flag("--strict", s.strict, "Treat inconclusive checks as failures");
  app.add_flag("--timings", s.timings, "Include timings in JSON output");
  app.add_option("--budget", s.budget, "Groebner pair-reduction budget (env INVCURVE_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", s.threads, "Worker threads for independent checks")->check(CLI::PositiveNumber);

  const std::vector<std::string> groups_allowed{"V", "I", "K"};
  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group,-g", s.group, "V, I or K")->required()->check(CLI::IsMember(groups_allowed));
    sub->fallthrough();
  };
  const std::vector<std::string> coords_allowed{"standard", "wiman"};
  const std::vector<std::string> kinds{"nonsingular", "integral"};

  auto* build = app.add_subcommand("build-invariants", "Emit F, Phi, Psi, X as JSON");
  group_opt(build);
  build->add_option("--coords", s.coords)->check(CLI::IsMember(coords_allowed));
  build->add_option("--output,-o", s.output, "Output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run verification checks");
  group_opt(ver);
  ver->add_option("--coords", s.coords)->check(CLI::IsMember(coords_allowed));
  ver->add_option("--checks", s.checks, "Comma-separated check families")->delimiter(',');

  auto* dec = app.add_subcommand("decide", "Decide nonsingular or integral members");
  dec->add_option("kind", s.kind)->required()->check(CLI::IsMember(kinds));
  group_opt(dec);
  auto* dec_degree = dec->add_option("--degree,-d", s.degree)->check(CLI::PositiveNumber);
  auto* dec_max = dec->add_option("--max", s.max)->check(CLI::PositiveNumber);
  dec_degree->excludes(dec_max);

  auto* tab = app.add_subcommand("table", "Tabulate admissible degrees");
  tab->add_option("kind", s.kind)->required()->check(CLI::IsMember(kinds));
  group_opt(tab);
  tab->add_option("--max", s.max)->check(CLI::PositiveNumber);

  auto* cls = app.add_subcommand("classify", "Singularity type of a general member");
  group_opt(cls);
  cls->add_option("--degree,-d", s.degree)->required()->check(CLI::PositiveNumber);

  auto* mol = app.add_subcommand("molien", "Molien series of the lifted group");
  group_opt(mol);
  auto* mol_max = mol->add_option("--max", s.max)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  s.max_given = mol_max->count() > 0;

  try {
    if (build->parsed()) return cmd_build(s, out);
    if (ver->parsed()) return cmd_verify(s, out, err);
    if (dec->parsed()) return cmd_decide(s, out);
    if (tab->parsed()) return emit_table(groups::parse_group(s.group), s.kind, s.max, s.json, out);
    if (cls->parsed()) return cmd_classify(s, out);
    if (mol->parsed()) return cmd_molien(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace invcurve::cli
