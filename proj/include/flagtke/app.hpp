#pragma once

// Command-line front end. run() is the whole program; tools/flagtke.cpp
// only forwards argv, so tests drive it in-process.
//
// Exit codes: 0 success or verified, 1 verification failure, 2 usage or
// validation error.

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagtke/catalog.hpp"
#include "flagtke/error.hpp"
#include "flagtke/flag.hpp"
#include "flagtke/invariants.hpp"
#include "flagtke/rootsys.hpp"
#include "flagtke/sweep.hpp"

namespace flagtke::cli {

using Json = nlohmann::ordered_json;

enum class Units { two_pi, raw };

struct FlagSpec {
  LieType type;
  NodeSet theta;
  NodeSet complement;
};

/// "1,2,3" (1-based) -> {0,1,2}; empty string -> {}.
inline NodeSet parse_node_list(const std::string& text, std::size_t rank) {
  NodeSet out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    std::string tok = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    if (!flagtke::detail::all_digits(tok) || tok.size() > 6)
      throw Error(Errc::parse, "bad node index '" + tok + "' (expected 1-based integers)");
    auto v = std::stoul(tok);
    if (v < 1 || v > rank)
      throw Error(Errc::invalid_index, "node index " + tok + " out of range 1.." + std::to_string(rank));
    out.push_back(v - 1);
  }
  return normalized_nodes(rank, std::move(out));
}

inline FlagSpec parse_flag_spec(const std::string& type_token, const std::optional<std::string>& theta,
                                const std::optional<std::string>& complement) {
  FlagSpec spec{parse_lie_type(type_token), {}, {}};
  if (theta.has_value() == complement.has_value())
    throw Error(Errc::parse, "give exactly one of --theta or --complement");
  if (theta) {
    spec.theta = parse_node_list(*theta, spec.type.rank);
    spec.complement = complement_of(spec.type.rank, spec.theta);
  } else {
    spec.complement = parse_node_list(*complement, spec.type.rank);
    spec.theta = complement_of(spec.type.rank, spec.complement);
  }
  if (spec.complement.empty()) throw Error(Errc::not_a_flag, "not a flag variety (point): theta is all of Sigma");
  return spec;
}

namespace detail {

inline Json nodes_json(const NodeSet& nodes) {
  Json a = Json::array();
  for (auto i : nodes) a.push_back(i + 1);
  return a;
}

inline std::string nodes_text(const NodeSet& nodes) { return "[" + node_list(nodes) + "]"; }

template <class T>
std::string ints_text(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

struct Renderer {
  Units units = Units::two_pi;
  int digits = 6;

  Json scalar(const Rational& r) const { return Json{{"exact", to_string(r)}, {"decimal", to_decimal(r, digits)}}; }
  std::string scalar_text(const Rational& r) const {
    auto exact = to_string(r);
    auto dec = to_decimal(r, digits);
    return exact == dec ? exact : exact + " (" + dec + ")";
  }
  std::string class_entry(const Rational& r) const {
    if (units == Units::two_pi || r == 0) return to_string(r);
    return to_string(r) + "*2pi";
  }
  Json class_json(const std::vector<Rational>& coeffs) const {
    Json a = Json::array();
    for (const auto& c : coeffs) a.push_back(class_entry(c));
    return a;
  }
  std::string class_text(const std::vector<Rational>& coeffs) const {
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += (k ? ", " : "") + class_entry(coeffs[k]);
    return s + "]";
  }
};

struct Output {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::vector<std::string> warnings;
  std::ostringstream text;
  int exit_code = 0;

  Json document() const {
    Json doc;
    doc["command"] = command;
    doc["input"] = input;
    doc["result"] = result;
    doc["warnings"] = warnings;
    return doc;
  }
};

inline std::vector<Rational> koszul_rationals(const ParabolicData& pd) { return anticanonical_class(pd).coeffs; }

inline void spec_input(Output& o, const FlagSpec& s) {
  o.input["type"] = s.type.name();
  o.input["theta"] = nodes_json(s.theta);
  o.input["complement"] = nodes_json(s.complement);
}

inline void cmd_roots(Output& o, const Renderer& r, const std::string& type_token) {
  const auto rs = build_root_system(parse_lie_type(type_token));
  o.input["type"] = rs.type().name();
  Json cartan = Json::array();
  for (const auto& row : rs.cartan_matrix()) cartan.push_back(row);
  Json roots = Json::array();
  for (const auto& g : rs.positive_roots()) roots.push_back(g.coeffs);
  Json sym = Json::array();
  for (const auto& d : rs.symmetrizer()) sym.push_back(to_string(d));
  o.result["type"] = rs.type().name();
  o.result["rank"] = rs.rank();
  o.result["cartan"] = cartan;
  o.result["symmetrizer"] = sym;
  o.result["positive_root_count"] = rs.positive_roots().size();
  o.result["maximal_root"] = maximal_root(rs).coeffs;
  o.result["weyl_vector"] = r.class_json(weyl_vector(rs).coords);
  o.result["positive_roots"] = roots;

  o.text << "type                " << rs.type().name() << "\n";
  o.text << "cartan              a(i,j) = <alpha_i, h_j^vee>\n";
  for (const auto& row : rs.cartan_matrix()) o.text << "                    " << ints_text(row) << "\n";
  o.text << "positive roots      " << rs.positive_roots().size() << "\n";
  o.text << "maximal root        " << ints_text(maximal_root(rs).coeffs) << "\n";
  for (const auto& g : rs.positive_roots()) o.text << "  " << ints_text(g.coeffs) << "\n";
}

inline void cmd_flag(Output& o, const Renderer& r, const FlagSpec& s) {
  spec_input(o, s);
  const auto pd = parabolic(s.type, s.theta);
  const auto rep = flag_report(pd);
  const auto snow = snow_check(pd);
  o.result["type"] = rep.lie_type.name();
  o.result["theta"] = nodes_json(rep.theta);
  o.result["complement"] = nodes_json(rep.complement);
  o.result["dim"] = rep.dim;
  o.result["picard_rank"] = rep.picard_rank;
  o.result["koszul"] = rep.koszul;
  o.result["anticanonical_class"] = r.class_json(koszul_rationals(pd));
  o.result["degree"] = rep.degree.str();
  o.result["snow_bound"] = rep.snow_bound.str();
  o.result["snow_ok"] = rep.snow_ok;
  o.result["snow_equality"] = snow.equality;

  o.text << "type                " << rep.lie_type.name() << "\n";
  o.text << "theta               " << nodes_text(rep.theta) << "\n";
  o.text << "complement          " << nodes_text(rep.complement) << "\n";
  o.text << "dim                 " << rep.dim << "\n";
  o.text << "picard_rank         " << rep.picard_rank << "\n";
  o.text << "koszul              " << ints_text(rep.koszul) << "\n";
  o.text << "anticanonical       " << r.class_text(koszul_rationals(pd)) << "\n";
  o.text << "degree              " << rep.degree.str() << "\n";
  o.text << "snow_bound          " << rep.snow_bound.str() << "\n";
  o.text << "snow                " << rep.degree.str() << (snow.equality ? " = " : " <= ") << rep.snow_bound.str()
         << (rep.snow_ok ? "  ok" : "  VIOLATED") << "\n";
}

inline void cmd_tke(Output& o, const Renderer& r, const FlagSpec& s, const std::string& beta_text) {
  spec_input(o, s);
  const auto pd = parabolic(s.type, s.theta);
  CohomologyClass beta{parse_rational_list(beta_text)};
  o.input["beta"] = r.class_json(beta.coeffs);
  const auto res = tke_exists(pd, beta);
  o.result["exists"] = res.exists;
  o.result["thresholds"] = r.class_json(koszul_rationals(pd));
  o.result["margins"] = r.class_json(res.margins);
  o.result["metric"] = res.metric ? r.class_json(res.metric->coeffs()) : Json(nullptr);
  o.result["integral_twist"] = res.integral_twist;
  if (!res.integral_twist) o.warnings.push_back("twist is not integral; treated as a real invariant class");

  o.text << "flag                " << s.type.name() << " complement " << nodes_text(s.complement) << "\n";
  o.text << "beta                " << r.class_text(beta.coeffs) << "\n";
  o.text << "thresholds          " << r.class_text(koszul_rationals(pd)) << "\n";
  o.text << "margins             " << r.class_text(res.margins) << "\n";
  o.text << "tKE metric          " << (res.exists ? "exists" : "does not exist") << "\n";
  if (res.metric) o.text << "omega               " << r.class_text(res.metric->coeffs()) << "\n";
}

enum class XiCommand { grlb, volume, report };

inline void cmd_xi(Output& o, const Renderer& r, const FlagSpec& s, const std::string& xi_text, XiCommand which) {
  spec_input(o, s);
  const auto pd = parabolic(s.type, s.theta);
  const KahlerClass xi(parse_rational_list(xi_text));
  o.input["xi"] = r.class_json(xi.coeffs());
  flagtke::detail::check_size(pd, xi.size(), "Kahler class");
  o.text << "flag                " << s.type.name() << " complement " << nodes_text(s.complement) << "\n";
  o.text << "xi                  " << r.class_text(xi.coeffs()) << "\n";
  switch (which) {
    case XiCommand::grlb: {
      auto g = grlb_report(pd, xi);
      o.result["grlb"] = r.scalar(g.value);
      o.result["argmin"] = nodes_json(g.argmin);
      o.text << "grlb                " << r.scalar_text(g.value) << "\n";
      o.text << "argmin              " << nodes_text(g.argmin) << "\n";
      break;
    }
    case XiCommand::volume: {
      auto deg = degree(pd);
      auto v = volume_class(pd, xi, deg);
      auto v2 = volume_cross_check(pd, xi);
      o.result["volume"] = r.scalar(v);
      o.result["cross_check"] = r.scalar(v2);
      o.result["degree"] = deg.str();
      o.text << "volume              " << r.scalar_text(v) << "\n";
      o.text << "cross_check         " << r.scalar_text(v2) << (v == v2 ? "  (equal)" : "  (MISMATCH)") << "\n";
      if (v != v2) o.exit_code = 1;
      break;
    }
    case XiCommand::report: {
      auto rep = volume_bound_report(pd, xi);
      o.result["dim"] = pd.dim();
      o.result["grlb"] = r.scalar(rep.grlb);
      o.result["volume"] = r.scalar(rep.volume);
      o.result["r_pow_vol"] = r.scalar(rep.r_pow_vol);
      o.result["degree"] = rep.degree.str();
      o.result["snow_bound"] = rep.snow.str();
      o.result["left_ok"] = rep.left_ok;
      o.result["right_ok"] = rep.right_ok;
      o.result["left_equality"] = rep.left_equality;
      o.result["right_equality"] = rep.right_equality;
      o.text << "dim                 " << pd.dim() << "\n";
      o.text << "grlb                " << r.scalar_text(rep.grlb) << "\n";
      o.text << "volume              " << r.scalar_text(rep.volume) << "\n";
      o.text << "R^n Vol             " << r.scalar_text(rep.r_pow_vol) << "\n";
      o.text << "chain               " << to_string(rep.r_pow_vol) << (rep.left_equality ? " = " : " <= ")
             << rep.degree.str() << (rep.right_equality ? " = " : " <= ") << rep.snow.str() << "\n";
      o.text << "left                " << (rep.left_ok ? "ok" : "VIOLATED") << "\n";
      o.text << "right               " << (rep.right_ok ? "ok" : "VIOLATED") << "\n";
      if (!rep.left_ok || !rep.right_ok) o.exit_code = 1;
      break;
    }
  }
}

inline void cmd_sweep(Output& o, const SweepConfig& cfg) {
  Json checks = Json::array();
  std::string check_names;
  for (auto c : cfg.checks) {
    checks.push_back(check_name(c));
    check_names += (check_names.empty() ? "" : ",") + check_name(c);
  }
  o.input["max_rank"] = cfg.max_rank;
  o.input["samples"] = cfg.samples_per_flag;
  o.input["seed"] = std::to_string(cfg.seed);
  o.input["checks"] = checks;

  const auto summary = run_sweep(cfg);
  std::size_t total_failures = 0;
  Json per_check = Json::object();
  for (const auto& [c, t] : summary.tallies) {
    per_check[check_name(c)] = Json{{"cases", t.cases}, {"failures", t.failures}};
    total_failures += t.failures;
  }
  Json failures = Json::array();
  for (const auto& f : summary.failures)
    failures.push_back(Json{{"check", check_name(f.check)}, {"sample", f.sample}, {"reproducer", f.reproducer},
                            {"detail", f.detail}});
  o.result["flags"] = summary.flags;
  o.result["checks"] = per_check;
  o.result["failure_count"] = total_failures;
  o.result["failures"] = failures;
  o.exit_code = total_failures == 0 ? 0 : 1;

  o.text << "sweep               max_rank=" << cfg.max_rank << " samples=" << cfg.samples_per_flag
         << " seed=" << cfg.seed << " checks=" << check_names << "\n";
  o.text << "flags               " << summary.flags << "\n";
  for (const auto& [c, t] : summary.tallies)
    o.text << std::left << std::setw(20) << check_name(c) << t.cases << " cases, " << t.failures << " failures\n";
  o.text << "failures            " << total_failures << "\n";
  for (const auto& f : summary.failures)
    o.text << "FAIL " << check_name(f.check) << ": " << f.reproducer << "  # " << f.detail << "\n";
}

inline void cmd_table(Output& o, const std::string& family, std::size_t max_rank) {
  std::optional<Family> filter;
  if (family != "all") filter = parse_family(family);
  o.input["family"] = family;
  o.input["max_rank"] = max_rank;
  Json rows = Json::array();
  std::size_t mismatches = 0;
  std::set<std::string> noted;
  o.text << std::left << std::setw(10) << "family" << std::setw(16) << "id" << std::setw(6) << "type"
         << std::setw(12) << "params" << std::setw(10) << "nodes" << std::setw(12) << "expected" << std::setw(12)
         << "computed" << std::setw(8) << "match" << "summands\n";
  for (const auto& row : table1_rows(max_rank)) {
    if (filter && row.family != *filter) continue;
    Json params = Json::object();
    std::string params_text;
    for (const auto& [k, v] : row.params) {
      params[k] = v;
      params_text += (params_text.empty() ? "" : ",") + k + "=" + std::to_string(v);
    }
    const NodeSet nodes{row.complement.first, row.complement.second};
    rows.push_back(Json{{"id", row.id},
                        {"family", family_name(row.family)},
                        {"space", row.space},
                        {"type", row.lie_type.name()},
                        {"params", params},
                        {"complement", nodes_json(nodes)},
                        {"expected", {row.expected.first, row.expected.second}},
                        {"computed", {row.computed.first, row.computed.second}},
                        {"match", row.match},
                        {"classified_family", family_name(row.classified)},
                        {"summands", row.summands},
                        {"heights", {row.heights.first, row.heights.second}},
                        {"note", row.note}});
    if (!row.match) {
      ++mismatches;
      o.warnings.push_back(row.id + " " + row.lie_type.name() + " " + params_text + ": closed form (" +
                           std::to_string(row.expected.first) + "," + std::to_string(row.expected.second) +
                           ") but computed (" + std::to_string(row.computed.first) + "," +
                           std::to_string(row.computed.second) + ")");
    }
    if (!row.note.empty() && noted.insert(row.id).second) o.warnings.push_back(row.id + ": " + row.note);
    auto pair_text = [](auto p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; };
    o.text << std::left << std::setw(10) << family_name(row.family) << std::setw(16) << row.id << std::setw(6)
           << row.lie_type.name() << std::setw(12) << (params_text.empty() ? "-" : params_text) << std::setw(10)
           << ("{" + std::to_string(nodes[0] + 1) + "," + std::to_string(nodes[1] + 1) + "}") << std::setw(12)
           << pair_text(row.expected) << std::setw(12) << pair_text(row.computed) << std::setw(8)
           << (row.match ? "yes" : "NO") << row.summands << "\n";
  }
  if (!filter || *filter == Family::III) {
    bool any_iii = false;
    for (const auto& row : rows)
      if (row["family"] == "III") any_iii = true;
    if (!any_iii)
      o.warnings.push_back("family III rows start at B6 (range 3 <= p <= l-3); none within max rank " +
                           std::to_string(max_rank));
  }
  o.result = rows;
  o.text << rows.size() << " rows, " << mismatches << " mismatches\n";
  for (const auto& w : o.warnings) o.text << "note: " << w << "\n";
  o.exit_code = mismatches == 0 ? 0 : 1;
}

inline int exit_code_for(Errc c) { return c == Errc::internal ? 1 : 2; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant twisted Kahler-Einstein metrics and Fano invariants of flag varieties", "flagtke"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string units = "2pi";
  std::string out_file;
  int digits = 6;
  app.add_flag("--json", json, "Print the JSON document instead of text");
  app.add_option("--units", units, "Class display units: 2pi (normalized) or raw (times 2*pi)")
      ->check(CLI::IsMember({"2pi", "raw"}));
  app.add_option("--out", out_file, "Also write the JSON document to FILE");
  app.add_option("--digits", digits, "Significant digits in decimal renderings")->check(CLI::Range(1, 60));

  std::string type_token;
  std::optional<std::string> theta, complement;
  std::string beta, xi;

  auto add_flag_spec = [&](CLI::App* sub) {
    sub->add_option("type", type_token, "Lie type, e.g. A2, D5, E6")->required();
    auto* t = sub->add_option("--theta", theta, "Theta as 1-based Bourbaki indices (\"\" for the full flag)");
    auto* c = sub->add_option("--complement", complement, "Sigma \\ Theta as 1-based Bourbaki indices");
    t->excludes(c);
  };

  auto* roots = app.add_subcommand("roots", "Root system data");
  roots->add_option("type", type_token, "Lie type")->required();
  auto* flag = app.add_subcommand("flag", "Koszul numbers, dimension, degree and Snow bound");
  add_flag_spec(flag);
  auto* tke = app.add_subcommand("tke", "Existence of Ric(omega) = omega + beta");
  add_flag_spec(tke);
  tke->add_option("--beta", beta, "Twist coefficients r1,r2,... (p/q or integers)")->required();
  auto* grlb_cmd = app.add_subcommand("grlb", "Greatest Ricci lower bound R(xi)");
  auto* volume_cmd = app.add_subcommand("volume", "Vol(xi) with its cross-check");
  auto* report_cmd = app.add_subcommand("report", "R(xi)^n Vol(xi) <= (-K)^n <= (n+1)^n");
  for (auto* sub : {grlb_cmd, volume_cmd, report_cmd}) {
    add_flag_spec(sub);
    sub->add_option("--xi", xi, "Kahler class coefficients a1,a2,... (> 0)")->required();
  }

  SweepConfig sweep_cfg;
  std::vector<std::string> checks;
  auto* sweep = app.add_subcommand("sweep", "Verify the theorems over every flag of bounded rank");
  sweep->add_option("--max-rank", sweep_cfg.max_rank, "Largest rank")->capture_default_str();
  sweep->add_option("--samples", sweep_cfg.samples_per_flag, "Random Kahler classes per flag")->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.seed, "PRNG seed")->capture_default_str();
  sweep->add_option("--checks", checks, "Subset of snow,volbound,cross,cscK,roundtrip")->delimiter(',');
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads (0 = hardware)");

  std::string family = "all";
  std::size_t table_max_rank = 9;
  auto* table = app.add_subcommand("table", "Picard-rank-2 families and their Koszul numbers");
  table->add_option("--family", family, "I, II, III or all")->check(CLI::IsMember({"I", "II", "III", "all"}));
  table->add_option("--max-rank", table_max_rank, "Largest rank (>= 4)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  detail::Output o;
  try {
    detail::Renderer r{units == "raw" ? Units::raw : Units::two_pi, digits};
    auto spec = [&] { return parse_flag_spec(type_token, theta, complement); };
    if (*roots) {
      o.command = "roots";
      detail::cmd_roots(o, r, type_token);
    } else if (*flag) {
      o.command = "flag";
      detail::cmd_flag(o, r, spec());
    } else if (*tke) {
      o.command = "tke";
      detail::cmd_tke(o, r, spec(), beta);
    } else if (*grlb_cmd) {
      o.command = "grlb";
      detail::cmd_xi(o, r, spec(), xi, detail::XiCommand::grlb);
    } else if (*volume_cmd) {
      o.command = "volume";
      detail::cmd_xi(o, r, spec(), xi, detail::XiCommand::volume);
    } else if (*report_cmd) {
      o.command = "report";
      detail::cmd_xi(o, r, spec(), xi, detail::XiCommand::report);
    } else if (*sweep) {
      o.command = "sweep";
      if (!checks.empty()) {
        sweep_cfg.checks.clear();
        for (const auto& c : checks) sweep_cfg.checks.insert(parse_check(c));
      }
      detail::cmd_sweep(o, sweep_cfg);
    } else if (*table) {
      o.command = "table";
      detail::cmd_table(o, family, table_max_rank);
    }
    o.input["units"] = units;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  }

  const auto doc = o.document();
  if (!out_file.empty()) {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << out_file << "\n";
      return 2;
    }
    f << doc.dump(2) << "\n";
  }
  if (json)
    out << doc.dump(2) << "\n";
  else
    out << o.text.str();
  return o.exit_code;
}

}  // namespace flagtke::cli
