#pragma once

// Named examples: full flags, P(T P^{n+1}), and the Picard-rank-2 families
// with three, four or five isotropy summands.
//
// The Picard-rank-2 families live in data/table1.json, which is embedded at
// build time (flagtke/table1_data.hpp). Each row records its Bourbaki
// complement and closed-form Koszul numbers as linear forms in the row
// parameters; table1_rows() instantiates every row and recomputes the Koszul
// numbers through parabolic().

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "flagtke/error.hpp"
#include "flagtke/flag.hpp"
#include "flagtke/rootsys.hpp"
#include "flagtke/table1_data.hpp"

namespace flagtke {

enum class Family { I, II, III, other };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::other: return "other";
  }
  return {};
}

inline Family parse_family(const std::string& s) {
  if (s == "I") return Family::I;
  if (s == "II") return Family::II;
  if (s == "III") return Family::III;
  if (s == "other") return Family::other;
  throw Error(Errc::parse, "unknown family '" + s + "' (expected I, II or III)");
}

struct Picard2Class {
  ParabolicData pd;
  /// Coefficients of the two complement roots in the maximal root, complement order.
  std::pair<int, int> heights;
  /// Distinct coefficient pairs on the complement over radical roots.
  std::size_t summands = 0;
  Family family = Family::other;
};

inline Picard2Class classify_picard2(const ParabolicData& pd) {
  if (pd.picard_rank() != 2)
    throw Error(Errc::dimension_mismatch, "Picard rank is " + std::to_string(pd.picard_rank()) + ", expected 2");
  const auto a = pd.complement()[0];
  const auto b = pd.complement()[1];
  std::set<std::pair<int, int>> pairs;
  for (const auto& g : pd.radical_roots()) pairs.emplace(g.coeffs[a], g.coeffs[b]);
  Picard2Class c{pd, {height_in_max(pd.root_system(), a), height_in_max(pd.root_system(), b)}, pairs.size(),
                 Family::other};
  switch (c.summands) {
    case 3: c.family = Family::I; break;
    case 4: c.family = Family::II; break;
    case 5: c.family = Family::III; break;
    default: break;
  }
  return c;
}

struct TableRow {
  std::string id;
  Family family = Family::other;
  std::string space;
  LieType lie_type;
  /// Row parameters in declaration order.
  std::vector<std::pair<std::string, int>> params;
  /// 0-based nodes, in the row's listing order (not necessarily sorted).
  std::pair<std::size_t, std::size_t> complement;
  std::pair<std::int64_t, std::int64_t> expected;
  std::pair<std::int64_t, std::int64_t> computed;
  bool match = false;
  Family classified = Family::other;
  std::size_t summands = 0;
  std::pair<int, int> heights;
  std::string note;
};

namespace detail {

using Params = std::map<std::string, int>;

inline int eval_linear(const nlohmann::json& form, const Params& params) {
  int v = 0;
  for (const auto& [key, coeff] : form.items()) {
    if (key == "const")
      v += coeff.get<int>();
    else
      v += coeff.get<int>() * params.at(key);
  }
  return v;
}

inline Series series_from(const std::string& s) {
  auto pos = std::string_view("ABCDEFG").find(s.at(0));
  if (s.size() != 1 || pos == std::string_view::npos) throw Error(Errc::parse, "bad series '" + s + "' in table data");
  return static_cast<Series>(pos);
}

inline void enumerate_params(const nlohmann::json& specs, std::size_t k, Params& current, int cap,
                             std::vector<Params>& out) {
  if (k == specs.size()) {
    out.push_back(current);
    return;
  }
  const auto& spec = specs[k];
  const auto name = spec.at("name").get<std::string>();
  const int lo = eval_linear(spec.at("min"), current);
  const int hi = spec.contains("max") ? eval_linear(spec.at("max"), current) : cap;
  for (int v = lo; v <= hi; ++v) {
    current[name] = v;
    enumerate_params(specs, k + 1, current, cap, out);
  }
  current.erase(name);
}

}  // namespace detail

inline const nlohmann::json& table1_data() {
  static const nlohmann::json data = nlohmann::json::parse(table1_json);
  return data;
}

/// Every row of `data` instantiated at all parameters with rank <= max_rank.
inline std::vector<TableRow> table1_rows(std::size_t max_rank, const nlohmann::json& data) {
  if (max_rank < 4) throw Error(Errc::parse, "table max rank must be at least 4");
  std::vector<TableRow> rows;
  std::map<LieType, std::shared_ptr<const RootSystem>> systems;
  for (const auto& spec : data.at("rows")) {
    std::vector<detail::Params> instances;
    detail::Params scratch;
    detail::enumerate_params(spec.at("params"), 0, scratch, static_cast<int>(max_rank) + 1, instances);
    for (const auto& params : instances) {
      const int rank = detail::eval_linear(spec.at("rank"), params);
      if (rank < 1 || static_cast<std::size_t>(rank) > max_rank) continue;
      LieType t{detail::series_from(spec.at("series").get<std::string>()), static_cast<std::size_t>(rank)};
      if (!is_valid(t)) continue;
      auto& rs = systems[t];
      if (!rs) rs = make_root_system(t);

      TableRow row;
      row.id = spec.at("id").get<std::string>();
      row.family = parse_family(spec.at("family").get<std::string>());
      row.space = spec.at("space").get<std::string>();
      row.lie_type = t;
      for (const auto& p : spec.at("params")) {
        auto name = p.at("name").get<std::string>();
        row.params.emplace_back(name, params.at(name));
      }
      const auto& comp = spec.at("complement");
      const int a = detail::eval_linear(comp.at(0), params);
      const int b = detail::eval_linear(comp.at(1), params);
      if (a < 1 || b < 1 || a > rank || b > rank || a == b)
        throw Error(Errc::internal, "table row " + row.id + " produced an invalid complement");
      row.complement = {static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)};
      const auto& kz = spec.at("koszul");
      row.expected = {detail::eval_linear(kz.at(0), params), detail::eval_linear(kz.at(1), params)};

      auto pd = parabolic_from_complement(rs, {row.complement.first, row.complement.second});
      row.computed = {pd.koszul()[*pd.complement_position(row.complement.first)],
                      pd.koszul()[*pd.complement_position(row.complement.second)]};
      row.match = row.expected == row.computed;
      auto cls = classify_picard2(pd);
      row.classified = cls.family;
      row.summands = cls.summands;
      row.heights = {height_in_max(*rs, row.complement.first), height_in_max(*rs, row.complement.second)};
      if (spec.contains("note")) row.note = spec.at("note").get<std::string>();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::vector<TableRow> table1_rows(std::size_t max_rank) { return table1_rows(max_rank, table1_data()); }

/// A_{n+1} with complement {alpha_n, alpha_{n+1}}; Koszul numbers (n+1, 2).
inline FlagReport example_projectivized_tangent(std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_type, "P(T P^{n+1}) needs n >= 1");
  auto pd = parabolic_from_complement(LieType{Series::A, n + 1}, {n - 1, n});
  if (pd.koszul() != std::vector<std::int64_t>{static_cast<std::int64_t>(n) + 1, 2})
    throw Error(Errc::internal, "P(T P^{n+1}) Koszul numbers differ from (n+1, 2)");
  return flag_report(pd);
}

/// G^C / B; every Koszul number is 2.
inline FlagReport example_full_flag(const LieType& t) {
  auto pd = parabolic(t, {});
  for (auto k : pd.koszul())
    if (k != 2) throw Error(Errc::internal, "full flag of " + t.name() + " has a Koszul number other than 2");
  return flag_report(pd);
}

}  // namespace flagtke
