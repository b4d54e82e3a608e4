#pragma once

// Bulk verification over every flag variety of bounded rank.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flagtke/flag.hpp"
#include "flagtke/invariants.hpp"
#include "flagtke/rng.hpp"
#include "flagtke/rootsys.hpp"

namespace flagtke {

enum class Check { snow, volbound, cross, cscK, roundtrip };

inline const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks{Check::snow, Check::volbound, Check::cross, Check::cscK, Check::roundtrip};
  return checks;
}

inline std::string check_name(Check c) {
  switch (c) {
    case Check::snow: return "snow";
    case Check::volbound: return "volbound";
    case Check::cross: return "cross";
    case Check::cscK: return "cscK";
    case Check::roundtrip: return "roundtrip";
  }
  return {};
}

inline Check parse_check(const std::string& s) {
  for (auto c : all_checks())
    if (check_name(c) == s) return c;
  throw Error(Errc::parse, "unknown check '" + s + "' (expected snow, volbound, cross, cscK or roundtrip)");
}

struct SweepConfig {
  std::size_t max_rank = 4;
  std::size_t samples_per_flag = 10;
  std::uint64_t seed = 1;
  std::set<Check> checks{all_checks().begin(), all_checks().end()};
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

inline void validate(const SweepConfig& c) {
  if (c.max_rank < 1) throw Error(Errc::parse, "sweep max rank must be >= 1");
  if (c.samples_per_flag < 1) throw Error(Errc::parse, "sweep samples per flag must be >= 1");
  if (c.checks.empty()) throw Error(Errc::parse, "sweep needs at least one check");
}

struct FlagCase {
  LieType type;
  NodeSet theta;
};

/// All (series, rank <= max_rank, proper theta), theta bitmasks ascending.
inline std::vector<FlagCase> enumerate_flags(std::size_t max_rank) {
  std::vector<FlagCase> out;
  for (int s = 0; s < 7; ++s) {
    for (std::size_t m = 1; m <= max_rank; ++m) {
      LieType t{static_cast<Series>(s), m};
      if (!is_valid(t)) continue;
      const std::uint64_t full = (std::uint64_t{1} << m) - 1;
      for (std::uint64_t mask = 0; mask < full; ++mask) {
        NodeSet theta;
        for (std::size_t i = 0; i < m; ++i)
          if (mask >> i & 1U) theta.push_back(i);
        out.push_back({t, std::move(theta)});
      }
    }
  }
  return out;
}

/// Comma-separated 1-based node list.
inline std::string node_list(const NodeSet& nodes) {
  std::string s;
  for (std::size_t k = 0; k < nodes.size(); ++k) s += (k ? "," : "") + std::to_string(nodes[k] + 1);
  return s;
}

inline std::string class_list(const std::vector<Rational>& coeffs) {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += (k ? "," : "") + to_string(coeffs[k]);
  return s;
}

inline std::string flag_args(const FlagCase& fc) {
  return fc.type.name() + " --theta \"" + node_list(fc.theta) + "\"";
}

struct SweepFailure {
  std::size_t flag_index = 0;
  Check check = Check::snow;
  std::size_t sample = 0;
  std::string reproducer;
  std::string detail;
};

struct CheckTally {
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SweepSummary {
  std::size_t flags = 0;
  std::map<Check, CheckTally> tallies;
  std::vector<SweepFailure> failures;
};

namespace detail {

struct FlagOutcome {
  std::map<Check, CheckTally> tallies;
  std::vector<SweepFailure> failures;
};

inline FlagOutcome sweep_one(const FlagCase& fc, std::size_t index, const SweepConfig& cfg,
                             const std::shared_ptr<const RootSystem>& rs) {
  FlagOutcome out;
  auto fail = [&](Check c, std::size_t sample, std::string repro, std::string detail) {
    out.failures.push_back({index, c, sample, std::move(repro), std::move(detail)});
    ++out.tallies[c].failures;
  };
  const std::string base = flag_args(fc);
  try {
    const auto pd = parabolic(rs, fc.theta);
    const auto deg = degree(pd);
    const Rational n(pd.dim());
    if (cfg.checks.contains(Check::snow)) {
      ++out.tallies[Check::snow].cases;
      auto s = snow_check(pd);
      if (!s.ok) fail(Check::snow, 0, "flagtke flag " + base, "degree " + s.degree.str() + " > " + s.bound.str());
    }
    const bool need_samples = cfg.checks.contains(Check::volbound) || cfg.checks.contains(Check::cross) ||
                              cfg.checks.contains(Check::cscK) || cfg.checks.contains(Check::roundtrip);
    if (!need_samples) return out;

    auto rng = SplitMix64::substream(cfg.seed, index);
    const auto c1 = anticanonical_class(pd);
    for (std::size_t k = 0; k < cfg.samples_per_flag; ++k) {
      std::vector<Rational> coeffs;
      for (std::size_t j = 0; j < pd.picard_rank(); ++j) coeffs.push_back(rng.positive_rational());
      const KahlerClass xi(coeffs);
      const std::string xi_arg = " --xi " + class_list(coeffs);

      if (cfg.checks.contains(Check::volbound)) {
        ++out.tallies[Check::volbound].cases;
        auto r = volume_bound_report(pd, xi);
        bool equality_ok = r.left_equality == proportional_to_anticanonical(pd, xi);
        if (!r.left_ok || !r.right_ok || !equality_ok)
          fail(Check::volbound, k, "flagtke report " + base + xi_arg,
               "R^n Vol = " + to_string(r.r_pow_vol) + ", degree = " + r.degree.str());
      }
      if (cfg.checks.contains(Check::cross)) {
        ++out.tallies[Check::cross].cases;
        auto v1 = volume_class(pd, xi, deg);
        auto v2 = volume_cross_check(pd, xi);
        if (v1 != v2)
          fail(Check::cross, k, "flagtke volume " + base + xi_arg, to_string(v1) + " != " + to_string(v2));
      }
      if (cfg.checks.contains(Check::cscK)) {
        ++out.tallies[Check::cscK].cases;
        auto diff = scalar_curvature(pd, xi) - trace(pd, xi, c1 - xi.cls());
        if (diff != n)
          fail(Check::cscK, k, "flagtke report " + base + xi_arg,
               "S - trace = " + to_string(diff) + ", dim = " + std::to_string(pd.dim()));
      }
      if (cfg.checks.contains(Check::roundtrip)) {
        ++out.tallies[Check::roundtrip].cases;
        auto sol = tke_solve_from_kahler(pd, xi);
        auto back = tke_exists(pd, sol.beta);
        bool ok = back.exists && back.metric && *back.metric == xi;

        CohomologyClass beta;
        bool positive = true;
        for (std::size_t j = 0; j < pd.picard_rank(); ++j) {
          beta.coeffs.push_back(Rational(pd.koszul()[j]) - rng.signed_rational());
          if (Rational(pd.koszul()[j]) - beta.coeffs.back() <= 0) positive = false;
        }
        auto verdict = tke_exists(pd, beta);
        if (verdict.exists != positive) ok = false;
        if (verdict.exists && !(verdict.metric->cls() == c1 - beta)) ok = false;
        if (!ok)
          fail(Check::roundtrip, k, "flagtke tke " + base + " --beta " + class_list(beta.coeffs),
               "round trip or verdict mismatch");
      }
    }
  } catch (const Error& e) {
    // parabolic() and degree() throw internal errors when a self-check fails.
    for (auto c : cfg.checks) fail(c, 0, "flagtke flag " + base, e.what());
  }
  return out;
}

}  // namespace detail

/// Flags are evaluated concurrently; each draws from its own substream and
/// results are merged in enumeration order, so output is independent of
/// scheduling.
inline SweepSummary run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const auto cases = enumerate_flags(cfg.max_rank);
  std::map<LieType, std::shared_ptr<const RootSystem>> systems;
  for (const auto& fc : cases)
    if (!systems.contains(fc.type)) systems.emplace(fc.type, make_root_system(fc.type));

  std::vector<detail::FlagOutcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++)
      outcomes[i] = detail::sweep_one(cases[i], i, cfg, systems.at(cases[i].type));
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  SweepSummary summary;
  summary.flags = cases.size();
  for (auto c : cfg.checks) summary.tallies[c];
  for (auto& o : outcomes) {
    for (const auto& [c, t] : o.tallies) {
      summary.tallies[c].cases += t.cases;
      summary.tallies[c].failures += t.failures;
    }
    for (auto& f : o.failures) summary.failures.push_back(std::move(f));
  }
  std::stable_sort(summary.failures.begin(), summary.failures.end(), [](const auto& a, const auto& b) {
    if (a.flag_index != b.flag_index) return a.flag_index < b.flag_index;
    if (a.sample != b.sample) return a.sample < b.sample;
    return a.check < b.check;
  });
  return summary;
}

}  // namespace flagtke
