#pragma once

// Twisted Kahler-Einstein metrics, greatest Ricci lower bound, volumes and
// the volume inequality chain on flag varieties, in the 2*pi-normalized
// units described in classes.hpp.

#include <optional>
#include <string>
#include <vector>

#include "flagtke/classes.hpp"
#include "flagtke/error.hpp"
#include "flagtke/flag.hpp"
#include "flagtke/rational.hpp"

namespace flagtke {

namespace detail {
inline void check_size(const ParabolicData& pd, std::size_t size, const char* what) {
  if (size != pd.picard_rank())
    throw Error(Errc::dimension_mismatch, std::string(what) + " has " + std::to_string(size) +
                                              " coefficients, Picard rank is " + std::to_string(pd.picard_rank()));
}
}  // namespace detail

struct TkeResult {
  bool exists = false;
  std::optional<KahlerClass> metric;
  /// koszul_alpha - beta_alpha, in complement order.
  std::vector<Rational> margins;
  bool integral_twist = false;
};

/// Ric(omega) = omega + beta has an invariant solution iff every margin
/// koszul_alpha - beta_alpha is positive; the solution is the margin vector.
inline TkeResult tke_exists(const ParabolicData& pd, const CohomologyClass& beta) {
  detail::check_size(pd, beta.size(), "twist");
  TkeResult r;
  r.integral_twist = beta.is_integral();
  r.exists = true;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    r.margins.push_back(Rational(pd.koszul()[k]) - beta.coeffs[k]);
    if (r.margins.back() <= 0) r.exists = false;
  }
  if (r.exists) r.metric.emplace(r.margins);
  return r;
}

struct TkeSolution {
  KahlerClass omega;
  CohomologyClass beta;
};

/// For a Kahler class xi, the twist beta = c_1 - xi admits the solution omega = xi.
inline TkeSolution tke_solve_from_kahler(const ParabolicData& pd, const KahlerClass& xi) {
  detail::check_size(pd, xi.size(), "Kahler class");
  CohomologyClass beta = anticanonical_class(pd) - xi.cls();
  auto check = tke_exists(pd, beta);
  if (!check.exists || !(*check.metric == xi))
    throw Error(Errc::internal, "tKE round trip failed to recover the Kahler class");
  return TkeSolution{xi, std::move(beta)};
}

struct GrlbResult {
  Rational value;
  /// Every complement node attaining the minimum (0-based node indices).
  NodeSet argmin;
};

/// R(xi) = min_alpha koszul_alpha / a_alpha.
inline GrlbResult grlb_report(const ParabolicData& pd, const KahlerClass& xi) {
  detail::check_size(pd, xi.size(), "Kahler class");
  GrlbResult r;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    Rational ratio = Rational(pd.koszul()[k]) / xi.coeffs()[k];
    if (r.argmin.empty() || ratio < r.value) {
      r.value = ratio;
      r.argmin = {pd.complement()[k]};
    } else if (ratio == r.value) {
      r.argmin.push_back(pd.complement()[k]);
    }
  }
  return r;
}

inline Rational grlb(const ParabolicData& pd, const KahlerClass& xi) { return grlb_report(pd, xi).value; }

/// Vol(xi) = deg * prod_gamma <xi_w, h_gamma^vee> / <delta_P, h_gamma^vee>.
inline Rational volume_class(const ParabolicData& pd, const KahlerClass& xi, const BigInt& deg) {
  detail::check_size(pd, xi.size(), "Kahler class");
  const auto& rs = pd.root_system();
  const Weight xi_w = pd.to_weight(xi.cls());
  Rational v = Rational(deg);
  for (auto k : pd.radical_indices()) v *= rs.pairing_at(xi_w, k) / rs.pairing_at(pd.delta_p(), k);
  return v;
}

inline Rational volume_class(const ParabolicData& pd, const KahlerClass& xi) {
  return volume_class(pd, xi, degree(pd));
}

/// n! * prod_gamma <xi_w, h_gamma^vee> / <rho^+, h_gamma^vee>; never touches degree().
inline Rational volume_cross_check(const ParabolicData& pd, const KahlerClass& xi) {
  detail::check_size(pd, xi.size(), "Kahler class");
  const auto& rs = pd.root_system();
  const Weight xi_w = pd.to_weight(xi.cls());
  const Weight rho = weyl_vector(rs);
  Rational v = Rational(factorial(pd.dim()));
  for (auto k : pd.radical_indices()) v *= rs.pairing_at(xi_w, k) / rs.pairing_at(rho, k);
  return v;
}

/// Lambda_omega(beta). An invariant class of weight lambda acts on the root
/// line g_{-gamma} by <lambda, h_gamma^vee>, so the trace is the sum over
/// radical roots of the eigenvalue ratios.
inline Rational trace(const ParabolicData& pd, const KahlerClass& omega, const CohomologyClass& beta) {
  detail::check_size(pd, omega.size(), "Kahler class");
  detail::check_size(pd, beta.size(), "twist");
  const auto& rs = pd.root_system();
  const Weight omega_w = pd.to_weight(omega.cls());
  const Weight beta_w = pd.to_weight(beta);
  Rational t = 0;
  for (auto k : pd.radical_indices()) t += rs.pairing_at(beta_w, k) / rs.pairing_at(omega_w, k);
  return t;
}

/// S(omega) = tr_omega(rho_0).
inline Rational scalar_curvature(const ParabolicData& pd, const KahlerClass& omega) {
  return trace(pd, omega, anticanonical_class(pd));
}

struct VolumeBoundReport {
  Rational grlb;
  Rational volume;
  Rational r_pow_vol;
  BigInt degree;
  BigInt snow;
  bool left_ok = false;
  bool right_ok = false;
  bool left_equality = false;
  bool right_equality = false;
};

/// R(xi)^n Vol(xi) <= (-K)^n <= (n+1)^n, evaluated exactly.
inline VolumeBoundReport volume_bound_report(const ParabolicData& pd, const KahlerClass& xi) {
  VolumeBoundReport r;
  r.degree = degree(pd);
  r.snow = snow_bound(pd.dim());
  r.grlb = grlb(pd, xi);
  r.volume = volume_class(pd, xi, r.degree);
  r.r_pow_vol = pow(r.grlb, pd.dim()) * r.volume;
  const Rational deg(r.degree);
  r.left_ok = r.r_pow_vol <= deg;
  r.left_equality = r.r_pow_vol == deg;
  r.right_ok = r.degree <= r.snow;
  r.right_equality = r.degree == r.snow;
  return r;
}

/// xi is a positive multiple of c_1(X_P).
inline bool proportional_to_anticanonical(const ParabolicData& pd, const KahlerClass& xi) {
  detail::check_size(pd, xi.size(), "Kahler class");
  const Rational t = xi.coeffs()[0] / pd.koszul()[0];
  for (std::size_t k = 1; k < xi.size(); ++k)
    if (xi.coeffs()[k] != t * pd.koszul()[k]) return false;
  return true;
}

}  // namespace flagtke
