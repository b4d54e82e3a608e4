#pragma once

// Parabolic data of the flag variety X_P = G^C / P_Theta.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagtke/classes.hpp"
#include "flagtke/error.hpp"
#include "flagtke/rational.hpp"
#include "flagtke/rootsys.hpp"

namespace flagtke {

/// Sorted set of 0-based node indices.
using NodeSet = std::vector<std::size_t>;

inline NodeSet complement_of(std::size_t rank, const NodeSet& nodes) {
  NodeSet out;
  for (std::size_t i = 0; i < rank; ++i)
    if (!std::binary_search(nodes.begin(), nodes.end(), i)) out.push_back(i);
  return out;
}

inline NodeSet normalized_nodes(std::size_t rank, NodeSet nodes) {
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw Error(Errc::invalid_index, "duplicate node index");
  if (!nodes.empty() && nodes.back() >= rank)
    throw Error(Errc::invalid_index, "node index " + std::to_string(nodes.back() + 1) + " out of range 1.." +
                                         std::to_string(rank));
  return nodes;
}

class ParabolicData {
 public:
  const RootSystem& root_system() const noexcept { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const noexcept { return rs_; }
  const LieType& type() const noexcept { return rs_->type(); }
  const NodeSet& theta() const noexcept { return theta_; }
  const NodeSet& complement() const noexcept { return complement_; }
  /// Pi^+ \ <Theta>^+, in root-system order.
  const std::vector<Root>& radical_roots() const noexcept { return radical_; }
  /// Positions of the radical roots in root_system().positive_roots().
  const std::vector<std::size_t>& radical_indices() const noexcept { return radical_index_; }
  const Weight& delta_p() const noexcept { return delta_p_; }
  /// <delta_P, h_alpha^vee> for alpha in the complement, in complement order.
  const std::vector<std::int64_t>& koszul() const noexcept { return koszul_; }
  std::size_t dim() const noexcept { return radical_.size(); }
  std::size_t picard_rank() const noexcept { return complement_.size(); }

  std::optional<std::size_t> complement_position(std::size_t node) const {
    auto it = std::lower_bound(complement_.begin(), complement_.end(), node);
    if (it == complement_.end() || *it != node) return std::nullopt;
    return static_cast<std::size_t>(it - complement_.begin());
  }

  /// Sum_alpha c_alpha varpi_alpha over the complement.
  Weight to_weight(const CohomologyClass& c) const {
    if (c.size() != complement_.size())
      throw Error(Errc::dimension_mismatch, "class has " + std::to_string(c.size()) + " coefficients, expected " +
                                                std::to_string(complement_.size()));
    Weight w = Weight::zero(rs_->rank());
    for (std::size_t k = 0; k < complement_.size(); ++k) w.coords[complement_[k]] = c.coeffs[k];
    return w;
  }

 private:
  friend ParabolicData parabolic(std::shared_ptr<const RootSystem> rs, NodeSet theta);

  std::shared_ptr<const RootSystem> rs_;
  NodeSet theta_;
  NodeSet complement_;
  std::vector<Root> radical_;
  std::vector<std::size_t> radical_index_;
  Weight delta_p_;
  std::vector<std::int64_t> koszul_;
};

/// <Theta>^+ is found by support filtering. delta_P is the radical-root sum;
/// its fundamental-weight expansion over the complement is checked, not assumed.
inline ParabolicData parabolic(std::shared_ptr<const RootSystem> rs, NodeSet theta) {
  const std::size_t m = rs->rank();
  theta = normalized_nodes(m, std::move(theta));
  if (theta.size() == m) throw Error(Errc::not_a_flag, "not a flag variety (point): theta is all of Sigma");

  ParabolicData pd;
  pd.theta_ = std::move(theta);
  pd.complement_ = complement_of(m, pd.theta_);
  const auto& roots = rs->positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool on_theta = true;
    for (std::size_t i : pd.complement_)
      if (roots[k].coeffs[i] != 0) on_theta = false;
    if (!on_theta) {
      pd.radical_.push_back(roots[k]);
      pd.radical_index_.push_back(k);
    }
  }
  pd.delta_p_ = root_to_weight(*rs, root_sum(m, pd.radical_));

  Weight rebuilt = Weight::zero(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational value = pairing(*rs, pd.delta_p_, Root::simple(m, i));
    bool in_theta = std::binary_search(pd.theta_.begin(), pd.theta_.end(), i);
    if (in_theta && value != 0)
      throw Error(Errc::internal, "<delta_P, h^vee> does not vanish on theta for " + rs->type().name());
    if (!in_theta) {
      if (!is_integer(value) || value <= 0)
        throw Error(Errc::internal, "non-positive or non-integral Koszul number for " + rs->type().name());
      pd.koszul_.push_back(static_cast<std::int64_t>(numerator(value)));
      rebuilt.coords[i] = value;
    }
  }
  if (!(rebuilt == pd.delta_p_))
    throw Error(Errc::internal, "delta_P is not the Koszul combination of fundamental weights");
  pd.rs_ = std::move(rs);
  return pd;
}

inline ParabolicData parabolic(const LieType& t, NodeSet theta) {
  return parabolic(make_root_system(t), std::move(theta));
}

inline ParabolicData parabolic_from_complement(std::shared_ptr<const RootSystem> rs, NodeSet complement) {
  auto m = rs->rank();
  complement = normalized_nodes(m, std::move(complement));
  return parabolic(std::move(rs), complement_of(m, complement));
}

inline ParabolicData parabolic_from_complement(const LieType& t, NodeSet complement) {
  return parabolic_from_complement(make_root_system(t), std::move(complement));
}

/// c_1(X_P): coefficients are the Koszul numbers.
inline CohomologyClass anticanonical_class(const ParabolicData& pd) {
  CohomologyClass c;
  for (auto k : pd.koszul()) c.coeffs.emplace_back(k);
  return c;
}

/// (-K)^n = n! prod_gamma <delta_P, h_gamma^vee> / <rho^+, h_gamma^vee>.
inline BigInt degree(const ParabolicData& pd) {
  const auto& rs = pd.root_system();
  const Weight rho = weyl_vector(rs);
  Rational value = Rational(factorial(pd.dim()));
  for (auto k : pd.radical_indices()) value *= rs.pairing_at(pd.delta_p(), k) / rs.pairing_at(rho, k);
  if (!is_integer(value) || value <= 0)
    throw Error(Errc::internal, "anticanonical degree is not a positive integer: " + to_string(value));
  return numerator(value);
}

inline BigInt snow_bound(std::size_t n) {
  BigInt b = 1;
  for (std::size_t k = 0; k < n; ++k) b *= (n + 1);
  return b;
}

struct SnowCheck {
  BigInt degree;
  BigInt bound;
  bool ok = false;
  bool equality = false;
};

inline SnowCheck snow_check(const ParabolicData& pd) {
  SnowCheck s;
  s.degree = degree(pd);
  s.bound = snow_bound(pd.dim());
  s.ok = s.degree <= s.bound;
  s.equality = s.degree == s.bound;
  return s;
}

struct FlagReport {
  LieType lie_type;
  NodeSet theta;
  NodeSet complement;
  std::size_t dim = 0;
  std::size_t picard_rank = 0;
  std::vector<std::int64_t> koszul;
  BigInt degree;
  BigInt snow_bound;
  bool snow_ok = false;
};

inline FlagReport flag_report(const ParabolicData& pd) {
  auto s = snow_check(pd);
  return FlagReport{pd.type(),      pd.theta(), pd.complement(),   pd.dim(), pd.picard_rank(),
                    pd.koszul(),    s.degree,   s.bound,           s.ok};
}

}  // namespace flagtke
