#pragma once

// Root systems of the simple complex Lie algebras, in simple-root and
// fundamental-weight coordinates.
//
// Node numbering follows Bourbaki throughout. Indices in this API are
// 0-based, so index i denotes the Bourbaki simple root alpha_{i+1}:
//   B_m : alpha_m is the short node        C_m : alpha_m is the long node
//   D_m : alpha_{m-1}, alpha_m are the fork ends, alpha_{m-2} the branch node
//   E_m : alpha_2 hangs off alpha_4; alpha_1-alpha_3-alpha_4-...-alpha_m chain
//   F_4 : alpha_1, alpha_2 long          G_2 : alpha_1 short
//
// The Cartan matrix is a(i,j) = <alpha_i, h_{alpha_j}^vee> (row = root,
// column = coroot). The symmetrizer d satisfies d_j * a(i,j) = d_i * a(j,i)
// and gives the invariant form (alpha_i, alpha_j) = a(i,j) * d_j up to an
// overall positive scale, which no pairing depends on.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flagtke/error.hpp"
#include "flagtke/rational.hpp"

namespace flagtke {

enum class Series { A, B, C, D, E, F, G };

inline char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

struct LieType {
  Series series;
  std::size_t rank;

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;

  std::string name() const { return std::string(1, series_letter(series)) + std::to_string(rank); }
};

inline std::string allowed_ranks(Series s) {
  switch (s) {
    case Series::A: return "rank >= 1";
    case Series::B: return "rank >= 2";
    case Series::C: return "rank >= 2";
    case Series::D: return "rank >= 4";
    case Series::E: return "rank in {6,7,8}";
    case Series::F: return "rank = 4";
    case Series::G: return "rank = 2";
  }
  return {};
}

inline bool is_valid(const LieType& t) {
  switch (t.series) {
    case Series::A: return t.rank >= 1;
    case Series::B:
    case Series::C: return t.rank >= 2;
    case Series::D: return t.rank >= 4;
    case Series::E: return t.rank >= 6 && t.rank <= 8;
    case Series::F: return t.rank == 4;
    case Series::G: return t.rank == 2;
  }
  return false;
}

inline void validate(const LieType& t) {
  if (!is_valid(t))
    throw Error(Errc::invalid_type, "invalid rank " + std::to_string(t.rank) + " for series " +
                                        std::string(1, series_letter(t.series)) + " (" +
                                        allowed_ranks(t.series) + ")");
}

/// Parses tokens such as "A2", "d5", "E8".
inline LieType parse_lie_type(std::string_view token) {
  if (token.size() < 2)
    throw Error(Errc::parse, "expected a Lie type such as D5, got '" + std::string(token) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
  auto pos = std::string_view("ABCDEFG").find(letter);
  std::string_view digits = token.substr(1);
  if (pos == std::string_view::npos || !detail::all_digits(digits) || digits.size() > 4)
    throw Error(Errc::parse, "expected a Lie type such as D5, got '" + std::string(token) + "'");
  LieType t{static_cast<Series>(pos), static_cast<std::size_t>(std::stoul(std::string(digits)))};
  validate(t);
  return t;
}

/// A root in simple-root coordinates.
struct Root {
  std::vector<int> coeffs;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  Root operator-() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }
  friend Root operator+(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }
  friend Root operator-(Root a, const Root& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
  }
  static Root simple(std::size_t rank, std::size_t i) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[i] = 1;
    return r;
  }
};

/// An element of h^* in fundamental-weight coordinates.
struct Weight {
  std::vector<Rational> coords;

  friend bool operator==(const Weight&, const Weight&) = default;

  static Weight zero(std::size_t rank) { return Weight{std::vector<Rational>(rank, 0)}; }
  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w = zero(rank);
    w.coords[i] = 1;
    return w;
  }
  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator*(const Rational& s, Weight w) {
    for (auto& c : w.coords) c *= s;
    return w;
  }
};

class RootSystem {
 public:
  const LieType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return type_.rank; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }
  const std::vector<Rational>& symmetrizer() const noexcept { return symmetrizer_; }
  /// Sorted by height, then lexicographically by coefficients.
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }

  bool is_positive_root(const Root& r) const { return index_.contains(r.coeffs); }
  bool is_root(const Root& r) const { return is_positive_root(r) || is_positive_root(-r); }

  /// Invariant form (x, y) for x, y in simple-root coordinates.
  Rational form(const Root& x, const Root& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        if (y.coeffs[j] != 0) s += Rational(x.coeffs[i] * y.coeffs[j] * cartan_[i][j]) * symmetrizer_[j];
    }
    return s;
  }

  /// Invariant form (lambda, y) with lambda in weight coordinates; uses
  /// (varpi_i, alpha_j) = delta_ij * d_j.
  Rational form(const Weight& lambda, const Root& y) const {
    Rational s = 0;
    for (std::size_t j = 0; j < rank(); ++j)
      if (y.coeffs[j] != 0 && lambda.coords[j] != 0) s += lambda.coords[j] * y.coeffs[j] * symmetrizer_[j];
    return s;
  }

  std::optional<std::size_t> index_of(const Root& r) const {
    auto it = index_.find(r.coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// h_gamma^vee in the simple-coroot basis for the positive root with this
  /// index: c_j = 2 gamma_j d_j / (gamma, gamma). Always integral.
  const std::vector<int>& coroot(std::size_t index) const { return coroots_[index]; }

  /// <lambda, h_gamma^vee> for the positive root with this index.
  Rational pairing_at(const Weight& lambda, std::size_t index) const {
    Rational s = 0;
    const auto& c = coroots_[index];
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0 && lambda.coords[j] != 0) s += lambda.coords[j] * c[j];
    return s;
  }

  /// Same system with the symmetrizer multiplied by `factor` (> 0); the
  /// coroot table is recomputed from the rescaled form.
  RootSystem rescaled(const Rational& factor) const {
    if (factor <= 0) throw Error(Errc::internal, "symmetrizer scale must be positive");
    RootSystem copy = *this;
    for (auto& d : copy.symmetrizer_) d *= factor;
    copy.compute_coroots();
    return copy;
  }

 private:
  friend RootSystem build_root_system(const LieType& t);

  void compute_coroots() {
    coroots_.clear();
    for (const auto& g : positive_) {
      const Rational norm = form(g, g);
      std::vector<int> c(rank(), 0);
      for (std::size_t j = 0; j < rank(); ++j) {
        Rational v = 2 * g.coeffs[j] * symmetrizer_[j] / norm;
        if (!is_integer(v)) throw Error(Errc::internal, "non-integral coroot coefficient in " + type_.name());
        c[j] = static_cast<int>(numerator(v));
      }
      coroots_.push_back(std::move(c));
    }
  }

  LieType type_{};
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> symmetrizer_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::vector<int>> coroots_;
};

namespace detail {

struct CartanData {
  std::vector<std::vector<int>> a;
  std::vector<Rational> d;
};

inline CartanData cartan_data(const LieType& t) {
  const std::size_t m = t.rank;
  CartanData out{std::vector<std::vector<int>>(m, std::vector<int>(m, 0)), std::vector<Rational>(m, 1)};
  auto& a = out.a;
  for (std::size_t i = 0; i < m; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  switch (t.series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < m; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < m; ++i) link(i, i + 1);
      a[m - 2][m - 1] = -2;
      for (std::size_t i = 0; i + 1 < m; ++i) out.d[i] = 2;
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < m; ++i) link(i, i + 1);
      a[m - 1][m - 2] = -2;
      out.d[m - 1] = 2;
      break;
    case Series::D:
      for (std::size_t i = 0; i + 2 < m; ++i) link(i, i + 1);
      link(m - 3, m - 1);
      break;
    case Series::E:
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (std::size_t i = 3; i + 1 < m; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      link(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      out.d = {2, 2, 1, 1};
      break;
    case Series::G:
      a[0][1] = -1;
      a[1][0] = -3;
      out.d = {1, 3};
      break;
  }
  return out;
}

}  // namespace detail

/// Positive roots are generated by closure of the simple roots under simple
/// reflections s_i(g) = g - <g, h_i^vee> alpha_i, keeping positive images.
inline RootSystem build_root_system(const LieType& t) {
  validate(t);
  auto data = detail::cartan_data(t);
  const std::size_t m = t.rank;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (data.d[j] * data.a[i][j] != data.d[i] * data.a[j][i])
        throw Error(Errc::internal, "symmetrizer does not symmetrize the Cartan matrix of " + t.name());

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < m; ++i) {
    frontier.push_back(Root::simple(m, i).coeffs);
    found.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier) {
      for (std::size_t i = 0; i < m; ++i) {
        int p = 0;
        for (std::size_t j = 0; j < m; ++j) p += g[j] * data.a[j][i];
        if (p == 0) continue;
        auto h = g;
        h[i] -= p;
        if (std::any_of(h.begin(), h.end(), [](int c) { return c < 0; })) continue;
        if (found.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }

  RootSystem rs;
  rs.type_ = t;
  rs.cartan_ = std::move(data.a);
  rs.symmetrizer_ = std::move(data.d);
  for (const auto& c : found) rs.positive_.push_back(Root{c});
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& x, const Root& y) {
    int hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x.coeffs < y.coeffs;
  });
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.index_.emplace(rs.positive_[k].coeffs, k);
  rs.compute_coroots();
  return rs;
}

inline std::shared_ptr<const RootSystem> make_root_system(const LieType& t) {
  return std::make_shared<const RootSystem>(build_root_system(t));
}

/// Closed-form |Pi^+| for each type.
inline std::size_t positive_root_count(const LieType& t) {
  const std::size_t m = t.rank;
  switch (t.series) {
    case Series::A: return m * (m + 1) / 2;
    case Series::B:
    case Series::C: return m * m;
    case Series::D: return m * (m - 1);
    case Series::E: return m == 6 ? 36 : m == 7 ? 63 : 120;
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

/// <lambda, h_gamma^vee> = 2 (lambda, gamma) / (gamma, gamma).
inline Rational pairing(const RootSystem& rs, const Weight& lambda, const Root& gamma) {
  if (lambda.coords.size() != rs.rank() || gamma.coeffs.size() != rs.rank())
    throw Error(Errc::dimension_mismatch, "pairing: coordinate length does not match rank");
  if (!rs.is_root(gamma)) throw Error(Errc::not_a_root, "pairing: argument is not a root of " + rs.type().name());
  return 2 * rs.form(lambda, gamma) / rs.form(gamma, gamma);
}

/// Change of basis from simple-root to fundamental-weight coordinates:
/// coordinate j is <x, h_{alpha_j}^vee> = sum_i x_i a(i,j).
inline Weight root_to_weight(const RootSystem& rs, const Root& x) {
  Weight w = Weight::zero(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) {
    int s = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) s += x.coeffs[i] * rs.cartan(i, j);
    w.coords[j] = s;
  }
  return w;
}

/// rho^+ as the sum of fundamental weights.
inline Weight weyl_vector(const RootSystem& rs) {
  return Weight{std::vector<Rational>(rs.rank(), 1)};
}

inline Root root_sum(std::size_t rank, const std::vector<Root>& roots) {
  Root s{std::vector<int>(rank, 0)};
  for (const auto& r : roots) s = s + r;
  return s;
}

/// The highest root; with the height-then-lex ordering it is the last one.
inline const Root& maximal_root(const RootSystem& rs) { return rs.positive_roots().back(); }

/// Coefficient n_i of alpha_i in the maximal root.
inline int height_in_max(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw Error(Errc::invalid_index, "node index out of range");
  return maximal_root(rs).coeffs[i];
}

}  // namespace flagtke
