#include <gtest/gtest.h>

#include "flagtke/flag.hpp"
#include "test_support.hpp"

using namespace flagtke;
using namespace flagtke::testing;

namespace {

std::vector<NodeSet> all_thetas(std::size_t m) {
  std::vector<NodeSet> out;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    NodeSet t;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1U) t.push_back(i);
    out.push_back(t);
  }
  return out;
}

// Hilbert polynomial route: k -> dim V(k delta_P) from the Weyl dimension
// formula over every positive root; its n-th forward difference is n! times
// the leading coefficient, which is the anticanonical degree.
Rational degree_by_weyl_dimension(const ParabolicData& pd) {
  const auto& rs = pd.root_system();
  const auto rho = weyl_vector(rs);
  const std::size_t n = pd.dim();
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= n; ++k) {
    Weight lam = Rational(static_cast<long>(k)) * pd.delta_p() + rho;
    Rational v = 1;
    for (const auto& g : rs.positive_roots()) v *= pairing(rs, lam, g) / pairing(rs, rho, g);
    values.push_back(v);
  }
  for (std::size_t order = 0; order < n; ++order)
    for (std::size_t k = 0; k + 1 < values.size() - order; ++k) values[k] = values[k + 1] - values[k];
  return values[0];
}

}  // namespace

TEST(Parabolic, ProjectiveLine) {
  auto pd = parabolic(A(1), {});
  EXPECT_EQ(pd.dim(), 1U);
  EXPECT_EQ(pd.koszul(), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(degree(pd), 2);
}

TEST(Parabolic, ProjectivePlane) {
  auto pd = parabolic(A(2), {1});
  EXPECT_EQ(pd.complement(), (NodeSet{0}));
  EXPECT_EQ(pd.dim(), 2U);
  EXPECT_EQ(pd.koszul(), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(degree(pd), 9);
  EXPECT_TRUE(snow_check(pd).equality);
}

TEST(Parabolic, A2FullFlag) {
  auto pd = parabolic(A(2), {});
  EXPECT_EQ(pd.dim(), 3U);
  EXPECT_EQ(pd.koszul(), (std::vector<std::int64_t>{2, 2}));
  // Inside P^2 x P^2 the flag is a (1,1) divisor and -K = 2H1 + 2H2:
  // (2H1 + 2H2)^3 (H1 + H2) = 8 * 6 = 48.
  EXPECT_EQ(degree(pd), 48);
  auto s = snow_check(pd);
  EXPECT_EQ(s.bound, 64);
  EXPECT_TRUE(s.ok);
  EXPECT_FALSE(s.equality);
}

TEST(Parabolic, A3WithComplementTwoThree) {
  auto pd = parabolic_from_complement(A(3), {1, 2});
  EXPECT_EQ(pd.theta(), (NodeSet{0}));
  EXPECT_EQ(pd.dim(), 5U);
  EXPECT_EQ(pd.koszul(), (std::vector<std::int64_t>{3, 2}));
  EXPECT_EQ(degree(pd), 4500);
}

TEST(Parabolic, FullFlagDegrees) {
  EXPECT_EQ(degree(parabolic(B(2), {})), 384);
  EXPECT_EQ(degree(parabolic(G2(), {})), 46080);
  BigInt e8 = factorial(120);
  for (int k = 0; k < 120; ++k) e8 *= 2;
  EXPECT_EQ(degree(parabolic(E(8), {})), e8);
}

TEST(Parabolic, FullFlagsHaveAllKoszulTwo) {
  for (const auto& t : types_up_to(8)) {
    auto pd = parabolic(t, {});
    EXPECT_EQ(pd.koszul(), std::vector<std::int64_t>(t.rank, 2)) << t.name();
    EXPECT_EQ(pd.dim(), positive_root_count(t));
    // delta_P = 2 rho for the Borel.
    EXPECT_EQ(pd.delta_p(), Rational(2) * weyl_vector(pd.root_system()));
  }
}

TEST(Parabolic, MaximalParabolicFanoIndices) {
  auto index = [](LieType t, std::size_t node) {
    auto pd = parabolic_from_complement(t, {node});
    return pd.koszul()[0];
  };
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t k = 0; k < m; ++k) EXPECT_EQ(index(A(m), k), static_cast<std::int64_t>(m + 1));
  for (std::size_t m = 2; m <= 8; ++m) {
    EXPECT_EQ(index(B(m), 0), static_cast<std::int64_t>(2 * m - 1));  // odd quadric
    EXPECT_EQ(index(C(m), 0), static_cast<std::int64_t>(2 * m));      // P^{2m-1}
    EXPECT_EQ(index(B(m), m - 1), static_cast<std::int64_t>(2 * m));  // spinor variety
    EXPECT_EQ(index(C(m), m - 1), static_cast<std::int64_t>(m + 1));  // Lagrangian Grassmannian
  }
  for (std::size_t m = 4; m <= 8; ++m) EXPECT_EQ(index(D(m), 0), static_cast<std::int64_t>(2 * m - 2));
  EXPECT_EQ(index(E(6), 0), 12);
  EXPECT_EQ(index(E(6), 1), 11);
  EXPECT_EQ(index(E(7), 0), 17);
  EXPECT_EQ(index(E(7), 6), 18);
  EXPECT_EQ(index(E(8), 0), 23);
  EXPECT_EQ(index(E(8), 7), 29);
  EXPECT_EQ(index(F4(), 0), 8);
  EXPECT_EQ(index(F4(), 3), 11);
  EXPECT_EQ(index(G2(), 0), 5);
  EXPECT_EQ(index(G2(), 1), 3);
}

TEST(Parabolic, InvariantsForEveryFlagUpToRankSix) {
  for (const auto& t : types_up_to(6)) {
    auto rs = make_root_system(t);
    for (const auto& theta : all_thetas(t.rank)) {
      auto pd = parabolic(rs, theta);
      SCOPED_TRACE(t.name() + " theta " + std::to_string(theta.size()));
      // Levi roots are exactly the roots supported on theta.
      std::size_t levi = 0;
      for (const auto& g : rs->positive_roots()) {
        bool on_theta = true;
        for (std::size_t i = 0; i < t.rank; ++i)
          if (g.coeffs[i] && !std::binary_search(theta.begin(), theta.end(), i)) on_theta = false;
        levi += on_theta;
      }
      EXPECT_EQ(pd.dim() + levi, rs->positive_roots().size());
      EXPECT_EQ(pd.picard_rank() + theta.size(), t.rank);
      for (std::size_t i : theta) EXPECT_EQ(pairing(*rs, pd.delta_p(), Root::simple(t.rank, i)), 0);
      // <delta_P, h_alpha^vee> = 2 - sum over Levi roots of a(gamma, alpha).
      for (std::size_t k = 0; k < pd.picard_rank(); ++k) {
        const std::size_t a = pd.complement()[k];
        std::int64_t expected = 2;
        for (const auto& g : rs->positive_roots()) {
          bool on_theta = true;
          for (std::size_t i = 0; i < t.rank; ++i)
            if (g.coeffs[i] && !std::binary_search(theta.begin(), theta.end(), i)) on_theta = false;
          if (!on_theta) continue;
          for (std::size_t i = 0; i < t.rank; ++i) expected -= g.coeffs[i] * rs->cartan(i, a);
        }
        EXPECT_EQ(pd.koszul()[k], expected);
        EXPECT_GE(pd.koszul()[k], 2);
      }
      auto s = snow_check(pd);
      EXPECT_GT(s.degree, 0);
      EXPECT_TRUE(s.ok);
    }
  }
}

TEST(Parabolic, DimensionAndKoszulAreMonotoneInTheta) {
  for (const auto& t : types_up_to(5)) {
    auto rs = make_root_system(t);
    for (const auto& theta : all_thetas(t.rank)) {
      auto small = parabolic(rs, theta);
      for (std::size_t extra : complement_of(t.rank, theta)) {
        NodeSet bigger = theta;
        bigger.push_back(extra);
        std::sort(bigger.begin(), bigger.end());
        if (bigger.size() == t.rank) continue;
        auto large = parabolic(rs, bigger);
        EXPECT_LT(large.dim(), small.dim());
        for (std::size_t k = 0; k < large.picard_rank(); ++k) {
          auto node = large.complement()[k];
          EXPECT_GE(large.koszul()[k], small.koszul()[*small.complement_position(node)]);
        }
      }
    }
  }
}

TEST(Degree, MatchesHilbertPolynomialLeadingTerm) {
  for (const auto& t : types_up_to(4)) {
    auto rs = make_root_system(t);
    for (const auto& theta : all_thetas(t.rank)) {
      auto pd = parabolic(rs, theta);
      EXPECT_EQ(Rational(degree(pd)), degree_by_weyl_dimension(pd)) << t.name();
    }
  }
  EXPECT_EQ(Rational(degree(parabolic(E(6), {1, 2, 3, 4, 5}))), degree_by_weyl_dimension(parabolic(E(6), {1, 2, 3, 4, 5})));
}

TEST(Degree, ProjectiveSpacesAttainSnowBound) {
  for (std::size_t m = 1; m <= 8; ++m) {
    auto pd = parabolic_from_complement(A(m), {0});
    EXPECT_EQ(degree(pd), snow_bound(m));
    EXPECT_TRUE(snow_check(pd).equality);
  }
  EXPECT_EQ(snow_bound(0), 1);
  EXPECT_EQ(snow_bound(3), 64);
}

TEST(Degree, QuadricsAndGrassmannians) {
  // Q^3 = B2 / P1: degree 2 * 3^3.
  EXPECT_EQ(degree(parabolic_from_complement(B(2), {0})), 54);
  // Gr(2,4) = Q^4: degree 2 * 4^4.
  EXPECT_EQ(degree(parabolic_from_complement(A(3), {1})), 512);
}

TEST(Parabolic, Errors) {
  try {
    parabolic(D(5), {0, 1, 2, 3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_flag);
  }
  try {
    parabolic(A(3), {3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_index);
  }
  try {
    parabolic(A(3), {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_index);
  }
  EXPECT_THROW(parabolic_from_complement(A(3), {}), Error);
  EXPECT_THROW(parabolic(LieType{Series::D, 3}, {}), Error);
}

TEST(Parabolic, ThetaIsNormalized) {
  auto pd = parabolic(A(4), {2, 0});
  EXPECT_EQ(pd.theta(), (NodeSet{0, 2}));
  EXPECT_EQ(pd.complement(), (NodeSet{1, 3}));
  EXPECT_EQ(pd.complement_position(3), 1U);
  EXPECT_FALSE(pd.complement_position(0).has_value());
}

TEST(Parabolic, FlagReportAgrees) {
  auto pd = parabolic(C(3), {1});
  auto r = flag_report(pd);
  EXPECT_EQ(r.lie_type, C(3));
  EXPECT_EQ(r.dim, pd.dim());
  EXPECT_EQ(r.koszul, pd.koszul());
  EXPECT_EQ(r.degree, degree(pd));
  EXPECT_EQ(r.snow_bound, snow_bound(pd.dim()));
  EXPECT_TRUE(r.snow_ok);
}
