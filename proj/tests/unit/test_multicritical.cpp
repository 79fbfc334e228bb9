#include "multischur/errors.hpp"
#include "multischur/multicritical.hpp"

#include <doctest.h>

#include <cmath>

using namespace multischur;

TEST_CASE("parameter tables") {
  const auto oe = oe_params(2, 1);
  REQUIRE(oe.ratios.size() == 2);
  CHECK(oe.ratios[1] == Rational(-1, 4));
  CHECK(oe.b == Rational(3, 2));
  CHECK(oe.d == 4);
  CHECK(*oe.b_tilde == Rational(5, 2));
  CHECK(*oe.d_tilde == 2);

  const auto oe3 = oe_params(3, 1);
  CHECK(oe3.ratios == std::vector<Rational>{1, Rational(-2, 5), Rational(1, 15)});
  CHECK(oe3.b == Rational(4, 3));
  CHECK(oe3.d == 15);
  CHECK(*oe3.b_tilde == Rational(44, 15));
  CHECK(*oe3.d_tilde == Rational(16, 5));

  const auto o = o_params(2, Rational(5, 2));
  CHECK(o.spec().exact_thetas()[2] == Rational(-5, 18));
  CHECK(o.b == Rational(16, 9));
  CHECK(o.d == Rational(3, 2));

  const auto o3 = o_params(3, 1);
  CHECK(o3.ratios == std::vector<Rational>{1, 0, Rational(-1, 6), 0, Rational(1, 50)});
  CHECK(o3.b == Rational(128, 75));
  CHECK(o3.d == Rational(15, 8));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(oe_params(0, 1), ValidationError);
  CHECK(o_params(2, 0).spec().l1_norm() == 0.0);
  CHECK_THROWS_AS(o_params(2, -1), ValidationError);
  CHECK(parse_measure_kind("oe") == MeasureKind::odd_even);
  CHECK(parse_measure_kind("o") == MeasureKind::odd);
  CHECK_THROWS_AS(parse_measure_kind("even"), ValidationError);
}

TEST_CASE("action S0") {
  const auto p1 = o_params(1, 3);
  CHECK(action_S0(p1, 2.0).real() == doctest::Approx(1.5));
  const auto p2 = o_params(2, 7);
  CHECK(action_S0(p2, 2.0).real() == doctest::Approx(29.0 / 24).epsilon(1e-14));
  CHECK_THROWS_AS(action_S0(p2, 0.0), ValidationError);
}

TEST_CASE("Stirling route to Euler derivatives") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  for (int n = 1; n <= 3; ++n) {
    const ExactLaurent f = action_polynomial(oe_params(n, 1));
    for (int k = 1; k <= 2 * n + 1; ++k)
      for (int z0 : {1, -1})
        CHECK(f.euler_derivative(k, z0) == euler_derivative_via_stirling(f, k, z0));
  }
}

TEST_CASE("criticality for n = 1") {
  const auto r = verify_criticality(o_params(1, 1));
  CHECK(r.ok());
  CHECK(r.top_derivative == 2);
  CHECK(r.euler_derivatives == std::vector<Rational>{0, 0});
}

TEST_CASE("criticality: Euler derivatives vanish and sum rules hold") {
  for (MeasureKind kind : {MeasureKind::odd_even, MeasureKind::odd})
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(n);
      const auto a = verify_criticality(make_params(kind, n, 1));
      const auto b = verify_criticality(make_params(kind, n, 5));
      for (const Rational& e : a.euler_derivatives) CHECK(e == 0);
      for (const Rational& e : a.even_moments) CHECK(e == 0);
      CHECK(a.sum_ratio == a.half_b);
      CHECK(a.top_derivative == b.top_derivative);
      CHECK(a.top_derivative == a.top_expected);
      CHECK(a.top_moment == a.top_moment_consistent);
      CHECK(a.ok());
      if (kind == MeasureKind::odd_even) {
        CHECK(*a.left_order == 2);
        CHECK(*a.left_edge_identity);
      } else {
        CHECK(*a.odd_symmetry);
      }
    }
}

TEST_CASE("top derivative matches (2n)! d only when d = 1") {
  CHECK(verify_criticality(o_params(1, 1)).top_matches_alternative());
  const auto r = verify_criticality(oe_params(2, 1));
  CHECK_FALSE(r.top_matches_alternative());
  CHECK(r.top_derivative == Rational(-24, 4));
}
