#include "generators.hpp"

#include "multischur/errors.hpp"
#include "multischur/laurent.hpp"
#include "multischur/rational.hpp"
#include "multischur/specialization.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <cmath>

using namespace multischur;

namespace {
Specialization oe2() { return Specialization(std::vector<Rational>{1, Rational(-1, 4)}); }
}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("-1/9") == Rational(-1, 9));
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(to_string(Rational(-1, 9)) == "-1/9");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK(binomial(6, 2) == 15);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
}

TEST_CASE("h series") {
  const auto h = h_series_exact(Specialization(std::vector<Rational>{1}), 5);
  CHECK(h[3] == Rational(1, 6));
  CHECK(h[5] == Rational(1, 120));
  CHECK(h_series_exact(oe2(), 2)[2] == Rational(3, 8));
  CHECK(h_series(oe2(), 2)[2] == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("schur values") {
  const Specialization plancherel(std::vector<Rational>{1});
  CHECK(schur_value_exact(Partition({2, 1}), plancherel) == Rational(1, 3));
  CHECK(schur_value_exact(Partition({2}), oe2()) == Rational(3, 8));
  CHECK(schur_value(Partition({2, 1}), plancherel) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(schur_value_exact(Partition(), oe2()) == 1);
  CHECK_THROWS_AS(schur_value_exact(Partition({1}), Specialization(std::vector<double>{0.5})),
                  ValidationError);
}

TEST_CASE("omega involution") {
  const Specialization odd(std::vector<Rational>{1, 0, Rational(-1, 9)});
  CHECK(omega_involution(odd) == odd);
  CHECK(omega_involution(oe2()).exact_thetas()[1] == Rational(1, 4));
  CHECK(omega_involution(omega_involution(oe2())) == oe2());
}

TEST_CASE("tilde V polynomial") {
  const Specialization s(std::vector<Rational>{2, 3, 5});
  const auto c = tilde_V_poly_exact(s);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == -3);
  CHECK(c[1] == 2 - 5);
  CHECK(c[2] == Rational(3, 2));
  CHECK(c[3] == Rational(5, 3));
  for (double z : {0.3, 1.7, -2.2}) {
    const double lhs = evaluate_polynomial(tilde_V_poly(s), z + 1 / z);
    const double rhs = (potential_V(s, z) + potential_V(s, 1 / z)).real();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("kappa coefficients are Bessel functions for Plancherel") {
  const auto kappa = symbol_coeffs(Specialization(std::vector<double>{1.0}), SymbolFamily::kappa, 20);
  CHECK(kappa[0] == doctest::Approx(0.2238907791).epsilon(1e-9));
  for (int m = 0; m <= 10; ++m) {
    const double j = static_cast<double>(oracle::bessel_j(m, 2.0L));
    CHECK(std::abs(kappa[m] - j) < 1e-13);
    CHECK(std::abs(kappa[-m] - (m % 2 ? -j : j)) < 1e-13);
  }
  CHECK(kappa.sum_of_squares() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("f coefficients are modified Bessel functions") {
  const auto f = symbol_coeffs(Specialization(std::vector<double>{1.0}), SymbolFamily::f, 20);
  CHECK(f[0] == doctest::Approx(2.2795853).epsilon(1e-7));
  for (int m = 0; m <= 8; ++m)
    CHECK(std::abs(f[m] - static_cast<double>(oracle::bessel_i(m, 2.0L))) < 1e-12);
}

TEST_CASE("g family equals f family of the conjugate specialization") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Specialization s = gen::real_spec(rng, 4, 1.5);
    const auto g = symbol_coeffs(s, SymbolFamily::g, 30);
    const auto f = symbol_coeffs(omega_involution(s), SymbolFamily::f, 30);
    for (int m = -30; m <= 30; ++m) CHECK(std::abs(g[m] - f[m]) < 1e-12);
  }
}

TEST_CASE("property: Schur conjugate duality, exact") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const Specialization s = gen::rational_spec(rng, 3);
    const Specialization w = omega_involution(s);
    for (const Partition& p : enumerate_partitions(10))
      CHECK(schur_value_exact(p, s) == schur_value_exact(conjugate(p), w));
  }
}

TEST_CASE("property: floating Jacobi-Trudi agrees with the exact value") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const Specialization s = gen::rational_spec(rng, 3);
    for (const Partition& p : enumerate_partitions(8)) {
      const double exact = to_double(schur_value_exact(p, s));
      CHECK(std::abs(schur_value(p, s) - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
    }
  }
}
