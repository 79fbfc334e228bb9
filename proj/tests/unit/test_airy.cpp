#include "multischur/airy.hpp"
#include "multischur/errors.hpp"
#include "multischur/fredholm.hpp"
#include "multischur/quadrature.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <cmath>
#include <numbers>

using namespace multischur;

TEST_CASE("Gauss-Legendre") {
  const auto rule = gauss_legendre(20, 0.0, 2.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], 39);
  CHECK(sum == doctest::Approx(std::pow(2.0, 40) / 40).epsilon(1e-13));
  const auto comp = composite_gauss_legendre(0.0, std::numbers::pi, 4, 10);
  CHECK(comp.size() == 40);
  double s = 0.0;
  for (std::size_t i = 0; i < comp.size(); ++i) s += comp.weights[i] * std::sin(comp.nodes[i]);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("classical Airy values") {
  const AiryFunction ai(3);
  CHECK(ai(0.0) == doctest::Approx(0.3550280539).epsilon(1e-10));
  CHECK(ai(1.0) == doctest::Approx(0.1352924163).epsilon(1e-10));
  for (double x : {-3.0, -1.0, 0.5, 2.0}) {
    const auto ref = oracle::airy_series(x);
    CHECK(std::abs(ai(x) - ref.ai) < 1e-12);
    CHECK(std::abs(ai(x, 1) - ref.aip) < 1e-12);
  }
  CHECK_THROWS_AS(AiryFunction(4), ValidationError);
  CHECK_THROWS_AS(AiryFunction(1), ValidationError);
}

TEST_CASE("higher Airy functions solve their ODE") {
  for (int order : {3, 5, 7}) {
    const AiryFunction ai(order);
    const int n = ai.n();
    for (double x : {-2.0, 0.0, 1.5}) {
      const auto d = ai.derivatives(x, 2 * n + 1);
      // Ai^{(2n)} = sigma x Ai computed two ways: ODE and quadrature.
      CHECK(std::abs(d[2 * n] - ai(x, 2 * n)) < 1e-10);
      CHECK(std::abs(ai(x, 2 * n) - ai.sign() * x * d[0]) < 1e-10);
    }
  }
}

TEST_CASE("kernel representations agree") {
  for (int order : {3, 5}) {
    const AiryKernel k(order);
    for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, -0.5}, {-2.0, 0.3}, {0.7, 0.7 + 1e-5}}) {
      const double a = k(x, y, KernelRepresentation::derivative_sum);
      CHECK(std::abs(a - k(x, y, KernelRepresentation::product_integral)) < 1e-10);
      CHECK(std::abs(a - k(x, y, KernelRepresentation::contour)) < 1e-9);
      CHECK(std::abs(a - k(y, x, KernelRepresentation::derivative_sum)) < 1e-12);
    }
  }
  const double aip = oracle::airy_series(0.0).aip;
  CHECK(AiryKernel(3)(0.0, 0.0) == doctest::Approx(aip * aip).epsilon(1e-12));
  CHECK(parse_kernel_representation(to_string(KernelRepresentation::contour)) ==
        KernelRepresentation::contour);
}

TEST_CASE("Fredholm determinant") {
  CHECK(tracy_widom(3, 0.0) == doctest::Approx(0.9693728).epsilon(1e-7));
  const auto r = TracyWidom(3).evaluate(-2.0);
  CHECK(r.self_convergence < 1e-8);
  CHECK(r.value == doctest::Approx(0.413224).epsilon(1e-5));
  CHECK(tracy_widom(3, 2.0) >= 0.999);
  for (int order : {3, 5}) {
    double previous = 0.0;
    for (double s : {-6.0, -3.0, -1.0, 0.0, 1.0, 3.0}) {
      const double f = tracy_widom(order, s);
      CHECK(f >= previous);
      CHECK(f <= 1.0);
      previous = f;
    }
  }
  CHECK(tracy_widom(3, 20.0) == 1.0);
}
