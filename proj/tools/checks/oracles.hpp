#pragma once

// Independent reference computations. None of these go through the library's
// numerical routes; they are the yardsticks the checks measure against.

#include "multischur/partition.hpp"
#include "multischur/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace multischur::oracle {

/// J_m(x) by its power series.
inline double bessel_j(int m, double x) {
  const int a = std::abs(m);
  long double term = 1.0L;
  for (int k = 1; k <= a; ++k) term *= static_cast<long double>(x) / 2.0L / k;
  long double sum = 0.0L;
  const long double q = static_cast<long double>(x) * x / 4.0L;
  for (int k = 0; k < 200; ++k) {
    sum += term;
    term *= -q / ((k + 1.0L) * (k + 1.0L + a));
    if (std::abs(term) < 1e-30L * std::abs(sum)) break;
  }
  return static_cast<double>((m < 0 && a % 2 == 1) ? -sum : sum);
}

/// I_m(x) by its power series.
inline double bessel_i(int m, double x) {
  const int a = std::abs(m);
  long double term = 1.0L;
  for (int k = 1; k <= a; ++k) term *= static_cast<long double>(x) / 2.0L / k;
  long double sum = 0.0L;
  const long double q = static_cast<long double>(x) * x / 4.0L;
  for (int k = 0; k < 400; ++k) {
    sum += term;
    term *= q / ((k + 1.0L) * (k + 1.0L + a));
    if (term < 1e-30L * sum) break;
  }
  return static_cast<double>(sum);
}

struct AiryPair {
  double ai = 0.0;
  double aip = 0.0;
};

/// Classical Ai and Ai' from the Maclaurin series.
inline AiryPair airy_series(double x) {
  const long double c1 = 1.0L / (std::pow(3.0L, 2.0L / 3.0L) * std::tgamma(2.0L / 3.0L));
  const long double c2 = 1.0L / (std::pow(3.0L, 1.0L / 3.0L) * std::tgamma(1.0L / 3.0L));
  if (x == 0.0) return {static_cast<double>(c1), static_cast<double>(-c2)};
  const long double x3 = static_cast<long double>(x) * x * x;
  long double f = 0, g = 0, fp = 0, gp = 0;
  long double tf = 1.0L, tg = x;  // x^{3k}/..., x^{3k+1}/...
  for (int k = 0; k < 120; ++k) {
    f += tf;
    g += tg;
    // derivatives term by term
    if (k > 0) fp += tf * 3.0L * k / x;
    gp += tg * (3.0L * k + 1.0L) / x;
    tf *= x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
    tg *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
  }
  return {static_cast<double>(c1 * f - c2 * g), static_cast<double>(c1 * fp - c2 * gp)};
}

template <class F>
double adaptive_simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                             double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <class F>
double adaptive_simpson(F f, double a, double b, double tol = 1e-13, int max_depth = 40) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Poissonized Plancherel weight e^{-theta^2} (theta^{|lambda|} f_lambda / |lambda|!)^2.
inline double plancherel_probability(const Partition& lambda, double theta) {
  const double f = to_double(Rational(hook_count(lambda)));
  double ratio = f;
  for (int k = 1; k <= lambda.size(); ++k) ratio *= theta / k;
  return std::exp(-theta * theta) * ratio * ratio;
}

}  // namespace multischur::oracle
