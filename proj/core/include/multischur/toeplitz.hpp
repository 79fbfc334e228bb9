#pragma once

#include "multischur/laurent.hpp"
#include "multischur/specialization.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace multischur {

/// det_{1<=i,j<=dim}[c_{j-i}]; dim = 0 gives 1. Needs |k| <= dim - 1 inside
/// the coefficient window, otherwise ValidationError.
double toeplitz_det(const LaurentCoefficients& symbol, int dim);

/// e^{log Z} P(l(lambda) <= l) through the f symbol (Gessel).
double toeplitz_length(const Specialization& spec, int l);
/// e^{log Z} P(lambda_1 <= l) through the g symbol.
double toeplitz_first_part(const Specialization& spec, int l);

struct GesselReport {
  int l = 0;
  int enum_cap = 0;
  /// sum of s_lambda^2 over l(lambda) <= l, |lambda| <= enum_cap.
  double enumeration = 0.0;
  double toeplitz = 0.0;
  double difference = 0.0;
  /// e^{log Z} times the probability mass beyond the enumeration cap.
  double truncation_tail = 0.0;
};

GesselReport verify_gessel(const Specialization& spec, int l, int enum_cap);

/// Haar-distributed U in U(n): QR of a complex Ginibre matrix with the
/// phases of diag(R) moved into Q.
template <class Rng>
Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = {normal(rng), normal(rng)};
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of E_U[exp tr Vt(U + U*)] (family f) or of
/// E_U[exp tr(-Vt(-U - U*))] (family g) over Haar U in U(l). Sample i draws
/// from its own generator seeded by (seed, i), so the result does not depend
/// on the thread count.
MonteCarloEstimate haar_expectation_mc(const Specialization& spec, int l, long samples,
                                       std::uint64_t seed, SymbolFamily family = SymbolFamily::f,
                                       int threads = 1);

/// SplitMix64 finaliser used to derive per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace multischur
