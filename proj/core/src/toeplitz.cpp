#include "multischur/toeplitz.hpp"

#include "multischur/errors.hpp"
#include "multischur/measure.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace multischur {

double toeplitz_det(const LaurentCoefficients& symbol, int dim) {
  if (dim < 0) throw ValidationError("Toeplitz dimension must be non-negative");
  if (dim == 0) return 1.0;
  if (dim - 1 > symbol.max_index())
    throw ValidationError("coefficient window |k| <= " + std::to_string(symbol.max_index()) +
                          " too small for a " + std::to_string(dim) + "x" + std::to_string(dim) +
                          " Toeplitz matrix");
  Eigen::MatrixXd t(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t(i, j) = symbol[j - i];
  return t.partialPivLu().determinant();
}

double toeplitz_length(const Specialization& spec, int l) {
  if (l < 0) return 0.0;
  return toeplitz_det(symbol_coeffs(spec, SymbolFamily::f, std::max(l, 1)), l);
}

double toeplitz_first_part(const Specialization& spec, int l) {
  if (l < 0) return 0.0;
  return toeplitz_det(symbol_coeffs(spec, SymbolFamily::g, std::max(l, 1)), l);
}

GesselReport verify_gessel(const Specialization& spec, int l, int enum_cap) {
  const EnumeratedMeasure measure(spec, enum_cap);
  const double z = std::exp(spec.log_normalizer());
  GesselReport r;
  r.l = l;
  r.enum_cap = enum_cap;
  r.enumeration = z * measure.length_cdf(l);
  r.toeplitz = toeplitz_length(spec, l);
  r.difference = r.toeplitz - r.enumeration;
  r.truncation_tail = z * std::max(0.0, 1.0 - measure.total_mass());
  return r;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

// tr Vt(U + U*) = sum_i (theta_i / i) * 2 Re tr U^i; the g family replaces
// theta_i by -(-1)^i theta_i.
double trace_potential(const Eigen::MatrixXcd& u, const std::vector<double>& weights) {
  Eigen::MatrixXcd power = u;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) power = power * u;
    if (weights[i] != 0.0) acc += 2.0 * weights[i] * power.trace().real();
  }
  return acc;
}

}  // namespace

MonteCarloEstimate haar_expectation_mc(const Specialization& spec, int l, long samples,
                                       std::uint64_t seed, SymbolFamily family, int threads) {
  if (l < 1) throw ValidationError("unitary dimension must be >= 1");
  if (samples < 100) throw ValidationError("need at least 100 Monte Carlo samples");
  if (family != SymbolFamily::f && family != SymbolFamily::g)
    throw ValidationError("Haar expectation is defined for the f and g symbols only");
  std::vector<double> weights(static_cast<std::size_t>(spec.degree()));
  for (int i = 1; i <= spec.degree(); ++i) {
    const double sign = family == SymbolFamily::g ? ((i % 2) ? 1.0 : -1.0) : 1.0;
    weights[static_cast<std::size_t>(i - 1)] = sign * spec.theta(i) / i;
  }

  std::vector<double> values(static_cast<std::size_t>(samples));
  auto run = [&](long begin, long end) {
    for (long s = begin; s < end; ++s) {
      std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
      values[static_cast<std::size_t>(s)] = std::exp(trace_potential(haar_unitary(l, rng), weights));
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    run(0, samples);
  } else {
    std::vector<std::jthread> pool;
    const long chunk = (samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(run, std::min(samples, t * chunk), std::min(samples, (t + 1) * chunk));
  }

  // Merge in sample order so the sum is identical for any thread count.
  double mean = 0.0, m2 = 0.0;
  for (long s = 0; s < samples; ++s) {
    const double x = values[static_cast<std::size_t>(s)];
    const double delta = x - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (x - mean);
  }
  MonteCarloEstimate out;
  out.mean = mean;
  out.samples = samples;
  out.seed = seed;
  out.std_error = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  return out;
}

}  // namespace multischur
