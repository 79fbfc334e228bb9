#include "multischur/sampler.hpp"

#include "multischur/errors.hpp"
#include "multischur/toeplitz.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace multischur {

namespace {

struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  int clamped = 0;
};

Spectrum window_spectrum(const DiscreteKernel& kernel, SampleWindow w) {
  const DiscreteKernelMatrix k = kernel.window(w.lo, w.hi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k.values);
  if (solver.info() != Eigen::Success) throw ConvergenceError("window kernel eigendecomposition failed");
  Spectrum s{solver.eigenvalues(), solver.eigenvectors(), 0};
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    double& v = s.values(i);
    if (v < -1e-8 || v > 1.0 + 1e-8)
      throw Error("window kernel eigenvalue " + std::to_string(v) + " outside [0, 1]");
    if (v < 0.0 || v > 1.0) {
      v = std::clamp(v, 0.0, 1.0);
      ++s.clamped;
    }
  }
  return s;
}

// Sequential sampling of the projection process spanned by the columns of v
// (orthonormal). Returns row indices.
std::vector<int> sample_projection(const Eigen::MatrixXd& v, std::mt19937_64& rng) {
  const Eigen::Index rows = v.rows();
  const Eigen::Index k = v.cols();
  std::vector<int> out;
  if (k == 0) return out;
  Eigen::VectorXd residual = v.rowwise().squaredNorm();
  Eigen::MatrixXd basis(k, k);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (Eigen::Index step = 0; step < k; ++step) {
    double total = 0.0;
    for (Eigen::Index x = 0; x < rows; ++x) total += std::max(residual(x), 0.0);
    double target = unif(rng) * total;
    Eigen::Index pick = rows - 1;
    for (Eigen::Index x = 0; x < rows; ++x) {
      target -= std::max(residual(x), 0.0);
      if (target <= 0.0) { pick = x; break; }
    }
    out.push_back(static_cast<int>(pick));
    Eigen::VectorXd e = v.row(pick).transpose();
    for (Eigen::Index j = 0; j < step; ++j) e -= basis.col(j).dot(e) * basis.col(j);
    const double norm = e.norm();
    if (norm <= 0.0) break;
    basis.col(step) = e / norm;
    const Eigen::VectorXd proj = v * basis.col(step);
    residual -= proj.cwiseAbs2();
    residual(pick) = 0.0;
  }
  return out;
}

struct Draw {
  Partition lambda;
  long rejected = 0;
  int selected = 0;
};

Draw draw_one(const Spectrum& spec, SampleWindow w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Eigen::Index size = spec.values.size();
  // Sample the complement process when it has fewer points.
  const double mean = spec.values.sum();
  const bool holes = mean > 0.5 * static_cast<double>(size);
  Draw d;
  for (long attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Eigen::Index> chosen;
    for (Eigen::Index i = 0; i < size; ++i) {
      const double p = holes ? 1.0 - spec.values(i) : spec.values(i);
      if (unif(rng) < p) chosen.push_back(i);
    }
    Eigen::MatrixXd v(size, static_cast<Eigen::Index>(chosen.size()));
    for (std::size_t c = 0; c < chosen.size(); ++c) v.col(static_cast<Eigen::Index>(c)) = spec.vectors.col(chosen[c]);
    const std::vector<int> rows = sample_projection(v, rng);
    std::vector<char> occupied(static_cast<std::size_t>(size), holes ? 1 : 0);
    for (int r : rows) occupied[static_cast<std::size_t>(r)] = holes ? 0 : 1;
    FermionicSet set;
    set.window_low = w.lo;
    for (Eigen::Index i = size - 1; i >= 0; --i)
      if (occupied[static_cast<std::size_t>(i)]) set.elements.push_back(w.lo + static_cast<int>(i));
    d.selected = holes ? static_cast<int>(size - static_cast<Eigen::Index>(chosen.size()))
                       : static_cast<int>(chosen.size());
    if (static_cast<int>(set.elements.size()) == -w.lo) {
      try {
        d.lambda = partition_from_set(set);
        return d;
      } catch (const ValidationError&) {
      }
    }
    ++d.rejected;
  }
  throw ConvergenceError("sampler window leaks on every draw; enlarge the window");
}

}  // namespace

SampleWindow auto_window(const MulticriticalParams& params, int margin) {
  const double theta = params.theta_value();
  const double q = 2.0 * params.n + 1.0;
  const double spread = 4.0 * std::pow(to_double(params.d) * theta, 1.0 / q);
  SampleWindow w;
  w.lo = static_cast<int>(std::floor(-to_double(params.left_b()) * theta - spread)) - margin;
  w.hi = static_cast<int>(std::ceil(to_double(params.b) * theta + spread)) + margin;
  return w;
}

SampleBatch sample(const Specialization& spec, SampleWindow window, long count, std::uint64_t seed,
                   int threads) {
  if (count < 0) throw ValidationError("sample count must be nonnegative");
  if (window.lo >= 0 || window.hi < window.lo) throw ValidationError("sample window must contain negative sites");
  const DiscreteKernel kernel(spec);
  const Spectrum spectrum = window_spectrum(kernel, window);
  std::vector<Draw> draws(static_cast<std::size_t>(count));
  auto run = [&](long from, long to) {
    for (long i = from; i < to; ++i)
      draws[static_cast<std::size_t>(i)] = draw_one(spectrum, window, mix_seed(seed, static_cast<std::uint64_t>(i)));
  };
  threads = std::max(1, threads);
  if (threads == 1 || count < 2) {
    run(0, count);
  } else {
    std::vector<std::jthread> pool;
    const long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(run, std::min(count, t * chunk), std::min(count, (t + 1) * chunk));
  }
  SampleBatch batch;
  batch.spec = spec;
  batch.window = window;
  batch.seed = seed;
  batch.clamped_eigenvalues = spectrum.clamped;
  batch.partitions.reserve(draws.size());
  double mean = 0.0, m2 = 0.0;
  long k = 0;
  for (const Draw& d : draws) {
    batch.partitions.push_back(d.lambda);
    batch.rejected += d.rejected;
    ++k;
    const double delta = d.selected - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (d.selected - mean);
  }
  batch.mean_selected = mean;
  batch.var_selected = k > 1 ? m2 / static_cast<double>(k - 1) : 0.0;
  return batch;
}

SampleBatch sample(const MulticriticalParams& params, long count, std::uint64_t seed,
                   SamplerOptions options) {
  const SampleWindow w = options.window.value_or(auto_window(params));
  SampleBatch batch = sample(params.spec(), w, count, seed, options.threads);
  batch.params = params;
  return batch;
}

EmpiricalEdgeCdf::EmpiricalEdgeCdf(const SampleBatch& batch, EdgeStatistic statistic,
                                   ScalingConvention convention) {
  if (batch.params) {
    scaling_ = edge_scaling(*batch.params, statistic, convention);
  }
  values_.reserve(batch.partitions.size());
  for (const Partition& p : batch.partitions)
    values_.push_back(statistic == EdgeStatistic::lambda1 ? p.first() : p.length());
  std::sort(values_.begin(), values_.end());
}

double EmpiricalEdgeCdf::at(int l) const {
  if (values_.empty()) throw ValidationError("empty sample batch");
  const auto it = std::upper_bound(values_.begin(), values_.end(), l);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double EmpiricalEdgeCdf::operator()(double s) const {
  return at(static_cast<int>(std::floor(scaling_.center + s * scaling_.scale)));
}

std::vector<double> EmpiricalEdgeCdf::rescaled() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (int v : values_) out.push_back((v - scaling_.center) / scaling_.scale);
  return out;
}

EmpiricalEdgeCdf empirical_edge_cdf(const SampleBatch& batch, EdgeStatistic statistic,
                                    ScalingConvention convention) {
  return EmpiricalEdgeCdf(batch, statistic, convention);
}

}  // namespace multischur
