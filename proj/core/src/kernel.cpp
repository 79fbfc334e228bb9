#include "multischur/kernel.hpp"

#include "multischur/errors.hpp"

#include <algorithm>
#include <cmath>

namespace multischur {

namespace {

constexpr double kKappaDecayTarget = 1e-14;
constexpr int kMaxKappaIndex = 1 << 18;

LaurentCoefficients kappa_table(const Specialization& spec) {
  // Past |m| ~ max |Phi'| <= 2 sum |theta_i| the coefficients of e^{i Phi}
  // decay superexponentially; the cube-root margin covers the Airy-type
  // transition region.
  const double spread = 2.0 * spec.l1_norm();
  int max_index = static_cast<int>(std::ceil(spread + 10.0 * std::cbrt(spread) + 30.0));
  while (true) {
    LaurentCoefficients kappa = symbol_coeffs(spec, SymbolFamily::kappa, max_index);
    if (kappa.decay_report() < kKappaDecayTarget) return kappa;
    if (max_index >= kMaxKappaIndex)
      throw ConvergenceError("kappa coefficients do not decay inside |m| <= " +
                             std::to_string(max_index));
    max_index *= 2;
  }
}

}  // namespace

DiscreteKernel::DiscreteKernel(const Specialization& spec)
    : spec_(spec), kappa_(kappa_table(spec)) {
  const int m = kappa_.max_index();
  // Index a in [-M-1, M]; tail_[a + M + 1] = sum_{j > a} kappa_j^2.
  tail_.assign(static_cast<std::size_t>(2 * m + 2), 0.0);
  for (int a = m - 1; a >= -m - 1; --a) {
    const double next = kappa_at(a + 1);
    tail_[static_cast<std::size_t>(a + m + 1)] = tail_[static_cast<std::size_t>(a + m + 2)] + next * next;
  }
  trace_tail_.assign(tail_.size() + 1, 0.0);
  for (std::size_t i = tail_.size(); i-- > 0;) trace_tail_[i] = trace_tail_[i + 1] + tail_[i];
}

double DiscreteKernel::tail_squares(int a) const {
  const int m = kappa_.max_index();
  if (a >= m) return 0.0;
  if (a < -m - 1) a = -m - 1;
  return tail_[static_cast<std::size_t>(a + m + 1)];
}

double DiscreteKernel::trace_tail(int a) const {
  const int m = kappa_.max_index();
  if (a >= m) return 0.0;
  if (a < -m - 1) {
    // Every site below the table is occupied with probability ~1.
    return trace_tail_[0] + static_cast<double>(-m - 1 - a) * tail_[0];
  }
  return trace_tail_[static_cast<std::size_t>(a + m + 1)];
}

int DiscreteKernel::truncation_radius(double tolerance) const {
  int r = kappa_.max_index();
  while (r > -kappa_.max_index() - 1 && trace_tail(r - 1) < tolerance) --r;
  return r;
}

double DiscreteKernel::entry(int a, int b) const {
  const int m = kappa_.max_index();
  if (a == b) {
    // Both branches reduce to tail sums on the diagonal.
    if (a >= 0) return tail_squares(a);
    return 1.0 - (tail_squares(-m - 1) - tail_squares(a));
  }
  const int low = std::min(a, b);
  const int high = std::max(a, b);
  double sum = 0.0;
  if (a + b >= 0) {
    const int j_from = std::max(1, -m - low);
    const int j_to = m - high;
    for (int j = j_from; j <= j_to; ++j) sum += kappa_at(a + j) * kappa_at(b + j);
    return sum;
  }
  // Below the origin use sum_{j in Z} kappa_{a+j} kappa_{b+j} = delta_{ab}.
  const int j_from = -m - low;
  const int j_to = std::min(0, m - high);
  for (int j = j_from; j <= j_to; ++j) sum += kappa_at(a + j) * kappa_at(b + j);
  return -sum;
}

DiscreteKernelMatrix DiscreteKernel::window(int lo, int hi) const {
  if (hi < lo) throw ValidationError("kernel window must be non-empty");
  const int w = hi - lo + 1;
  DiscreteKernelMatrix out;
  out.lo = lo;
  out.hi = hi;
  out.values.resize(w, w);
  for (int t = 0; t < w; ++t) {
    out.values(w - 1, t) = entry(hi, lo + t);
    out.values(t, w - 1) = out.values(w - 1, t);
  }
  // K(a, b) = K(a+1, b+1) + kappa_{a+1} kappa_{b+1}, swept from the last row/column.
  for (int i = w - 2; i >= 0; --i)
    for (int j = w - 2; j >= i; --j) {
      const double v = out.values(i + 1, j + 1) + kappa_at(lo + i + 1) * kappa_at(lo + j + 1);
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  out.truncation_tail = trace_tail(hi + 1);
  return out;
}

WindowDeterminant determinant_one_minus(const Eigen::MatrixXd& k) {
  WindowDeterminant out;
  if (k.rows() == 0) return out;
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(k.rows(), k.cols()) - k;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
  const Eigen::VectorXd pivots = ldlt.vectorD();
  if (ldlt.info() == Eigen::Success && pivots.minCoeff() >= -1e-10) {
    double det = 1.0;
    for (Eigen::Index i = 0; i < pivots.size(); ++i) det *= pivots[i];
    out.value = det;
    return out;
  }
  out.psd_violation = true;
  out.value = a.partialPivLu().determinant();
  return out;
}

GapResult gap_probability_detail(const DiscreteKernel& kernel, int l) {
  GapResult out;
  if (l < 0) {
    out.value = 0.0;
    out.impossible = true;
    return out;
  }
  const int r = std::max(kernel.truncation_radius(), l + 1);
  const DiscreteKernelMatrix k = kernel.window(l, r - 1);
  const WindowDeterminant det = determinant_one_minus(k.values);
  out.value = std::clamp(det.value, 0.0, 1.0);
  out.psd_violation = det.psd_violation;
  out.window_lo = l;
  out.window_hi = r - 1;
  out.truncation_tail = k.truncation_tail;
  return out;
}

double gap_probability(const DiscreteKernel& kernel, int l) {
  return gap_probability_detail(kernel, l).value;
}

double gap_probability(const Specialization& spec, int l) {
  if (l < 0) return 0.0;
  return gap_probability(DiscreteKernel(spec), l);
}

double length_cdf(const Specialization& spec, int l) {
  return gap_probability(omega_involution(spec), l);
}

double correlation(const DiscreteKernel& kernel, std::span<const int> sites) {
  const auto w = static_cast<Eigen::Index>(sites.size());
  Eigen::MatrixXd m(w, w);
  for (Eigen::Index i = 0; i < w; ++i)
    for (Eigen::Index j = 0; j < w; ++j)
      m(i, j) = kernel.entry(sites[static_cast<std::size_t>(i)], sites[static_cast<std::size_t>(j)]);
  return w == 0 ? 1.0 : m.partialPivLu().determinant();
}

std::string to_string(EdgeStatistic statistic) {
  return statistic == EdgeStatistic::lambda1 ? "lambda1" : "length";
}

EdgeStatistic parse_edge_statistic(std::string_view text) {
  if (text == "lambda1" || text == "first") return EdgeStatistic::lambda1;
  if (text == "length" || text == "ell") return EdgeStatistic::length;
  throw ValidationError("unknown statistic '" + std::string(text) + "' (expected lambda1 or length)");
}

std::string to_string(ScalingConvention convention) {
  return convention == ScalingConvention::theta_over_d ? "theta_over_d" : "theta_times_d";
}

ScalingConvention parse_scaling_convention(std::string_view text) {
  if (text == "theta_over_d" || text == "theta-over-d") return ScalingConvention::theta_over_d;
  if (text == "theta_times_d" || text == "theta-times-d") return ScalingConvention::theta_times_d;
  throw ValidationError("unknown scaling convention '" + std::string(text) + "'");
}

EdgeScaling edge_scaling(const MulticriticalParams& params, EdgeStatistic statistic,
                         ScalingConvention convention) {
  const double theta = params.theta_value();
  if (!(theta > 0)) throw ValidationError("edge scaling needs theta > 0");
  const bool left_generic = statistic == EdgeStatistic::length && params.kind == MeasureKind::odd_even;
  const double b = to_double(left_generic ? params.left_b() : params.b);
  const double d = to_double(left_generic ? params.left_d() : params.d);
  EdgeScaling out;
  out.exponent_denominator = left_generic ? 3 : 2 * params.n + 1;
  const double base = convention == ScalingConvention::theta_over_d ? theta / d : theta * d;
  out.center = b * theta;
  out.scale = std::pow(base, 1.0 / out.exponent_denominator);
  return out;
}

EdgeCdf edge_scaled_cdf(const DiscreteKernel& kernel, const MulticriticalParams& params,
                        EdgeStatistic statistic, double s, ScalingConvention convention) {
  const EdgeScaling scaling = edge_scaling(params, statistic, convention);
  EdgeCdf out;
  out.l = static_cast<int>(std::floor(scaling.center + s * scaling.scale));
  if (out.l < 0) {
    out.below_zero = true;
    out.value = 0.0;
    return out;
  }
  out.value = gap_probability(kernel, out.l);
  return out;
}

EdgeCdf edge_scaled_cdf(const MulticriticalParams& params, EdgeStatistic statistic, double s,
                        ScalingConvention convention) {
  const Specialization spec = statistic == EdgeStatistic::length ? omega_involution(params.spec())
                                                                 : params.spec();
  return edge_scaled_cdf(DiscreteKernel(spec), params, statistic, s, convention);
}

}  // namespace multischur
