#include "multischur/fredholm.hpp"

#include "multischur/errors.hpp"
#include "multischur/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace multischur {

TracyWidom::TracyWidom(int order, FredholmOptions options)
    : kernel_(order), options_(options) {
  if (options_.nodes < 2 || options_.max_nodes < options_.nodes)
    throw ValidationError("invalid Fredholm node counts");
  // A(x, x) = int_x^inf Ai(t)^2 dt is decreasing; walk until it is negligible.
  const int count = kernel_.derivative_count();
  const double step = 0.25;
  double x = 0.0;
  for (;; x += step) {
    const auto d = kernel_.airy().derivatives(x, count);
    const double diag = kernel_.from_derivatives(x, d, x, d);
    if (diag * 4.0 < options_.tail_tolerance) break;
    if (x > 200.0) throw ConvergenceError("Airy kernel diagonal does not decay");
  }
  upper_ = x;
}

double TracyWidom::discretized(double s, double upper, int m) const {
  const QuadratureRule rule = gauss_legendre(m, s, upper);
  const int count = kernel_.derivative_count();
  std::vector<std::vector<double>> d;
  d.reserve(rule.size());
  for (double x : rule.nodes) d.push_back(kernel_.airy().derivatives(x, count));
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int j = i; j < m; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double v = std::sqrt(rule.weights[ui] * rule.weights[uj]) *
                       kernel_.from_derivatives(rule.nodes[ui], d[ui], rule.nodes[uj], d[uj]);
      a(i, j) = -v;
      a(j, i) = -v;
    }
    a(i, i) += 1.0;
  }
  return a.partialPivLu().determinant();
}

FredholmResult TracyWidom::evaluate(double s) const {
  FredholmResult result;
  result.lower = s;
  result.upper = std::max(upper_, s + 1.0);
  int m = options_.nodes;
  double coarse = discretized(s, result.upper, m);
  while (true) {
    const double fine = discretized(s, result.upper, 2 * m);
    result.self_convergence = std::abs(fine - coarse);
    result.nodes = 2 * m;
    result.value = std::clamp(fine, 0.0, 1.0);
    if (result.self_convergence < options_.tolerance) return result;
    m *= 2;
    if (2 * m > options_.max_nodes)
      throw ConvergenceError("F(" + std::to_string(order()) + "; " + std::to_string(s) +
                             ") did not converge: |F_m - F_2m| = " +
                             std::to_string(result.self_convergence));
    coarse = fine;
  }
}

double tracy_widom(int order, double s) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const TracyWidom>> cache;
  std::shared_ptr<const TracyWidom> tw;
  {
    std::lock_guard lock(mutex);
    auto& slot = cache[order];
    if (!slot) slot = std::make_shared<const TracyWidom>(order);
    tw = slot;
  }
  return tw->evaluate(s).value;
}

}  // namespace multischur
