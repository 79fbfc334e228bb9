#include "multischur/airy.hpp"

#include "multischur/errors.hpp"
#include "multischur/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace multischur {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kNegligible = 50.0;  // e^{-50} is below every tolerance we use
constexpr int kPanelOrder = 20;

void check_order(int order) {
  if (order < 3 || order % 2 == 0)
    throw ValidationError("Airy order must be odd and at least 3, got " + std::to_string(order));
}

// Radius past which r^p exp(-r^N/N + a r) < e^{-kNegligible}.
double ray_extent(int big_n, double a, int power) {
  double r = 0.05;
  auto log_mag = [&](double t) {
    return -std::pow(t, big_n) / big_n + a * t + power * std::log(std::max(t, 1.0));
  };
  // walk past the maximum, then until the integrand is negligible
  while (r < 100.0 && !(log_mag(r) < -kNegligible && log_mag(r + 0.05) < log_mag(r))) r += 0.05;
  if (r >= 100.0) throw ConvergenceError("Airy ray integrand does not decay");
  return r;
}

QuadratureRule ray_rule(double extent, double frequency) {
  const double h = std::min(0.1, 1.5 / (1.0 + frequency));
  const int panels = std::max(1, static_cast<int>(std::ceil(extent / h)));
  return composite_gauss_legendre(0.0, extent, panels, kPanelOrder);
}

// Solves the ODE for orders past the ones computed by quadrature.
void extend_by_ode(std::vector<double>& d, int n, int sign, double x, int count) {
  const int top = 2 * n;
  d.resize(static_cast<std::size_t>(count));
  for (int k = top + 1; k < count; ++k) {
    const int j = k - top;
    d[static_cast<std::size_t>(k)] =
        sign * (x * d[static_cast<std::size_t>(j)] + j * d[static_cast<std::size_t>(j - 1)]);
  }
}

}  // namespace

AiryFunction::AiryFunction(int order) : order_(order) {
  check_order(order);
  sign_ = (n() % 2 == 1) ? 1 : -1;
  angle_ = kPi / 2.0 - kPi / (2.0 * order);
  // sign * exp(i N angle) = -1 makes the leading exponent real and negative
  const double c = sign_ * std::cos(order_ * angle_);
  if (c > -0.5) throw Error("no admissible Airy ray angle");
}

std::vector<double> AiryFunction::derivatives(double x, int count) const {
  if (count < 1) return {};
  const int direct = std::min(count, 2 * n() + 1);
  const cplx e = std::polar(1.0, angle_);
  const double extent = ray_extent(order_, -x * std::cos(angle_), direct - 1);
  const QuadratureRule rule = ray_rule(extent, std::abs(x) * std::sin(angle_));
  std::vector<cplx> acc(static_cast<std::size_t>(direct), cplx(0.0));
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double r = rule.nodes[k];
    const cplx zeta = r * e;
    cplx term = rule.weights[k] * e * std::exp(-std::pow(r, order_) / order_ - x * zeta);
    for (int j = 0; j < direct; ++j) {
      acc[static_cast<std::size_t>(j)] += term;
      term *= -zeta;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(direct));
  for (int j = 0; j < direct; ++j) out[static_cast<std::size_t>(j)] = acc[static_cast<std::size_t>(j)].imag() / kPi;
  if (count > direct) extend_by_ode(out, n(), sign_, x, count);
  return out;
}

double AiryFunction::operator()(double x, int deriv) const {
  if (deriv < 0 || deriv > 2 * n())
    throw ValidationError("derivative order must lie in [0, 2n]");
  return derivatives(x, deriv + 1)[static_cast<std::size_t>(deriv)];
}

std::string to_string(KernelRepresentation rep) {
  switch (rep) {
    case KernelRepresentation::contour: return "contour";
    case KernelRepresentation::product_integral: return "product_integral";
    case KernelRepresentation::derivative_sum: return "derivative_sum";
  }
  return "?";
}

KernelRepresentation parse_kernel_representation(std::string_view text) {
  if (text == "contour") return KernelRepresentation::contour;
  if (text == "product_integral" || text == "product-integral") return KernelRepresentation::product_integral;
  if (text == "derivative_sum" || text == "derivative-sum") return KernelRepresentation::derivative_sum;
  throw ValidationError("unknown kernel representation: " + std::string(text));
}

AiryKernel::AiryKernel(int order) : airy_(order) {}

double AiryKernel::decay_cutoff() const {
  // |Ai_{2n+1}(x)| ~ exp(-c x^{(2n+1)/(2n)}) for large x
  const int n = airy_.n();
  const double c = std::sin(kPi / (2.0 * n)) * (2.0 * n) / (2.0 * n + 1.0);
  return std::pow(40.0 / c, (2.0 * n) / (2.0 * n + 1.0));
}

double AiryKernel::from_derivatives(double x, std::span<const double> dx, double y,
                                    std::span<const double> dy) const {
  const int n = airy_.n();
  const int s = airy_.sign();
  const double h = y - x;
  if (std::abs(h) >= kDiagonalSwitch) {
    double num = 0.0;
    for (int i = 0; i < 2 * n; ++i) {
      const double term = dx[static_cast<std::size_t>(i)] * dy[static_cast<std::size_t>(2 * n - 1 - i)];
      num += (i % 2 == 0) ? term : -term;
    }
    return s * num / (x - y);
  }
  if (static_cast<int>(dx.size()) < derivative_count())
    throw ValidationError("derivative table too short for the diagonal expansion");
  // A(x, x+h) = -sum_k h^{k-1}/k! d_y^k N(x, y)|_{y=x}
  double value = 0.0;
  double scale = 1.0;
  for (int k = 1; k <= 4; ++k) {
    scale *= (k == 1) ? 1.0 : h / k;
    double dk = 0.0;
    for (int i = 0; i < 2 * n; ++i) {
      const double term = dx[static_cast<std::size_t>(i)] * dx[static_cast<std::size_t>(2 * n - 1 - i + k)];
      dk += (i % 2 == 0) ? term : -term;
    }
    value -= scale * s * dk;
  }
  return value;
}

Eigen::MatrixXd AiryKernel::matrix(std::span<const double> xs, std::span<const double> ys,
                                   KernelRepresentation rep) const {
  switch (rep) {
    case KernelRepresentation::product_integral: return product_integral(xs, ys);
    case KernelRepresentation::contour: return contour(xs, ys);
    case KernelRepresentation::derivative_sum: break;
  }
  const int count = derivative_count();
  std::vector<std::vector<double>> dx, dy;
  for (double x : xs) dx.push_back(airy_.derivatives(x, count));
  for (double y : ys) dy.push_back(airy_.derivatives(y, count));
  Eigen::MatrixXd out(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          from_derivatives(xs[i], dx[i], ys[j], dy[j]);
  return out;
}

double AiryKernel::operator()(double x, double y, KernelRepresentation rep) const {
  const double xs[1] = {x};
  const double ys[1] = {y};
  return matrix(xs, ys, rep)(0, 0);
}

Eigen::MatrixXd AiryKernel::product_integral(std::span<const double> xs,
                                             std::span<const double> ys) const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
  if (xs.empty() || ys.empty()) return out;
  const double lowest = std::min(*std::min_element(xs.begin(), xs.end()),
                                 *std::min_element(ys.begin(), ys.end()));
  const double length = std::max(1.0, decay_cutoff() - lowest);
  const int panels = static_cast<int>(std::ceil(length / 0.5));
  const QuadratureRule rule = composite_gauss_legendre(0.0, length, panels, kPanelOrder);
  auto table = [&](std::span<const double> pts) {
    Eigen::MatrixXd t(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(rule.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t k = 0; k < rule.size(); ++k)
        t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
            airy_.derivatives(pts[i] + rule.nodes[k], 1)[0];
    return t;
  };
  const Eigen::MatrixXd ax = table(xs);
  const Eigen::MatrixXd ay = (xs.data() == ys.data() && xs.size() == ys.size()) ? ax : table(ys);
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), static_cast<Eigen::Index>(rule.size()));
  out = ax * w.asDiagonal() * ay.transpose();
  return out;
}

Eigen::MatrixXd AiryKernel::contour(std::span<const double> xs, std::span<const double> ys) const {
  const int big_n = order();
  const int s = airy_.sign();
  const double delta = 0.5;
  const double phi = airy_.ray_angle();
  const double psi = kPi / 2.0 + kPi / (2.0 * big_n);
  double lo = 0.0, hi = 0.0;
  for (double v : xs) { lo = std::min(lo, v); hi = std::max(hi, std::abs(v)); }
  for (double v : ys) { lo = std::min(lo, v); hi = std::max(hi, std::abs(v)); }
  const double extent = ray_extent(big_n, std::abs(lo) + 2.0 * delta, 0) + 1.0;
  const QuadratureRule rule = ray_rule(extent, hi);

  // nodes and oriented weights of the two up-oriented contours
  std::vector<cplx> zeta, wz, omega, wo;
  for (int side : {-1, 1}) {
    const cplx ez = std::polar(1.0, side * phi);
    const cplx eo = std::polar(1.0, side * psi);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const double r = rule.nodes[k];
      zeta.push_back(delta + r * ez);
      wz.push_back(side * rule.weights[k] * ez);
      omega.push_back(-delta + r * eo);
      wo.push_back(side * rule.weights[k] * eo);
    }
  }
  const auto nz = static_cast<Eigen::Index>(zeta.size());
  const auto no = static_cast<Eigen::Index>(omega.size());
  Eigen::MatrixXcd cauchy(nz, no);
  for (Eigen::Index a = 0; a < nz; ++a)
    for (Eigen::Index b = 0; b < no; ++b)
      cauchy(a, b) = 1.0 / (zeta[static_cast<std::size_t>(a)] - omega[static_cast<std::size_t>(b)]);

  Eigen::MatrixXcd fx(static_cast<Eigen::Index>(xs.size()), nz);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (Eigen::Index a = 0; a < nz; ++a) {
      const cplx z = zeta[static_cast<std::size_t>(a)];
      fx(static_cast<Eigen::Index>(i), a) =
          wz[static_cast<std::size_t>(a)] * std::exp(double(s) * std::pow(z, big_n) / double(big_n) - xs[i] * z);
    }
  Eigen::MatrixXcd gy(static_cast<Eigen::Index>(ys.size()), no);
  for (std::size_t j = 0; j < ys.size(); ++j)
    for (Eigen::Index b = 0; b < no; ++b) {
      const cplx w = omega[static_cast<std::size_t>(b)];
      gy(static_cast<Eigen::Index>(j), b) =
          wo[static_cast<std::size_t>(b)] * std::exp(-double(s) * std::pow(w, big_n) / double(big_n) + ys[j] * w);
    }
  // (1/(2 pi i))^2 = -1/(4 pi^2)
  const Eigen::MatrixXcd value = fx * cauchy * gy.transpose();
  return -value.real() / (4.0 * kPi * kPi);
}

}  // namespace multischur
