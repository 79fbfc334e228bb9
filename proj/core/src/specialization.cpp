#include "multischur/specialization.hpp"

#include "multischur/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace multischur {

Specialization::Specialization(std::vector<double> theta) : theta_(std::move(theta)) {
  while (!theta_.empty() && theta_.back() == 0.0) theta_.pop_back();
  for (double t : theta_)
    if (!std::isfinite(t)) throw ValidationError("specialization parameters must be finite");
}

Specialization::Specialization(std::vector<Rational> theta) {
  while (!theta.empty() && theta.back() == 0) theta.pop_back();
  theta_.reserve(theta.size());
  for (const auto& t : theta) theta_.push_back(to_double(t));
  exact_ = std::move(theta);
}

double Specialization::theta(int i) const {
  if (i < 1 || i > degree()) return 0.0;
  return theta_[static_cast<std::size_t>(i - 1)];
}

const std::vector<Rational>& Specialization::exact_thetas() const {
  if (!exact_) throw ValidationError("specialization has no exact (rational) representation");
  return *exact_;
}

double Specialization::log_normalizer() const {
  double sum = 0.0;
  for (int i = 1; i <= degree(); ++i) sum += theta(i) * theta(i) / i;
  return sum;
}

double Specialization::l1_norm() const {
  double sum = 0.0;
  for (double t : theta_) sum += std::abs(t);
  return sum;
}

Specialization omega_involution(const Specialization& spec) {
  if (spec.is_exact()) {
    std::vector<Rational> flipped = spec.exact_thetas();
    for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    return Specialization(std::move(flipped));
  }
  std::vector<double> flipped(spec.thetas().begin(), spec.thetas().end());
  for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
  return Specialization(std::move(flipped));
}

namespace {

template <class T, class ThetaAt>
std::vector<T> h_recurrence(int degree, ThetaAt theta_at, int max_k) {
  if (max_k < 0) throw ValidationError("max_k must be non-negative");
  std::vector<T> h(static_cast<std::size_t>(max_k) + 1, T(0));
  h[0] = T(1);
  for (int k = 1; k <= max_k; ++k) {
    T acc(0);
    for (int i = 1; i <= std::min(k, degree); ++i)
      acc += theta_at(i) * h[static_cast<std::size_t>(k - i)];
    h[static_cast<std::size_t>(k)] = acc / T(k);
  }
  return h;
}

}  // namespace

std::vector<double> h_series(const Specialization& spec, int max_k) {
  return h_recurrence<double>(spec.degree(), [&](int i) { return spec.theta(i); }, max_k);
}

std::vector<Rational> h_series_exact(const Specialization& spec, int max_k) {
  const auto& theta = spec.exact_thetas();
  return h_recurrence<Rational>(
      spec.degree(), [&](int i) { return theta[static_cast<std::size_t>(i - 1)]; }, max_k);
}

JacobiTrudi::JacobiTrudi(const Specialization& spec, int max_index)
    : h_(h_series(spec, max_index)) {}

double JacobiTrudi::operator()(const Partition& lambda) const {
  const int l = lambda.length();
  if (l == 0) return 1.0;
  if (lambda.first() + l - 1 > max_index())
    throw ValidationError("Jacobi-Trudi table too small for partition " + lambda.to_string());
  Eigen::MatrixXd m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int index = lambda[static_cast<std::size_t>(i)] - i + j;
      m(i, j) = index < 0 ? 0.0 : h_[static_cast<std::size_t>(index)];
    }
  return m.partialPivLu().determinant();
}

double schur_value(const Partition& lambda, const Specialization& spec) {
  return JacobiTrudi(spec, lambda.first() + lambda.length())(lambda);
}

Rational schur_value_exact(const Partition& lambda, const Specialization& spec) {
  const int l = lambda.length();
  if (l == 0) return Rational(1);
  const auto h = h_series_exact(spec, lambda.first() + l);
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(l),
                                       std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int index = lambda[static_cast<std::size_t>(i)] - i + j;
      m[i][j] = index < 0 ? Rational(0) : h[static_cast<std::size_t>(index)];
    }
  // Bareiss: after step k, m[i][j] (i, j > k) is the (k+1)-order leading minor
  // bordered by row i and column j, and the division by the previous pivot is exact.
  Rational previous(1);
  int sign = 1;
  for (int k = 0; k < l - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < l; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Rational(0);
      std::swap(m[k], m[static_cast<std::size_t>(swap)]);
      sign = -sign;
    }
    for (int i = k + 1; i < l; ++i) {
      for (int j = k + 1; j < l; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[l - 1][l - 1];
}

std::complex<double> potential_V(const Specialization& spec, std::complex<double> z) {
  // Horner on sum_i (theta_i / i) z^i.
  std::complex<double> acc = 0.0;
  for (int i = spec.degree(); i >= 1; --i) acc = (acc + spec.theta(i) / i) * z;
  return acc;
}

namespace {

// Coefficients of P_i with P_i(z + 1/z) = z^i + z^{-i} (P_0 = 2 is never used).
template <class T>
std::vector<std::vector<T>> chebyshev_like(int degree) {
  std::vector<std::vector<T>> p(static_cast<std::size_t>(degree) + 1);
  p[0] = {T(2)};
  if (degree >= 1) p[1] = {T(0), T(1)};
  for (int i = 2; i <= degree; ++i) {
    std::vector<T> next(static_cast<std::size_t>(i) + 1, T(0));
    for (std::size_t k = 0; k < p[i - 1].size(); ++k) next[k + 1] += p[i - 1][k];
    for (std::size_t k = 0; k < p[i - 2].size(); ++k) next[k] -= p[i - 2][k];
    p[static_cast<std::size_t>(i)] = std::move(next);
  }
  return p;
}

template <class T, class ThetaAt>
std::vector<T> tilde_v(int degree, ThetaAt theta_at) {
  const auto p = chebyshev_like<T>(degree);
  std::vector<T> out(static_cast<std::size_t>(degree) + 1, T(0));
  for (int i = 1; i <= degree; ++i) {
    const T scale = theta_at(i) / T(i);
    for (std::size_t k = 0; k < p[i].size(); ++k) out[k] += scale * p[i][k];
  }
  if (out.empty()) out.push_back(T(0));
  return out;
}

}  // namespace

std::vector<double> tilde_V_poly(const Specialization& spec) {
  return tilde_v<double>(spec.degree(), [&](int i) { return spec.theta(i); });
}

std::vector<Rational> tilde_V_poly_exact(const Specialization& spec) {
  const auto& theta = spec.exact_thetas();
  return tilde_v<Rational>(spec.degree(),
                           [&](int i) { return theta[static_cast<std::size_t>(i - 1)]; });
}

double evaluate_polynomial(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace multischur
