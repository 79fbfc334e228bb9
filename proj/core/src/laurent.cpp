#include "multischur/laurent.hpp"

#include "multischur/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace multischur {

std::string to_string(SymbolFamily family) {
  switch (family) {
    case SymbolFamily::h: return "h";
    case SymbolFamily::f: return "f";
    case SymbolFamily::g: return "g";
    case SymbolFamily::kappa: return "kappa";
  }
  return "?";
}

LaurentCoefficients::LaurentCoefficients(SymbolFamily family, int max_index,
                                         std::vector<double> values)
    : family_(family), max_index_(max_index), values_(std::move(values)) {
  if (max_index < 0 || values_.size() != static_cast<std::size_t>(2 * max_index + 1))
    throw ValidationError("Laurent table size does not match its index window");
}

double LaurentCoefficients::decay_report() const {
  const int outer = std::max(1, max_index_ / 10);
  double worst = 0.0;
  for (int m = max_index_ - outer + 1; m <= max_index_; ++m)
    worst = std::max({worst, std::abs((*this)[m]), std::abs((*this)[-m])});
  return worst;
}

double LaurentCoefficients::sum_of_squares() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s;
}

LaurentCoefficients h_coeffs(const Specialization& spec, int max_k) {
  const auto h = h_series(spec, max_k);
  std::vector<double> values(static_cast<std::size_t>(2 * max_k + 1), 0.0);
  std::copy(h.begin(), h.end(), values.begin() + max_k);
  return LaurentCoefficients(SymbolFamily::h, max_k, std::move(values));
}

namespace {

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

// Logarithm of the symbol at e^{i phi}; only the f, g, kappa families.
std::complex<double> log_symbol(const Specialization& spec, SymbolFamily family, double phi) {
  double re = 0.0, im = 0.0;
  for (int j = 1; j <= spec.degree(); ++j) {
    const double t = spec.theta(j) / j;
    switch (family) {
      case SymbolFamily::f: re += 2.0 * t * std::cos(j * phi); break;
      case SymbolFamily::g: re -= 2.0 * t * ((j % 2) ? -1.0 : 1.0) * std::cos(j * phi); break;
      case SymbolFamily::kappa: im += 2.0 * t * std::sin(j * phi); break;
      case SymbolFamily::h: break;
    }
  }
  return {re, im};
}

// Coefficients c_{-max_index..max_index} from N uniform samples.
std::vector<double> sampled_coefficients(const Specialization& spec, SymbolFamily family,
                                         int max_index, int n) {
  std::unique_ptr<fftw_complex[], FftwFree> buffer(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(n))));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, buffer.get(), buffer.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (int j = 0; j < n; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / n;
    const std::complex<double> value = std::exp(log_symbol(spec, family, phi));
    buffer[j][0] = value.real();
    buffer[j][1] = value.imag();
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<double> out(static_cast<std::size_t>(2 * max_index + 1));
  for (int m = -max_index; m <= max_index; ++m) {
    const int slot = ((m % n) + n) % n;
    out[static_cast<std::size_t>(m + max_index)] = buffer[slot][0] / n;
  }
  return out;
}

int next_power_of_two(long long v) {
  int p = 1;
  while (p < v && p < kMaxSymbolSamples) p <<= 1;
  return p;
}

}  // namespace

LaurentCoefficients symbol_coeffs(const Specialization& spec, SymbolFamily family, int max_index,
                                  double tolerance) {
  if (max_index < 0) throw ValidationError("max_index must be non-negative");
  if (family == SymbolFamily::h) return h_coeffs(spec, max_index);

  const double spread = std::ceil(6.0 * spec.degree() * spec.l1_norm());
  int n = std::max(64, next_power_of_two(8LL * (max_index + static_cast<long long>(spread))));
  std::vector<double> previous = sampled_coefficients(spec, family, max_index, n);
  double change = 0.0;
  while (true) {
    if (2LL * n > kMaxSymbolSamples) {
      LaurentCoefficients partial(family, max_index, std::move(previous));
      std::ostringstream msg;
      msg << "symbol coefficients (" << to_string(family) << ") did not stabilise below "
          << kMaxSymbolSamples << " samples; last change " << change << ", decay report "
          << partial.decay_report();
      throw ConvergenceError(msg.str());
    }
    n *= 2;
    std::vector<double> current = sampled_coefficients(spec, family, max_index, n);
    double scale = 1.0;
    for (double v : current) {
      if (!std::isfinite(v))
        throw ConvergenceError("symbol coefficients overflow double precision (" +
                               to_string(family) + " family)");
      scale = std::max(scale, std::abs(v));
    }
    change = 0.0;
    for (std::size_t i = 0; i < current.size(); ++i)
      change = std::max(change, std::abs(current[i] - previous[i]));
    previous = std::move(current);
    if (change <= tolerance * scale) break;
  }
  LaurentCoefficients out(family, max_index, std::move(previous));
  out.samples_ = n;
  out.resolution_change_ = change;
  return out;
}

}  // namespace multischur
