#pragma once

#include "multischur/specialization.hpp"

#include <string>
#include <vector>

namespace multischur {

/// Which generating function a coefficient table belongs to.
///  h:     exp V(z)                    (one-sided)
///  f:     exp(V(z) + V(1/z))          Toeplitz symbol for l(lambda)
///  g:     exp(-V(-z) - V(-1/z))       Toeplitz symbol for lambda_1
///  kappa: exp(V(z) - V(1/z))          unimodular on |z| = 1
enum class SymbolFamily { h, f, g, kappa };

std::string to_string(SymbolFamily family);

/// Two-sided coefficients c_m, m in [-max_index, max_index]; reads outside
/// the window return 0.
class LaurentCoefficients {
 public:
  LaurentCoefficients() = default;
  LaurentCoefficients(SymbolFamily family, int max_index, std::vector<double> values);

  SymbolFamily family() const { return family_; }
  int max_index() const { return max_index_; }
  double operator[](int m) const {
    return (m < -max_index_ || m > max_index_) ? 0.0
                                               : values_[static_cast<std::size_t>(m + max_index_)];
  }
  const std::vector<double>& values() const { return values_; }

  /// max |c_m| over the outer 10% of the window on either side.
  double decay_report() const;
  /// Number of unit-circle samples behind the final table (0 if not sampled).
  int samples() const { return samples_; }
  /// Largest coefficient change seen in the last resolution doubling.
  double resolution_change() const { return resolution_change_; }

  double sum_of_squares() const;

 private:
  friend LaurentCoefficients symbol_coeffs(const Specialization&, SymbolFamily, int, double);
  SymbolFamily family_ = SymbolFamily::kappa;
  int max_index_ = 0;
  std::vector<double> values_{0.0};
  int samples_ = 0;
  double resolution_change_ = 0.0;
};

inline constexpr double kCoefficientTolerance = 1e-13;
inline constexpr int kMaxSymbolSamples = 1 << 20;

/// h_0..h_max_k as a Laurent table (zero on negative indices).
LaurentCoefficients h_coeffs(const Specialization& spec, int max_k);

/// Fourier coefficients of the f, g or kappa symbol, by sampling on the unit
/// circle and inverting with an FFT. The sample count starts from a bound
/// tied to the spread of the symbol and doubles until no retained
/// coefficient moves by more than tolerance * max(1, max |c_m|). Throws
/// ConvergenceError past kMaxSymbolSamples.
LaurentCoefficients symbol_coeffs(const Specialization& spec, SymbolFamily family, int max_index,
                                  double tolerance = kCoefficientTolerance);

}  // namespace multischur
