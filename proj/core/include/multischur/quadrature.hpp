#pragma once

#include <vector>

namespace multischur {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// m-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int m, double a = -1.0, double b = 1.0);

/// `panels` equal panels on [a, b], each with an `order`-point Gauss-Legendre rule.
QuadratureRule composite_gauss_legendre(double a, double b, int panels, int order);

}  // namespace multischur
