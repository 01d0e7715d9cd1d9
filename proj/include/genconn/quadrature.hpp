#pragma once

#include <vector>

namespace genconn {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// n-point Gauss-Legendre rule, exact for polynomials of degree 2n-1.
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace genconn
