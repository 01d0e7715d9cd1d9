#pragma once

#include <span>
#include <vector>

#include "genconn/errors.hpp"

namespace genconn {

struct Monomial {
  double coeff = 0.0;
  std::vector<int> exponents;  // one entry per ambient coordinate
};

// Real-coefficient polynomial in d ambient coordinates, stored as a sum of
// monomials with explicit exponent tuples.
struct Polynomial {
  std::vector<Monomial> terms;

  double eval(std::span<const double> point) const;
  int degree() const;
};

// Checks exponent arity and the degree cap.
void validate_polynomial(const Polynomial& p, int dimension, int max_degree);

}  // namespace genconn
