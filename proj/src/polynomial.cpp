#include "genconn/polynomial.hpp"

#include <string>

namespace genconn {

double Polynomial::eval(std::span<const double> point) const {
  double sum = 0.0;
  for (const Monomial& term : terms) {
    double value = term.coeff;
    for (std::size_t k = 0; k < term.exponents.size(); ++k) {
      for (int e = 0; e < term.exponents[k]; ++e) value *= point[k];
    }
    sum += value;
  }
  return sum;
}

int Polynomial::degree() const {
  int degree = 0;
  for (const Monomial& term : terms) {
    int total = 0;
    for (const int e : term.exponents) total += e;
    if (total > degree) degree = total;
  }
  return degree;
}

void validate_polynomial(const Polynomial& p, int dimension, int max_degree) {
  for (const Monomial& term : p.terms) {
    if (static_cast<int>(term.exponents.size()) != dimension) {
      fail(ErrorCode::invalid_argument,
           "monomial exponent tuple has arity " +
               std::to_string(term.exponents.size()) + ", expected " +
               std::to_string(dimension));
    }
    for (const int e : term.exponents) {
      if (e < 0) {
        fail(ErrorCode::invalid_argument, "negative exponent in monomial");
      }
    }
  }
  if (p.degree() > max_degree) {
    fail(ErrorCode::invalid_argument,
         "polynomial degree " + std::to_string(p.degree()) + " exceeds cap " +
             std::to_string(max_degree));
  }
}

}  // namespace genconn
