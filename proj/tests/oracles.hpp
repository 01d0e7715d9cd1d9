#pragma once

// Test-side oracles. Each one is an independent computation path from the
// library code it is used to check.

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "genconn/groupoid.hpp"
#include "genconn/rng.hpp"

namespace oracles {

inline std::string word_key(const std::vector<genconn::SignedEdge>& word) {
  std::string key;
  for (const genconn::SignedEdge& letter : word) {
    key += letter.edge;
    key += letter.sign == genconn::EdgeSign::forward ? '+' : '-';
  }
  return key;
}

inline bool is_cancelling_pair(const genconn::SignedEdge& a,
                               const genconn::SignedEdge& b) {
  return a.edge == b.edge && a.sign != b.sign;
}

// Cancels one randomly chosen adjacent inverse pair at a time until none
// remain. Any cancellation order must give the stack reducer's answer.
inline std::vector<genconn::SignedEdge> random_order_reduce(
    std::vector<genconn::SignedEdge> word, genconn::RandomStream& rng) {
  for (;;) {
    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (is_cancelling_pair(word[i], word[i + 1])) pairs.push_back(i);
    }
    if (pairs.empty()) return word;
    const std::size_t at = pairs[rng.uniform_below(pairs.size())];
    word.erase(word.begin() + at, word.begin() + at + 2);
  }
}

// Exhaustively explores every cancellation order; collects the distinct
// fully-reduced results. Exponential: small words only.
inline void all_order_reductions(const std::vector<genconn::SignedEdge>& word,
                                 std::set<std::string>& results) {
  std::vector<std::size_t> pairs;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (is_cancelling_pair(word[i], word[i + 1])) pairs.push_back(i);
  }
  if (pairs.empty()) {
    results.insert(word_key(word));
    return;
  }
  for (const std::size_t at : pairs) {
    std::vector<genconn::SignedEdge> next = word;
    next.erase(next.begin() + at, next.begin() + at + 2);
    all_order_reductions(next, results);
  }
}

// Composite Simpson rule on [a, b].
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  const double h = (b - a) / (2 * panels);
  double sum = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// Expectation of g(w) for a uniform unit quaternion (w, x, y, z): with
// w = cos(psi) the density of psi on [0, pi] is (2/pi) sin^2(psi).
inline double s3_expectation_of_w_function(
    const std::function<double(double)>& g) {
  const double pi = 3.14159265358979323846;
  return simpson(
      [&](double psi) {
        const double s = std::sin(psi);
        return g(std::cos(psi)) * s * s * (2.0 / pi);
      },
      0.0, pi, 4000);
}

}  // namespace oracles
