#pragma once

#include <cstddef>
#include <vector>

#include "twistor/errors.hpp"
#include "twistor/rational.hpp"

namespace twistor::series {

/// Truncated power series arithmetic on coefficient vectors (index = power).
/// All results hold exactly `terms` coefficients.
using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t terms);
/// 1/a; requires a[0] != 0.
Series inverse(const Series& a, std::size_t terms);
/// log(a); requires a[0] == 1.
Series log(const Series& a, std::size_t terms);
/// exp(a); requires a[0] == 0.
Series exp(const Series& a, std::size_t terms);

/// Quotient num/den where the numerator coefficients live in any ring that
/// can be scaled by rationals. Requires den[0] != 0.
template <typename T>
std::vector<T> divide(const std::vector<T>& num, const Series& den, std::size_t terms) {
  if (den.empty() || den[0].is_zero()) throw InvalidArgument("series division by a non-unit");
  const Rational inv0 = Rational(1) / den[0];
  std::vector<T> q(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    T acc = j < num.size() ? num[j] : T();
    for (std::size_t i = 1; i <= j && i < den.size(); ++i) acc -= q[j - i] * den[i];
    q[j] = acc * inv0;
  }
  return q;
}

}  // namespace twistor::series
