#include "twistor/series.hpp"

namespace twistor::series {

namespace {
Rational at(const Series& a, std::size_t i) { return i < a.size() ? a[i] : Rational(); }
}  // namespace

Series multiply(const Series& a, const Series& b, std::size_t terms) {
  Series out(terms);
  for (std::size_t i = 0; i < terms && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < terms && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series inverse(const Series& a, std::size_t terms) {
  Series one(terms);
  if (terms > 0) one[0] = 1;
  return divide(one, a, terms);
}

Series log(const Series& a, std::size_t terms) {
  if (at(a, 0) != Rational(1)) throw InvalidArgument("series log needs constant term 1");
  // log a = integral of a'/a.
  Series deriv(terms);
  for (std::size_t i = 1; i <= terms && i < a.size(); ++i) deriv[i - 1] = a[i] * Rational(static_cast<long>(i));
  const Series q = divide(deriv, a, terms);
  Series out(terms);
  for (std::size_t i = 1; i < terms; ++i) out[i] = q[i - 1] / Rational(static_cast<long>(i));
  return out;
}

Series exp(const Series& a, std::size_t terms) {
  if (!at(a, 0).is_zero()) throw InvalidArgument("series exp needs zero constant term");
  // e' = a' e, so n e_n = sum_k k a_k e_{n-k}.
  Series out(terms);
  if (terms == 0) return out;
  out[0] = 1;
  for (std::size_t n = 1; n < terms; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * at(a, k) * out[n - k];
    out[n] = acc / Rational(static_cast<long>(n));
  }
  return out;
}

}  // namespace twistor::series
