#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twistor/rational.hpp"

namespace twistor {

/// Dense univariate polynomial with rational coefficients. Index i of the
/// coefficient vector holds the coefficient of x^i; the leading coefficient
/// is never zero.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  UniPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  UniPoly(T constant) : UniPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  /// The polynomial x.
  static UniPoly variable();
  static UniPoly monomial(const Rational& c, int power);
  /// alpha * x + beta.
  static UniPoly affine(const Rational& alpha, const Rational& beta);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(int i) const;
  Rational leading() const;
  /// Constant term; the value for a constant polynomial.
  Rational constant_term() const { return coeff(0); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  UniPoly derivative() const;
  /// p(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  /// Multiplies through by the lcm of denominators and divides by the content;
  /// leading coefficient made positive.
  UniPoly primitive_part() const;
  UniPoly monic() const;

  /// Descending powers, e.g. "1/45*k^6 + 4/9*k^5 - k + 3".
  std::string str(std::string_view var = "k") const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// q(x) = p(alpha * x + beta), expanded exactly.
UniPoly poly_substitute_affine(const UniPoly& p, const Rational& alpha, const Rational& beta);

/// Euclidean division; throws InvalidArgument for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly gcd;  // monic
  UniPoly s;
  UniPoly t;    // s*a + t*b == gcd
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Unique polynomial of degree < points.size() through the given (x, y) pairs.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Product of (x - r) over the given roots, times `scale`.
UniPoly from_roots(const std::vector<Rational>& roots, const Rational& scale = 1);

}  // namespace twistor
