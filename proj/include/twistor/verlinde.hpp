#pragma once

#include <gmpxx.h>

#include <string>

#include "twistor/unipoly.hpp"

namespace twistor {

/// n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for the proper
/// divisors d of n. Cached; safe to call from several threads.
const UniPoly& cyclotomic_polynomial(int n);

/// Element of Q(zeta_n) = Q[x]/Phi_n, stored as its reduced residue.
class CyclotomicElement {
 public:
  CyclotomicElement(int n, const UniPoly& residue);
  static CyclotomicElement rational(int n, const Rational& value);
  static CyclotomicElement zeta(int n, long power = 1);

  int index() const { return n_; }
  const UniPoly& residue() const { return residue_; }
  bool is_rational() const { return residue_.is_constant(); }
  /// Throws InvalidArgument unless is_rational().
  Rational rational_value() const;

  /// Throws NotInvertible for zero.
  CyclotomicElement inverse() const;
  CyclotomicElement pow(unsigned e) const;

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  CyclotomicElement operator-() const;
  bool operator==(const CyclotomicElement& o) const = default;

  std::string str() const { return residue_.str("z"); }

 private:
  void check(const CyclotomicElement& o) const;
  int n_;
  UniPoly residue_;
};

/// cosec(i pi / 2m)^exponent in Q(zeta_{4m}), as (2 zeta^m / (zeta^i - zeta^{4m-i}))^exponent.
CyclotomicElement cosec_power(int i, int m, int exponent);

struct VerlindeParams {
  int genus = 2;
  int level = 1;
};

enum class VerlindeMethod { exact, floating };

struct FloatVerlinde {
  double raw = 0;       // the double-precision sum
  mpz_class rounded;
  double residual = 0;  // |raw - rounded|
};

/// -m^{g-1} sum_{i=1}^{2m-1} (-1)^i cosec^{2g-2}(i pi / 2m).
/// The exact route throws NonIntegral if the sum is not a rational integer;
/// the float route throws FloatUnreliable outside g <= 6, m <= 20 or when
/// the residual exceeds 1e-6 max(1, |value|).
mpz_class verlinde_number(const VerlindeParams& p, VerlindeMethod method = VerlindeMethod::exact);

/// Exact sum, kept in the field (mainly for diagnostics).
CyclotomicElement verlinde_exact_element(const VerlindeParams& p);
FloatVerlinde verlinde_float(const VerlindeParams& p);

}  // namespace twistor
