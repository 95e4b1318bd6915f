#include "twistor/verlinde.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "twistor/errors.hpp"

namespace twistor {

const UniPoly& cyclotomic_polynomial(int n) {
  static std::map<int, UniPoly> cache;
  static std::mutex mutex;
  if (n < 1) throw InvalidArgument("cyclotomic_polynomial: n must be >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  UniPoly p = UniPoly::monomial(1, n) - UniPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [quot, rem] = divmod(p, cyclotomic_polynomial(d));
    if (!rem.is_zero()) throw Error("cyclotomic_polynomial: inexact division");
    p = std::move(quot);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

CyclotomicElement::CyclotomicElement(int n, const UniPoly& residue)
    : n_(n), residue_(divmod(residue, cyclotomic_polynomial(n)).second) {}

CyclotomicElement CyclotomicElement::rational(int n, const Rational& value) { return {n, UniPoly(value)}; }

CyclotomicElement CyclotomicElement::zeta(int n, long power) {
  power %= n;
  if (power < 0) power += n;
  return {n, UniPoly::monomial(1, static_cast<int>(power))};
}

Rational CyclotomicElement::rational_value() const {
  if (!is_rational()) throw InvalidArgument("element " + str() + " is not rational");
  return residue_.constant_term();
}

void CyclotomicElement::check(const CyclotomicElement& o) const {
  if (n_ != o.n_)
    throw InvalidArgument("elements of Q(zeta_" + std::to_string(n_) + ") and Q(zeta_" + std::to_string(o.n_) + ")");
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  check(o);
  return {n_, residue_ + o.residue_};
}
CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  check(o);
  return {n_, residue_ - o.residue_};
}
CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  check(o);
  return {n_, residue_ * o.residue_};
}
CyclotomicElement CyclotomicElement::operator-() const { return {n_, residue_ * Rational(-1)}; }

CyclotomicElement CyclotomicElement::inverse() const {
  if (residue_.is_zero()) throw NotInvertible("zero has no inverse in Q(zeta_" + std::to_string(n_) + ")");
  const auto g = extended_gcd(residue_, cyclotomic_polynomial(n_));
  if (g.gcd.degree() != 0) throw NotInvertible(str() + " is a zero divisor");
  return {n_, g.s * (Rational(1) / g.gcd.constant_term())};
}

CyclotomicElement CyclotomicElement::pow(unsigned e) const {
  CyclotomicElement result = rational(n_, 1), base = *this;
  for (; e; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

CyclotomicElement cosec_power(int i, int m, int exponent) {
  if (m < 1) throw InvalidArgument("cosec_power: m must be >= 1");
  if (i < 1 || i > 2 * m - 1) throw InvalidArgument("cosec_power: need 1 <= i <= 2m-1");
  if (exponent < 2 || exponent % 2 != 0) throw InvalidArgument("cosec_power: exponent must be even and >= 2");
  const int n = 4 * m;
  const auto two_i = CyclotomicElement::zeta(n, m) * CyclotomicElement::rational(n, 2);
  const auto diff = CyclotomicElement::zeta(n, i) - CyclotomicElement::zeta(n, n - i);
  return (two_i * diff.inverse()).pow(static_cast<unsigned>(exponent));
}

namespace {

void check_params(const VerlindeParams& p) {
  if (p.genus < 2) throw InvalidArgument("genus must be >= 2");
  if (p.level < 1) throw InvalidArgument("level must be >= 1");
}

}  // namespace

CyclotomicElement verlinde_exact_element(const VerlindeParams& p) {
  check_params(p);
  const int m = p.level, n = 4 * m, e = 2 * p.genus - 2;
  auto sum = CyclotomicElement::rational(n, 0);
  for (int i = 1; i <= 2 * m - 1; ++i) {
    const auto term = cosec_power(i, m, e);
    sum = (i % 2 == 0) ? sum + term : sum - term;
  }
  return sum * CyclotomicElement::rational(n, -Rational(m).pow(static_cast<unsigned>(p.genus - 1)));
}

FloatVerlinde verlinde_float(const VerlindeParams& p) {
  check_params(p);
  if (p.genus > 6 || p.level > 20)
    throw FloatUnreliable("float evaluation is only supported for g <= 6, m <= 20");
  const int m = p.level;
  double sum = 0;
  for (int i = 1; i <= 2 * m - 1; ++i) {
    const double c = 1.0 / std::sin(i * std::numbers::pi / (2.0 * m));
    const double term = std::pow(c, 2 * p.genus - 2);
    sum += (i % 2 == 0) ? term : -term;
  }
  FloatVerlinde out;
  out.raw = -std::pow(static_cast<double>(m), p.genus - 1) * sum;
  const double nearest = std::round(out.raw);
  out.rounded = mpz_class(nearest);
  out.residual = std::fabs(out.raw - nearest);
  if (out.residual > 1e-6 * std::max(1.0, std::fabs(out.raw)))
    throw FloatUnreliable("float residual " + std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

mpz_class verlinde_number(const VerlindeParams& p, VerlindeMethod method) {
  if (method == VerlindeMethod::floating) return verlinde_float(p).rounded;
  const auto v = verlinde_exact_element(p);
  if (!v.is_rational() || !v.rational_value().is_integer())
    throw NonIntegral("Verlinde sum is not a rational integer: " + v.str());
  return v.rational_value().numerator();
}

}  // namespace twistor
