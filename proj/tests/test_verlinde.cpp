#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "twistor/errors.hpp"
#include "twistor/geometry.hpp"
#include "twistor/representation.hpp"
#include "twistor/verlinde.hpp"

using namespace twistor;

TEST_CASE("D4 root system") {
  const auto r = RootSystemD::of_rank(4);
  CHECK(r.positive_roots.size() == 12);
  CHECK(r.rho == std::vector<int>{3, 2, 1, 0});
  const std::vector<std::vector<int>> listed = {
      {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1},
      {1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  for (const auto& a : listed) CHECK(std::find(r.positive_roots.begin(), r.positive_roots.end(), a) != r.positive_roots.end());
  for (int n = 2; n <= 7; ++n) CHECK(RootSystemD::of_rank(n).positive_roots.size() == static_cast<std::size_t>(n * (n - 1)));
  CHECK_THROWS_AS(RootSystemD::of_rank(1), InvalidArgument);
}

TEST_CASE("weyl_dim examples") {
  CHECK(weyl_dim(4, {0, 0, 0, 0}) == 1);
  CHECK(weyl_dim(4, {1, 1, 0, 0}) == 28);
  CHECK(weyl_dim(4, {2, 0, 0, 0}) == 35);
  CHECK(weyl_dim(4, {1, 0, 0, 0}) == 8);
  CHECK(weyl_dim(4, {3, 1, 0, 0}) == 567);
  // self-dual 4-forms; vector rep has dimension 2n, adjoint n(2n-1) for n >= 3
  CHECK(weyl_dim(4, {1, 1, 1, 1}) == 35);
  for (int n = 2; n <= 6; ++n) {
    std::vector<long> w(n, 0);
    w[0] = 1;
    CHECK(weyl_dim(n, w) == 2 * n);
    w[1] = 1;
    CHECK(weyl_dim(n, w) == (n == 2 ? 3 : n * (2 * n - 1)));
  }
  CHECK_THROWS_AS(weyl_dim(4, {0, 1, 0, 0}), NonDominant);
  CHECK_THROWS_AS(weyl_dim(4, {1, 0, 0, -1}), NonDominant);
  CHECK_THROWS_AS(weyl_dim(4, {1, 0, 0}), InvalidArgument);
}

TEST_CASE("dim_closed matches weyl_dim and geometry") {
  const auto a = dim_closed(DimFamily::A), b = dim_closed(DimFamily::B);
  CHECK(a.degree() == 9);
  CHECK(b.degree() == 9);
  CHECK(a(0) == Rational(1));
  CHECK(a(2) == Rational(300));
  CHECK(b(1) == Rational(35));
  for (long k = 0; k <= 12; ++k) CHECK(a(k) == Rational(weyl_dim(4, {k, k, 0, 0})));
  for (long k = 1; k <= 12; ++k) CHECK(b(k) == Rational(weyl_dim(4, {k + 1, k - 1, 0, 0})));
  const auto& geo = geometry();
  CHECK(a == index_ab(geo, IndexKind::a, IndexRoute::riemann_roch_flag).poly);
  CHECK(b == index_ab(geo, IndexKind::b, IndexRoute::dirac_grassmann).poly);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == UniPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == UniPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(8) == UniPoly{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == UniPoly{1, 0, -1, 0, 1});
  // Euler phi and product over divisors
  for (int n = 1; n <= 60; ++n) {
    UniPoly prod(1);
    int phi = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
      if (std::gcd(d, n) == 1) ++phi;
    }
    CHECK(prod == UniPoly::monomial(1, n) - UniPoly(1));
    CHECK(cyclotomic_polynomial(n).degree() == phi);
    for (const auto& c : cyclotomic_polynomial(n).coefficients()) CHECK(c.is_integer());
  }
  CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidArgument);
}

namespace {

CyclotomicElement random_element(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-5, 5), d(1, 4);
  std::vector<Rational> coeffs;
  for (int i = 0; i < cyclotomic_polynomial(n).degree(); ++i) coeffs.emplace_back(c(rng), d(rng));
  return {n, UniPoly(coeffs)};
}

}  // namespace

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> mdist(1, 10);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 * mdist(rng);
    const auto x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == CyclotomicElement::rational(n, 0));
    if (!x.residue().is_zero()) CHECK(x * x.inverse() == CyclotomicElement::rational(n, 1));
  }
  CHECK_THROWS_AS(CyclotomicElement::rational(8, 0).inverse(), NotInvertible);
  CHECK_THROWS_AS(CyclotomicElement::rational(8, 1) + CyclotomicElement::rational(12, 1), InvalidArgument);
}

TEST_CASE("zeta is a primitive root") {
  for (int n : {4, 8, 12, 20, 40}) {
    const auto z = CyclotomicElement::zeta(n);
    CHECK(z.pow(n) == CyclotomicElement::rational(n, 1));
    for (int d = 1; d < n; ++d) CHECK_FALSE(z.pow(d) == CyclotomicElement::rational(n, 1));
    const auto i = CyclotomicElement::zeta(n, n / 4);
    CHECK(i * i == CyclotomicElement::rational(n, -1));
  }
}

TEST_CASE("cosec powers") {
  for (int m = 1; m <= 8; ++m) CHECK(cosec_power(m, m, 4) == CyclotomicElement::rational(4 * m, 1));
  CHECK(cosec_power(1, 2, 4) == CyclotomicElement::rational(8, 4));
  CHECK(cosec_power(3, 2, 4) == CyclotomicElement::rational(8, 4));
  CHECK(cosec_power(1, 3, 2) == CyclotomicElement::rational(12, 4));  // sin(pi/6) = 1/2
  for (int m = 1; m <= 10; ++m)
    for (int i = 1; i <= 2 * m - 1; ++i)
      for (int e : {2, 4, 6}) {
        const auto c = cosec_power(i, m, e);
        CHECK(c == cosec_power(2 * m - i, m, e));
        // residues are real numbers: compare numerically with zeta = e^{i pi / 2m}
        double re = 0, im = 0;
        const auto& co = c.residue().coefficients();
        for (std::size_t j = 0; j < co.size(); ++j) {
          const double ang = j * std::numbers::pi / (2.0 * m);
          re += co[j].to_double() * std::cos(ang);
          im += co[j].to_double() * std::sin(ang);
        }
        const double expect = std::pow(1.0 / std::sin(i * std::numbers::pi / (2.0 * m)), e);
        CHECK(re == doctest::Approx(expect).epsilon(1e-9));
        CHECK(std::fabs(im) < 1e-9 * expect);
      }
  CHECK_THROWS_AS(cosec_power(0, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(cosec_power(4, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(cosec_power(1, 2, 3), InvalidArgument);
}

TEST_CASE("verlinde examples") {
  CHECK(verlinde_number({3, 1}) == 1);
  CHECK(verlinde_number({3, 2}) == 28);
  CHECK(verlinde_number({3, 3}) == 265);
  CHECK(verlinde_number({2, 2}) == 6);
  CHECK(verlinde_number({3, 9}) == 168273);
  CHECK_THROWS_AS(verlinde_number({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(verlinde_number({3, 0}), InvalidArgument);
  CHECK_THROWS_AS(verlinde_number({7, 2}, VerlindeMethod::floating), FloatUnreliable);
  CHECK_THROWS_AS(verlinde_number({3, 21}, VerlindeMethod::floating), FloatUnreliable);
}

TEST_CASE("verlinde at genus 3 matches the index polynomial") {
  const auto d = index_d_direct(geometry()).poly;
  for (int m = 1; m <= 20; ++m) CHECK(Rational(verlinde_number({3, m})) == d(m - 1));
}

TEST_CASE("exact and float verlinde agree") {
  for (int g = 2; g <= 5; ++g)
    for (int m = 1; m <= 12; ++m) {
      const auto exact = verlinde_number({g, m});
      CHECK(exact >= 0);
      const auto f = verlinde_float({g, m});
      CHECK(f.rounded == exact);
      CHECK(f.residual <= 1e-6 * std::max(1.0, std::fabs(f.raw)));
    }
}
