#include <random>

#include "doctest.h"
#include "twistor/bernoulli.hpp"
#include "twistor/errors.hpp"
#include "twistor/linear.hpp"
#include "twistor/series.hpp"
#include "twistor/unipoly.hpp"

using namespace twistor;

namespace {

Rational random_small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

UniPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_small_rational(rng);
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("21/64") == Rational(21, 64));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("x/2"), InvalidArgument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_small_rational(rng), b = random_small_rational(rng);
    const Rational s = a * b + a;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(s.denominator() > 0);
  }
}

TEST_CASE("bernoulli numbers in the positive convention") {
  const std::vector<Rational> table = {
      {1, 6},     {1, 30},     {1, 42},       {1, 30},       {5, 66},      {691, 2730},
      {7, 6},     {3617, 510}, {43867, 798},  {174611, 330}, {854513, 138}, {236364091, 2730}};
  for (std::size_t j = 0; j < table.size(); ++j) {
    CAPTURE(j + 1);
    CHECK(bernoulli(static_cast<int>(j) + 1) == table[j]);
  }
  CHECK_THROWS_AS(bernoulli(0), InvalidArgument);
  CHECK_THROWS_AS(bernoulli(-3), InvalidArgument);
}

TEST_CASE("solve_linear_system") {
  SUBCASE("identity") {
    const RatMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(solve_linear_system(id, {2, 2, 4}) == std::vector<Rational>{2, 2, 4});
  }
  SUBCASE("intersection-number constraints") {
    const RatMatrix a{{-10, 16, -3}, {16, 24, 1}, {24, -26, 1}};
    CHECK(solve_linear_system(a, {0, 84, 0}) == std::vector<Rational>{2, 2, 4});
  }
  SUBCASE("singular") {
    const RatMatrix a{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(solve_linear_system(a, {1, 2}), SingularMatrix);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(solve_linear_system(RatMatrix(2, 3), {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(solve_linear_system(RatMatrix{{1, 0}, {0, 1}}, {1}), InvalidArgument);
  }
  SUBCASE("round trip on random invertible systems") {
    std::mt19937 rng(11);
    int solved = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + trial % 5;
      RatMatrix a(n, n);
      std::vector<Rational> x(n);
      for (std::size_t r = 0; r < n; ++r) {
        x[r] = random_small_rational(rng);
        for (std::size_t c = 0; c < n; ++c) a(r, c) = random_small_rational(rng);
      }
      try {
        const auto solution = solve_linear_system(a, a.apply(x));
        CHECK(solution == x);
        ++solved;
      } catch (const SingularMatrix&) {
        CHECK(nullspace(a).size() > 0);
      }
    }
    CHECK(solved >= 100);
  }
}

TEST_CASE("nullspace") {
  const RatMatrix a{{1, 2, 3}, {2, 4, 6}};
  const auto basis = nullspace(a);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(a.apply(v) == std::vector<Rational>{0, 0});
}

TEST_CASE("polynomial basics") {
  const UniPoly k = UniPoly::variable();
  CHECK(UniPoly().degree() == UniPoly::kZeroDegree);
  CHECK((k * k - k * k).is_zero());
  const UniPoly p = k * k * Rational(3) - k + Rational(1, 2);
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == Rational(21, 2));
  CHECK(p.derivative() == UniPoly({-1, 6}));
  CHECK(p.str() == "3*k^2 - k + 1/2");
  CHECK(UniPoly({0, -1}).str("m") == "-m");
  CHECK(p.primitive_part() == UniPoly({1, -2, 6}));
}

TEST_CASE("poly_substitute_affine") {
  const UniPoly k = UniPoly::variable();
  CHECK(poly_substitute_affine(k * k, 1, 0) == k * k);
  CHECK(poly_substitute_affine(k, -1, -5) == UniPoly({-5, -1}));
  CHECK(poly_substitute_affine(k * k, 2, 1) == UniPoly({1, 4, 4}));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const UniPoly p = random_poly(rng, 9);
    Rational alpha = random_small_rational(rng);
    if (alpha.is_zero()) alpha = 1;
    const Rational beta = random_small_rational(rng);
    const UniPoly q = poly_substitute_affine(p, alpha, beta);
    CHECK(poly_substitute_affine(q, Rational(1) / alpha, -beta / alpha) == p);
    CHECK(q == p.compose(UniPoly::affine(alpha, beta)));
  }
}

TEST_CASE("division, gcd and interpolation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly a = random_poly(rng, 7), b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const auto g = extended_gcd(a, b);
    CHECK(g.s * a + g.t * b == g.gcd);
  }
  CHECK_THROWS_AS(divmod(UniPoly(1), UniPoly()), InvalidArgument);

  const UniPoly p = from_roots({1, -2, Rational(5, 2)}, 3);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int x = -3; x <= 3; ++x) pts.emplace_back(x, p(Rational(x)));
  CHECK(interpolate(pts) == p);
}

TEST_CASE("power series helpers") {
  const series::Series a = {0, 1, Rational(1, 3), -2, 5};
  const auto e = series::exp(a, 8);
  const auto back = series::log(e, 8);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(back[i] == a[i]);
  const auto inv = series::inverse(e, 8);
  const auto one = series::multiply(e, inv, 8);
  CHECK(one[0] == Rational(1));
  for (std::size_t i = 1; i < 8; ++i) CHECK(one[i].is_zero());
  CHECK_THROWS_AS(series::log({2, 1}, 3), InvalidArgument);
  CHECK_THROWS_AS(series::inverse({0, 1}, 3), InvalidArgument);
}
