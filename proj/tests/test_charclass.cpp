#include <random>

#include "doctest.h"
#include "fixture_models.hpp"
#include "twistor/bernoulli.hpp"
#include "twistor/charclass.hpp"
#include "twistor/errors.hpp"

using namespace twistor;
using fixture::gen;

namespace {

RingElement formal_poly(const GenusPolynomials& k, std::initializer_list<std::pair<Exponents, Rational>> terms) {
  Terms t;
  for (const auto& [e, c] : terms) t[e] = UniPoly(c);
  return RingElement(k.formal, std::move(t));
}

// Independent oracle: t*cosh(t)/sinh(t) as a series in s = t^2 by direct
// long division of the two Taylor series.
std::vector<Rational> t_coth_t_oracle(std::size_t terms) {
  std::vector<Rational> num(terms), den(terms), q(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    num[j] = Rational(1) / factorial(2 * static_cast<unsigned>(j));
    den[j] = Rational(1) / factorial(2 * static_cast<unsigned>(j) + 1);
  }
  for (std::size_t j = 0; j < terms; ++j) {
    Rational acc = num[j];
    for (std::size_t i = 1; i <= j; ++i) acc -= q[j - i] * den[i];
    q[j] = acc;
  }
  return q;
}

}  // namespace

TEST_CASE("characteristic power series") {
  const auto a = CharPowerSeries::a_hat(5).coefficients();
  CHECK(a[1] == Rational(-1, 24));
  CHECK(a[2] == Rational(7, 5760));
  CHECK(a[3] == Rational(-31, 967680));
  const auto td = CharPowerSeries::todd(4).coefficients();
  CHECK(td[1] == Rational(1, 2));
  CHECK(td[2] == Rational(1, 12));
  CHECK(td[3].is_zero());
  CHECK(CharPowerSeries::l_genus(3).coefficients()[1] == Rational(1, 3));
  CHECK_THROWS_AS(CharPowerSeries({2, 1}), InvalidArgument);
}

TEST_CASE("A-hat genus polynomials") {
  const auto& k = genus_polynomials(CharPowerSeries::a_hat(8), 4, ClassKind::pontrjagin);
  REQUIRE(k.size() == 4);
  CHECK(k[1] == formal_poly(k, {{{1, 0, 0, 0}, Rational(-1, 24)}}));
  CHECK(k[2] == formal_poly(k, {{{2, 0, 0, 0}, Rational(7, 5760)}, {{0, 1, 0, 0}, Rational(-4, 5760)}}));
  const Rational denom = Rational(2).pow(16) * Rational(3).pow(4) * Rational(5).pow(2) * Rational(7);
  CHECK(k[4] == formal_poly(k, {{{4, 0, 0, 0}, Rational(762) / denom},
                                {{2, 1, 0, 0}, Rational(-1808) / denom},
                                {{0, 2, 0, 0}, Rational(416) / denom},
                                {{1, 0, 1, 0}, Rational(1024) / denom},
                                {{0, 0, 0, 1}, Rational(-384) / denom}}));
  // Cached: a second request returns the same object.
  CHECK(&genus_polynomials(CharPowerSeries::a_hat(5), 4, ClassKind::pontrjagin) == &k);
}

TEST_CASE("Todd and L polynomials") {
  const auto& td = genus_polynomials(CharPowerSeries::todd(6), 3, ClassKind::chern);
  CHECK(td[1] == formal_poly(td, {{{1, 0, 0}, Rational(1, 2)}}));
  CHECK(td[2] == formal_poly(td, {{{2, 0, 0}, Rational(1, 12)}, {{0, 1, 0}, Rational(1, 12)}}));
  CHECK(td[3] == formal_poly(td, {{{1, 1, 0}, Rational(1, 24)}}));
  const auto& l = genus_polynomials(CharPowerSeries::l_genus(4), 2, ClassKind::pontrjagin);
  CHECK(l[1] == formal_poly(l, {{{1, 0}, Rational(1, 3)}}));
  CHECK(l[2] == formal_poly(l, {{{0, 1}, Rational(7, 45)}, {{2, 0}, Rational(-1, 45)}}));
}

TEST_CASE("flat genus") {
  const auto& k = genus_polynomials(CharPowerSeries({1, 0, 0, 0, 0}), 4, ClassKind::pontrjagin);
  for (int j = 1; j <= 4; ++j) CHECK(k[j].is_zero());
}

TEST_CASE("evaluate_genus") {
  const auto ef = RingModel::create({"ef", {{"e", 4}, {"f", 4}}, {}, 16, {}});
  const auto e = gen(ef, "e"), f = gen(ef, "f");
  const auto& a = genus_polynomials(CharPowerSeries::a_hat(6), 4, ClassKind::pontrjagin);
  const PontryaginData p{{RingElement(ef), f * f * UniPoly(6), (e * e * f * UniPoly(2) - f.pow(3)) * UniPoly(20),
                          e.pow(4) * UniPoly(140) - e * e * f * f * UniPoly(224) + f.pow(4) * UniPoly(81)}};
  const auto ahat = evaluate_genus(a, p, ef);
  CHECK(ahat.component(0) == RingElement::constant(ef, 1));
  CHECK(ahat.component(4).is_zero());
  CHECK(ahat.component(8) == f * f * UniPoly(Rational(-1, 240)));
  // With p1 = 0 the cubic term is -p3/60480.
  CHECK(ahat.component(12) == (e * e * f * UniPoly(2) - f.pow(3)) * UniPoly(Rational(-1, 3024)));

  const PontryaginData zero{{RingElement(ef), RingElement(ef), RingElement(ef), RingElement(ef)}};
  CHECK(evaluate_genus(a, zero, ef) == RingElement::constant(ef, 1));
}

TEST_CASE("chern_from_character") {
  const auto g = fixture::grassmann();
  const auto u = gen(g, "u");
  const auto ch_u = RingElement::constant(g, 2) + u + u * u * UniPoly(Rational(1, 12)) +
                    u.pow(3) * UniPoly(Rational(1, 360)) + u.pow(4) * UniPoly(Rational(1, 20160));
  const auto c = chern_from_character(ch_u, 2);
  CHECK(c.c(1).is_zero());
  CHECK(c.c(2) == -u);

  const auto triv = chern_from_character(RingElement::constant(g, 3), 3);
  for (int i = 1; i <= 3; ++i) CHECK(triv.c(i).is_zero());
  CHECK_THROWS_AS(chern_from_character(ch_u, 3), RankMismatch);

  const auto f = fixture::flag();
  const auto ch_sigma = exp_nilpotent(gen(f, "l")) * ch_sym_rank2(2, f, "v");
  const auto cs = chern_from_character(ch_sigma, 3);
  CHECK(cs.c(3) == gen(f, "l") * (gen(f, "u") - gen(f, "v")) * UniPoly(4));
}

TEST_CASE("pontrjagin_from_chern on zero data") {
  const auto g = fixture::grassmann();
  const ChernData zero{3, {RingElement(g), RingElement(g), RingElement(g)}};
  for (const auto& p : pontrjagin_from_chern(zero, g).classes) CHECK(p.is_zero());
}

TEST_CASE("Newton identities round trip on random root data") {
  // Formal ring with degree-2 generators a, b; roots are random combinations.
  const auto roots_model = RingModel::create({"roots", {{"a", 2}, {"b", 2}}, {}, 12, {}});
  const auto a = gen(roots_model, "a"), b = gen(roots_model, "b");
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coef(-3, 3), rank_dist(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    const int rank = rank_dist(rng);
    RingElement ch(roots_model), total = RingElement::constant(roots_model, 1);
    for (int i = 0; i < rank; ++i) {
      const auto x = a * UniPoly(coef(rng)) + b * UniPoly(coef(rng));
      ch += exp_nilpotent(x);
      total = total * (RingElement::constant(roots_model, 1) + x);
    }
    const auto c = chern_from_character(ch, rank);
    for (int i = 1; i <= rank; ++i) CHECK(c.c(i) == total.component(2 * i));
    CHECK(character_from_chern(c, roots_model) == ch);
  }
}

TEST_CASE("Whitney sum and tensor product with a line bundle") {
  const auto m = RingModel::create({"whitney", {{"a", 2}, {"x", 2}, {"y", 2}}, {}, 12, {}});
  const auto a = gen(m, "a"), x = gen(m, "x"), y = gen(m, "y");
  const auto one = RingElement::constant(m, 1);
  const auto ch_l = exp_nilpotent(a);
  const auto ch_e = exp_nilpotent(x) + exp_nilpotent(y);
  const auto ce = chern_from_character(ch_e, 2);

  const auto sum = chern_from_character(ch_l + ch_e, 3);
  const auto whitney = (one + a) * (one + ce.c(1) + ce.c(2));
  for (int i = 1; i <= 3; ++i) CHECK(sum.c(i) == whitney.component(2 * i));

  const auto tensor = chern_from_character(ch_l * ch_e, 2);
  CHECK(tensor.c(1) == a * UniPoly(2) + ce.c(1));
  CHECK(tensor.c(2) == a * a + a * ce.c(1) + ce.c(2));
}

TEST_CASE("ch of symmetric powers of a rank-2 bundle") {
  const auto g = fixture::grassmann();
  const auto u = gen(g, "u");
  CHECK(ch_sym_rank2(0, g) == RingElement::constant(g, 1));
  CHECK(ch_sym_rank2(1, g) == RingElement::constant(g, 2) + u + u * u * UniPoly(Rational(1, 12)) +
                                  u.pow(3) * UniPoly(Rational(1, 360)) + u.pow(4) * UniPoly(Rational(1, 20160)));
  CHECK(ch_sym_rank2(2, g) == RingElement::constant(g, 3) + u * UniPoly(4) + u * u * UniPoly(Rational(4, 3)) +
                                  u.pow(3) * UniPoly(Rational(8, 45)) + u.pow(4) * UniPoly(Rational(4, 315)));
  CHECK(ch_sym_rank2(1, g) * ch_sym_rank2(1, g) == ch_sym_rank2(2, g) + RingElement::constant(g, 1));

  // Clebsch-Gordan S^n (x) S^1 = S^{n+1} + S^{n-1}, symbolically and for many n.
  const UniPoly n = UniPoly::variable();
  CHECK(ch_sym_rank2(n, g) * ch_sym_rank2(1, g) ==
        ch_sym_rank2(n + UniPoly(1), g) + ch_sym_rank2(n - UniPoly(1), g));
  for (int k = 1; k <= 110; ++k) {
    CHECK(ch_sym_rank2(k, g) * ch_sym_rank2(1, g) == ch_sym_rank2(k + 1, g) + ch_sym_rank2(k - 1, g));
    CHECK(ch_sym_rank2(k, g).constant_term() == UniPoly(k + 1));
  }
  CHECK(ch_sym_rank2(n, g).constant_term() == n + UniPoly(1));
  // Always even in the root, so no dependence on v or odd classes.
  // Degree-4 coefficient of ch(S^n U) is n(n+1)(n+2)/6.
  CHECK(ch_sym_rank2(7, g).component(4) == u * UniPoly(84));
}

TEST_CASE("derivatives of ch(S^n U) at n = 0") {
  const auto model = u_series_model();
  const auto u = gen(model, "u");
  const auto oracle = t_coth_t_oracle(5);
  RingElement expected(model);
  for (unsigned j = 0; j < 5; ++j) expected += u.pow(j) * UniPoly(oracle[j]);
  const auto first = dn_ch_sym_at_zero(1);
  CHECK(first == expected);
  CHECK(first == RingElement::constant(model, 1) + u * UniPoly(Rational(1, 3)) - u * u * UniPoly(Rational(1, 45)) +
                     u.pow(3) * UniPoly(Rational(2, 945)) - u.pow(4) * UniPoly(Rational(1, 4725)));
  CHECK(first.constant_term() == UniPoly(1));
  // Bernoulli form: 1 + sum_j (-1)^{j-1} 2^{2j} B_j/(2j)! u^j.
  for (int j = 1; j <= 4; ++j) {
    const Rational c = Rational(j % 2 == 1 ? 1 : -1) * Rational(4).pow(static_cast<unsigned>(j)) * bernoulli(j) /
                       factorial(2 * static_cast<unsigned>(j));
    CHECK(first.coefficient({j}) == UniPoly(c));
  }
  CHECK(dn_ch_sym_at_zero(2) == u);
  CHECK_THROWS_AS(dn_ch_sym_at_zero(-1), InvalidArgument);
}
