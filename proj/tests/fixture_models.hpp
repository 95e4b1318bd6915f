#pragma once

// Hand-built ring models with the published intersection numbers, used by the
// unit tests of the ring and characteristic-class layers so they do not depend
// on the geometry module's derivations.

#include <random>

#include "twistor/graded_ring.hpp"

namespace twistor::fixture {

inline ModelPtr grassmann() {
  static const ModelPtr m = RingModel::create({"G-fixture",
                                               {{"u", 4}, {"v", 4}},
                                               {},
                                               16,
                                               {{{4, 0}, Rational(21, 64)},
                                                {{3, 1}, Rational(-7, 64)},
                                                {{2, 2}, Rational(5, 64)},
                                                {{1, 3}, Rational(-7, 64)},
                                                {{0, 4}, Rational(21, 64)}}});
  return m;
}

inline ModelPtr flag() {
  // l^2 -> 4u; top monomials l*u^a*v^b pair to 2 <u^a v^b, [G]>.
  static const ModelPtr m = [] {
    ModelSpec s{"F-fixture", {{"l", 2}, {"u", 4}, {"v", 4}}, {{{2, 0, 0}, {{{0, 1, 0}, UniPoly(4)}}}}, 18, {}};
    for (const auto& [e, v] : grassmann()->pairing()) s.pairing[{1, e[0], e[1]}] = v * Rational(2);
    return RingModel::create(std::move(s));
  }();
  return m;
}

inline ModelPtr moduli() {
  static const ModelPtr m = RingModel::create(
      {"M-fixture",
       {{"l", 2}, {"u", 4}, {"v", 4}},
       {{{2, 0, 0}, {{{0, 1, 0}, UniPoly(4)}}},
        {{0, 0, 2}, {{{0, 2, 0}, UniPoly(-1)}, {{0, 1, 1}, UniPoly(Rational(-10, 3))}}}},
       12,
       {{{0, 3, 0}, Rational(7, 2)}, {{0, 2, 1}, Rational(-3, 2)}}});
  return m;
}

inline RingElement gen(const ModelPtr& m, std::string_view name) { return RingElement::generator(m, name); }

/// Random element with small rational coefficients and up to `terms` terms.
inline RingElement random_element(const ModelPtr& m, std::mt19937& rng, int terms = 4, bool allow_constant = true) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), expo(0, 3);
  Terms t;
  for (int i = 0; i < terms; ++i) {
    Exponents e(m->arity());
    for (auto& x : e) x = expo(rng);
    if (!allow_constant && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) e[0] = 1;
    t[e] += UniPoly(Rational(num(rng), den(rng)));
  }
  return RingElement(m, std::move(t));
}

}  // namespace twistor::fixture
