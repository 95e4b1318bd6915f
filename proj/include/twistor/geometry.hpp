#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twistor/charclass.hpp"
#include "twistor/graded_ring.hpp"
#include "twistor/unipoly.hpp"

namespace twistor {

// ===================================================== SO(8)/SO(4)xSO(4)

/// One linear constraint on (<e^4>, <e^2 f^2>, <f^4>).
struct ConstraintRow {
  std::string name;
  std::array<Rational, 3> coeffs;
  Rational rhs;
};

/// The real Grassmannian of oriented 4-planes in R^8, through the subring
/// generated by u = -c2(U), v = -c2(V) (equivalently e = u - v, f = 2(u + v)).
struct GrassmannModel {
  ModelPtr ring;  // u, v; top degree 16; derived pairing
  ModelPtr ef;    // e, f; same pairing expressed in e, f
  std::vector<ConstraintRow> constraints;
  std::array<Rational, 3> solution;  // <e^4>, <e^2 f^2>, <f^4>

  /// u -> (2e + f)/4, v -> (f - 2e)/4. Accepts any model with generators u, v.
  RingElement to_ef(const RingElement& x) const;
  RingElement u() const { return RingElement::generator(ring, "u"); }
  RingElement v() const { return RingElement::generator(ring, "v"); }
  RingElement e() const { return u() - v(); }
  RingElement f() const { return (u() + v()) * UniPoly(2); }
};

/// Characteristic classes of the Grassmannian in a u, v model.
struct GrassmannClasses {
  RingElement ch_u;        // ch(U)
  RingElement ch_v;        // ch(V)
  RingElement ch_w;        // ch(W_C) = ch(U) ch(V)
  RingElement ch_tangent;  // ch((TG)_C) = ch(W_C)(8 - ch(W_C))
  PontryaginData pontrjagin;  // P_1..P_8 of TG
  RingElement a_hat;          // A-hat(TG)
};

GrassmannClasses grassmann_classes(const ModelPtr& uv_model);

/// Derives the intersection numbers from the vanishing of the A-hat genus,
/// the isometry-dimension formula (dim SO(8) = 28) and the vanishing of
/// A-hat(G, S^2 U), with <e^3 f> = <e f^3> = 0 from the U <-> V symmetry.
GrassmannModel derive_grassmann_pairing();

/// Classes on the derived model, checked against the closed forms
/// (P1 = 0, P2 = 6f^2, ...); throws VerificationFailure on a mismatch.
GrassmannClasses grassmann_char_data(const GrassmannModel& g);

struct HomogeneousIndices {
  Rational a_hat_s2u;          // A-hat(G, S^2 U)
  Rational isometry_dimension; // 7 - (8/3) P1 u^3 + 64 u^4
  Rational a_hat_tangent;      // A-hat(G, (TG)_C)
};
HomogeneousIndices homogeneous_index_checks(const GrassmannModel& g);

// ======================================================= twistor space F

struct FlagModel {
  ModelPtr ring;  // l, u, v; l^2 -> 4u; top degree 18; pairing via pushforward
  ModelPtr base;  // the Grassmannian ring
};

FlagModel make_flag_model(const GrassmannModel& g);

/// Chern classes of T^{1,0}F from ch = e^l + e^{l/2} ch(V)(8 - ch(W_C));
/// throws VerificationFailure unless c1 = 5l.
ChernData flag_tangent_chern(const FlagModel& flag);

// ===================================================== moduli space M_3

struct ModuliModel {
  ModelPtr ring;         // l, u, v; l^2 -> 4u, v^2 -> derived relation; top degree 12
  ModelPtr restriction;  // same generators without the v^2 rule; restriction pairing
  RingElement c3_sigma;  // Euler class of sigma^* on F
  std::vector<Rational> relation;  // (a, b, c): a u^2 + b uv + c v^2 = 0
};

/// <x, [M]> := <x c3(sigma^*), [F]>; derives the quadratic relation and
/// assembles the model.
ModuliModel moduli_setup(const FlagModel& flag);

struct ModuliCharacteristics {
  ChernData computed;  // c1..c6 as produced by the character
  ChernData chern;     // with c5 := 0 (b2 = 1) and c6 := 0 (top degree, pairs to 0)
  PontryaginData pontrjagin;
  Rational c5_times_l;  // <c5 l, [M]>
  Rational c6_pairing;  // <c6, [M]>
  RingElement a_hat;    // A-hat(TM)
  RingElement todd;     // e^l A-hat(TM)
};

/// Throws VerificationFailure naming the first class identity that fails.
ModuliCharacteristics moduli_chern(const ModuliModel& moduli, const FlagModel& flag);

/// True when x is zero below the top degree and its top part pairs to zero,
/// i.e. x = 0 in cohomology (the top group is one-dimensional).
bool vanishes_in_cohomology(const RingElement& x);

// ================================================================ indices

enum class IndexRoute { riemann_roch_flag, dirac_grassmann, koszul, virtual_bundle, moduli_direct, closed_form };
enum class IndexKind { a, b };

std::string to_string(IndexRoute r);

struct IndexPolynomial {
  UniPoly poly;  // in the twist k
  IndexRoute route;
};

/// Everything constructed once, in dependency order G -> F -> M.
struct Geometry {
  GrassmannModel grass;
  GrassmannClasses grass_classes;
  FlagModel flag;
  ChernData flag_chern;
  RingElement flag_todd;
  ModuliModel moduli;
  ModuliCharacteristics moduli_chars;
};

/// Lazily built, immutable afterwards; safe to share between threads.
const Geometry& geometry();

/// <e^{(k+1) l} td(TM) ... > evaluated with the given twist k (the variable
/// for the symbolic polynomial).
IndexPolynomial index_d_direct(const Geometry& geo, const UniPoly& k = UniPoly::variable());

/// a_k = chi(F, O(k)), b_k = chi(F, S^2 V(k)) by Riemann-Roch on F, or
/// a_k = A-hat(G, S^{2k+4} U), b_k = A-hat(G, S^{2k+4} U S^2 V).
IndexPolynomial index_ab(const Geometry& geo, IndexKind which, IndexRoute route,
                         const UniPoly& k = UniPoly::variable());

/// a(k) - b(k-1) + b(k-2) - a(k-3).
IndexPolynomial index_d_koszul(const IndexPolynomial& a, const IndexPolynomial& b);

/// A-hat(G, X_k), X_k = S^{2k+4}U - S^{2k+2}U S^2V + S^{2k}U S^2V - S^{2k-2}U.
IndexPolynomial index_X(const Geometry& geo, const UniPoly& k = UniPoly::variable());

/// Runs `route` at k = -10..10 and interpolates; used to cross-check the
/// symbolic computation.
UniPoly interpolate_route(const std::function<UniPoly(const UniPoly&)>& route);

/// Both index polynomials must agree; throws RouteMismatch otherwise.
void require_same(const IndexPolynomial& x, const IndexPolynomial& y, const std::string& what);

struct NamedCheck {
  std::string name;
  bool ok;
};

/// Functional equations a(-k) = -a(k-5), b(-k) = -b(k-5), the common roots
/// -4, -3, -5/2, -2, -1 and the anchors a0 = 1 = -a(-5), b0 = 0 = b(-5).
/// Throws VerificationFailure naming the first failure.
std::vector<NamedCheck> serre_vanishing_checks(const IndexPolynomial& a, const IndexPolynomial& b);

/// (11 m^2 + 20 m^4 + 14 m^6)/45 with m = k + 1, as a polynomial in k.
UniPoly d_closed_form();
/// p(k) rewritten in m = k + 1.
UniPoly in_m(const UniPoly& p_of_k);

}  // namespace twistor
