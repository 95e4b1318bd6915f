#include "twistor/geometry.hpp"


#include "twistor/errors.hpp"
#include "twistor/linear.hpp"

namespace twistor {
namespace {

RingElement gen(const ModelPtr& m, std::string_view name) { return RingElement::generator(m, name); }
RingElement one(const ModelPtr& m) { return RingElement::constant(m, 1); }
UniPoly q(long n, long d = 1) { return UniPoly(Rational(n, d)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

void require_equal(const RingElement& computed, const RingElement& expected, const std::string& what) {
  if (computed != expected)
    throw VerificationFailure(what + ": expected " + expected.str() + ", computed " + computed.str());
}

void require_zero(const Rational& computed, const std::string& what) {
  if (!computed.is_zero()) throw VerificationFailure(what + ": expected 0, computed " + computed.str());
}

ModelPtr uv_model(std::string name, std::map<Exponents, Rational> pairing = {}) {
  return RingModel::create({std::move(name), {{"u", 4}, {"v", 4}}, {}, 16, std::move(pairing)});
}

ModelPtr ef_model(std::map<Exponents, Rational> pairing = {}) {
  return RingModel::create({"G(e,f)", {{"e", 4}, {"f", 4}}, {}, 16, std::move(pairing)});
}

RingElement to_ef_in(const RingElement& x, const ModelPtr& ef) {
  const auto e = gen(ef, "e"), f = gen(ef, "f");
  const auto u_img = (e * UniPoly(2) + f) * q(1, 4);
  const auto v_img = (f - e * UniPoly(2)) * q(1, 4);
  const auto& m = *x.model();
  std::vector<RingElement> images(m.arity());
  images[m.index_of("u")] = u_img;
  images[m.index_of("v")] = v_img;
  return substitute(x, images);
}

// Coefficients of e^4, e^2 f^2, f^4 in the degree-16 part.
std::array<Rational, 3> ef_row(const RingElement& x_ef) {
  const auto top = x_ef.component(16);
  return {top.coefficient({4, 0}).constant_term(), top.coefficient({2, 2}).constant_term(),
          top.coefficient({0, 4}).constant_term()};
}

// Model with the generators of `spec`, without pairing, used to build
// elements before the pairing is known.
ModelPtr unpaired(ModelSpec spec) {
  spec.pairing.clear();
  spec.name += "-unpaired";
  return RingModel::create(std::move(spec));
}

// l, u, v with l^2 -> 4u, no pairing yet.
ModelSpec flag_like_spec(int top_degree, std::string name) {
  return ModelSpec{std::move(name), {{"l", 2}, {"u", 4}, {"v", 4}}, {{{2, 0, 0}, {{{0, 1, 0}, UniPoly(4)}}}}, top_degree, {}};
}

const GenusPolynomials& a_hat_polys(int up_to) {
  return genus_polynomials(CharPowerSeries::a_hat(static_cast<std::size_t>(up_to) + 1), up_to, ClassKind::pontrjagin);
}

}  // namespace

// ============================================================ Grassmannian

RingElement GrassmannModel::to_ef(const RingElement& x) const { return to_ef_in(x, ef); }

GrassmannClasses grassmann_classes(const ModelPtr& uv) {
  GrassmannClasses c;
  c.ch_u = ch_sym_rank2(1, uv, "u");
  c.ch_v = ch_sym_rank2(1, uv, "v");
  c.ch_w = c.ch_u * c.ch_v;
  c.ch_tangent = c.ch_w * (RingElement::constant(uv, 8) - c.ch_w);
  c.pontrjagin = pontrjagin_from_complexified_character(c.ch_tangent, 16);
  c.a_hat = evaluate_genus(a_hat_polys(4), c.pontrjagin, uv);
  return c;
}

GrassmannModel derive_grassmann_pairing() {
  const ModelPtr free_uv = uv_model("G-unpaired");
  const ModelPtr free_ef = ef_model();
  const auto cls = grassmann_classes(free_uv);
  const auto u = gen(free_uv, "u");

  GrassmannModel g;
  // Vanishing A-hat genus (spin, positive scalar curvature).
  g.constraints.push_back({"a-hat-genus", ef_row(to_ef_in(cls.a_hat.component(16), free_ef)), Rational(0)});
  // Isometry dimension 7 - (8/3) P1 u^3 + 64 u^4 = dim SO(8) = 28.
  const auto iso = cls.pontrjagin.p(1) * u.pow(3) * q(-8, 3) + u.pow(4) * UniPoly(64);
  g.constraints.push_back({"isometry-dimension", ef_row(to_ef_in(iso, free_ef)), Rational(28 - 7)});
  // Vanishing of A-hat(G, S^2 U).
  const auto twisted = ch_sym_rank2(2, free_uv, "u") * cls.a_hat;
  g.constraints.push_back({"a-hat-s2u", ef_row(to_ef_in(twisted, free_ef)), Rational(0)});

  RatMatrix a(3, 3);
  std::vector<Rational> rhs;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) a(r, c) = g.constraints[r].coeffs[c];
    rhs.push_back(g.constraints[r].rhs);
  }
  const auto x = solve_linear_system(a, rhs);
  g.solution = {x[0], x[1], x[2]};

  // e^3 f and e f^3 pair to zero by the U <-> V symmetry.
  g.ef = ef_model({{{4, 0}, x[0]}, {{3, 1}, Rational(0)}, {{2, 2}, x[1]}, {{1, 3}, Rational(0)}, {{0, 4}, x[2]}});
  std::map<Exponents, Rational> uv_pairing;
  for (int i = 0; i <= 4; ++i) {
    const Exponents mono{i, 4 - i};
    uv_pairing[mono] = pair_rational(to_ef_in(RingElement::monomial(free_uv, mono), g.ef));
  }
  g.ring = uv_model("G", std::move(uv_pairing));
  return g;
}

GrassmannClasses grassmann_char_data(const GrassmannModel& g) {
  auto cls = grassmann_classes(g.ring);
  const auto e = gen(g.ef, "e"), f = gen(g.ef, "f");
  const auto k = [&](long n, long d) { return q(n, d); };

  require_equal(g.to_ef(cls.ch_w),
                RingElement::constant(g.ef, 4) + f + (e * e * UniPoly(-2) + f * f) * k(1, 12) +
                    (e * e * f * UniPoly(-3) + f.pow(3)) * k(1, 360) +
                    (e.pow(4) * UniPoly(2) - e * e * f * f * UniPoly(4) + f.pow(4)) * k(1, 20160),
                "ch(W_C)");
  require_equal(g.to_ef(cls.ch_tangent),
                RingElement::constant(g.ef, 16) - f * f + (e * e * f * UniPoly(2) - f.pow(3)) * k(1, 6) +
                    (e.pow(4) * UniPoly(-20) + e * e * f * f * UniPoly(32) - f.pow(4) * UniPoly(9)) * k(1, 720),
                "ch(TG_C)");
  require(cls.pontrjagin.p(1).is_zero(), "P1 = 0: computed " + cls.pontrjagin.p(1).str());
  require_equal(g.to_ef(cls.pontrjagin.p(2)), f * f * UniPoly(6), "P2");
  require_equal(g.to_ef(cls.pontrjagin.p(3)), (e * e * f * UniPoly(2) - f.pow(3)) * UniPoly(20), "P3");
  require_equal(g.to_ef(cls.pontrjagin.p(4)),
                e.pow(4) * UniPoly(140) - e * e * f * f * UniPoly(224) + f.pow(4) * UniPoly(81), "P4");
  require_zero(pair_rational(cls.pontrjagin.p(3) * g.u()), "<P3 u>");
  require_zero(pair_rational(cls.pontrjagin.p(3) * g.v()), "<P3 v>");
  require_equal(g.to_ef(cls.a_hat.component(8)), f * f * k(-1, 240), "A-hat degree 8");
  require_zero(pair_rational(cls.a_hat), "<A-hat_4>");
  return cls;
}

HomogeneousIndices homogeneous_index_checks(const GrassmannModel& g) {
  const auto cls = grassmann_classes(g.ring);
  HomogeneousIndices h;
  h.a_hat_s2u = pair_rational(ch_sym_rank2(2, g.ring, "u") * cls.a_hat);
  h.isometry_dimension = Rational(7) - Rational(8, 3) * pair_rational(cls.pontrjagin.p(1) * g.u().pow(3)) +
                         Rational(64) * pair_rational(g.u().pow(4));
  h.a_hat_tangent = pair_rational(cls.ch_tangent * cls.a_hat);
  require_zero(h.a_hat_s2u, "A-hat(G, S^2 U)");
  require(h.isometry_dimension == Rational(28), "isometry dimension: expected 28, computed " + h.isometry_dimension.str());
  require_zero(h.a_hat_tangent, "A-hat(G, TG_C)");
  return h;
}

// ==================================================================== F

FlagModel make_flag_model(const GrassmannModel& g) {
  ModelSpec spec = flag_like_spec(18, "F");
  const ModelPtr plain = unpaired(spec);
  for (const auto& mono : plain->normal_monomials(18))
    spec.pairing[mono] = pair_rational(pushforward_flag(RingElement::monomial(plain, mono), g.ring));
  return {RingModel::create(std::move(spec)), g.ring};
}

ChernData flag_tangent_chern(const FlagModel& flag) {
  const auto& m = flag.ring;
  const auto l = gen(m, "l");
  const auto ch_w = ch_sym_rank2(1, m, "u") * ch_sym_rank2(1, m, "v");
  const auto ch = exp_nilpotent(l) + exp_nilpotent(l, q(1, 2)) * ch_sym_rank2(1, m, "v") *
                                         (RingElement::constant(m, 8) - ch_w);
  auto c = chern_from_character(ch, 9);
  require_equal(c.c(1), l * UniPoly(5), "c1(F)");
  return c;
}

// ==================================================================== M

ModuliModel moduli_setup(const FlagModel& flag) {
  ModuliModel out;
  const auto ch_sigma = exp_nilpotent(gen(flag.ring, "l")) * ch_sym_rank2(2, flag.ring, "v");
  out.c3_sigma = chern_from_character(ch_sigma, 3).c(3);

  ModelSpec spec = flag_like_spec(12, "M");
  spec.name = "M-restriction";
  const ModelPtr plain = unpaired(spec);
  for (const auto& mono : plain->normal_monomials(12))
    spec.pairing[mono] = pair_rational(transfer(RingElement::monomial(plain, mono), flag.ring) * out.c3_sigma);
  out.restriction = RingModel::create(spec);

  const auto u = gen(out.restriction, "u"), v = gen(out.restriction, "v");
  out.relation = find_middle_relation(8, {u * u, u * v, v * v}, {u, v}, out.restriction);
  const Rational& a = out.relation[0];
  const Rational& b = out.relation[1];
  const Rational& c = out.relation[2];
  if (c.is_zero()) throw VerificationFailure("moduli relation has no v^2 term");

  ModelSpec final_spec = spec;
  final_spec.name = "M";
  final_spec.rules.push_back({{0, 0, 2}, {{{0, 2, 0}, UniPoly(-a / c)}, {{0, 1, 1}, UniPoly(-b / c)}}});
  final_spec.pairing.clear();
  for (const auto& [mono, value] : spec.pairing)
    if (mono[2] < 2) final_spec.pairing[mono] = value;
  out.ring = RingModel::create(std::move(final_spec));
  return out;
}

bool vanishes_in_cohomology(const RingElement& x) {
  if (!x.model()) return true;
  const int top = x.model()->top_degree();
  return (x - x.component(top)).is_zero() && pair(x).is_zero();
}

ModuliCharacteristics moduli_chern(const ModuliModel& moduli, const FlagModel&) {
  const auto& m = moduli.ring;
  const auto l = gen(m, "l"), u = gen(m, "u"), v = gen(m, "v");
  const auto ch_v = ch_sym_rank2(1, m, "v");
  const auto ch_w = ch_sym_rank2(1, m, "u") * ch_v;
  const auto ch_tm = exp_nilpotent(l) * (one(m) + exp_nilpotent(l, q(-1, 2)) * ch_v * (RingElement::constant(m, 8) - ch_w) -
                                         ch_sym_rank2(2, m, "v"));

  ModuliCharacteristics out;
  out.computed = chern_from_character(ch_tm, 6);
  const auto& c = out.computed;
  require_equal(c.c(1), l * UniPoly(2), "c1(M)");
  require_equal(c.c(2), (u * UniPoly(3) + v) * UniPoly(4), "c2(M)");
  require_equal(c.c(3), l * u * UniPoly(8), "c3(M)");
  require_equal(c.c(4), u * v * q(-112, 3), "c4(M)");
  require_equal(c.c(5), l * v * (u + v) * UniPoly(-32), "c5(M)");
  out.c5_times_l = pair_rational(c.c(5) * l);
  require_zero(out.c5_times_l, "<c5 l, [M]>");
  out.c6_pairing = pair_rational(c.c(6));
  require(vanishes_in_cohomology(c.c(6)), "c6(M) = 0: computed " + c.c(6).str());

  out.chern = ChernData{6, {c.c(1), c.c(2), c.c(3), c.c(4), RingElement(m), RingElement(m)}};
  out.pontrjagin = pontrjagin_from_chern(out.chern, m);
  const auto& p = out.pontrjagin;
  require_equal(p.p(1), (u + v) * UniPoly(-8), "p1(M)");
  require_equal(p.p(2), p.p(1) * p.p(1) * q(3, 8), "p2(M) = (3/8) p1^2");
  require(vanishes_in_cohomology(p.p(3)), "p3(M) = 0: computed " + p.p(3).str());

  out.a_hat = evaluate_genus(a_hat_polys(3), p, m);
  require_equal(out.a_hat.component(4) + out.a_hat.component(8), (u + v) * q(1, 3) + u * v * q(-11, 135),
                "A-hat(M) below top degree");
  require(vanishes_in_cohomology(out.a_hat.component(12)), "A-hat genus of M");
  out.todd = exp_nilpotent(l) * out.a_hat;
  return out;
}

// ================================================================ indices

std::string to_string(IndexRoute r) {
  switch (r) {
    case IndexRoute::riemann_roch_flag: return "riemann-roch-F";
    case IndexRoute::dirac_grassmann: return "dirac-G";
    case IndexRoute::koszul: return "koszul";
    case IndexRoute::virtual_bundle: return "virtual-bundle-X";
    case IndexRoute::moduli_direct: return "riemann-roch-M";
    case IndexRoute::closed_form: return "closed-form";
  }
  return "unknown";
}

const Geometry& geometry() {
  static const Geometry geo = [] {
    Geometry g;
    g.grass = derive_grassmann_pairing();
    g.grass_classes = grassmann_char_data(g.grass);
    homogeneous_index_checks(g.grass);
    g.flag = make_flag_model(g.grass);
    g.flag_chern = flag_tangent_chern(g.flag);
    const auto& td = genus_polynomials(CharPowerSeries::todd(10), 9, ClassKind::chern);
    g.flag_todd = evaluate_genus(td, g.flag_chern, g.flag.ring);
    g.moduli = moduli_setup(g.flag);
    g.moduli_chars = moduli_chern(g.moduli, g.flag);
    return g;
  }();
  return geo;
}

IndexPolynomial index_d_direct(const Geometry& geo, const UniPoly& k) {
  const auto l = gen(geo.moduli.ring, "l");
  return {pair(exp_nilpotent(l, k) * geo.moduli_chars.todd), IndexRoute::moduli_direct};
}

IndexPolynomial index_ab(const Geometry& geo, IndexKind which, IndexRoute route, const UniPoly& k) {
  switch (route) {
    case IndexRoute::riemann_roch_flag: {
      const auto& m = geo.flag.ring;
      RingElement integrand = exp_nilpotent(gen(m, "l"), k) * geo.flag_todd;
      if (which == IndexKind::b) integrand = integrand * ch_sym_rank2(2, m, "v");
      return {pair(integrand), route};
    }
    case IndexRoute::dirac_grassmann: {
      const auto& m = geo.grass.ring;
      RingElement integrand = ch_sym_rank2(k * Rational(2) + UniPoly(4), m, "u") * geo.grass_classes.a_hat;
      if (which == IndexKind::b) integrand = integrand * ch_sym_rank2(2, m, "v");
      return {pair(integrand), route};
    }
    default:
      throw InvalidArgument("index_ab: route must be riemann-roch-F or dirac-G");
  }
}

IndexPolynomial index_d_koszul(const IndexPolynomial& a, const IndexPolynomial& b) {
  const auto shift = [](const UniPoly& p, long s) { return poly_substitute_affine(p, 1, s); };
  return {a.poly - shift(b.poly, -1) + shift(b.poly, -2) - shift(a.poly, -3), IndexRoute::koszul};
}

IndexPolynomial index_X(const Geometry& geo, const UniPoly& k) {
  const auto& m = geo.grass.ring;
  const auto sym_u = [&](long shift) { return ch_sym_rank2(k * Rational(2) + UniPoly(shift), m, "u"); };
  const auto s2v = ch_sym_rank2(2, m, "v");
  const auto x = sym_u(4) - sym_u(2) * s2v + sym_u(0) * s2v - sym_u(-2);
  return {pair(x * geo.grass_classes.a_hat), IndexRoute::virtual_bundle};
}

UniPoly interpolate_route(const std::function<UniPoly(const UniPoly&)>& route) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (int k = -10; k <= 10; ++k) {
    const UniPoly value = route(UniPoly(k));
    if (!value.is_constant()) throw InvalidArgument("interpolate_route: route returned a non-constant value");
    pts.emplace_back(k, value.constant_term());
  }
  return interpolate(pts);
}

void require_same(const IndexPolynomial& x, const IndexPolynomial& y, const std::string& what) {
  if (x.poly != y.poly)
    throw RouteMismatch(what + " (" + to_string(x.route) + " vs " + to_string(y.route) + ")", x.poly.str(), y.poly.str());
}

std::vector<NamedCheck> serre_vanishing_checks(const IndexPolynomial& a, const IndexPolynomial& b) {
  std::vector<NamedCheck> out;
  const auto reflect = [](const UniPoly& p) { return poly_substitute_affine(p, -1, 0); };
  const auto shift5 = [](const UniPoly& p) { return poly_substitute_affine(p, 1, -5); };
  out.push_back({"a(-k) = -a(k-5)", reflect(a.poly) == -shift5(a.poly)});
  out.push_back({"b(-k) = -b(k-5)", reflect(b.poly) == -shift5(b.poly)});
  for (const Rational& r : {Rational(-4), Rational(-3), Rational(-5, 2), Rational(-2), Rational(-1)}) {
    out.push_back({"a(" + r.str() + ") = 0", a.poly(r).is_zero()});
    out.push_back({"b(" + r.str() + ") = 0", b.poly(r).is_zero()});
  }
  out.push_back({"a(0) = 1", a.poly(Rational(0)) == Rational(1)});
  out.push_back({"a(-5) = -1", a.poly(Rational(-5)) == Rational(-1)});
  out.push_back({"b(0) = 0", b.poly(Rational(0)).is_zero()});
  out.push_back({"b(-5) = 0", b.poly(Rational(-5)).is_zero()});
  for (const auto& c : out)
    if (!c.ok) throw VerificationFailure("Serre check failed: " + c.name);
  return out;
}

UniPoly d_closed_form() {
  const UniPoly m = UniPoly::variable();
  const UniPoly m2 = m * m;
  const UniPoly in_m_poly = (m2 * Rational(11) + m2 * m2 * Rational(20) + m2 * m2 * m2 * Rational(14)) * Rational(1, 45);
  return poly_substitute_affine(in_m_poly, 1, 1);
}

UniPoly in_m(const UniPoly& p_of_k) { return poly_substitute_affine(p_of_k, 1, -1); }

}  // namespace twistor
