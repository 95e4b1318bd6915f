#include "twistor/charclass.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "twistor/errors.hpp"
#include "twistor/series.hpp"

namespace twistor {

// ------------------------------------------------------------ power series

CharPowerSeries::CharPowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty() || coeffs_.front() != Rational(1))
    throw InvalidArgument("characteristic power series must have constant term 1");
}

CharPowerSeries CharPowerSeries::a_hat(std::size_t terms) {
  // sinh(x/2)/(x/2) = sum_j z^j / (4^j (2j+1)!)
  series::Series s(terms);
  for (std::size_t j = 0; j < terms; ++j)
    s[j] = Rational(1) / (Rational(4).pow(static_cast<unsigned>(j)) * factorial(2 * static_cast<unsigned>(j) + 1));
  return CharPowerSeries(series::inverse(s, terms));
}

CharPowerSeries CharPowerSeries::l_genus(std::size_t terms) {
  // x cosh x / sinh x = (sum z^j/(2j)!) / (sum z^j/(2j+1)!)
  series::Series num(terms), den(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    num[j] = Rational(1) / factorial(2 * static_cast<unsigned>(j));
    den[j] = Rational(1) / factorial(2 * static_cast<unsigned>(j) + 1);
  }
  return CharPowerSeries(series::divide(num, den, terms));
}

CharPowerSeries CharPowerSeries::todd(std::size_t terms) {
  // (1 - e^{-x})/x = sum (-1)^j x^j / (j+1)!
  series::Series s(terms);
  for (std::size_t j = 0; j < terms; ++j)
    s[j] = Rational(j % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(j) + 1);
  return CharPowerSeries(series::inverse(s, terms));
}

// -------------------------------------------------------- genus polynomials

namespace {

ModelPtr formal_model(int n, ClassKind kind) {
  ModelSpec spec;
  const int unit = kind == ClassKind::pontrjagin ? 4 : 2;
  const char* prefix = kind == ClassKind::pontrjagin ? "p" : "c";
  spec.name = std::string("formal-") + prefix + std::to_string(n);
  for (int j = 1; j <= n; ++j) spec.generators.push_back({prefix + std::to_string(j), unit * j});
  spec.top_degree = unit * n;
  return RingModel::create(std::move(spec));
}

// Power sums P_1..P_n of the roots in terms of the elementary symmetric
// functions e_j, by Newton's identities.
std::vector<RingElement> power_sums(const std::vector<RingElement>& e, int n) {
  std::vector<RingElement> p(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    RingElement acc = e[static_cast<std::size_t>(j)] * UniPoly(Rational(j % 2 == 1 ? j : -j));
    for (int i = 1; i < j; ++i) {
      const RingElement t = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j - i)];
      acc += i % 2 == 1 ? t : -t;
    }
    p[static_cast<std::size_t>(j)] = acc;
  }
  return p;
}

// Inverse direction: e_j = (1/j) sum_{i=1}^j (-1)^{i-1} e_{j-i} s_i.
std::vector<RingElement> elementary_from_power_sums(const std::vector<RingElement>& s, int n, const ModelPtr& model) {
  std::vector<RingElement> e(static_cast<std::size_t>(n) + 1);
  e[0] = RingElement::constant(model, 1);
  for (int j = 1; j <= n; ++j) {
    RingElement acc(model);
    for (int i = 1; i <= j; ++i) {
      const RingElement t = e[static_cast<std::size_t>(j - i)] * s[static_cast<std::size_t>(i)];
      acc += i % 2 == 1 ? t : -t;
    }
    e[static_cast<std::size_t>(j)] = acc * UniPoly(Rational(1, j));
  }
  return e;
}

GenusPolynomials compute_genus(const CharPowerSeries& q, int up_to, ClassKind kind) {
  const auto terms = static_cast<std::size_t>(up_to) + 1;
  if (q.coefficients().size() < terms)
    throw InvalidArgument("characteristic series too short for the requested genus");
  const ModelPtr formal = formal_model(up_to, kind);
  std::vector<RingElement> e(terms);
  for (int j = 1; j <= up_to; ++j)
    e[static_cast<std::size_t>(j)] = RingElement::generator(formal, formal->spec().generators[static_cast<std::size_t>(j - 1)].name);
  const auto p = power_sums(e, up_to);
  // prod Q(z_i) = exp(sum_j q_j P_j) with log Q = sum q_j z^j.
  const auto log_q = series::log(q.coefficients(), terms);
  RingElement exponent(formal);
  for (int j = 1; j <= up_to; ++j) exponent += p[static_cast<std::size_t>(j)] * UniPoly(log_q[static_cast<std::size_t>(j)]);
  const RingElement total = exp_nilpotent(exponent);
  const int unit = kind == ClassKind::pontrjagin ? 4 : 2;
  GenusPolynomials out{kind, formal, {}};
  for (int j = 1; j <= up_to; ++j) out.polys.push_back(total.component(unit * j));
  return out;
}

}  // namespace

const GenusPolynomials& genus_polynomials(const CharPowerSeries& q, int up_to, ClassKind kind) {
  if (up_to < 1) throw InvalidArgument("genus_polynomials: up_to must be >= 1");
  using Key = std::tuple<std::vector<Rational>, int, int>;
  static std::mutex mutex;
  static std::map<Key, GenusPolynomials> cache;
  // Only the coefficients that influence K_1..K_up_to belong in the key.
  std::vector<Rational> relevant(q.coefficients().begin(),
                                 q.coefficients().begin() + std::min<std::ptrdiff_t>(up_to + 1, static_cast<std::ptrdiff_t>(q.coefficients().size())));
  Key key{std::move(relevant), up_to, static_cast<int>(kind)};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(std::move(key), compute_genus(q, up_to, kind)).first;
  return it->second;
}

// ---------------------------------------------------------------- data sets

RingElement ChernData::c(int i) const {
  if (i == 0 && !classes.empty()) return RingElement::constant(classes.front().model(), 1);
  if (i < 1 || i > static_cast<int>(classes.size())) return {};
  return classes[static_cast<std::size_t>(i - 1)];
}

RingElement PontryaginData::p(int i) const {
  if (i < 1 || i > static_cast<int>(classes.size())) return {};
  return classes[static_cast<std::size_t>(i - 1)];
}

RingElement evaluate_genus(const GenusPolynomials& k, const std::vector<RingElement>& classes, const ModelPtr& model) {
  std::vector<RingElement> images;
  for (int j = 1; j <= k.size(); ++j)
    images.push_back(j <= static_cast<int>(classes.size()) ? transfer(classes[static_cast<std::size_t>(j - 1)], model)
                                                           : RingElement(model));
  RingElement out = RingElement::constant(model, 1);
  for (int j = 1; j <= k.size(); ++j) out += substitute(k[j], images);
  return out;
}

RingElement evaluate_genus(const GenusPolynomials& k, const ChernData& data, const ModelPtr& model) {
  return evaluate_genus(k, data.classes, model);
}

RingElement evaluate_genus(const GenusPolynomials& k, const PontryaginData& data, const ModelPtr& model) {
  return evaluate_genus(k, data.classes, model);
}

// ------------------------------------------------------- Chern / Pontrjagin

ChernData chern_from_character(const RingElement& ch, int rank) {
  if (!ch.model()) throw InvalidArgument("chern_from_character: character has no model");
  if (rank < 0) throw InvalidArgument("chern_from_character: negative rank");
  const UniPoly ch0 = ch.constant_term();
  if (ch0 != UniPoly(rank))
    throw RankMismatch("chern_from_character: ch_0 = " + ch0.str() + " but rank is " + std::to_string(rank));
  const ModelPtr& model = ch.model();
  std::vector<RingElement> s(static_cast<std::size_t>(rank) + 1);
  for (int j = 1; j <= rank; ++j)
    s[static_cast<std::size_t>(j)] = ch.component(2 * j) * UniPoly(factorial(static_cast<unsigned>(j)));
  auto e = elementary_from_power_sums(s, rank, model);
  ChernData out{rank, {}};
  for (int j = 1; j <= rank; ++j) out.classes.push_back(std::move(e[static_cast<std::size_t>(j)]));
  return out;
}

RingElement character_from_chern(const ChernData& c, const ModelPtr& model) {
  const int n = model->top_degree() / 2;
  std::vector<RingElement> e(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) e[static_cast<std::size_t>(j)] = j <= c.rank ? transfer(c.c(j), model) : RingElement(model);
  const auto p = power_sums(e, n);
  RingElement ch = RingElement::constant(model, c.rank);
  for (int j = 1; j <= n; ++j) ch += p[static_cast<std::size_t>(j)] * UniPoly(Rational(1) / factorial(static_cast<unsigned>(j)));
  return ch;
}

PontryaginData pontrjagin_from_chern(const ChernData& c, const ModelPtr& model) {
  auto cls = [&](int i) { return i == 0 ? RingElement::constant(model, 1) : transfer(c.c(i), model); };
  PontryaginData out;
  for (int i = 1; i <= c.rank; ++i) {
    RingElement total(model);
    for (int a = 0; a <= 2 * i; ++a) {
      const int b = 2 * i - a;
      if (a > c.rank || b > c.rank) continue;
      const RingElement t = cls(a) * cls(b);
      total += (b % 2 == 0) ? t : -t;
    }
    out.classes.push_back(i % 2 == 0 ? total : -total);
  }
  return out;
}

PontryaginData pontrjagin_from_complexified_character(const RingElement& ch, int real_rank) {
  if (!ch.model()) throw InvalidArgument("pontrjagin_from_complexified_character: no model");
  if (ch.constant_term() != UniPoly(real_rank))
    throw RankMismatch("complexified character has ch_0 = " + ch.constant_term().str());
  const ModelPtr& model = ch.model();
  const int n = real_rank / 2;
  for (int d = 2; d <= model->top_degree(); d += 4)
    if (!ch.component(d).is_zero()) throw InvalidArgument("complexified character has a component in degree " + std::to_string(d));
  // ch = real_rank + sum_j 2 pi_j / (2j)!, pi_j the power sums of x_i^2.
  std::vector<RingElement> pi(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j)
    pi[static_cast<std::size_t>(j)] = ch.component(4 * j) * UniPoly(factorial(2 * static_cast<unsigned>(j)) / Rational(2));
  auto e = elementary_from_power_sums(pi, n, model);
  PontryaginData out;
  for (int j = 1; j <= n; ++j) out.classes.push_back(std::move(e[static_cast<std::size_t>(j)]));
  return out;
}

// ---------------------------------------------------- symmetric powers of U

namespace {

// Coefficients c_j(n) of s^j in sinh((n+1)t)/sinh(t), s = t^2, as
// polynomials in n. Grown on demand.
std::vector<UniPoly> sym_series(std::size_t terms) {
  static std::mutex mutex;
  static std::vector<UniPoly> cached;
  std::lock_guard lock(mutex);
  if (cached.size() < terms) {
    const UniPoly n_plus_1 = UniPoly::affine(1, 1);
    std::vector<UniPoly> num(terms);
    series::Series den(terms);
    UniPoly power = n_plus_1;  // (n+1)^{2j+1}
    for (std::size_t j = 0; j < terms; ++j) {
      const Rational inv = Rational(1) / factorial(2 * static_cast<unsigned>(j) + 1);
      num[j] = power * inv;
      den[j] = inv;
      power = power * n_plus_1 * n_plus_1;
    }
    cached = series::divide(num, den, terms);
  }
  return {cached.begin(), cached.begin() + static_cast<std::ptrdiff_t>(terms)};
}

std::size_t terms_for(const ModelPtr& model, std::string_view generator) {
  const int d = model->spec().generators[model->index_of(generator)].degree;
  return static_cast<std::size_t>(model->top_degree() / d) + 1;
}

}  // namespace

RingElement ch_sym_rank2(const UniPoly& n, const ModelPtr& model, std::string_view generator) {
  const auto coeffs = sym_series(terms_for(model, generator));
  const RingElement g = RingElement::generator(model, generator);
  RingElement out(model), power = RingElement::constant(model, 1);
  for (const auto& c : coeffs) {
    out += power * c.compose(n);
    power = power * g;
  }
  return out;
}

RingElement dn_ch_sym_at_zero(int order, const ModelPtr& model, std::string_view generator) {
  if (order < 0) throw InvalidArgument("derivative order must be nonnegative");
  const auto coeffs = sym_series(terms_for(model, generator));
  const RingElement g = RingElement::generator(model, generator);
  RingElement out(model), power = RingElement::constant(model, 1);
  for (auto c : coeffs) {
    for (int i = 0; i < order; ++i) c = c.derivative();
    out += power * UniPoly(c(Rational(0)));
    power = power * g;
  }
  return out;
}

ModelPtr u_series_model() {
  static const ModelPtr model = RingModel::create({"u-series", {{"u", 4}}, {}, 16, {}});
  return model;
}

RingElement dn_ch_sym_at_zero(int order) { return dn_ch_sym_at_zero(order, u_series_model(), "u"); }

}  // namespace twistor
