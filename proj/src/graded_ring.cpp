#include "twistor/graded_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "twistor/errors.hpp"
#include "twistor/linear.hpp"

namespace twistor {
namespace {

constexpr long kRewriteBudget = 1'000'000;

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

void accumulate(Terms& t, const Exponents& e, const UniPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

const ModelPtr& common_model(const ModelPtr& a, const ModelPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw InvalidArgument("ring elements belong to different models: " + a->name() + ", " + b->name());
}

}  // namespace

// ---------------------------------------------------------------- RingModel

ModelPtr RingModel::create(ModelSpec spec) {
  auto model = std::shared_ptr<const RingModel>(new RingModel(std::move(spec)));
  model->validate();
  return model;
}

void RingModel::validate() const {
  if (spec_.top_degree < 0) throw InvalidArgument(name() + ": negative top degree");
  for (const auto& g : spec_.generators)
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw InvalidArgument(name() + ": generator " + g.name + " must have positive even degree");
  for (const auto& r : spec_.rules) {
    if (r.lhs.size() != arity()) throw InvalidArgument(name() + ": rule lhs has wrong arity");
    const int d = degree_of(r.lhs);
    for (const auto& [e, c] : r.rhs) {
      if (e.size() != arity()) throw InvalidArgument(name() + ": rule rhs has wrong arity");
      if (degree_of(e) != d) throw InvalidArgument(name() + ": rule " + monomial_str(r.lhs) + " is not homogeneous");
    }
  }
  for (const auto& [e, v] : spec_.pairing) {
    if (e.size() != arity()) throw InvalidArgument(name() + ": pairing key has wrong arity");
    if (degree_of(e) != spec_.top_degree)
      throw InvalidArgument(name() + ": pairing entry " + monomial_str(e) + " is not of top degree");
  }
}

std::size_t RingModel::index_of(std::string_view generator) const {
  for (std::size_t i = 0; i < arity(); ++i)
    if (spec_.generators[i].name == generator) return i;
  throw InvalidArgument(name() + ": no generator named " + std::string(generator));
}

bool RingModel::has_generator(std::string_view generator) const {
  return std::any_of(spec_.generators.begin(), spec_.generators.end(),
                     [&](const GeneratorSpec& g) { return g.name == generator; });
}

int RingModel::degree_of(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * spec_.generators[i].degree;
  return d;
}

bool RingModel::is_normal(const Exponents& e) const {
  return std::none_of(spec_.rules.begin(), spec_.rules.end(),
                      [&](const RewriteRule& r) { return divides(r.lhs, e); });
}

Terms RingModel::reduce(Terms terms) const {
  Terms out;
  std::vector<std::pair<Exponents, UniPoly>> pending(terms.begin(), terms.end());
  long steps = 0;
  while (!pending.empty()) {
    auto [e, c] = std::move(pending.back());
    pending.pop_back();
    if (c.is_zero() || degree_of(e) > spec_.top_degree) continue;
    const auto rule = std::find_if(spec_.rules.begin(), spec_.rules.end(),
                                   [&](const RewriteRule& r) { return divides(r.lhs, e); });
    if (rule == spec_.rules.end()) {
      accumulate(out, e, c);
      continue;
    }
    if (++steps > kRewriteBudget) throw NonTerminatingRewrite(name() + ": rewrite budget exhausted");
    for (const auto& [re, rc] : rule->rhs) {
      Exponents next = e;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += re[i] - rule->lhs[i];
      pending.emplace_back(std::move(next), c * rc);
    }
  }
  return out;
}

std::vector<Exponents> RingModel::normal_monomials(int degree) const {
  std::vector<Exponents> out;
  Exponents e(arity(), 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == arity()) {
      if (remaining == 0 && is_normal(e)) out.push_back(e);
      return;
    }
    const int d = spec_.generators[i].degree;
    for (int k = 0; k * d <= remaining; ++k) {
      e[i] = k;
      self(self, i + 1, remaining - k * d);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::string RingModel::monomial_str(const Exponents& e) const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += spec_.generators[i].name;
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// -------------------------------------------------------------- RingElement

RingElement::RingElement(ModelPtr model, Terms terms) : model_(std::move(model)) {
  if (!model_) throw InvalidArgument("ring element needs a model");
  for (const auto& [e, c] : terms)
    if (e.size() != model_->arity()) throw InvalidArgument(model_->name() + ": exponent vector has wrong arity");
  terms_ = model_->reduce(std::move(terms));
}

RingElement RingElement::constant(ModelPtr model, const UniPoly& c) {
  Exponents zero(model->arity(), 0);
  return RingElement(std::move(model), Terms{{std::move(zero), c}});
}

RingElement RingElement::generator(ModelPtr model, std::string_view name) {
  Exponents e(model->arity(), 0);
  e[model->index_of(name)] = 1;
  return RingElement(std::move(model), Terms{{std::move(e), UniPoly(1)}});
}

RingElement RingElement::monomial(ModelPtr model, Exponents e, const UniPoly& c) {
  return RingElement(std::move(model), Terms{{std::move(e), c}});
}

RingElement RingElement::component(int degree) const {
  RingElement out(model_);
  for (const auto& [e, c] : terms_)
    if (model_->degree_of(e) == degree) out.terms_.emplace(e, c);
  return out;
}

UniPoly RingElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? UniPoly() : it->second;
}

UniPoly RingElement::constant_term() const {
  if (!model_) return {};
  return coefficient(Exponents(model_->arity(), 0));
}

bool RingElement::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

RingElement RingElement::map_coefficients(const std::function<UniPoly(const UniPoly&)>& f) const {
  if (!model_) return {};
  Terms t;
  for (const auto& [e, c] : terms_) accumulate(t, e, f(c));
  return RingElement(model_, std::move(t));
}

RingElement RingElement::pow(unsigned e) const {
  if (!model_) throw InvalidArgument("pow of a model-less element");
  RingElement result = constant(model_, 1), base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, UniPoly>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const int da = model_->degree_of(a.first), db = model_->degree_of(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      const Rational v = c.constant_term();
      negative = v.sign() < 0;
      const Rational mag = v.abs();
      if (unit_monomial || mag != Rational(1)) coeff = mag.str();
    } else {
      coeff = "(" + c.str() + ")";
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    os << coeff;
    if (!unit_monomial) os << (coeff.empty() ? "" : "*") << model_->monomial_str(e);
  }
  return os.str();
}

RingElement& RingElement::operator+=(const RingElement& o) {
  model_ = common_model(model_, o.model_);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  model_ = common_model(model_, o.model_);
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

RingElement& RingElement::operator*=(const UniPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  // Polynomial coefficients can cancel only when c is zero, so no cleanup.
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  const ModelPtr& model = common_model(a.model_, b.model_);
  if (!model) return {};
  const int top = model->top_degree();
  Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = model->degree_of(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + model->degree_of(eb) > top) continue;
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      accumulate(t, e, ca * cb);
    }
  }
  return RingElement(model, std::move(t));
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.model_ == b.model_ && a.terms_ == b.terms_;
}

// -------------------------------------------------------------- operations

RingElement normalize(const RingElement& x) {
  if (!x.model()) return x;
  return RingElement(x.model(), x.terms());
}

RingElement multiply(const RingElement& a, const RingElement& b) { return a * b; }

RingElement exp_nilpotent(const RingElement& x, const UniPoly& t) {
  if (!x.model()) throw InvalidArgument("exp_nilpotent of a model-less element");
  if (!x.constant_term().is_zero()) throw NonNilpotent("exp_nilpotent: argument has a degree-0 part");
  RingElement result = RingElement::constant(x.model(), 1);
  RingElement term = result;
  const RingElement tx = x * t;
  for (long i = 1; !tx.is_zero(); ++i) {
    term = term * tx * UniPoly(Rational(1, i));
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

UniPoly pair(const RingElement& x) {
  if (!x.model()) return {};
  const auto& model = *x.model();
  UniPoly total;
  for (const auto& [e, c] : x.terms()) {
    if (model.degree_of(e) != model.top_degree()) continue;
    auto it = model.pairing().find(e);
    if (it == model.pairing().end())
      throw UnknownMonomial(model.name() + ": no pairing value for " + model.monomial_str(e));
    total += c * it->second;
  }
  return total;
}

Rational pair_rational(const RingElement& x) {
  const UniPoly p = pair(x);
  if (!p.is_constant()) throw InvalidArgument("pairing depends on the formal parameter: " + p.str());
  return p.constant_term();
}

RingElement substitute(const RingElement& x, const std::vector<RingElement>& images) {
  if (!x.model()) return {};
  if (images.size() != x.model()->arity()) throw InvalidArgument("substitute: one image per generator required");
  ModelPtr target;
  for (const auto& im : images) target = common_model(target, im.model());
  if (!target) throw InvalidArgument("substitute: images carry no model");
  // Cache generator powers; exponents here stay small.
  std::vector<std::vector<RingElement>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const RingElement& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(RingElement::constant(target, 1));
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * images[i]);
    return p[static_cast<std::size_t>(k)];
  };
  RingElement out(target);
  for (const auto& [e, c] : x.terms()) {
    RingElement term = RingElement::constant(target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

RingElement transfer(const RingElement& x, const ModelPtr& target) {
  if (!x.model()) return RingElement(target);
  const auto& gens = x.model()->spec().generators;
  std::vector<RingElement> images;
  images.reserve(gens.size());
  for (const auto& g : gens) {
    if (target->has_generator(g.name)) {
      images.push_back(RingElement::generator(target, g.name));
      continue;
    }
    // Generators absent from the target must not occur in x.
    const std::size_t i = x.model()->index_of(g.name);
    for (const auto& [e, c] : x.terms())
      if (e[i] != 0) throw InvalidArgument("transfer: " + target->name() + " lacks generator " + g.name);
    images.emplace_back(target);
  }
  return substitute(x, images);
}

RingElement pushforward_flag(const RingElement& x, const ModelPtr& base) {
  if (!x.model()) return RingElement(base);
  const auto& model = *x.model();
  const std::size_t fiber = model.index_of("l");
  std::vector<std::size_t> map(model.arity());
  for (std::size_t i = 0; i < model.arity(); ++i)
    if (i != fiber) map[i] = base->index_of(model.spec().generators[i].name);
  Terms t;
  for (const auto& [e, c] : x.terms()) {
    if (e[fiber] == 0) continue;
    if (e[fiber] > 1) throw InvalidArgument("pushforward_flag: element is not reduced modulo l^2");
    Exponents be(base->arity(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != fiber) be[map[i]] += e[i];
    accumulate(t, be, c * UniPoly(2));
  }
  return RingElement(base, std::move(t));
}

std::vector<Rational> find_middle_relation(int degree, const std::vector<RingElement>& candidates,
                                           const std::vector<RingElement>& multipliers,
                                           const ModelPtr& model) {
  for (const auto& c : candidates) {
    if (c.model() != model) throw InvalidArgument("find_middle_relation: candidate from another model");
    if (c.component(degree) != c) throw InvalidArgument("find_middle_relation: candidate not of degree " + std::to_string(degree));
  }
  RatMatrix m(multipliers.size(), candidates.size());
  for (std::size_t r = 0; r < multipliers.size(); ++r)
    for (std::size_t c = 0; c < candidates.size(); ++c) m(r, c) = pair_rational(candidates[c] * multipliers[r]);
  const auto basis = nullspace(m);
  if (basis.empty()) throw NoRelation("no linear relation among the candidates");
  if (basis.size() > 1)
    throw AmbiguousRelation("relation space has dimension " + std::to_string(basis.size()));
  // Scale to a primitive integer vector with positive leading entry.
  const UniPoly as_poly(basis.front());
  const UniPoly prim = as_poly.primitive_part();
  std::vector<Rational> out(candidates.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = prim.coeff(static_cast<int>(i));
  const auto lead = std::find_if(out.begin(), out.end(), [](const Rational& x) { return !x.is_zero(); });
  if (lead != out.end() && lead->sign() < 0)
    for (auto& x : out) x = -x;
  return out;
}

}  // namespace twistor
