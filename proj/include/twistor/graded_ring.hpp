#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twistor/rational.hpp"
#include "twistor/unipoly.hpp"

namespace twistor {

/// Exponent vector, one entry per generator of the owning model.
using Exponents = std::vector<int>;
/// Sparse monomial -> coefficient map. Coefficients are polynomials in a
/// single formal parameter (the twist k, or n for symmetric powers); plain
/// rational coefficients are the constant polynomials.
using Terms = std::map<Exponents, UniPoly>;

struct GeneratorSpec {
  std::string name;
  int degree;  // real cohomological degree, positive and even
};

/// lhs -> rhs, with lhs a single monomial and rhs homogeneous of equal degree.
struct RewriteRule {
  Exponents lhs;
  Terms rhs;
};

struct ModelSpec {
  std::string name;
  std::vector<GeneratorSpec> generators;
  std::vector<RewriteRule> rules;
  int top_degree = 0;
  /// Fundamental-class pairing on top-degree normal-form monomials.
  std::map<Exponents, Rational> pairing;
};

class RingModel;
using ModelPtr = std::shared_ptr<const RingModel>;

/// A truncated graded commutative Q-algebra: generators, rewrite rules,
/// top degree and the pairing against a fundamental class. Immutable.
class RingModel {
 public:
  static ModelPtr create(ModelSpec spec);

  const ModelSpec& spec() const noexcept { return spec_; }
  const std::string& name() const noexcept { return spec_.name; }
  int top_degree() const noexcept { return spec_.top_degree; }
  std::size_t arity() const noexcept { return spec_.generators.size(); }
  const std::map<Exponents, Rational>& pairing() const noexcept { return spec_.pairing; }

  /// Index of a generator; throws InvalidArgument if absent.
  std::size_t index_of(std::string_view generator) const;
  bool has_generator(std::string_view generator) const;

  int degree_of(const Exponents& e) const;
  /// Normal form of a term map: rules applied until no lhs divides a
  /// surviving monomial, terms above the top degree dropped.
  Terms reduce(Terms terms) const;
  /// All normal-form monomials of the given degree.
  std::vector<Exponents> normal_monomials(int degree) const;
  bool is_normal(const Exponents& e) const;

  std::string monomial_str(const Exponents& e) const;

 private:
  explicit RingModel(ModelSpec spec) : spec_(std::move(spec)) {}
  void validate() const;

  ModelSpec spec_;
};

/// Element of a RingModel. Always held in normal form. A default-constructed
/// element is a model-less zero that adopts the model of whatever it is
/// combined with.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(ModelPtr model) : model_(std::move(model)) {}
  RingElement(ModelPtr model, Terms terms);

  static RingElement constant(ModelPtr model, const UniPoly& c);
  static RingElement generator(ModelPtr model, std::string_view name);
  static RingElement monomial(ModelPtr model, Exponents e, const UniPoly& c = 1);

  const ModelPtr& model() const noexcept { return model_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Homogeneous part of the given real degree.
  RingElement component(int degree) const;
  UniPoly coefficient(const Exponents& e) const;
  /// Degree-0 coefficient.
  UniPoly constant_term() const;
  /// True when every coefficient is a constant polynomial.
  bool has_rational_coefficients() const;

  RingElement map_coefficients(const std::function<UniPoly(const UniPoly&)>& f) const;
  RingElement pow(unsigned e) const;

  /// Ascending degree, e.g. "2 + u + 1/12*u^2".
  std::string str() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const UniPoly& c);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const UniPoly& c) { return a *= c; }
  friend RingElement operator*(const UniPoly& c, RingElement a) { return a *= c; }
  friend RingElement operator-(const RingElement& a) { return a * UniPoly(-1); }
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  ModelPtr model_;
  Terms terms_;
};

RingElement normalize(const RingElement& x);
RingElement multiply(const RingElement& a, const RingElement& b);

/// sum_i t^i x^i / i!, truncated at the top degree. Throws NonNilpotent when
/// x has a degree-0 part.
RingElement exp_nilpotent(const RingElement& x, const UniPoly& t = 1);

/// Top-degree part of x contracted against the pairing table. Throws
/// UnknownMonomial when a top-degree monomial has no entry.
UniPoly pair(const RingElement& x);
/// pair() for elements known to have rational coefficients.
Rational pair_rational(const RingElement& x);

/// Ring homomorphism sending generator i of x's model to images[i].
RingElement substitute(const RingElement& x, const std::vector<RingElement>& images);
/// Re-expresses x in another model, matching generators by name.
RingElement transfer(const RingElement& x, const ModelPtr& target);

/// Fiber integration over the CP^1 fibres of the twistor fibration:
/// x = l*p + q maps to 2*p in the base model. Requires a generator "l".
RingElement pushforward_flag(const RingElement& x, const ModelPtr& base);

/// Finds the coefficients (a_1..a_n), unique up to scale, with
/// sum a_i * candidate_i pairing to zero against every multiplier. The result
/// is primitive integral with positive leading entry. Throws NoRelation or
/// AmbiguousRelation when the solution space is not one-dimensional.
std::vector<Rational> find_middle_relation(int degree, const std::vector<RingElement>& candidates,
                                           const std::vector<RingElement>& multipliers,
                                           const ModelPtr& model);

}  // namespace twistor
