#pragma once

#include <string_view>
#include <vector>

#include "twistor/graded_ring.hpp"
#include "twistor/rational.hpp"
#include "twistor/unipoly.hpp"

namespace twistor {

/// Which elementary symmetric functions a genus is written in: Pontrjagin
/// classes (symmetric in the squares x_i^2 of the Chern roots) or Chern
/// classes (symmetric in the roots x_i themselves).
enum class ClassKind { pontrjagin, chern };

/// Taylor coefficients of the characteristic power series Q with Q(0) = 1.
/// For ClassKind::pontrjagin the variable is z = x^2.
class CharPowerSeries {
 public:
  explicit CharPowerSeries(std::vector<Rational> coefficients);

  /// (x/2)/sinh(x/2) as a series in z = x^2.
  static CharPowerSeries a_hat(std::size_t terms);
  /// x/tanh(x) as a series in z = x^2.
  static CharPowerSeries l_genus(std::size_t terms);
  /// x/(1 - e^{-x}).
  static CharPowerSeries todd(std::size_t terms);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Universal polynomials K_1..K_N of a multiplicative sequence, as elements
/// of a formal ring whose generators p1..pN (or c1..cN) have weight j.
struct GenusPolynomials {
  ClassKind kind;
  ModelPtr formal;
  std::vector<RingElement> polys;

  int size() const noexcept { return static_cast<int>(polys.size()); }
  /// K_j, 1-based.
  const RingElement& operator[](int j) const { return polys.at(static_cast<std::size_t>(j - 1)); }
};

/// Computed once per (series, up_to, kind) and cached; thread safe.
const GenusPolynomials& genus_polynomials(const CharPowerSeries& q, int up_to, ClassKind kind);

struct ChernData {
  int rank = 0;
  std::vector<RingElement> classes;  // c_1..c_rank

  /// c_i, 1-based; zero beyond the rank.
  RingElement c(int i) const;
};

struct PontryaginData {
  std::vector<RingElement> classes;  // p_1..p_n

  RingElement p(int i) const;
};

/// 1 + K_1(classes) + K_2(classes) + ... in the given model. Missing classes
/// count as zero.
RingElement evaluate_genus(const GenusPolynomials& k, const std::vector<RingElement>& classes,
                           const ModelPtr& model);
RingElement evaluate_genus(const GenusPolynomials& k, const ChernData& data, const ModelPtr& model);
RingElement evaluate_genus(const GenusPolynomials& k, const PontryaginData& data, const ModelPtr& model);

/// Chern classes from a Chern character via Newton's identities on the power
/// sums s_j = j! ch_j. Throws RankMismatch when ch_0 != rank.
ChernData chern_from_character(const RingElement& ch, int rank);
/// Inverse of chern_from_character.
RingElement character_from_chern(const ChernData& c, const ModelPtr& model);

/// p_i = (-1)^i c_{2i}(E (x) C).
PontryaginData pontrjagin_from_chern(const ChernData& c, const ModelPtr& model);

/// Pontrjagin classes of a real bundle of the given rank from the Chern
/// character of its complexification, sum_i 2 cosh(x_i).
PontryaginData pontrjagin_from_complexified_character(const RingElement& ch, int real_rank);

/// ch(S^n U) for a rank-2 bundle U with ch(U) = e^{t} + e^{-t}, t^2 equal to
/// the named generator. n is a polynomial in the model's formal parameter
/// (a constant for a concrete power). The result is
/// sinh((n+1)t)/sinh(t), expanded with coefficients polynomial in n.
RingElement ch_sym_rank2(const UniPoly& n, const ModelPtr& model, std::string_view generator = "u");

/// d^order/dn^order of ch(S^n U) at n = 0.
RingElement dn_ch_sym_at_zero(int order, const ModelPtr& model, std::string_view generator = "u");
/// Same, in a standalone model with one generator u of degree 4, top degree 16.
RingElement dn_ch_sym_at_zero(int order);

/// Model used by the standalone overload above.
ModelPtr u_series_model();

}  // namespace twistor
