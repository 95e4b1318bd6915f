#include "twistor/representation.hpp"

#include <string>

#include "twistor/errors.hpp"
#include "twistor/rational.hpp"

namespace twistor {

RootSystemD RootSystemD::of_rank(int n) {
  if (n < 2) throw InvalidArgument("D_n needs n >= 2, got " + std::to_string(n));
  RootSystemD r;
  r.n = n;
  for (int i = 0; i < n; ++i) r.rho.push_back(n - 1 - i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int sign : {-1, 1}) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        a[j] = sign;
        r.positive_roots.push_back(std::move(a));
      }
  return r;
}

mpz_class weyl_dim(int n, const std::vector<long>& weight) {
  const auto roots = RootSystemD::of_rank(n);
  if (weight.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("weight has " + std::to_string(weight.size()) + " entries, rank is " + std::to_string(n));
  for (std::size_t i = 0; i < weight.size(); ++i) {
    if (weight[i] < 0) throw NonDominant("weight entries must be nonnegative");
    if (i > 0 && weight[i] > weight[i - 1]) throw NonDominant("weight entries must be weakly decreasing");
  }
  Rational num(1), den(1);
  for (const auto& a : roots.positive_roots) {
    long top = 0, bottom = 0;
    for (int i = 0; i < n; ++i) {
      top += a[i] * (roots.rho[i] + weight[i]);
      bottom += a[i] * roots.rho[i];
    }
    num *= Rational(top);
    den *= Rational(bottom);
  }
  const Rational d = num / den;
  if (!d.is_integer()) throw Error("weyl_dim: non-integral result " + d.str());
  return d.numerator();
}

UniPoly dim_closed(DimFamily which) {
  if (which == DimFamily::A)
    return from_roots({-1, -2, -2, -2, Rational(-5, 2), -3, -3, -3, -4}, Rational(2, 4320));
  return from_roots({0, -1, -1, -2, Rational(-5, 2), -3, -4, -4, -5}, Rational(2, 1440));
}

}  // namespace twistor
