#pragma once

#include <gmpxx.h>

#include <vector>

#include "twistor/unipoly.hpp"

namespace twistor {

/// Positive roots e_i - e_j, e_i + e_j (i < j) of so(2n) and rho = (n-1, ..., 1, 0).
struct RootSystemD {
  int n = 0;
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> rho;

  static RootSystemD of_rank(int n);
};

/// Weyl dimension formula for the irreducible so(2n)-module with highest
/// weight `weight`. Throws NonDominant unless weight is weakly decreasing
/// and nonnegative, InvalidArgument on a length mismatch or n < 2.
mpz_class weyl_dim(int n, const std::vector<long>& weight);

enum class DimFamily { A, B };

/// A: (k+1)(k+2)^3(2k+5)(k+3)^3(k+4)/4320, the dimension of V(k,k,0,0).
/// B: k(k+1)^2(k+2)(2k+5)(k+3)(k+4)^2(k+5)/1440, the dimension of V(k+1,k-1,0,0).
UniPoly dim_closed(DimFamily which);

}  // namespace twistor
