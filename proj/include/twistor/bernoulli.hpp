#pragma once

#include "twistor/rational.hpp"

namespace twistor {

/// B_j in the positive convention of the multiplicative-sequence literature:
/// B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ... i.e. |b_{2j}| in the classical
/// numbering. Memoized; safe to call concurrently. Throws InvalidArgument for
/// j < 1.
Rational bernoulli(int j);

}  // namespace twistor
