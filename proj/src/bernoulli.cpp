#include "twistor/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "twistor/errors.hpp"

namespace twistor {
namespace {

// Classical numbers b_0 = 1, b_1 = -1/2, ... from sum_{i<=n} C(n+1, i) b_i = 0.
class ClassicalTable {
 public:
  Rational get(unsigned n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) {
      const auto m = static_cast<unsigned>(values_.size());
      Rational acc;
      for (unsigned i = 0; i < m; ++i) acc += binomial(m + 1, i) * values_[i];
      values_.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return values_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

ClassicalTable& table() {
  static ClassicalTable t;
  return t;
}

}  // namespace

Rational bernoulli(int j) {
  if (j < 1) throw InvalidArgument("bernoulli: index must be >= 1");
  return table().get(2 * static_cast<unsigned>(j)).abs();
}

}  // namespace twistor
