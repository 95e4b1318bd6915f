#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "twistor/rational.hpp"

namespace twistor {

/// Dense rectangular matrix of rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Unique solution of A x = b by rational Gaussian elimination. Throws
/// SingularMatrix when A is not invertible, InvalidArgument on shape errors.
std::vector<Rational> solve_linear_system(const RatMatrix& a, const std::vector<Rational>& b);

/// Basis of { x : A x = 0 }, one vector per free column of the reduced row
/// echelon form.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& a);

}  // namespace twistor
