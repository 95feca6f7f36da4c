#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "foliate/exactmath.hpp"

namespace foliate {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Gaussian elimination with row pivoting.
  Rational determinant() const;

  /// Solves A x = rhs; std::nullopt when A is singular.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

  std::vector<Rational> multiply(const std::vector<Rational>& x) const;

  /// Determinants of the leading k x k blocks, k = 1..n.
  std::vector<Rational> leading_principal_minors() const;

  /// Sylvester's criterion on the leading principal minors.
  bool is_positive_definite() const;

  RationalMatrix submatrix(const std::vector<std::size_t>& indices) const;
  RationalMatrix negated() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace foliate
