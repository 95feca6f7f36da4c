#include "foliate/matrix.hpp"

#include <utility>

#include "foliate/error.hpp"

namespace foliate {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  RationalMatrix out(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != m) {
      throw DomainError("matrix.ragged", "matrix rows have different lengths");
    }
    for (std::size_t c = 0; c < m; ++c) out.at(r, c) = Rational(rows[r][c]);
  }
  return out;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) {
    throw DomainError("matrix.not_square", "determinant of a non-square matrix");
  }
  RationalMatrix work = *this;
  Rational det(1);
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).sign() == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      det = -det;
    }
    const Rational p = work.at(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col).sign() == 0) continue;
      const Rational factor = work.at(r, col) / p;
      for (std::size_t c = col; c < n; ++c) work.at(r, c) -= factor * work.at(col, c);
    }
  }
  return det;
}

std::optional<std::vector<Rational>> RationalMatrix::solve(const std::vector<Rational>& rhs) const {
  if (rows_ != cols_ || rhs.size() != rows_) {
    throw DomainError("matrix.shape", "solve needs a square system with matching right-hand side");
  }
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  std::vector<Rational> b = rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).sign() == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      std::swap(b[pivot], b[col]);
    }
    const Rational p = work.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col).sign() == 0) continue;
      const Rational factor = work.at(r, col) / p;
      for (std::size_t c = col; c < n; ++c) work.at(r, c) -= factor * work.at(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= work.at(i, c) * x[c];
    x[i] = acc / work.at(i, i);
  }
  return x;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) {
    throw DomainError("matrix.shape", "vector length does not match matrix columns");
  }
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * x[c];
  }
  return out;
}

std::vector<Rational> RationalMatrix::leading_principal_minors() const {
  if (rows_ != cols_) {
    throw DomainError("matrix.not_square", "minors of a non-square matrix");
  }
  // Without row swaps the k-th pivot is the ratio of consecutive leading
  // minors. After a zero pivot the remaining minors are evaluated directly.
  std::vector<Rational> minors;
  minors.reserve(rows_);
  RationalMatrix work = *this;
  Rational running(1);
  bool degenerate = false;
  for (std::size_t k = 0; k < rows_; ++k) {
    if (degenerate) {
      std::vector<std::size_t> idx(k + 1);
      for (std::size_t i = 0; i <= k; ++i) idx[i] = i;
      minors.push_back(submatrix(idx).determinant());
      continue;
    }
    const Rational p = work.at(k, k);
    running *= p;
    minors.push_back(running);
    if (p.sign() == 0) {
      degenerate = true;
      continue;
    }
    for (std::size_t r = k + 1; r < rows_; ++r) {
      if (work.at(r, k).sign() == 0) continue;
      const Rational factor = work.at(r, k) / p;
      for (std::size_t c = k; c < cols_; ++c) work.at(r, c) -= factor * work.at(k, c);
    }
  }
  return minors;
}

bool RationalMatrix::is_positive_definite() const {
  for (const auto& m : leading_principal_minors()) {
    if (m.sign() <= 0) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  RationalMatrix out(indices.size(), indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) out.at(r, c) = at(indices[r], indices[c]);
  }
  return out;
}

RationalMatrix RationalMatrix::negated() const {
  RationalMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

}  // namespace foliate
