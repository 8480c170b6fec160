#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "zpdlab/scalar.hpp"

namespace zpdlab {

// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, Vector entries);
  // Integer literal rows, e.g. RatMatrix{{1, 2}, {3, 4}}.
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  // E_ij with zero-based indices.
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const Vector& entries() const { return entries_; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  RatMatrix transpose() const;
  Scalar trace() const;

  Vector apply(const Vector& v) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Scalar& c);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector entries_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Scalar& c, RatMatrix m);

RatMatrix power(const RatMatrix& m, unsigned k);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);
// Vertical concatenation; column counts must agree.
RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom);

// Gauss-Jordan inverse; throws ArgumentError when singular.
RatMatrix inverse(const RatMatrix& m);
Scalar determinant(const RatMatrix& m);

}  // namespace zpdlab
