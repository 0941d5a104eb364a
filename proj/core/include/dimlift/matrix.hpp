#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dimlift/rational.hpp"

namespace dimlift {

/// Dense row-major matrix of rationals. A linear map Q^cols -> Q^rows.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty = 0);
  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] RatVector row(std::size_t r) const;
  [[nodiscard]] RatVector column(std::size_t c) const;
  void set_column(std::size_t c, const RatVector& v);

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  [[nodiscard]] RatMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] RatVector apply(const RatVector& v) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const Rational& s, const RatMatrix& m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product a * b. Throws ShapeError unless a.cols() == b.rows().
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return mat_mul(a, b); }

}  // namespace dimlift
