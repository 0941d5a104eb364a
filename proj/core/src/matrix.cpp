#include "dimlift/matrix.hpp"

#include <sstream>

#include "dimlift/error.hpp"

namespace dimlift {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty) {
  RatMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void RatMatrix::set_column(std::size_t c, const RatVector& v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.at(r, c) = at(r0 + r, c0 + c);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) at(r0 + r, c0 + c) = b.at(r, c);
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = at(r, c);
      if (!a.is_zero() && !v[c].is_zero()) acc += a.raw() * v[c].raw();
    }
    out[r] = Rational(acc);
  }
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m) {
  RatMatrix r(m);
  for (auto& x : r.data_) x *= s;
  return r;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  // Accumulate in raw mpq to avoid renormalising a wrapper per term; the
  // operands of positive homomorphisms are mostly zero, so skip those.
  std::vector<mpq_class> acc(m);
  RatMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : acc) x = 0;
    for (std::size_t l = 0; l < k; ++l) {
      const auto& ail = a.at(i, l);
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const auto& blj = b.at(l, j);
        if (!blj.is_zero()) acc[j] += ail.raw() * blj.raw();
      }
    }
    for (std::size_t j = 0; j < m; ++j) out.at(i, j) = Rational(acc[j]);
  }
  return out;
}

}  // namespace dimlift
