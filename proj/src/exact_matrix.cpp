#include "projcalc/exact/matrix.hpp"

#include <sstream>
#include <utility>

#include "projcalc/errors.hpp"
#include "projcalc/exact/kernels.hpp"

namespace projcalc::exact {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("entry count does not match rows * cols");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  }
  return out;
}

ExactMatrix ExactMatrix::column(std::size_t c) const { return columns({c}); }

ExactMatrix ExactMatrix::columns(const std::vector<std::size_t>& idx) const {
  ExactMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
  }
  return out;
}

ExactMatrix ExactMatrix::top_rows(std::size_t count) const { return row_block(0, count); }

ExactMatrix ExactMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionMismatch("row block out of range");
  ExactMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  }
  return out;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hconcat row mismatch");
  ExactMatrix out(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

mpq_class ExactMatrix::frobenius_norm2() const {
  mpq_class s = 0;
  for (const auto& z : data_) s += z.norm2();
  return s;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() * b.cols() * a.cols() >= kernels::kParallelWorkThreshold) {
    return kernels::multiply_parallel(a, b);
  }
  return kernels::multiply_serial(a, b);
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& z : out.data_) z = -z;
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult out{m, {}, 0};
  ExactMatrix& r = out.reduced;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && r(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(piv, j), r(lead, j));
    }
    const GaussianRational inv = GaussianRational(1) / r(lead, c);
    for (std::size_t j = c; j < cols; ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || r(i, c).is_zero()) continue;
      const GaussianRational f = r(i, c);
      for (std::size_t j = c; j < cols; ++j) r(i, j) -= f * r(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

RankFactors rank_factorize(const ExactMatrix& m) {
  const RrefResult red = rref(m);
  return {m.columns(red.pivots), red.reduced.top_rows(red.rank)};
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult red = rref(m.hconcat(ExactMatrix::identity(n)));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
  }
  return out;
}

ExactMatrix null_space(const ExactMatrix& m) {
  const RrefResult red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  ExactMatrix basis(cols, cols - red.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t r = 0; r < red.rank; ++r) basis(red.pivots[r], k) = -red.reduced(r, free);
    ++k;
  }
  return basis;
}

}  // namespace projcalc::exact
