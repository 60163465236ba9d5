#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "projcalc/exact/gaussian_rational.hpp"

namespace projcalc::exact {

// Dense row-major matrix over Q(i). Zero-sized dimensions are allowed so that
// empty bases and empty rank factors have a representation.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ExactMatrix diagonal(const std::vector<GaussianRational>& d);
  // Convenience for tests and fixtures: nested rows.
  static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<GaussianRational>& entries() const { return data_; }

  bool is_zero() const;
  ExactMatrix adjoint() const;
  ExactMatrix column(std::size_t c) const;
  ExactMatrix columns(const std::vector<std::size_t>& idx) const;
  ExactMatrix top_rows(std::size_t count) const;
  ExactMatrix row_block(std::size_t first, std::size_t count) const;
  // [this | right]
  ExactMatrix hconcat(const ExactMatrix& right) const;

  // Exact squared Frobenius norm.
  mpq_class frobenius_norm2() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row echelon form. The pivot in each column is the first nonzero
// entry at or below the current row.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

struct RankFactors {
  ExactMatrix left;   // rows x r, the pivot columns of m
  ExactMatrix right;  // r x cols, the nonzero rows of rref(m)
};

// m = left * right with both factors of full rank r.
RankFactors rank_factorize(const ExactMatrix& m);

// Inverse of a square matrix; nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

// Basis of the right null space {x : m x = 0}, one vector per column.
ExactMatrix null_space(const ExactMatrix& m);

}  // namespace projcalc::exact
