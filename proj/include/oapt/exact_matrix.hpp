#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "oapt/gaussian_rational.hpp"

namespace oapt {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  ExactMatrix transpose() const;
  ExactMatrix conj() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const;

  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

struct RrefResult {
  ExactMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const ExactMatrix& m);

/// Basis of {v : M v = 0} (v a column vector), one vector per free column.
std::vector<Vector> kernel(const ExactMatrix& m);

/// Inverse of a square nonsingular matrix; throws Precondition if singular.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace oapt
