#pragma once

#include <cstddef>

#include "oapt/exact_matrix.hpp"

namespace oapt {

/// The standard Hermitian inner product on C^n restricted to Gaussian
/// rationals: <u, v> = sum_i u_i * conj(v_i). Linear in the first argument,
/// conjugate-linear in the second.
class HermitianForm {
 public:
  explicit HermitianForm(std::size_t n) : n_(n) {}

  std::size_t dimension() const { return n_; }

  GaussianRational inner(const Vector& u, const Vector& v) const;
  /// <v, v>; real and nonnegative.
  mpq_class norm2(const Vector& v) const;
  bool orthogonal(const Vector& u, const Vector& v) const { return inner(u, v).is_zero(); }

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  void check(const Vector& v) const;

  std::size_t n_;
};

}  // namespace oapt
