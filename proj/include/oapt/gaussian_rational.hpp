#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "oapt/rational.hpp"

namespace oapt {

/// Exact complex number re + i*im with arbitrary-precision rational parts.
/// Both parts stay canonical after arithmetic, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const mpq_class& re, const mpq_class& im = 0) : re_(re), im_(im) {}

  static GaussianRational from_parts(std::int64_t re_num, std::int64_t re_den,
                                     std::int64_t im_num, std::int64_t im_den);
  static GaussianRational i() { return {Parts{}, Rational(0), Rational(1)}; }

  mpq_class re() const { return re_.to_mpq(); }
  mpq_class im() const { return im_.to_mpq(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {Parts{}, re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm2() const { return norm2_exact().to_mpq(); }
  Rational norm2_exact() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {Parts{}, -re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (re first, then im); only for use as a container key.
  friend int compare(const GaussianRational& a, const GaussianRational& b);

  /// "a", "a/b", "a+bi", "-c/d*i" style rendering.
  std::string to_string() const;

 private:
  struct Parts {};
  GaussianRational(Parts, Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace oapt
