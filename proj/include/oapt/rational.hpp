#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace oapt {

/// Exact rational that stays in two machine words while numerator and
/// denominator fit, and moves to GMP only when they do not. Always in lowest
/// terms with a positive denominator, and small whenever it fits, so equal
/// values have equal representations.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : num_(v) {  // NOLINT(google-explicit-constructor)
    if (v == INT64_MIN) set_big(mpq_class(v));
  }
  explicit Rational(const mpq_class& q);
  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) *this = Rational(o);
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  mpq_class to_mpq() const;
  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws on division by zero.
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend int cmp(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  void set_big(mpq_class q);
  template <typename Op>
  void big_op(const Rational& o, Op op);
  void set_small(__int128 num, __int128 den, bool reduced = false);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace oapt
