#include "oapt/rational.hpp"

#include <climits>
#include <utility>

#include "oapt/error.hpp"

namespace oapt {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  // Binary gcd: no hardware division.
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

i128 gcd128(i128 a, i128 b) {
  using u128 = unsigned __int128;
  u128 x = static_cast<u128>(abs128(a));
  u128 y = static_cast<u128>(abs128(b));
  // Euclid steps until both fit a machine word, then the fast path.
  while ((x >> 64) != 0 || (y >> 64) != 0) {
    if (y == 0) return static_cast<i128>(x);
    const u128 t = x % y;
    x = y;
    y = t;
  }
  return static_cast<i128>(gcd_u64(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y)));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(gcd128(a, b));
}

bool fits(i128 v) { return v >= -static_cast<i128>(INT64_MAX) && v <= INT64_MAX; }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1u
                              : static_cast<unsigned __int128>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (neg) z = -z;
  return z;
}

bool fits_mpz(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

}  // namespace

template <typename Op>
void Rational::big_op(const Rational& o, Op op) {
  // Operate in place on a GMP value, materializing small operands only.
  if (!big_) big_ = std::make_unique<mpq_class>(to_mpq());
  if (o.big_) {
    op(big_->get_mpq_t(), big_->get_mpq_t(), o.big_->get_mpq_t());
  } else {
    const mpq_class tmp = o.to_mpq();
    op(big_->get_mpq_t(), big_->get_mpq_t(), tmp.get_mpq_t());
  }
  const mpq_class& q = *big_;
  if (fits_mpz(q.get_num()) && fits_mpz(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  }
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  set_big(std::move(c));
}

void Rational::set_big(mpq_class q) {
  if (fits_mpz(q.get_num()) && fits_mpz(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_small(i128 num, i128 den, bool reduced) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
  } else if (den != 1 && !reduced) {
    const i128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
  mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
  return q;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational& Rational::operator+=(const Rational& o) {
  if (big_ || o.big_) {
    big_op(o, mpq_add);
  } else if (den_ == o.den_) {
    set_small(static_cast<i128>(num_) + o.num_, den_);
  } else {
    const std::int64_t g = gcd64(den_, o.den_);
    set_small(static_cast<i128>(num_) * (o.den_ / g) + static_cast<i128>(o.num_) * (den_ / g),
              static_cast<i128>(den_) * (o.den_ / g));
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (big_ || o.big_) {
    big_op(o, mpq_sub);
    return *this;
  }
  return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
  if (big_ || o.big_) {
    big_op(o, mpq_mul);
  } else if (num_ == 0 || o.num_ == 0) {
    num_ = 0;
    den_ = 1;
  } else {
    // Cross-cancel first so the product is already in lowest terms.
    const std::int64_t g1 = gcd64(num_, o.den_);
    const std::int64_t g2 = gcd64(o.num_, den_);
    set_small(static_cast<i128>(num_ / g1) * (o.num_ / g2),
              static_cast<i128>(den_ / g2) * (o.den_ / g1), true);
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (big_ || o.big_) {
    big_op(o, mpq_div);
    return *this;
  }
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.set_big(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

int cmp(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return (c > 0) - (c < 0);
  }
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  return (l > r) - (l < r);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace oapt
