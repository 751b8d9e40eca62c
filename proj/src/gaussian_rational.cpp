#include "oapt/gaussian_rational.hpp"

#include "oapt/error.hpp"

namespace oapt {

GaussianRational GaussianRational::from_parts(std::int64_t re_num, std::int64_t re_den,
                                              std::int64_t im_num, std::int64_t im_den) {
  if (re_den == 0 || im_den == 0) {
    throw Error(ErrorCode::InvalidArgument, "zero denominator in Gaussian rational");
  }
  auto big = [](std::int64_t v) {
    mpz_class z;
    mpz_set_str(z.get_mpz_t(), std::to_string(v).c_str(), 10);
    return z;
  };
  return {mpq_class(big(re_num), big(re_den)), mpq_class(big(im_num), big(im_den))};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  // Most entries met in practice are real; skip the complex product for them.
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  }
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational d = o.norm2_exact();
  Rational re = (re_ * o.re_ + im_ * o.im_) / d;
  Rational im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

int compare(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c;
  return cmp(a.im_, b.im_);
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im_part;
  if (im_ == Rational(1)) {
    im_part = "i";
  } else if (im_ == Rational(-1)) {
    im_part = "-i";
  } else {
    im_part = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return im_part;
  if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
  return re_.to_string() + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

}  // namespace oapt
