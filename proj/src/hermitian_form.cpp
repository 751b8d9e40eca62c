#include "oapt/hermitian_form.hpp"

#include "oapt/error.hpp"

namespace oapt {

void HermitianForm::check(const Vector& v) const {
  if (v.size() != n_) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from form dimension");
  }
}

GaussianRational HermitianForm::inner(const Vector& u, const Vector& v) const {
  check(u);
  check(v);
  GaussianRational acc;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!u[i].is_zero() && !v[i].is_zero()) acc += u[i] * v[i].conj();
  }
  return acc;
}

mpq_class HermitianForm::norm2(const Vector& v) const {
  check(v);
  mpq_class acc = 0;
  for (const auto& z : v) acc += z.norm2();
  return acc;
}

}  // namespace oapt
