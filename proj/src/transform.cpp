#include "oapt/transform.hpp"

#include "oapt/error.hpp"

namespace oapt {

std::optional<mpq_class> scaled_unitary_factor(const ExactMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const ExactMatrix g = m.adjoint() * m;
  const GaussianRational c = g(0, 0);
  if (!c.is_real() || sgn(c.re()) <= 0) return std::nullopt;
  if (!(g == c * ExactMatrix::identity(m.rows()))) return std::nullopt;
  return c.re();
}

TransformSpec::TransformSpec(ExactMatrix matrix, bool conjugate, bool perp)
    : matrix_(std::move(matrix)), conjugate_(conjugate), perp_(perp) {
  auto c = scaled_unitary_factor(matrix_);
  if (!c) throw Error(ErrorCode::InvalidArgument, "matrix is not scaled-unitary");
  scale_ = *c;
}

Vector TransformSpec::apply(const Vector& v) const {
  if (v.size() != n()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(n());
  for (std::size_t r = 0; r < n(); ++r) {
    if (v[r].is_zero()) continue;
    const GaussianRational coeff = conjugate_ ? v[r].conj() : v[r];
    for (std::size_t c = 0; c < n(); ++c) {
      if (!matrix_(r, c).is_zero()) out[c] += coeff * matrix_(r, c);
    }
  }
  return out;
}

OrthoBase TransformSpec::image_base(const OrthoBase& base) const {
  std::vector<Vector> vs;
  for (const auto& b : base.vectors()) vs.push_back(apply(b));
  return OrthoBase(std::move(vs), base.form());
}

TransformSpec compose(const TransformSpec& outer, const TransformSpec& inner) {
  if (outer.n() != inner.n()) throw Error(ErrorCode::DimensionMismatch, "composition size mismatch");
  // outer(inner(v)) = conj^co( conj^ci(v) Mi ) Mo = conj^(ci^co)(v) conj^co(Mi) Mo.
  const ExactMatrix inner_m = outer.conjugate_ ? inner.matrix_.conj() : inner.matrix_;
  return TransformSpec(inner_m * outer.matrix_, outer.conjugate_ != inner.conjugate_,
                       outer.perp_ != inner.perp_);
}

Subspace induced_map(const TransformSpec& t, const Subspace& x) {
  if (x.ambient() != t.n()) throw Error(ErrorCode::DimensionMismatch, "ambient dimension mismatch");
  if (t.perp() && x.ambient() != 2 * x.dim()) {
    throw Error(ErrorCode::Precondition, "perp flag requires n = 2k");
  }
  std::vector<Vector> rows;
  for (const auto& b : x.basis()) rows.push_back(t.apply(b));
  Subspace image(x.ambient(), rows);
  if (t.perp()) return orthocomplement(image, HermitianForm(x.ambient()));
  return image;
}

}  // namespace oapt
