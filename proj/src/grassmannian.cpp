#include "oapt/grassmannian.hpp"

#include <sstream>

#include "oapt/error.hpp"

namespace oapt {

bool is_orthogonal_base(const std::vector<Vector>& vectors, const HermitianForm& form) {
  const std::size_t n = form.dimension();
  if (vectors.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "an orthogonal base of C^n needs exactly n vectors");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (sgn(form.norm2(vectors[a])) == 0) return false;
    for (std::size_t b = a + 1; b < n; ++b)
      if (!form.orthogonal(vectors[a], vectors[b])) return false;
  }
  return true;
}

OrthoBase::OrthoBase(std::vector<Vector> vectors, HermitianForm form)
    : vectors_(std::move(vectors)), form_(form) {
  if (!is_orthogonal_base(vectors_, form_)) {
    throw Error(ErrorCode::InvalidArgument, "vectors do not form an orthogonal base");
  }
}

OrthoBase OrthoBase::standard(std::size_t n) {
  return OrthoBase(ExactMatrix::identity(n).row_vectors(), HermitianForm(n));
}

NumericApartment::NumericApartment(OrthoBase base, int k) : base_(std::move(base)), k_(k) {
  if (k < 0 || k > n()) throw Error(ErrorCode::InvalidArgument, "apartment level out of range");
}

Subspace NumericApartment::element(KSubset s) const {
  if (s.n() != n() || s.size() != k_) {
    throw Error(ErrorCode::InvalidArgument, "apartment element needs a k-subset of {1..n}");
  }
  std::vector<Vector> rows;
  for (int i : s.indices()) rows.push_back(base_[static_cast<std::size_t>(i)]);
  return Subspace(base_.size(), rows);
}

std::vector<Subspace> NumericApartment::elements() const {
  std::vector<Subspace> out;
  for (auto s : all_ksubsets(n(), k_)) out.push_back(element(s));
  return out;
}

std::set<Subspace> NumericApartment::element_set() const {
  auto e = elements();
  return {e.begin(), e.end()};
}

bool NumericApartment::contains(const Subspace& x) const {
  if (x.ambient() != base_.size() || static_cast<int>(x.dim()) != k_) return false;
  // x is spanned by base vectors iff it is spanned by the base vectors it contains.
  std::vector<Vector> inside;
  for (const auto& b : base_.vectors())
    if (x.contains(b)) inside.push_back(b);
  return static_cast<int>(inside.size()) == k_;
}

CompatibilityDecomposition decompose(const Subspace& x, const Subspace& y,
                                     const HermitianForm& form) {
  if (x.ambient() != y.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  Subspace m = intersect(x, y);
  const Subspace m_perp = orthocomplement(m, form);
  Subspace x_rest = intersect(x, m_perp);
  Subspace y_rest = intersect(y, m_perp);
  const bool ok = orthogonal(x_rest, y_rest, form) && sum(x_rest, m) == x && sum(y_rest, m) == y;
  return {std::move(m), std::move(x_rest), std::move(y_rest), ok};
}

bool compatible(const Subspace& x, const Subspace& y, const HermitianForm& form) {
  return decompose(x, y, form).compatible;
}

bool commuting_projections(const Subspace& x, const Subspace& y, const HermitianForm& form) {
  if (x.ambient() != y.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  // (Px Py)* = Py Px, so the projections commute iff Px Py is self-adjoint.
  const ExactMatrix q = projection_matrix(x, form) * projection_matrix(y, form);
  return q == q.adjoint();
}

OrthoBase inexact_witness(const OrthoBase& base, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::InvalidArgument, "inexact witness needs i != j");
  if (i < 1 || j < 1 || i > base.size() || j > base.size()) {
    throw Error(ErrorCode::InvalidArgument, "base index out of range");
  }
  const auto& form = base.form();
  const Vector& bi = base[i];
  const Vector& bj = base[j];
  const GaussianRational p(form.norm2(bi));
  const GaussianRational q(form.norm2(bj));
  Vector f1(bi.size());
  Vector f2(bi.size());
  for (std::size_t c = 0; c < bi.size(); ++c) {
    f1[c] = bi[c] + bj[c];
    f2[c] = q * bi[c] - p * bj[c];
  }
  std::vector<Vector> vectors = base.vectors();
  vectors[i - 1] = std::move(f1);
  vectors[j - 1] = std::move(f2);
  return OrthoBase(std::move(vectors), form);
}

std::vector<Vector> orthogonalize(const std::vector<Vector>& rows, const HermitianForm& form) {
  std::vector<Vector> out;
  for (const auto& w : rows) {
    Vector u = w;
    for (const auto& prev : out) {
      // u -= <w, prev>/<prev, prev> * prev
      const GaussianRational coeff = form.inner(w, prev) / GaussianRational(form.norm2(prev));
      if (coeff.is_zero()) continue;
      for (std::size_t c = 0; c < u.size(); ++c) u[c] -= coeff * prev[c];
    }
    if (sgn(form.norm2(u)) != 0) out.push_back(std::move(u));
  }
  return out;
}

bool adjacent(const Subspace& x, const Subspace& y) {
  return x.ambient() == y.ambient() && x.dim() == y.dim() && x.dim() >= 1 &&
         intersect(x, y).dim() + 1 == x.dim();
}

std::vector<Subspace> build_compatible_witnesses(const Subspace& x, const Subspace& y,
                                                 std::size_t count, const HermitianForm& form) {
  if (x.ambient() != y.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  if (!adjacent(x, y)) throw Error(ErrorCode::Precondition, "X and Y are not adjacent");
  const long n = static_cast<long>(x.ambient());
  const long k = static_cast<long>(x.dim());
  if (n - k - 1 < static_cast<long>(count)) {
    std::ostringstream os;
    os << "n−k−1 = " << (n - k - 1) << " < " << count;
    throw Error(ErrorCode::Precondition, os.str());
  }
  const Subspace common = intersect(x, y);
  const Subspace n_space = orthocomplement(common, form);
  const Subspace s = intersect(sum(x, y), n_space);
  const Subspace room = intersect(orthocomplement(s, form), n_space);
  const auto lines = orthogonalize(room.basis(), form);
  std::vector<Subspace> out;
  for (std::size_t t = 0; t < count; ++t) {
    out.push_back(sum(Subspace(x.ambient(), {lines[t]}), common));
  }
  return out;
}

}  // namespace oapt
