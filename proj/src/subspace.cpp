#include "oapt/subspace.hpp"

#include <sstream>

#include "oapt/error.hpp"

namespace oapt {

namespace {

ExactMatrix canonical_frame(std::size_t n, std::span<const Vector> spanning) {
  const RrefResult r = rref(ExactMatrix::from_rows(spanning, n));
  ExactMatrix f(r.rank, n);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < n; ++c) f(i, c) = r.matrix(i, c);
  return f;
}

void same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace::Subspace(std::size_t n) : n_(n), frame_(0, n) {}

Subspace::Subspace(std::size_t n, std::span<const Vector> spanning)
    : n_(n), frame_(canonical_frame(n, spanning)) {}

Subspace::Subspace(std::size_t n, std::initializer_list<Vector> spanning)
    : Subspace(n, std::span<const Vector>(spanning.begin(), spanning.size())) {}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  s.frame_ = ExactMatrix::identity(n);
  return s;
}

Subspace Subspace::coordinate(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<Vector> rows;
  for (auto i : indices) {
    if (i < 1 || i > n) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
    Vector v(n);
    v[i - 1] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(n, rows);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Vector> rows = basis();
  rows.push_back(v);
  return rref(ExactMatrix::from_rows(rows, n_)).rank == dim();
}

bool Subspace::contains(const Subspace& other) const {
  same_ambient(*this, other);
  return sum(*this, other).dim() == dim();
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) {
      if (int cmp = compare(a.frame_(r, c), b.frame_(r, c)); cmp != 0) return cmp < 0;
    }
  }
  return false;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) os << ", ";
    os << '(';
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) os << ',';
      os << frame_(r, c);
    }
    os << ')';
  }
  os << "}";
  return os.str();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  const std::size_t n = a.ambient();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(n);
  // x A = y B  <=>  (x, y) [A; -B] = 0: left kernel of the stacked frames.
  std::vector<Vector> stacked = a.basis();
  for (auto row : b.basis()) {
    for (auto& z : row) z = -z;
    stacked.push_back(std::move(row));
  }
  const ExactMatrix s = ExactMatrix::from_rows(stacked, n);
  std::vector<Vector> vectors;
  for (const auto& coeffs : kernel(s.transpose())) {
    Vector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += coeffs[i] * a.frame()(i, c);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace(n, vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  std::vector<Vector> rows = a.basis();
  for (auto& r : b.basis()) rows.push_back(std::move(r));
  return Subspace(a.ambient(), rows);
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  same_ambient(a, b);
  if (a.dim() == 0 || b.dim() == 0) return 0;
  std::vector<Vector> stacked = a.basis();
  for (auto row : b.basis()) stacked.push_back(std::move(row));
  return a.dim() + b.dim() - rref(ExactMatrix::from_rows(stacked, a.ambient())).rank;
}

Subspace orthocomplement(const Subspace& a, const HermitianForm& form) {
  if (form.dimension() != a.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "form dimension differs from ambient dimension");
  }
  // <a, v> = sum a_i conj(v_i) = 0  <=>  sum conj(a_i) v_i = 0.
  return Subspace(a.ambient(), kernel(a.frame().conj()));
}

ExactMatrix projection_matrix(const Subspace& a, const HermitianForm& form) {
  const std::size_t n = a.ambient();
  if (form.dimension() != n) {
    throw Error(ErrorCode::DimensionMismatch, "form dimension differs from ambient dimension");
  }
  // Sum of u u* / <u, u> over an orthogonal (unnormalized) basis u of a;
  // equal to B (B* B)^-1 B* without the inverse.
  ExactMatrix p(n, n);
  std::vector<Vector> ortho;
  for (const auto& w : a.basis()) {
    Vector u = w;
    for (const auto& prev : ortho) {
      const GaussianRational coeff = form.inner(w, prev) / GaussianRational(form.norm2(prev));
      if (coeff.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) u[c] -= coeff * prev[c];
    }
    const GaussianRational inv = GaussianRational(1) / GaussianRational(form.norm2(u));
    for (std::size_t r = 0; r < n; ++r) {
      if (u[r].is_zero()) continue;
      const GaussianRational ur = u[r] * inv;
      for (std::size_t c = 0; c < n; ++c)
        if (!u[c].is_zero()) p(r, c) += ur * u[c].conj();
    }
    ortho.push_back(std::move(u));
  }
  return p;
}

bool orthogonal(const Subspace& a, const Subspace& b, const HermitianForm& form) {
  same_ambient(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (!form.orthogonal(a.frame().row(i), b.frame().row(j))) return false;
    }
  }
  return true;
}

}  // namespace oapt
