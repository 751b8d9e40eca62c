#pragma once

#include <optional>

#include "oapt/grassmannian.hpp"

namespace oapt {

/// A subspace map X -> [perp] ( conj^c(X) * M ). Row vectors are multiplied
/// on the right by M, so span{e_i} goes to the span of row i of M.
/// M must be scaled-unitary: M* M = c I with c a positive rational.
class TransformSpec {
 public:
  TransformSpec(ExactMatrix matrix, bool conjugate = false, bool perp = false);

  static TransformSpec identity(std::size_t n) { return TransformSpec(ExactMatrix::identity(n)); }

  const ExactMatrix& matrix() const { return matrix_; }
  bool conjugate() const { return conjugate_; }
  bool perp() const { return perp_; }
  std::size_t n() const { return matrix_.rows(); }
  const mpq_class& scale() const { return scale_; }

  /// Semilinear action on a single vector (ignores the perp flag).
  Vector apply(const Vector& v) const;
  /// The image base {apply(b_i)}; orthogonal because M is scaled-unitary.
  OrthoBase image_base(const OrthoBase& base) const;

  /// (outer after inner)(X) = outer(inner(X)).
  friend TransformSpec compose(const TransformSpec& outer, const TransformSpec& inner);

 private:
  ExactMatrix matrix_;
  bool conjugate_;
  bool perp_;
  mpq_class scale_;
};

/// The factor c with M* M = c I, or nullopt when M is not scaled-unitary.
std::optional<mpq_class> scaled_unitary_factor(const ExactMatrix& m);

/// T(X). With the perp flag the ambient dimension must be 2 dim X.
Subspace induced_map(const TransformSpec& t, const Subspace& x);

}  // namespace oapt
