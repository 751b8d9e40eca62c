#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "oapt/exact_matrix.hpp"
#include "oapt/hermitian_form.hpp"

namespace oapt {

/// A subspace of the n-dimensional coordinate space, held by the RREF of a
/// spanning frame (vectors are rows). Two subspaces are equal exactly when
/// their canonical frames agree entry by entry.
class Subspace {
 public:
  /// Zero subspace of C^n.
  explicit Subspace(std::size_t n = 0);
  /// Span of the given rows; the rows need not be independent.
  Subspace(std::size_t n, std::span<const Vector> spanning);
  Subspace(std::size_t n, std::initializer_list<Vector> spanning);

  static Subspace full(std::size_t n);
  /// Span of the standard basis vectors e_i, 1-based.
  static Subspace coordinate(std::size_t n, std::span<const std::size_t> indices);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return frame_.rows(); }
  const ExactMatrix& frame() const { return frame_; }
  std::vector<Vector> basis() const { return frame_.row_vectors(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.frame_ == b.frame_;
  }
  /// Arbitrary total order for ordered containers.
  friend bool operator<(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  std::size_t n_;
  ExactMatrix frame_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
/// dim(a n b) = dim a + dim b - dim(a + b), without building the intersection.
std::size_t intersection_dim(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace orthocomplement(const Subspace& a, const HermitianForm& form);
/// Orthogonal projection onto a, acting on column vectors: B (B* B)^-1 B*.
ExactMatrix projection_matrix(const Subspace& a, const HermitianForm& form);
/// Every vector of a is orthogonal to every vector of b.
bool orthogonal(const Subspace& a, const Subspace& b, const HermitianForm& form);

}  // namespace oapt
