#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "oapt/combinatorics.hpp"
#include "oapt/subspace.hpp"

namespace oapt {

/// True iff the n vectors are nonzero and pairwise orthogonal. Throws when
/// the count differs from the form's dimension.
bool is_orthogonal_base(const std::vector<Vector>& vectors, const HermitianForm& form);

/// An orthogonal (not necessarily normalized) base of C^n.
class OrthoBase {
 public:
  OrthoBase(std::vector<Vector> vectors, HermitianForm form);

  static OrthoBase standard(std::size_t n);

  std::size_t size() const { return vectors_.size(); }
  const HermitianForm& form() const { return form_; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  /// 1-based.
  const Vector& operator[](std::size_t i) const { return vectors_.at(i - 1); }

 private:
  std::vector<Vector> vectors_;
  HermitianForm form_;
};

/// All k-dimensional spans of k-element subsets of an orthogonal base.
class NumericApartment {
 public:
  NumericApartment(OrthoBase base, int k);

  const OrthoBase& base() const { return base_; }
  int n() const { return static_cast<int>(base_.size()); }
  int k() const { return k_; }

  Subspace element(KSubset s) const;
  /// Elements in the order of all_ksubsets(n, k).
  std::vector<Subspace> elements() const;
  std::set<Subspace> element_set() const;
  bool contains(const Subspace& x) const;

 private:
  OrthoBase base_;
  int k_;
};

/// Canonical decomposition X = X' + M, Y = Y' + M with M = X n Y.
struct CompatibilityDecomposition {
  Subspace common;
  Subspace x_rest;
  Subspace y_rest;
  bool compatible = false;
};

CompatibilityDecomposition decompose(const Subspace& x, const Subspace& y,
                                     const HermitianForm& form);
bool compatible(const Subspace& x, const Subspace& y, const HermitianForm& form);
/// Independent check: P_X P_Y == P_Y P_X.
bool commuting_projections(const Subspace& x, const Subspace& y, const HermitianForm& form);

/// Replaces b_i, b_j by b_i + b_j and q b_i - p b_j (p = <b_i,b_i>,
/// q = <b_j,b_j>). The new apartment contains A(+i,+j) u A(-i,-j) of the old.
OrthoBase inexact_witness(const OrthoBase& base, std::size_t i, std::size_t j);

/// Adjacent X, Y (dim X n Y = k-1): returns `count` subspaces L + (X n Y)
/// where the lines L are mutually orthogonal inside (X+Y)^perp n (X n Y)^perp.
/// Each is compatible with X, Y and the others.
std::vector<Subspace> build_compatible_witnesses(const Subspace& x, const Subspace& y,
                                                 std::size_t count, const HermitianForm& form);

/// Gram-Schmidt over the Gaussian rationals (no normalization).
std::vector<Vector> orthogonalize(const std::vector<Vector>& rows, const HermitianForm& form);

bool adjacent(const Subspace& x, const Subspace& y);

}  // namespace oapt
