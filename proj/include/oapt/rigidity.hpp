#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oapt/report.hpp"
#include "oapt/transform.hpp"

namespace oapt {

/// A finite stand-in for a transformation of the Grassmannian: a list of
/// k-subspaces and a partial image table on it. When n = 2k the list must be
/// closed under orthocomplement. Apartments inside the list are either given
/// or discovered as maximal sets of binom(n,k) mutually compatible members.
class Scaffold {
 public:
  using MapEntry = std::pair<std::size_t, std::size_t>;

  /// Declared apartments are checked for size and mutual compatibility
  /// unless check_apartments is false (callers that built them from a base).
  Scaffold(int n, int k, std::vector<Subspace> subspaces, const std::vector<MapEntry>& map,
           std::vector<std::vector<std::size_t>> apartments = {}, bool check_apartments = true);

  int n() const { return n_; }
  int k() const { return k_; }
  const HermitianForm& form() const { return form_; }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const std::optional<std::size_t>& image(std::size_t i) const { return image_.at(i); }
  std::optional<std::size_t> index_of(const Subspace& s) const;
  const std::vector<std::vector<std::size_t>>& apartments() const { return apartments_; }
  std::vector<MapEntry> map_entries() const;
  bool injective() const;

 private:
  int n_;
  int k_;
  HermitianForm form_;
  std::vector<Subspace> subspaces_;
  std::vector<std::optional<std::size_t>> image_;
  std::vector<std::vector<std::size_t>> apartments_;
  std::map<Subspace, std::size_t> index_;
};

/// Accumulates a deduplicated subspace list and image table.
class ScaffoldBuilder {
 public:
  ScaffoldBuilder(int n, int k) : n_(n), k_(k) {}

  std::size_t add(const Subspace& s);
  /// Adds every element of the apartment and records it as an apartment.
  std::vector<std::size_t> add_apartment(const NumericApartment& a);
  void map(const Subspace& from, const Subspace& to);
  /// Maps every listed subspace without an image to itself.
  void fill_identity();
  Scaffold build() const;

 private:
  int n_;
  int k_;
  std::vector<Subspace> subspaces_;
  std::map<Subspace, std::size_t> index_;
  std::map<std::size_t, std::size_t> map_;
  std::vector<std::vector<std::size_t>> apartments_;
};

/// Standard apartment plus a second apartment from an inexact witness base.
std::vector<OrthoBase> default_bases(int n);

/// Scaffold whose table is the map induced by t on the apartments of bases.
Scaffold scaffold_for_transform(const TransformSpec& t, const std::vector<OrthoBase>& bases, int k);

struct NamedScaffold {
  std::string name;
  Scaffold scaffold;
};

/// Fixed negative corpus for (n, k): a single swap with an adjacent non-apartment
/// element, a base-mixing table onto a non-orthogonal base, and, when n = 2k,
/// a table applying perp to exactly one apartment element.
std::vector<NamedScaffold> adversarial_corpus(int n, int k);

struct NonInducedVerdict {
  bool induced_consistent = true;
  std::string reason;
  std::optional<std::size_t> apartment;
  /// Scaffold indices of the offending sources and their images.
  std::optional<Scaffold::MapEntry> sources;
  std::optional<Scaffold::MapEntry> images;
  std::string witness;
};

/// Every apartment on which the table is total must map onto binom(n,k)
/// distinct, mutually compatible subspaces. Throws Precondition when no
/// listed apartment has a total image table.
NonInducedVerdict detect_noninduced(const Scaffold& s);

/// For each base B: {T(X) : X in A(B)} equals the apartment of T(B)
/// (orthocomplemented elementwise when the perp flag is set).
VerificationReport verify_apartment_preservation(const TransformSpec& t,
                                                 const std::vector<OrthoBase>& bases, int k);

/// n = 2k only. dim T(X) n T(Y) in {m, k-m} with m = dim X n Y (and exactly m
/// for a transform, which applies perp uniformly); T(X^perp) = T(X)^perp.
VerificationReport verify_dim_pattern(const TransformSpec& t, const Scaffold& s);
/// Table version: pairs inside a listed apartment, members whose perp is listed.
VerificationReport verify_dim_pattern(const Scaffold& s);

/// n != 2k: stars of A(B) go to stars of the image apartment, tops to tops.
CheckRecord verify_star_pattern(const TransformSpec& t, const OrthoBase& base, int k);

/// n = 2k: the map g on (k-1)-subspaces read off from f'(C(S)) = C(g(S))
/// sends the (k-1)-apartment of B onto the (k-1)-apartment of T(B).
CheckRecord verify_pair_clique_pattern(const TransformSpec& t, const OrthoBase& base, int k);

using LineSample = std::pair<Subspace, Subspace>;

/// span(e_i), span(e_1 + e_j) for j >= 2, and span(e_1 + i e_2).
std::vector<Subspace> k1_probe_lines(std::size_t n);
std::vector<LineSample> k1_samples(const TransformSpec& t);

/// Rebuilds a (conjugate-)scaled-unitary operator from the images of the
/// probe lines. The matrix is fixed up to scalar by making the image
/// representative of e_1 its first row, leading entry 1.
TransformSpec recover_operator_k1(const std::vector<LineSample>& samples, std::size_t n);

}  // namespace oapt
