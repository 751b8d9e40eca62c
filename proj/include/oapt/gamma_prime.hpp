#pragma once

#include <optional>
#include <vector>

#include "oapt/clique.hpp"
#include "oapt/combinatorics.hpp"

namespace oapt {

/// The unordered pair {X, X^c} for a k-subset X of {1..2k}. The stored
/// representative is the member containing index 1.
class PairVertex {
 public:
  explicit PairVertex(KSubset member);

  KSubset representative() const { return rep_; }
  KSubset other() const { return rep_.complement(); }
  bool has_member_containing(KSubset s) const;
  std::string to_string() const;

  friend auto operator<=>(const PairVertex&, const PairVertex&) = default;

 private:
  KSubset rep_;
};

/// The pair graph on {X, X^c}: two vertices are adjacent when X is adjacent
/// to Y or to Y^c in the Johnson graph J(2k, k).
class GammaPrime {
 public:
  /// Requires n = 2k.
  GammaPrime(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<PairVertex>& vertices() const { return vertices_; }
  const Graph& graph() const { return graph_; }
  std::optional<std::size_t> index_of(const PairVertex& v) const;
  VertexSet to_set(const std::vector<PairVertex>& members) const;

  static bool adjacent(const PairVertex& a, const PairVertex& b);

 private:
  int n_;
  int k_;
  std::vector<PairVertex> vertices_;
  Graph graph_;
};

/// C(S): the k+1 pair vertices with a member containing the (k-1)-subset s.
std::vector<PairVertex> clique_C(int n, int k, KSubset s);

}  // namespace oapt
