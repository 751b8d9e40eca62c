#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace oapt {

using VertexSet = boost::dynamic_bitset<>;

/// Simple undirected graph as adjacency bitsets.
class Graph {
 public:
  explicit Graph(std::size_t vertices);

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
  const VertexSet& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t edge_count() const;

 private:
  std::vector<VertexSet> adj_;
};

/// All maximal cliques, by Bron-Kerbosch with Tomita pivoting. Cliques come
/// back sorted by their lowest vertices so the output order is reproducible.
std::vector<VertexSet> maximal_cliques(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_maximal_clique(const Graph& g, const VertexSet& s);

}  // namespace oapt
