#include "oapt/clique.hpp"

#include <algorithm>

#include "oapt/error.hpp"

namespace oapt {

Graph::Graph(std::size_t vertices) : adj_(vertices, VertexSet(vertices)) {}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  if (a == b) return;
  adj_[a].set(b);
  adj_[b].set(a);
}

std::size_t Graph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : adj_) e += row.count();
  return e / 2;
}

namespace {

void expand(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.none()) {
    if (x.none()) out.push_back(r);
    return;
  }
  // Pivot on the vertex of P u X with most neighbours in P.
  const VertexSet candidates = p | x;
  std::size_t pivot = VertexSet::npos;
  std::size_t best = 0;
  for (auto u = candidates.find_first(); u != VertexSet::npos; u = candidates.find_next(u)) {
    const std::size_t c = (p & g.neighbours(u)).count();
    if (pivot == VertexSet::npos || c > best) {
      pivot = u;
      best = c;
    }
  }
  const VertexSet todo = p - g.neighbours(pivot);
  for (auto v = todo.find_first(); v != VertexSet::npos; v = todo.find_next(v)) {
    r.set(v);
    expand(g, r, p & g.neighbours(v), x & g.neighbours(v), out);
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
}

bool lowest_first(const VertexSet& a, const VertexSet& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != VertexSet::npos && j != VertexSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == VertexSet::npos && j != VertexSet::npos;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet r(g.size());
  VertexSet p(g.size());
  p.set();
  expand(g, r, p, VertexSet(g.size()), out);
  std::sort(out.begin(), out.end(), lowest_first);
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (auto a = s.find_first(); a != VertexSet::npos; a = s.find_next(a)) {
    VertexSet others = s;
    others.reset(a);
    if (!others.is_subset_of(g.neighbours(a))) return false;
  }
  return true;
}

bool is_maximal_clique(const Graph& g, const VertexSet& s) {
  if (!is_clique(g, s)) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (s.test(v)) continue;
    if (s.is_subset_of(g.neighbours(v))) return false;
  }
  return true;
}

}  // namespace oapt
