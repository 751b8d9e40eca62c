#include "oapt/gamma_prime.hpp"

#include <algorithm>

#include "oapt/error.hpp"

namespace oapt {

namespace {

void require_half(int n, int k) {
  if (n != 2 * k || k < 1) throw Error(ErrorCode::Precondition, "pair graph requires n = 2k");
}

}  // namespace

PairVertex::PairVertex(KSubset member)
    : rep_(member.contains(1) ? member : member.complement()) {
  if (2 * member.size() != member.n()) {
    throw Error(ErrorCode::Precondition, "pair vertices exist only for n = 2k");
  }
}

bool PairVertex::has_member_containing(KSubset s) const {
  return (rep_.bits() & s.bits()) == s.bits() || (other().bits() & s.bits()) == s.bits();
}

std::string PairVertex::to_string() const {
  return "{" + rep_.to_string() + "," + other().to_string() + "}";
}

bool GammaPrime::adjacent(const PairVertex& a, const PairVertex& b) {
  return johnson_adjacent(a.representative(), b.representative()) ||
         johnson_adjacent(a.representative(), b.other());
}

GammaPrime::GammaPrime(int n, int k) : n_(n), k_(k), graph_(0) {
  require_half(n, k);
  for (auto x : all_ksubsets(n, k))
    if (x.contains(1)) vertices_.emplace_back(x);
  graph_ = Graph(vertices_.size());
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b)
      if (adjacent(vertices_[a], vertices_[b])) graph_.add_edge(a, b);
}

std::optional<std::size_t> GammaPrime::index_of(const PairVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexSet GammaPrime::to_set(const std::vector<PairVertex>& members) const {
  VertexSet s(vertices_.size());
  for (const auto& v : members) {
    auto idx = index_of(v);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "vertex not in graph");
    s.set(*idx);
  }
  return s;
}

std::vector<PairVertex> clique_C(int n, int k, KSubset s) {
  require_half(n, k);
  if (s.n() != n || s.size() != k - 1) {
    throw Error(ErrorCode::InvalidArgument, "C(S) needs a (k-1)-subset");
  }
  std::vector<PairVertex> out;
  for (auto x : star(n, k, s)) out.emplace_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oapt
