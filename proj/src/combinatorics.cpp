#include "oapt/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "oapt/error.hpp"

namespace oapt {

namespace {

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

void check_level(int n, int k) {
  if (n < 1 || n > kMaxN) throw Error(ErrorCode::InvalidArgument, "n must lie in 1..64");
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "k must lie in 0..n");
}

void check_grassmann_range(int n, int k) {
  check_level(n, k);
  if (!(1 < k && k < n - 1)) {
    throw Error(ErrorCode::InvalidArgument, "requires 1 < k < n-1");
  }
}

void check_member(int n, int k, KSubset x, const char* what) {
  if (x.n() != n || x.size() != k) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not a k-subset of {1..n}");
  }
}

}  // namespace

KSubset::KSubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxN) throw Error(ErrorCode::InvalidArgument, "n must lie in 0..64");
  if (bits & ~full_mask(n)) throw Error(ErrorCode::InvalidArgument, "mask exceeds {1..n}");
}

KSubset KSubset::from_indices(int n, std::initializer_list<int> indices) {
  return from_indices(n, std::vector<int>(indices));
}

KSubset KSubset::from_indices(int n, const std::vector<int>& indices) {
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > n) throw Error(ErrorCode::InvalidArgument, "index out of range");
    bits |= 1ULL << (i - 1);
  }
  return {n, bits};
}

int KSubset::size() const { return std::popcount(bits_); }

KSubset KSubset::complement() const { return {n_, ~bits_ & full_mask(n_)}; }

std::vector<int> KSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string KSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

int meet(KSubset a, KSubset b) { return std::popcount(a.bits() & b.bits()); }

ComplementaryPair::ComplementaryPair(int i, int j) : i_(std::min(i, j)), j_(std::max(i, j)) {
  if (i == j) throw Error(ErrorCode::InvalidArgument, "complementary pair needs i != j");
  if (i_ < 1 || j_ > kMaxN) throw Error(ErrorCode::InvalidArgument, "index out of range");
}

std::string ComplementaryPair::to_string() const {
  return "C" + std::to_string(i_) + "," + std::to_string(j_);
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Generic: return "GENERIC";
    case CaseTag::N2K1: return "N2K1";
    case CaseTag::N2K2: return "N2K2";
    case CaseTag::N2K: return "N2K";
    case CaseTag::Exceptional: return "EXCEPTIONAL";
  }
  return "?";
}

CaseTag case_tag(int n, int k) {
  check_grassmann_range(n, k);
  if (n == 6 && (k == 2 || k == 4)) return CaseTag::Exceptional;
  const int low = std::min(k, n - k);
  switch (n - 2 * low) {
    case 0: return CaseTag::N2K;
    case 1: return CaseTag::N2K1;
    case 2: return CaseTag::N2K2;
    default: return CaseTag::Generic;
  }
}

std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step.
    r = r * (n - k + i) / i;
  }
  return r;
}

mpz_class binom_big(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<KSubset> all_ksubsets(int n, int k) {
  check_level(n, k);
  std::vector<KSubset> out;
  if (k == 0) {
    out.emplace_back(n, 0);
    return out;
  }
  const std::uint64_t limit = full_mask(n);
  std::uint64_t v = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
  while (true) {
    out.emplace_back(n, v);
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    if (r == 0 || (r & ~limit)) break;
    v = (((r ^ v) >> 2) / c) | r;
    if (v & ~limit) break;
  }
  return out;
}

std::int64_t c_formula(int n, int k, int m) {
  check_grassmann_range(n, k);
  if (m < 0 || m > k - 1) throw Error(ErrorCode::InvalidArgument, "m must lie in 0..k-1");
  const std::int64_t d = k - m;
  return d * d + static_cast<std::int64_t>(m) * (n - 2 * k + m);
}

std::vector<ComplementaryPair> complementary_containing(int n, int k, KSubset x, KSubset y) {
  check_grassmann_range(n, k);
  check_member(n, k, x, "X");
  check_member(n, k, y, "Y");
  if (x == y) throw Error(ErrorCode::InvalidArgument, "X and Y must be distinct");
  std::vector<ComplementaryPair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ComplementaryPair p(i, j);
      if (p.contains(x) && p.contains(y)) out.push_back(p);
    }
  }
  return out;
}

std::int64_t count_complementary_containing(int n, int k, KSubset x, KSubset y) {
  return static_cast<std::int64_t>(complementary_containing(n, k, x, y).size());
}

std::vector<KSubset> complementary_subset(int n, int k, const ComplementaryPair& p) {
  check_grassmann_range(n, k);
  if (p.second() > n) throw Error(ErrorCode::InvalidArgument, "pair index exceeds n");
  std::vector<KSubset> out;
  for (auto x : all_ksubsets(n, k))
    if (p.contains(x)) out.push_back(x);
  return out;
}

std::vector<KSubset> maximal_inexact(int n, int k, int i, int j) {
  const ComplementaryPair p(i, j);
  check_grassmann_range(n, k);
  if (p.second() > n) throw Error(ErrorCode::InvalidArgument, "pair index exceeds n");
  std::vector<KSubset> out;
  for (auto x : all_ksubsets(n, k))
    if (!p.contains(x)) out.push_back(x);
  return out;
}

ComplementaryAdjacency complementary_adjacent(int n, int k, const ComplementaryPair& p,
                                              const ComplementaryPair& q) {
  if (p == q) throw Error(ErrorCode::InvalidArgument, "complementary pairs must differ");
  check_grassmann_range(n, k);
  if (p.second() > n || q.second() > n) {
    throw Error(ErrorCode::InvalidArgument, "pair index exceeds n");
  }
  ComplementaryAdjacency res;
  res.adjacent = p.meets(q);
  for (auto x : all_ksubsets(n, k))
    if (p.contains(x) && q.contains(x)) ++res.intersection;
  return res;
}

std::int64_t complementary_intersection_formula(int n, int k, bool adjacent) {
  return adjacent ? binom(n - 2, k - 1) : 4 * binom(n - 4, k - 2);
}

ComplementaryTable::ComplementaryTable(int n, int k) : n_(n), k_(k) {
  check_grassmann_range(n, k);
  const auto members = all_ksubsets(n, k);
  const int pairs = n * n;
  table_.assign(static_cast<std::size_t>(pairs) * pairs, 0);
  std::vector<ComplementaryPair> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  for (const auto& p : all) {
    for (const auto& q : all) {
      std::int64_t c = 0;
      for (auto z : members)
        if (p.contains(z) && q.contains(z)) ++c;
      table_[static_cast<std::size_t>(index(p)) * pairs + index(q)] = c;
    }
  }
}

int ComplementaryTable::index(const ComplementaryPair& p) const {
  if (p.second() > n_) throw Error(ErrorCode::InvalidArgument, "pair index exceeds n");
  return (p.first() - 1) * n_ + (p.second() - 1);
}

std::int64_t ComplementaryTable::intersection(const ComplementaryPair& p,
                                              const ComplementaryPair& q) const {
  return table_[static_cast<std::size_t>(index(p)) * n_ * n_ + index(q)];
}

bool ComplementaryTable::has_isolated(KSubset x, KSubset y) const {
  const auto containing = complementary_containing(n_, k_, x, y);
  for (std::size_t a = 0; a < containing.size(); ++a) {
    bool isolated = true;
    for (std::size_t b = 0; b < containing.size() && isolated; ++b) {
      if (a != b && adjacent_by_count(containing[a], containing[b])) isolated = false;
    }
    if (isolated) return true;
  }
  return false;
}

bool has_isolated_complementary(int n, int k, KSubset x, KSubset y) {
  return ComplementaryTable(n, k).has_isolated(x, y);
}

namespace {

DimensionClass classify_pair_impl(int n, int k, KSubset x, KSubset y,
                                  const ComplementaryTable* table) {
  const CaseTag tag = case_tag(n, k);
  if (tag == CaseTag::Exceptional) {
    throw Error(ErrorCode::Exceptional,
                "intersection dimension cannot be determined from complementary subsets "
                "when n = 6 and k in {2, 4}");
  }
  const std::int64_t count = count_complementary_containing(n, k, x, y);
  // Levels above n/2 are read at the dual level: complements meet in n-2k+m
  // indices and lie in exactly the same complementary subsets.
  const int low = std::min(k, n - k);
  auto to_level_k = [&](int m_low) { return low == k ? m_low : m_low + 2 * k - n; };

  std::vector<int> roots;
  for (int m = 0; m <= low - 1; ++m)
    if (c_formula(n, low, m) == count) roots.push_back(m);
  if (roots.empty()) throw Error(ErrorCode::Inconsistent, "count matches no intersection size");

  DimensionClass res{tag, {}};
  if (tag == CaseTag::N2K) {
    const int m = roots.front();
    res.candidates = {std::min(m, k - m), std::max(m, k - m)};
    if (res.candidates[0] == res.candidates[1]) res.candidates.pop_back();
    return res;
  }
  // Away from n = 2k the value c(k-1) is never shared with another
  // m except m = 0 when n = 2k+2; other coincident values stay ambiguous.
  const bool tie = roots.size() == 2 && roots[0] == 0 && roots[1] == low - 1;
  if (tag == CaseTag::N2K2 && tie) {
    const bool isolated =
        table ? table->has_isolated(x, y) : has_isolated_complementary(n, k, x, y);
    res.candidates = {to_level_k(isolated ? low - 1 : 0)};
    return res;
  }
  for (int r : roots) res.candidates.push_back(to_level_k(r));
  std::sort(res.candidates.begin(), res.candidates.end());
  return res;
}

}  // namespace

DimensionClass classify_pair(int n, int k, KSubset x, KSubset y) {
  if (case_tag(n, k) == CaseTag::N2K2) return classify_pair(ComplementaryTable(n, k), x, y);
  return classify_pair_impl(n, k, x, y, nullptr);
}

DimensionClass classify_pair(const ComplementaryTable& table, KSubset x, KSubset y) {
  return classify_pair_impl(table.n(), table.k(), x, y, &table);
}

std::vector<KSubset> star(int n, int k, KSubset s) {
  check_level(n, k);
  if (k < 1 || s.n() != n || s.size() != k - 1) {
    throw Error(ErrorCode::InvalidArgument, "star needs a (k-1)-subset");
  }
  std::vector<KSubset> out;
  for (int i = 1; i <= n; ++i)
    if (!s.contains(i)) out.push_back(s | KSubset::from_indices(n, {i}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KSubset> top(int n, int k, KSubset top_set) {
  check_level(n, k);
  if (k + 1 > n || top_set.n() != n || top_set.size() != k + 1) {
    throw Error(ErrorCode::InvalidArgument, "top needs a (k+1)-subset");
  }
  std::vector<KSubset> out;
  for (int i : top_set.indices()) out.emplace_back(n, top_set.bits() & ~(1ULL << (i - 1)));
  std::sort(out.begin(), out.end());
  return out;
}

bool johnson_adjacent(KSubset a, KSubset b) {
  return a.size() == b.size() && meet(a, b) == a.size() - 1;
}

TripleHull triple_hull(int n, int k, KSubset x, KSubset y, KSubset z) {
  check_level(n, k);
  for (auto s : {x, y, z}) check_member(n, k, s, "triple member");
  if (!johnson_adjacent(x, y) || !johnson_adjacent(y, z) || !johnson_adjacent(x, z)) {
    throw Error(ErrorCode::Precondition, "triple is not mutually adjacent");
  }
  return {(x & y & z).size(), (x | y | z).size()};
}

}  // namespace oapt
