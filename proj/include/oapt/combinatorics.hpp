#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace oapt {

inline constexpr int kMaxN = 64;

/// A subset of {1..n} stored as a 64-bit mask (index i lives in bit i-1).
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, std::uint64_t bits);

  static KSubset from_indices(int n, std::initializer_list<int> indices);
  static KSubset from_indices(int n, const std::vector<int>& indices);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  KSubset complement() const;
  std::vector<int> indices() const;
  std::string to_string() const;

  friend KSubset operator&(KSubset a, KSubset b) { return {a.n_, a.bits_ & b.bits_}; }
  friend KSubset operator|(KSubset a, KSubset b) { return {a.n_, a.bits_ | b.bits_}; }
  friend auto operator<=>(const KSubset&, const KSubset&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Size of the intersection of two subsets.
int meet(KSubset a, KSubset b);

/// The unordered index pair {i, j} naming the complementary subset C_ij.
class ComplementaryPair {
 public:
  ComplementaryPair(int i, int j);

  int first() const { return i_; }
  int second() const { return j_; }
  /// X lies in C_ij iff X contains exactly one of i, j.
  bool contains(KSubset x) const { return x.contains(i_) != x.contains(j_); }
  bool meets(const ComplementaryPair& o) const {
    return i_ == o.i_ || i_ == o.j_ || j_ == o.i_ || j_ == o.j_;
  }
  std::string to_string() const;

  friend auto operator<=>(const ComplementaryPair&, const ComplementaryPair&) = default;

 private:
  int i_;
  int j_;
};

enum class CaseTag { Generic, N2K1, N2K2, N2K, Exceptional };

std::string_view to_string(CaseTag tag);

/// Tag of (n, k) with 1 < k < n-1. Levels above n/2 are tagged by their
/// dual level n-k, which has the same complementary-subset statistics.
CaseTag case_tag(int n, int k);

std::int64_t binom(int n, int k);
mpz_class binom_big(int n, int k);

/// All k-subsets of {1..n} in increasing mask order.
std::vector<KSubset> all_ksubsets(int n, int k);

/// (k-m)^2 + m(n-2k+m), the number of complementary subsets containing a pair
/// of apartment elements meeting in m indices.
std::int64_t c_formula(int n, int k, int m);

std::vector<ComplementaryPair> complementary_containing(int n, int k, KSubset x, KSubset y);
std::int64_t count_complementary_containing(int n, int k, KSubset x, KSubset y);

/// Members of C_ij.
std::vector<KSubset> complementary_subset(int n, int k, const ComplementaryPair& p);
/// A(+i,+j) u A(-i,-j).
std::vector<KSubset> maximal_inexact(int n, int k, int i, int j);

struct ComplementaryAdjacency {
  bool adjacent = false;
  std::int64_t intersection = 0;
};

/// Whether the index pairs meet, and |C_p n C_q| by enumeration.
ComplementaryAdjacency complementary_adjacent(int n, int k, const ComplementaryPair& p,
                                              const ComplementaryPair& q);

/// Closed-form |C_p n C_q|: binom(n-2,k-1) when the pairs meet, else
/// 4 binom(n-4,k-2).
std::int64_t complementary_intersection_formula(int n, int k, bool adjacent);

/// Enumerated |C_p n C_q| for every pair of complementary subsets of one
/// apartment level, so repeated resolution queries avoid re-enumeration.
class ComplementaryTable {
 public:
  ComplementaryTable(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::int64_t intersection(const ComplementaryPair& p, const ComplementaryPair& q) const;
  /// Adjacency as witnessed by intersection size alone.
  bool adjacent_by_count(const ComplementaryPair& p, const ComplementaryPair& q) const {
    return intersection(p, q) == binom(n_ - 2, k_ - 1);
  }
  /// Some complementary subset containing x and y is count-adjacent to no
  /// other complementary subset containing both.
  bool has_isolated(KSubset x, KSubset y) const;

 private:
  int index(const ComplementaryPair& p) const;

  int n_;
  int k_;
  std::vector<std::int64_t> table_;
};

/// Resolution for n = 2k+2 ties: true iff some complementary subset containing
/// both x and y shares no element-count-adjacency with any other one containing
/// both. Adjacency of complementary subsets is read off their intersection
/// cardinality, never off the index labels.
bool has_isolated_complementary(int n, int k, KSubset x, KSubset y);

struct DimensionClass {
  CaseTag tag = CaseTag::Generic;
  /// Intersection sizes consistent with the statistics, ascending. For
  /// n = 2k this is the unordered pair {m, k-m}; otherwise it is every m
  /// sharing the observed c-value, which is a single value whenever the
  /// pair is adjacent (m = k-1 at the lower level).
  std::vector<int> candidates;

  bool exact() const { return candidates.size() == 1; }
};

/// Recovers |X n Y| from complementary-subset statistics alone, resolving the
/// c(0) = c(k-1) tie of n = 2k+2 through complementary-subset adjacency.
/// Throws ErrorCode::Exceptional for n = 6, k in {2, 4}.
DimensionClass classify_pair(int n, int k, KSubset x, KSubset y);
DimensionClass classify_pair(const ComplementaryTable& table, KSubset x, KSubset y);

/// k-subsets containing the (k-1)-subset s.
std::vector<KSubset> star(int n, int k, KSubset s);
/// k-subsets contained in the (k+1)-subset top_set.
std::vector<KSubset> top(int n, int k, KSubset top_set);

bool johnson_adjacent(KSubset a, KSubset b);

struct TripleHull {
  int common = 0;  // |X n Y n Z|
  int span = 0;    // |X u Y u Z|
};

TripleHull triple_hull(int n, int k, KSubset x, KSubset y, KSubset z);

}  // namespace oapt
