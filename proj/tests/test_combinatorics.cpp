#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oapt/combinatorics.hpp"
#include "oapt/error.hpp"
#include "oapt/gamma_prime.hpp"

namespace oapt {
namespace {

KSubset S(int n, std::initializer_list<int> xs) { return KSubset::from_indices(n, xs); }

TEST(KSubset, Basics) {
  auto x = S(6, {1, 3, 5});
  EXPECT_EQ(x.size(), 3);
  EXPECT_EQ(x.complement().size(), 3);
  EXPECT_EQ(x.complement(), S(6, {2, 4, 6}));
  EXPECT_EQ(x.to_string(), "{1,3,5}");
  EXPECT_THROW(S(4, {5}), Error);
  EXPECT_EQ(all_ksubsets(7, 3).size(), 35u);
  EXPECT_EQ(all_ksubsets(64, 1).size(), 64u);
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      auto all = all_ksubsets(n, k);
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), binom(n, k));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
}

TEST(ComplementaryPair, Symmetric) {
  EXPECT_EQ(ComplementaryPair(3, 1), ComplementaryPair(1, 3));
  EXPECT_THROW(ComplementaryPair(2, 2), Error);
  ComplementaryPair p(1, 2);
  EXPECT_TRUE(p.contains(S(5, {1, 3})));
  EXPECT_FALSE(p.contains(S(5, {1, 2})));
  EXPECT_FALSE(p.contains(S(5, {3, 4})));
}

TEST(CFormula, Values) {
  EXPECT_EQ(c_formula(7, 3, 0), 9);
  EXPECT_EQ(c_formula(7, 3, 1), 6);
  EXPECT_EQ(c_formula(7, 3, 2), 7);
  EXPECT_EQ(c_formula(8, 3, 2), 9);
  EXPECT_EQ(c_formula(8, 3, 0), 9);
  EXPECT_EQ(c_formula(8, 4, 0), 16);
  EXPECT_EQ(c_formula(8, 4, 1), 10);
  EXPECT_EQ(c_formula(8, 4, 2), 8);
  EXPECT_EQ(c_formula(8, 4, 3), 10);
  EXPECT_THROW(c_formula(8, 4, 4), Error);
  EXPECT_THROW(c_formula(8, 4, -1), Error);
  // n = 2k: (k-m)^2 + m^2.
  for (int k = 2; k <= 20; ++k)
    for (int m = 0; m < k; ++m) EXPECT_EQ(c_formula(2 * k, k, m), (k - m) * (k - m) + m * m);
}

// Independent oracle: the two cases of the counting argument. A pair {i,j}
// is counted when one index is in X\Y and the other in Y\X, or one is in
// X n Y and the other outside X u Y.
std::int64_t proof_case_count(int n, KSubset x, KSubset y) {
  std::int64_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto kind = [&](int t) {
        const bool in_x = x.contains(t), in_y = y.contains(t);
        return in_x && in_y ? 'b' : in_x ? 'x' : in_y ? 'y' : 'o';
      };
      const char a = kind(i), b = kind(j);
      if ((a == 'x' && b == 'y') || (a == 'y' && b == 'x')) ++c;
      if ((a == 'b' && b == 'o') || (a == 'o' && b == 'b')) ++c;
    }
  return c;
}

TEST(CountComplementary, Examples) {
  auto pairs = complementary_containing(5, 2, S(5, {1, 2}), S(5, {1, 3}));
  std::set<ComplementaryPair> got(pairs.begin(), pairs.end());
  EXPECT_EQ(got, (std::set<ComplementaryPair>{{2, 3}, {1, 4}, {1, 5}}));
  EXPECT_EQ(count_complementary_containing(4, 2, S(4, {1, 2}), S(4, {3, 4})), 4);
  for (auto x : all_ksubsets(6, 2))
    for (auto y : all_ksubsets(6, 2))
      if (x != y) EXPECT_EQ(count_complementary_containing(6, 2, x, y), 4);
  EXPECT_THROW(count_complementary_containing(5, 2, S(5, {1, 2}), S(5, {1, 2})), Error);
}

TEST(CountComplementary, MatchesFormulaAndProofCases) {
  for (int n = 4; n <= 9; ++n)
    for (int k = 2; k < n - 1; ++k) {
      auto all = all_ksubsets(n, k);
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) {
          const auto got = count_complementary_containing(n, k, all[a], all[b]);
          const int m = meet(all[a], all[b]);
          ASSERT_EQ(got, c_formula(n, k, m)) << n << "," << k;
          ASSERT_EQ(got, proof_case_count(n, all[a], all[b]));
        }
    }
}

TEST(MaximalInexact, Cardinalities) {
  EXPECT_EQ(maximal_inexact(5, 2, 1, 2).size(), 4u);
  EXPECT_EQ(complementary_subset(5, 2, {1, 2}).size(), 6u);
  EXPECT_EQ(maximal_inexact(4, 2, 1, 2).size(), 2u);
  EXPECT_EQ(complementary_subset(4, 2, {1, 2}).size(), 4u);
  EXPECT_THROW(maximal_inexact(5, 2, 3, 3), Error);
  for (int n = 4; n <= 16; ++n)
    for (int k = 2; k < n - 1; ++k)
      EXPECT_EQ(binom(n, k) - binom(n - 2, k - 2) - binom(n - 2, k), 2 * binom(n - 2, k - 1));
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; k < n - 1; ++k) {
      auto inexact = maximal_inexact(n, k, 2, n);
      EXPECT_EQ(static_cast<std::int64_t>(inexact.size()),
                binom(n - 2, k - 2) + binom(n - 2, k));
      for (auto x : inexact) EXPECT_EQ(x.contains(2), x.contains(n));
    }
}

TEST(ComplementaryAdjacency, Examples) {
  auto adj = complementary_adjacent(8, 3, {1, 2}, {2, 5});
  EXPECT_TRUE(adj.adjacent);
  EXPECT_EQ(adj.intersection, 15);
  auto non = complementary_adjacent(8, 3, {1, 2}, {3, 4});
  EXPECT_FALSE(non.adjacent);
  EXPECT_EQ(non.intersection, 16);
  EXPECT_EQ(complementary_adjacent(6, 2, {1, 2}, {1, 3}).intersection, 4);
  EXPECT_EQ(complementary_adjacent(6, 2, {1, 2}, {3, 4}).intersection, 4);
  EXPECT_THROW(complementary_adjacent(6, 2, {1, 2}, {2, 1}), Error);
}

TEST(ComplementaryAdjacency, CoincidenceOnlyAtTwo) {
  for (int k = 2; k <= 50; ++k) {
    const bool eq = binom_big(2 * k, k - 1) == 4 * binom_big(2 * k - 2, k - 2);
    EXPECT_EQ(eq, k == 2) << k;
  }
}

TEST(CaseTag, Table) {
  EXPECT_EQ(case_tag(9, 3), CaseTag::Generic);
  EXPECT_EQ(case_tag(7, 3), CaseTag::N2K1);
  EXPECT_EQ(case_tag(8, 3), CaseTag::N2K2);
  EXPECT_EQ(case_tag(8, 4), CaseTag::N2K);
  EXPECT_EQ(case_tag(6, 2), CaseTag::Exceptional);
  EXPECT_EQ(case_tag(6, 4), CaseTag::Exceptional);
  EXPECT_EQ(case_tag(6, 3), CaseTag::N2K);
  EXPECT_EQ(case_tag(7, 4), CaseTag::N2K1);  // dual level 3
  EXPECT_THROW(case_tag(5, 1), Error);
}

TEST(Classify, Examples) {
  // (7,3): c-table {9, 6, 7}; count 7 pins m = 2.
  auto r = classify_pair(7, 3, S(7, {1, 2, 3}), S(7, {1, 2, 4}));
  EXPECT_EQ(r.tag, CaseTag::N2K1);
  EXPECT_EQ(r.candidates, std::vector<int>{2});
  // (8,3) tie between m = 0 and m = 2 resolved to 0.
  auto t = classify_pair(8, 3, S(8, {1, 2, 3}), S(8, {4, 5, 6}));
  EXPECT_EQ(count_complementary_containing(8, 3, S(8, {1, 2, 3}), S(8, {4, 5, 6})), 9);
  EXPECT_EQ(t.candidates, std::vector<int>{0});
  auto a = classify_pair(8, 3, S(8, {1, 2, 3}), S(8, {1, 2, 4}));
  EXPECT_EQ(a.candidates, std::vector<int>{2});
  auto h = classify_pair(8, 4, S(8, {1, 2, 3, 4}), S(8, {1, 2, 5, 6}));
  EXPECT_EQ(h.tag, CaseTag::N2K);
  EXPECT_EQ(h.candidates, std::vector<int>{2});
  try {
    classify_pair(6, 2, S(6, {1, 2}), S(6, {1, 3}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::Exceptional);
  }
}

TEST(Classify, ExactForAllNonExceptional) {
  for (int n = 4; n <= 10; ++n)
    for (int k = 2; k < n - 1; ++k) {
      if (case_tag(n, k) == CaseTag::Exceptional) continue;
      ComplementaryTable table(n, k);
      auto all = all_ksubsets(n, k);
      for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) {
          const int m = meet(all[a], all[b]);
          auto res = classify_pair(table, all[a], all[b]);
          if (res.tag == CaseTag::N2K) {
            std::vector<int> expect{std::min(m, k - m), std::max(m, k - m)};
            expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
            ASSERT_EQ(res.candidates, expect);
          } else {
            ASSERT_NE(std::find(res.candidates.begin(), res.candidates.end(), m),
                      res.candidates.end());
            const int low = std::min(k, n - k);
            const int shift = low == k ? 0 : 2 * k - n;
            for (int c : res.candidates)
              ASSERT_EQ(c_formula(n, low, c - shift), c_formula(n, low, m - shift));
            if (m - shift == low - 1 || res.tag == CaseTag::N2K1) {
              ASSERT_EQ(res.candidates, std::vector<int>{m}) << n << "," << k;
            }
          }
        }
    }
}

TEST(Classify, GenericCollisionsAwayFromAdjacency) {
  // c(x) is symmetric about (4k-n)/4, so c(0) = c(1) at (10,3).
  EXPECT_EQ(c_formula(10, 3, 0), c_formula(10, 3, 1));
  auto r = classify_pair(10, 3, S(10, {1, 2, 3}), S(10, {4, 5, 6}));
  EXPECT_EQ(r.candidates, (std::vector<int>{0, 1}));
  EXPECT_EQ(classify_pair(10, 3, S(10, {1, 2, 3}), S(10, {1, 2, 4})).candidates,
            std::vector<int>{2});
}

TEST(CaseAnalysis, Scans) {
  for (int n = 5; n <= 40; ++n)
    for (int k = 2; 2 * k + 3 <= n; ++k)
      for (int m = 0; m < k - 1; ++m) EXPECT_GT(c_formula(n, k, k - 1), c_formula(n, k, m));
  for (int k = 2; 2 * k + 2 <= 42; ++k) {
    const int n = 2 * k + 2;
    EXPECT_EQ(c_formula(n, k, k - 1), c_formula(n, k, 0));
    for (int m = 1; m <= k - 2; ++m) EXPECT_GT(c_formula(n, k, 0), c_formula(n, k, m));
  }
  for (int k = 2; 2 * k + 1 <= 41; ++k) {
    std::set<std::int64_t> seen;
    for (int m = 0; m < k; ++m) seen.insert(c_formula(2 * k + 1, k, m));
    EXPECT_EQ(static_cast<int>(seen.size()), k);
  }
  for (int k = 2; k <= 20; ++k)
    for (int m = 0; m < k; ++m)
      for (int m2 = 0; m2 < k; ++m2)
        EXPECT_EQ(c_formula(2 * k, k, m) == c_formula(2 * k, k, m2), m2 == m || m2 == k - m);
}

TEST(Resolution, TiesSplitByIsolatedComplementary) {
  for (auto [n, k] : {std::pair{8, 3}, std::pair{10, 4}}) {
    ComplementaryTable table(n, k);
    auto all = all_ksubsets(n, k);
    int disjoint = 0, adjacent = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        const int m = meet(all[a], all[b]);
        if (m != 0 && m != k - 1) continue;
        const auto containing = complementary_containing(n, k, all[a], all[b]);
        int isolated = 0;
        for (const auto& p : containing) {
          bool any = false;
          for (const auto& q : containing)
            if (!(p == q) && p.meets(q)) any = true;
          isolated += any ? 0 : 1;
        }
        if (m == 0) {
          ++disjoint;
          EXPECT_EQ(isolated, 0);
        } else {
          ++adjacent;
          EXPECT_EQ(isolated, 1);
        }
        EXPECT_EQ(table.has_isolated(all[a], all[b]), m == k - 1);
      }
    EXPECT_GT(disjoint, 0);
    EXPECT_GT(adjacent, 0);
  }
}

TEST(StarTop, Sizes) {
  EXPECT_EQ(star(7, 3, S(7, {1, 2})).size(), 5u);
  EXPECT_EQ(top(7, 3, S(7, {1, 2, 3, 4})).size(), 4u);
  EXPECT_EQ(star(8, 4, S(8, {1, 2, 3})).size(), top(8, 4, S(8, {1, 2, 3, 4, 5})).size());
  EXPECT_THROW(star(7, 3, S(7, {1})), Error);
  EXPECT_THROW(top(7, 3, S(7, {1, 2, 3})), Error);
}

TEST(StarTop, MaximalCliquesOfJohnsonGraph) {
  const int n = 7, k = 3;
  auto all = all_ksubsets(n, k);
  auto is_max_clique = [&](const std::vector<KSubset>& c) {
    for (auto a : c)
      for (auto b : c)
        if (a != b && !johnson_adjacent(a, b)) return false;
    for (auto z : all) {
      if (std::find(c.begin(), c.end(), z) != c.end()) continue;
      bool all_adj = true;
      for (auto a : c) all_adj = all_adj && johnson_adjacent(a, z);
      if (all_adj) return false;
    }
    return true;
  };
  for (auto s : all_ksubsets(n, k - 1)) EXPECT_TRUE(is_max_clique(star(n, k, s)));
  for (auto t : all_ksubsets(n, k + 1)) EXPECT_TRUE(is_max_clique(top(n, k, t)));
}

TEST(TripleHull, Dichotomy) {
  auto star_type = triple_hull(8, 4, S(8, {1, 2, 3, 4}), S(8, {1, 2, 3, 5}), S(8, {1, 2, 3, 6}));
  EXPECT_EQ(star_type.common, 3);
  EXPECT_EQ(star_type.span, 6);
  auto top_type = triple_hull(8, 4, S(8, {1, 2, 3, 4}), S(8, {1, 2, 3, 5}), S(8, {1, 2, 4, 5}));
  EXPECT_EQ(top_type.common, 2);
  EXPECT_EQ(top_type.span, 5);
  EXPECT_THROW(triple_hull(8, 4, S(8, {1, 2, 3, 4}), S(8, {5, 6, 7, 8}), S(8, {1, 2, 3, 5})),
               Error);

  std::set<std::pair<int, int>> outcomes;
  auto all = all_ksubsets(8, 4);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (!johnson_adjacent(all[a], all[b])) continue;
      for (std::size_t c = b + 1; c < all.size(); ++c) {
        if (!johnson_adjacent(all[a], all[c]) || !johnson_adjacent(all[b], all[c])) continue;
        auto h = triple_hull(8, 4, all[a], all[b], all[c]);
        outcomes.insert({h.common, h.span});
      }
    }
  EXPECT_EQ(outcomes, (std::set<std::pair<int, int>>{{3, 6}, {2, 5}}));
}

TEST(GammaPrime, Structure) {
  GammaPrime g(8, 4);
  EXPECT_EQ(g.vertices().size(), 35u);
  EXPECT_TRUE(GammaPrime::adjacent(PairVertex(S(8, {1, 2, 3, 4})), PairVertex(S(8, {1, 2, 3, 5}))));
  // |X n Y| = 1, so |X n Y^c| = 3: adjacent through the complement.
  const auto x = S(8, {1, 2, 3, 4});
  const auto y = S(8, {5, 6, 7, 1});
  EXPECT_EQ(meet(x, y), 1);
  EXPECT_EQ(meet(x, y.complement()), 3);
  EXPECT_TRUE(GammaPrime::adjacent(PairVertex(x), PairVertex(y)));
  EXPECT_THROW(GammaPrime(9, 4), Error);

  auto c = clique_C(8, 4, S(8, {1, 2, 3}));
  EXPECT_EQ(c.size(), 5u);
  for (const auto& v : c) EXPECT_TRUE(v.has_member_containing(S(8, {1, 2, 3})));
}

TEST(GammaPrime, MaximalCliquesAreTheCS) {
  // k = 3 is degenerate: every two pair vertices of J(6,3) are adjacent.
  EXPECT_EQ(GammaPrime(6, 3).graph().edge_count(), 45u);
  for (int k : {4, 5}) {
    const int n = 2 * k;
    GammaPrime g(n, k);
    auto cliques = maximal_cliques(g.graph());
    std::set<std::vector<bool>> found;
    for (const auto& c : cliques) {
      EXPECT_EQ(static_cast<int>(c.count()), k + 1);
      std::vector<bool> bits(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) bits[i] = c.test(i);
      found.insert(bits);
    }
    std::set<std::vector<bool>> expected;
    for (auto s : all_ksubsets(n, k - 1)) {
      auto set = g.to_set(clique_C(n, k, s));
      EXPECT_TRUE(is_maximal_clique(g.graph(), set));
      std::vector<bool> bits(set.size());
      for (std::size_t i = 0; i < set.size(); ++i) bits[i] = set.test(i);
      expected.insert(bits);
    }
    EXPECT_EQ(static_cast<std::int64_t>(expected.size()), binom(n, k - 1));
    EXPECT_EQ(found, expected);
  }
}

}  // namespace
}  // namespace oapt
