#include "oapt/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "oapt/combinatorics.hpp"
#include "oapt/error.hpp"
#include "oapt/gamma_prime.hpp"
#include "oapt/random.hpp"

namespace oapt {

namespace {

using json = nlohmann::ordered_json;

// Exhaustive pair scans above this many apartment elements are skipped.
constexpr std::int64_t kExhaustiveLimit = 1000;
// Random pairs per (n, k): the full count up to n = 6, fewer above since
// exact entries grow quickly with n.
constexpr int kRandomCompatPairs = 1000;
constexpr int kRandomCompatPairsLarge = 100;
constexpr int kRecoverySpecs = 50;
constexpr int kRecoveryLines = 100;

CheckRecord record(const std::string& suite, int n, int k, std::string anchor) {
  CheckRecord r;
  r.suite = suite;
  r.n = n;
  r.k = k;
  r.anchor = std::move(anchor);
  return r;
}

void fail(CheckRecord& r, std::string witness) {
  if (r.status == Status::Fail) return;  // keep the first violation
  r.status = Status::Fail;
  r.witness = std::move(witness);
}

CheckRecord skipped(const std::string& suite, int n, int k, std::string anchor, std::string reason) {
  CheckRecord r = record(suite, n, k, std::move(anchor));
  r.status = Status::Skipped;
  r.details["reason"] = std::move(reason);
  return r;
}

std::string pair_text(KSubset x, KSubset y) { return "X=" + x.to_string() + ", Y=" + y.to_string(); }

std::string too_large(int n, int k) {
  return "binom(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the exhaustive limit " +
         std::to_string(kExhaustiveLimit);
}

// Feasible intersection sizes of two distinct k-subsets of {1..n}.
std::pair<int, int> m_range(int n, int k) { return {std::max(0, 2 * k - n), k - 1}; }

// ---------------------------------------------------------------- lemma2

std::vector<CheckRecord> suite_lemma2(int n, int k, Rng&) {
  const std::string anchor = "Lemma 2";
  if (binom(n, k) > kExhaustiveLimit) return {skipped("lemma2", n, k, anchor, too_large(n, k))};
  CheckRecord r = record("lemma2", n, k, anchor);
  const auto all = all_ksubsets(n, k);
  std::map<int, std::int64_t> by_m;
  std::int64_t pairs = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const int m = meet(all[a], all[b]);
      // Brute force: every {i, j} with exactly one of i, j in X and likewise in Y.
      std::int64_t count = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (all[a].contains(i) != all[a].contains(j) && all[b].contains(i) != all[b].contains(j))
            ++count;
      ++pairs;
      ++by_m[m];
      const std::int64_t c = c_formula(n, k, m);
      if (count != c) {
        fail(r, pair_text(all[a], all[b]) + ": m=" + std::to_string(m) + ", count=" +
                    std::to_string(count) + ", c(m)=" + std::to_string(c));
      }
    }
  }
  r.details["pairs"] = pairs;
  json hist = json::object();
  for (const auto& [m, cnt] : by_m) hist[std::to_string(m)] = cnt;
  r.details["pairs_by_m"] = hist;
  return {r};
}

// ---------------------------------------------------------------- case-table

std::vector<std::int64_t> c_values(int n, int k) {
  std::vector<std::int64_t> out;
  const auto [lo, hi] = m_range(n, k);
  for (int m = lo; m <= hi; ++m) out.push_back(c_formula(n, k, m));
  return out;
}

// Pairs (m, m') with m < m' and c(m) = c(m').
std::vector<std::pair<int, int>> collisions(int n, int k) {
  const auto [lo, hi] = m_range(n, k);
  std::vector<std::pair<int, int>> out;
  for (int m = lo; m <= hi; ++m)
    for (int m2 = m + 1; m2 <= hi; ++m2)
      if (c_formula(n, k, m) == c_formula(n, k, m2)) out.emplace_back(m, m2);
  return out;
}

std::vector<CheckRecord> suite_case_table(int n, int k, Rng&) {
  CheckRecord r = record("case-table", n, k, "§4.2 case table");
  const CaseTag tag = case_tag(n, k);
  const int low = std::min(k, n - k);
  // The analysis lives at the dual level; c there is a shifted copy.
  std::vector<std::int64_t> c;
  for (int m = 0; m < low; ++m) c.push_back(c_formula(n, low, m));
  const std::int64_t top = c.back();
  std::ostringstream why;
  bool ok = true;
  switch (tag) {
    case CaseTag::Generic:
      for (int m = 0; m + 1 < low; ++m) {
        if (c[m] >= top) {
          ok = false;
          why << "c(" << low - 1 << ")=" << top << " does not exceed c(" << m << ")=" << c[m];
          break;
        }
      }
      break;
    case CaseTag::N2K2:
      if (c[0] != top) {
        ok = false;
        why << "c(0)=" << c[0] << " differs from c(" << low - 1 << ")=" << top;
      }
      for (int m = 1; ok && m + 1 < low; ++m) {
        if (c[m] >= top) {
          ok = false;
          why << "c(" << m << ")=" << c[m] << " is not below c(0)=c(" << low - 1 << ")";
        }
      }
      break;
    case CaseTag::N2K1:
      if (std::set<std::int64_t>(c.begin(), c.end()).size() != c.size()) {
        ok = false;
        why << "c-values are not pairwise distinct";
      }
      break;
    case CaseTag::N2K:
      for (int m = 0; ok && m < low; ++m)
        for (int m2 = 0; m2 < low; ++m2)
          if ((c[m] == c[m2]) != (m == m2 || m + m2 == low)) {
            ok = false;
            why << "c(" << m << ")=" << c[m] << ", c(" << m2 << ")=" << c[m2];
            break;
          }
      break;
    case CaseTag::Exceptional:
      if (std::set<std::int64_t>(c.begin(), c.end()).size() != 1) {
        ok = false;
        why << "c is not constant";
      }
      break;
  }
  if (!ok) fail(r, why.str());
  r.details["case"] = to_string(tag);
  r.details["level"] = low;
  r.details["c"] = c;
  return {r};
}

// ---------------------------------------------------------------- coincidence

bool coincidence_identity(int k) {
  return binom_big(2 * k, k - 1) == 4 * binom_big(2 * k - 2, k - 2);
}

std::vector<CheckRecord> suite_coincidence(int n, int k, Rng&) {
  CheckRecord r = record("coincidence", n, k, "§4.3 coincidence");
  const bool identity = coincidence_identity(k);
  if (identity != (k == 2)) {
    fail(r, "binom(2k,k-1) = 4 binom(2k-2,k-2) is " + std::string(identity ? "true" : "false") +
                " at k=" + std::to_string(k));
  }
  // Brute force over the complementary subsets themselves.
  const auto all = all_ksubsets(n, k);
  std::vector<ComplementaryPair> pairs;
  std::vector<VertexSet> members;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pairs.emplace_back(i, j);
      VertexSet s(all.size());
      for (std::size_t x = 0; x < all.size(); ++x)
        if (pairs.back().contains(all[x])) s.set(x);
      members.push_back(std::move(s));
    }
  }
  const std::int64_t adj = complementary_intersection_formula(n, k, true);
  const std::int64_t nonadj = complementary_intersection_formula(n, k, false);
  std::int64_t checked = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto size = static_cast<std::int64_t>((members[p] & members[q]).count());
      const bool meets = pairs[p].meets(pairs[q]);
      ++checked;
      if (size != (meets ? adj : nonadj)) {
        fail(r, pairs[p].to_string() + " n " + pairs[q].to_string() + " has " + std::to_string(size) +
                    " elements, expected " + std::to_string(meets ? adj : nonadj));
      }
    }
  }
  r.details["identity"] = identity;
  r.details["adjacent_size"] = adj;
  r.details["nonadjacent_size"] = nonadj;
  r.details["sizes_coincide"] = adj == nonadj;
  r.details["pairs"] = checked;
  return {r};
}

// ---------------------------------------------------------------- resolution

// Complementary subsets containing x and y that share no index with any
// other complementary subset containing both.
int isolated_count(int n, int k, KSubset x, KSubset y) {
  const auto containing = complementary_containing(n, k, x, y);
  int isolated = 0;
  for (const auto& p : containing) {
    bool any = false;
    for (const auto& q : containing)
      if (!(p == q) && p.meets(q)) any = true;
    isolated += any ? 0 : 1;
  }
  return isolated;
}

std::vector<CheckRecord> suite_resolution(int n, int k, Rng&) {
  const std::string anchor = "§4.3 resolution";
  if (case_tag(n, k) != CaseTag::N2K2) {
    return {skipped("resolution", n, k, anchor, "applies to n = 2k+2 (case N2K2) only")};
  }
  if (binom(n, k) > kExhaustiveLimit) return {skipped("resolution", n, k, anchor, too_large(n, k))};
  CheckRecord r = record("resolution", n, k, anchor);
  const ComplementaryTable table(n, k);
  const auto all = all_ksubsets(n, k);
  const int low = std::min(k, n - k);
  // At the dual level complements meet in n-2k+m indices.
  const int shift = k <= n - k ? 0 : n - 2 * k;
  std::int64_t far = 0, adjacent_pairs = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const int m_low = meet(all[a], all[b]) + shift;
      if (m_low != 0 && m_low != low - 1) continue;
      const int isolated = isolated_count(n, k, all[a], all[b]);
      const int expected = m_low == 0 ? 0 : 1;
      if (m_low == 0) ++far; else ++adjacent_pairs;
      if (isolated != expected || table.has_isolated(all[a], all[b]) != (expected == 1)) {
        fail(r, pair_text(all[a], all[b]) + ": " + std::to_string(isolated) +
                    " isolated complementary subsets, expected " + std::to_string(expected));
      }
    }
  }
  r.details["disjoint_pairs"] = far;
  r.details["adjacent_pairs"] = adjacent_pairs;
  return {r};
}

// ---------------------------------------------------------------- classify

CheckRecord exceptional_degeneracy(int n, int k) {
  CheckRecord r = record("classify", n, k, "Remark 3");
  const auto all = all_ksubsets(n, k);
  std::set<std::int64_t> counts;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      counts.insert(count_complementary_containing(n, k, all[a], all[b]));
  std::set<std::int64_t> sizes;
  const ComplementaryTable table(n, k);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
          if (ComplementaryPair(i, j) < ComplementaryPair(p, q))
            sizes.insert(table.intersection({i, j}, {p, q}));
  if (counts != std::set<std::int64_t>{4}) fail(r, "pair counts are not all 4");
  if (sizes != std::set<std::int64_t>{4}) fail(r, "complementary intersections are not all 4");
  bool refused = false;
  try {
    classify_pair(n, k, all[0], all[1]);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::Exceptional;
  }
  if (!refused) fail(r, "classify_pair did not refuse with EXCEPTIONAL");
  r.details["kind"] = "EXCEPTIONAL-DEGENERACY";
  r.details["pair_count"] = 4;
  r.details["intersection_size"] = 4;
  return r;
}

std::vector<CheckRecord> suite_classify(int n, int k, Rng&) {
  if (case_tag(n, k) == CaseTag::Exceptional) return {exceptional_degeneracy(n, k)};
  const std::string anchor = "§4.2 classification";
  if (binom(n, k) > kExhaustiveLimit) return {skipped("classify", n, k, anchor, too_large(n, k))};
  CheckRecord r = record("classify", n, k, anchor);
  const ComplementaryTable table(n, k);
  const auto all = all_ksubsets(n, k);
  std::int64_t pairs = 0, exact = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const int m = meet(all[a], all[b]);
      const auto dc = classify_pair(table, all[a], all[b]);
      ++pairs;
      exact += dc.exact() ? 1 : 0;
      const bool found = std::find(dc.candidates.begin(), dc.candidates.end(), m) != dc.candidates.end();
      // At n = 2k, m and k-m are indistinguishable by construction.
      const bool must_be_exact = dc.tag != CaseTag::N2K && (m == k - 1 || dc.tag == CaseTag::N2K1);
      if (!found || (must_be_exact && !dc.exact())) {
        fail(r, pair_text(all[a], all[b]) + ": m=" + std::to_string(m) + " but classified as " +
                    json(dc.candidates).dump());
      }
    }
  }
  r.details["case"] = to_string(case_tag(n, k));
  r.details["pairs"] = pairs;
  r.details["exact"] = exact;
  r.details["ambiguous"] = pairs - exact;
  return {r};
}

// ---------------------------------------------------------------- gamma-prime

std::string budget_note(int k) {
  return "2k = " + std::to_string(2 * k) + " < 8: outside the hypothesis 2k >= 8; observed, not asserted";
}

std::vector<CheckRecord> suite_gamma_prime(int n, int k, Rng&) {
  const std::string anchor = "Lemma 2-3";
  if (n != 2 * k) return {skipped("gamma-prime", n, k, anchor, "applies to n = 2k only")};
  const GammaPrime g(n, k);
  const auto cliques = maximal_cliques(g.graph());
  std::set<VertexSet> expected;
  for (auto s : all_ksubsets(n, k - 1)) expected.insert(g.to_set(clique_C(n, k, s)));
  std::set<std::size_t> sizes;
  std::size_t matched = 0;
  for (const auto& c : cliques) {
    sizes.insert(c.count());
    matched += expected.count(c);
  }
  CheckRecord r = record("gamma-prime", n, k, anchor);
  r.details["vertices"] = g.vertices().size();
  r.details["edges"] = g.graph().edge_count();
  r.details["cliques"] = cliques.size();
  if (sizes.size() == 1) {
    r.details["clique_size"] = *sizes.begin();
  } else {
    r.details["clique_sizes"] = std::vector<std::size_t>(sizes.begin(), sizes.end());
  }
  r.details["cliques_equal_to_some_C(S)"] = matched;
  if (k < 4) {
    r.status = Status::Skipped;
    r.details["reason"] = budget_note(k);
    return {r};
  }
  if (cliques.size() != expected.size() || matched != cliques.size()) {
    fail(r, std::to_string(cliques.size()) + " maximal cliques, " + std::to_string(matched) +
                " of the form C(S); expected " + std::to_string(expected.size()));
  }
  return {r};
}

// ---------------------------------------------------------------- triple-hull

std::vector<CheckRecord> suite_triple_hull(int n, int k, Rng&) {
  const std::string anchor = "Lemma 2-4";
  if (n != 2 * k) return {skipped("triple-hull", n, k, anchor, "applies to n = 2k only")};
  const GammaPrime g(n, k);
  const auto cliques = maximal_cliques(g.graph());
  const auto all = all_ksubsets(n, k);
  CheckRecord r = record("triple-hull", n, k, anchor);
  std::int64_t triples = 0, star_type = 0, top_type = 0, unique = 0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (!johnson_adjacent(all[a], all[b])) continue;
      for (std::size_t c = b + 1; c < all.size(); ++c) {
        if (!johnson_adjacent(all[a], all[c]) || !johnson_adjacent(all[b], all[c])) continue;
        ++triples;
        const auto h = triple_hull(n, k, all[a], all[b], all[c]);
        const std::string where = all[a].to_string() + ", " + all[b].to_string() + ", " + all[c].to_string();
        KSubset s;
        if (h.common == k - 1 && h.span == k + 2) {
          ++star_type;
          s = all[a] & all[b] & all[c];
        } else if (h.common == k - 2 && h.span == k + 1) {
          ++top_type;
          s = (all[a] | all[b] | all[c]).complement();
        } else {
          fail(r, where + ": common " + std::to_string(h.common) + ", span " + std::to_string(h.span));
          continue;
        }
        const VertexSet members =
            g.to_set({PairVertex(all[a]), PairVertex(all[b]), PairVertex(all[c])});
        std::vector<const VertexSet*> containing;
        for (const auto& cl : cliques)
          if (members.is_subset_of(cl)) containing.push_back(&cl);
        if (containing.size() == 1 && *containing[0] == g.to_set(clique_C(n, k, s))) {
          ++unique;
        } else if (k >= 4) {
          fail(r, where + ": " + std::to_string(containing.size()) +
                      " maximal cliques of the pair graph contain the triple");
        }
      }
    }
  }
  r.details["triples"] = triples;
  r.details["star_type"] = star_type;
  r.details["top_type"] = top_type;
  r.details["unique_clique"] = unique;
  if (k < 4 && r.status == Status::Pass) {
    r.status = Status::Skipped;
    r.details["reason"] = budget_note(k);
  }
  return {r};
}

// ---------------------------------------------------------------- inexact

std::vector<CheckRecord> suite_inexact(int n, int k, Rng&) {
  CheckRecord r = record("inexact", n, k, "Lemma 1 (maximal inexact subsets)");
  const std::int64_t want_inexact = binom(n - 2, k - 2) + binom(n - 2, k);
  const std::int64_t want_c = 2 * binom(n - 2, k - 1);
  const auto all = all_ksubsets(n, k);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::int64_t both_or_neither = 0;
      for (auto x : all) both_or_neither += x.contains(i) == x.contains(j) ? 1 : 0;
      const auto inexact = static_cast<std::int64_t>(maximal_inexact(n, k, i, j).size());
      const auto comp = static_cast<std::int64_t>(complementary_subset(n, k, {i, j}).size());
      if (inexact != want_inexact || both_or_neither != want_inexact || comp != want_c ||
          comp + inexact != binom(n, k)) {
        fail(r, "i=" + std::to_string(i) + ", j=" + std::to_string(j) + ": |inexact|=" +
                    std::to_string(inexact) + ", |C_ij|=" + std::to_string(comp));
      }
    }
  }
  // The witness base shares exactly the maximal inexact subset with the standard apartment.
  std::size_t numeric_pairs = 0;
  if (binom(n, k) <= kExhaustiveLimit) {
    const auto standard = OrthoBase::standard(static_cast<std::size_t>(n));
    const NumericApartment a(standard, k);
    for (auto [i, j] : {std::pair{1, 2}, std::pair{n - 1, n}}) {
      const NumericApartment b(inexact_witness(standard, static_cast<std::size_t>(i),
                                               static_cast<std::size_t>(j)),
                               k);
      const auto other = b.element_set();
      for (auto x : all) {
        const bool shared = other.count(a.element(x)) > 0;
        if (shared != (x.contains(i) == x.contains(j))) {
          fail(r, "witness base for (" + std::to_string(i) + "," + std::to_string(j) + ") " +
                      (shared ? "shares " : "misses ") + x.to_string());
        }
      }
      ++numeric_pairs;
    }
  }
  r.details["maximal_inexact_size"] = want_inexact;
  r.details["complementary_size"] = want_c;
  r.details["witness_bases_checked"] = numeric_pairs;
  return {r};
}

// ---------------------------------------------------------------- compat

struct CompatTally {
  std::int64_t pairs = 0;
  std::int64_t compatible = 0;
};

void compare_compat(CheckRecord& r, CompatTally& t, const Subspace& x, const Subspace& y,
                    const HermitianForm& form) {
  const bool by_decomposition = compatible(x, y, form);
  const bool by_projections = commuting_projections(x, y, form);
  ++t.pairs;
  t.compatible += by_decomposition ? 1 : 0;
  if (by_decomposition != by_projections) {
    fail(r, "X=" + x.to_string() + ", Y=" + y.to_string() + ": decomposition says " +
                (by_decomposition ? "compatible" : "incompatible") + ", projections disagree");
  }
}

std::vector<CheckRecord> suite_compat(int n, int k, Rng& rng) {
  const auto nn = static_cast<std::size_t>(n);
  const HermitianForm form(nn);
  std::vector<CheckRecord> out;
  {
    // Structured corpus: two apartments sharing a maximal inexact subset.
    CheckRecord r = record("compat", n, k, "compatibility (structured corpus)");
    CompatTally t;
    std::vector<Subspace> corpus;
    std::set<Subspace> seen;
    for (const auto& base : default_bases(n))
      for (const auto& x : NumericApartment(base, k).elements())
        if (seen.insert(x).second) corpus.push_back(x);
    // Beyond 60 members, pair the first 4 members with everything.
    const std::size_t heads = corpus.size() <= 60 ? corpus.size() : 4;
    for (std::size_t a = 0; a < std::min(heads, corpus.size()); ++a)
      for (std::size_t b = a + 1; b < corpus.size(); ++b) compare_compat(r, t, corpus[a], corpus[b], form);
    r.details["members"] = corpus.size();
    r.details["pairs"] = t.pairs;
    r.details["compatible"] = t.compatible;
    out.push_back(std::move(r));
  }
  {
    // Half the random pairs come from a common random orthogonal base, so
    // both verdicts are exercised.
    CheckRecord r = record("compat", n, k, "compatibility (random pairs)");
    CompatTally t;
    const auto subsets = all_ksubsets(n, k);
    const int total = n <= 6 ? kRandomCompatPairs : kRandomCompatPairsLarge;
    for (int i = 0; i < total; ++i) {
      if (i % 2 == 0) {
        compare_compat(r, t, random_subspace(rng, nn, static_cast<std::size_t>(k)),
                       random_subspace(rng, nn, static_cast<std::size_t>(k)), form);
      } else {
        const auto rows = random_scaled_unitary(rng, nn).row_vectors();
        const NumericApartment a(OrthoBase(rows, form), k);
        auto pick = [&] { return subsets[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(subsets.size()) - 1))]; };
        compare_compat(r, t, a.element(pick()), a.element(pick()), form);
      }
    }
    r.details["pairs"] = t.pairs;
    r.details["compatible"] = t.compatible;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- witness

struct TripleCheck {
  Subspace x, y;
  std::vector<Subspace> witnesses;
  std::vector<std::pair<std::string, bool>> checks;
};

std::pair<Subspace, Subspace> adjacent_pair(int n, int k) {
  const auto nn = static_cast<std::size_t>(n);
  const auto id = ExactMatrix::identity(nn).row_vectors();
  std::vector<Vector> xs(id.begin(), id.begin() + k);
  std::vector<Vector> ys(id.begin(), id.begin() + (k - 1));
  Vector bent = id[static_cast<std::size_t>(k - 1)];
  bent[static_cast<std::size_t>(k)] = 1;
  ys.push_back(bent);
  return {Subspace(nn, xs), Subspace(nn, ys)};
}

TripleCheck compatible_triple(int n, int k, int count) {
  if (k < 1 || k >= n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k < n");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be positive");
  const auto nn = static_cast<std::size_t>(n);
  const HermitianForm form(nn);
  auto [x, y] = adjacent_pair(n, k);
  TripleCheck t{x, y, build_compatible_witnesses(x, y, static_cast<std::size_t>(count), form), {}};
  const auto& w = t.witnesses;
  auto name = [](std::size_t i) { return "W" + std::to_string(i + 1); };
  for (std::size_t i = 0; i < w.size(); ++i) {
    t.checks.emplace_back("X ~ " + name(i) + " compatible", compatible(x, w[i], form));
    t.checks.emplace_back("Y ~ " + name(i) + " compatible", compatible(y, w[i], form));
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      t.checks.emplace_back(name(i) + " ~ " + name(j) + " compatible", compatible(w[i], w[j], form));
  // The witnesses are adjacent to X, Y and each other, and X, Y share no
  // orthogonal apartment (they are adjacent but not compatible).
  bool adj = adjacent(x, y);
  for (std::size_t i = 0; i < w.size(); ++i) {
    adj = adj && adjacent(x, w[i]) && adjacent(y, w[i]);
    for (std::size_t j = i + 1; j < w.size(); ++j) adj = adj && adjacent(w[i], w[j]);
  }
  t.checks.emplace_back("all mutually adjacent", adj);
  t.checks.emplace_back("X ~ Y incompatible", !compatible(x, y, form));
  return t;
}

std::vector<CheckRecord> suite_witness(int n, int k, Rng&) {
  const std::string anchor = "Lemma 2-5 (compatible witnesses)";
  CheckRecord r = record("witness", n, k, anchor);
  const int count = 3;
  r.details["count"] = count;
  try {
    const auto t = compatible_triple(n, k, count);
    std::size_t passed = 0;
    for (const auto& [what, ok] : t.checks) {
      passed += ok ? 1 : 0;
      if (!ok) fail(r, what + " fails; witnesses " + t.witnesses[0].to_string() + " ...");
    }
    r.details["checks"] = t.checks.size();
    r.details["passed"] = passed;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Precondition) throw;
    r.status = Status::Skipped;
    r.details["reason"] = std::string("dimension budget: ") + e.what();
  }
  return {r};
}

// ---------------------------------------------------------------- rigidity

CheckRecord fold(const std::string& suite, int n, int k, const std::string& anchor,
                 const std::vector<CheckRecord>& parts) {
  CheckRecord r = record(suite, n, k, anchor);
  for (const auto& p : parts)
    if (p.status == Status::Fail) fail(r, *p.witness);
  r.details["checks"] = parts.size();
  return r;
}

std::vector<CheckRecord> suite_rigidity(int n, int k, Rng& rng) {
  const auto nn = static_cast<std::size_t>(n);
  const auto bases = default_bases(n);
  const bool half = n == 2 * k;
  std::vector<CheckRecord> out;

  // Generated induced maps: one without and, when n = 2k, one with perp.
  std::vector<TransformSpec> specs{random_spec(rng, nn, true, false)};
  if (half) specs.push_back(random_spec(rng, nn, true, true));
  std::vector<json> spec_echo;
  for (const auto& t : specs)
    spec_echo.push_back({{"conjugate", t.conjugate()}, {"perp", t.perp()}, {"scale", t.scale().get_str()}});

  std::vector<CheckRecord> ap, dim, perp, star, clique;
  for (const auto& t : specs) {
    const auto preserved = verify_apartment_preservation(t, bases, k);
    for (const auto& rec : preserved.records()) ap.push_back(rec);
    if (half) {
      // Domain: the apartments of the default bases.
      ScaffoldBuilder b(n, k);
      for (const auto& base : bases) b.add_apartment(NumericApartment(base, k));
      const auto rep = verify_dim_pattern(t, b.build());
      dim.push_back(rep.records()[0]);
      perp.push_back(rep.records()[1]);
      if (k >= 2) clique.push_back(verify_pair_clique_pattern(t, bases[1], k));
    } else {
      for (const auto& base : bases) star.push_back(verify_star_pattern(t, base, k));
    }
  }
  auto add = [&](const std::string& suite, const std::string& anchor, const std::vector<CheckRecord>& parts) {
    CheckRecord r = fold(suite, n, k, anchor, parts);
    r.details["specs"] = spec_echo;
    out.push_back(std::move(r));
  };
  add("rigidity", "Theorem 1 hypothesis (apartments to apartments)", ap);
  if (half) {
    add("rigidity", "Lemma 2-1 (dim f(X)nf(Y) in {m, k-m})", dim);
    add("rigidity", "Lemma 2-2 (f(X^perp) = f(X)^perp)", perp);
    auto r = fold("rigidity", n, k, "Lemma 2-6 (g sends orthogonal apartments to orthogonal apartments)", clique);
    if (k < 4) {
      // The pair graph is not governed by C(S) cliques here; report only.
      r.details["observed"] = to_string(r.status);
      if (r.witness) r.details["observed_witness"] = *r.witness;
      r.witness.reset();
      r.status = Status::Skipped;
      r.details["reason"] = budget_note(k);
      r.details["budget"] = "dim(S^perp n N) = k-1 = " + std::to_string(k - 1) + " < 3";
    }
    r.details["specs"] = spec_echo;
    out.push_back(std::move(r));
  } else {
    add("rigidity", "Lemma 1-2 (stars to stars)", star);
  }

  // Fixed negative corpus.
  for (const auto& [name, s] : adversarial_corpus(n, k)) {
    CheckRecord r = record("rigidity", n, k, "Theorem 1 contrapositive (non-induced table)");
    r.details["scaffold"] = name;
    const auto v = detect_noninduced(s);
    if (v.induced_consistent) {
      fail(r, name + " table was not flagged");
    } else {
      r.details["verdict"] = "NON-INDUCED";
      r.details["reason"] = v.reason;
      r.details["evidence"] = v.witness;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- recovery

CheckRecord suite_recovery(int n, Rng& rng) {
  CheckRecord r = record("recovery", n, 1, "k=1 recovery (fundamental theorem of projective geometry)");
  const auto nn = static_cast<std::size_t>(n);
  int specs = 0, conj = 0;
  for (int s = 0; s < kRecoverySpecs && r.status == Status::Pass; ++s) {
    const auto orig = random_spec(rng, nn, true, false);
    ++specs;
    conj += orig.conjugate() ? 1 : 0;
    try {
      const auto t = recover_operator_k1(k1_samples(orig), nn);
      if (t.conjugate() != orig.conjugate()) fail(r, "conjugation flag not recovered for spec " + std::to_string(s));
      for (int l = 0; l < kRecoveryLines; ++l) {
        const Subspace line = random_subspace(rng, nn, 1);
        if (!(induced_map(t, line) == induced_map(orig, line))) {
          fail(r, "spec " + std::to_string(s) + " differs on " + line.to_string());
          break;
        }
      }
    } catch (const Error& e) {
      fail(r, "spec " + std::to_string(s) + ": " + e.what());
    }
  }
  r.details["specs"] = specs;
  r.details["conjugate_specs"] = conj;
  r.details["lines_per_spec"] = kRecoveryLines;
  return r;
}

// ---------------------------------------------------------------- driver

using SuiteFn = std::vector<CheckRecord> (*)(int, int, Rng&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"lemma2", suite_lemma2},           {"case-table", suite_case_table},
      {"coincidence", suite_coincidence}, {"resolution", suite_resolution},
      {"classify", suite_classify},       {"gamma-prime", suite_gamma_prime},
      {"triple-hull", suite_triple_hull}, {"inexact", suite_inexact},
      {"compat", suite_compat},           {"witness", suite_witness},
      {"rigidity", suite_rigidity},
  };
  return r;
}

std::vector<int> ks_for(const RunConfig& c, int n) {
  if (!c.ks.empty()) return c.ks;
  std::vector<int> out;
  for (int k = 2; k < n - 1; ++k) out.push_back(k);
  return out;
}

std::vector<std::string> selected(const RunConfig& c) {
  if (c.suites.empty()) return suite_names();
  std::vector<std::string> out;
  for (const auto& s : c.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown suite: " + s);
    }
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma2",  "case-table", "coincidence", "resolution",
                                              "classify", "gamma-prime", "triple-hull", "inexact",
                                              "compat",  "witness",    "rigidity",    "recovery"};
  return names;
}

nlohmann::ordered_json config_echo(const RunConfig& c) {
  json j;
  j["n"] = std::to_string(c.n_min) + ".." + std::to_string(c.n_max);
  j["k"] = c.ks.empty() ? json("all") : json(c.ks);
  j["suites"] = selected(c);
  j["seed"] = c.seed;
  return j;
}

std::string scope_banner() {
  return "Scope: the forward direction (induced map => every lemma pattern) is checked exactly; "
         "the converse is only falsified on finite adversarial scaffolds. Theorems about all "
         "bijections of G_k(H) are not proved by a PASS.";
}

VerificationReport run_verify(const RunConfig& config) {
  if (config.n_min < 2 || config.n_max < config.n_min || config.n_max > 64) {
    throw Error(ErrorCode::InvalidArgument, "n range must satisfy 2 <= a <= b <= 64");
  }
  const auto suites = selected(config);

  struct Task {
    std::string suite;
    int n;
    int k;
  };
  std::vector<Task> tasks;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (const auto& s : suites) {
      if (s == "recovery") {
        tasks.push_back({s, n, 1});
        continue;
      }
      for (int k : ks_for(config, n)) tasks.push_back({s, n, k});
    }
  }

  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto& t = tasks[i];
      try {
        Rng rng = Rng::for_task(config.seed, t.suite, t.n, t.k);
        Stopwatch sw;
        if (t.suite == "recovery") {
          if (t.n < 2) {
            results[i] = {skipped(t.suite, t.n, t.k, "k=1 recovery", "needs n >= 2")};
          } else {
            results[i] = {suite_recovery(t.n, rng)};
          }
        } else if (t.k <= 1 || t.k >= t.n - 1) {
          results[i] = {skipped(t.suite, t.n, t.k, "-", "k outside 1 < k < n-1")};
        } else {
          results[i] = registry().at(t.suite)(t.n, t.k, rng);
        }
        // Tasks with several records share the task's wall time.
        const double each = sw.millis() / static_cast<double>(std::max<std::size_t>(1, results[i].size()));
        for (auto& r : results[i]) r.millis = each;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationReport report;
  for (auto& rs : results)
    for (auto& r : rs) report.add(std::move(r));
  report.sort();
  report.config = config_echo(config);
  return report;
}

VerificationReport verify_scaffold(const Scaffold& s) {
  VerificationReport rep;
  Stopwatch sw;
  CheckRecord r = record("scaffold", s.n(), s.k(), "Theorem 1 contrapositive (non-induced table)");
  const auto v = detect_noninduced(s);
  r.details["subspaces"] = s.subspaces().size();
  r.details["apartments"] = s.apartments().size();
  r.details["verdict"] = v.induced_consistent ? "INDUCED-CONSISTENT" : "NON-INDUCED";
  r.details["reason"] = v.reason;
  if (!v.induced_consistent) {
    r.status = Status::Fail;
    r.witness = v.witness;
    if (v.apartment) r.details["apartment"] = *v.apartment;
    if (v.sources) r.details["sources"] = {v.sources->first, v.sources->second};
    if (v.images) r.details["images"] = {v.images->first, v.images->second};
  }
  r.millis = sw.millis();
  rep.add(std::move(r));
  if (s.n() == 2 * s.k()) {
    auto dims = verify_dim_pattern(s);
    for (auto rec : dims.records()) {
      rec.suite = "scaffold";
      rep.add(std::move(rec));
    }
  }
  return rep;
}

std::string scan_csv(int n_min, int n_max, const std::vector<int>& ks) {
  if (n_min < 2 || n_max < n_min || n_max > 64) {
    throw Error(ErrorCode::InvalidArgument, "n range must satisfy 2 <= a <= b <= 64");
  }
  std::ostringstream os;
  os << "n,k,case,c,collisions,coincidence\n";
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<int> levels = ks;
    if (levels.empty())
      for (int k = 2; k < n - 1; ++k) levels.push_back(k);
    for (int k : levels) {
      if (k <= 1 || k >= n - 1) continue;
      std::ostringstream c, col;
      const auto values = c_values(n, k);
      c << '[';
      for (std::size_t i = 0; i < values.size(); ++i) c << (i ? "," : "") << values[i];
      c << ']';
      std::set<int> tied;
      for (auto [a, b] : collisions(n, k)) {
        tied.insert(a);
        tied.insert(b);
      }
      if (tied.empty()) {
        col << "∅";
      } else {
        col << '{';
        bool first = true;
        for (int m : tied) {
          col << (first ? "" : ",") << m;
          first = false;
        }
        col << '}';
      }
      os << n << ',' << k << ',' << to_string(case_tag(n, k)) << ",\"" << c.str() << "\",\""
         << col.str() << "\"," << (coincidence_identity(k) ? "true" : "false") << "\n";
    }
  }
  return os.str();
}

namespace {

std::string tuple(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::string frame_text(const Subspace& s) {
  std::string out;
  for (const auto& row : s.basis()) out += (out.empty() ? "" : ", ") + tuple(row);
  return "span{" + out + "}";
}

}  // namespace

WitnessOutput witness_inexact(int n, int k, int i, int j) {
  if (n < 2 || n > 64) throw Error(ErrorCode::InvalidArgument, "n must lie in 2..64");
  if (k <= 0 || k >= n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k < n");
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw Error(ErrorCode::InvalidArgument, "need distinct 1 <= i, j <= n");
  }
  const auto nn = static_cast<std::size_t>(n);
  const auto standard = OrthoBase::standard(nn);
  const auto b = inexact_witness(standard, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  std::ostringstream os;
  WitnessOutput out;
  os << "inexact witness n=" << n << " k=" << k << " i=" << i << " j=" << j << "\n";
  os << "f1 = " << tuple(b[static_cast<std::size_t>(i)]) << "\n";
  os << "f2 = " << tuple(b[static_cast<std::size_t>(j)]) << "\n";
  os << "base:\n";
  for (std::size_t t = 1; t <= nn; ++t) os << "  b" << t << " = " << tuple(b[t]) << "\n";
  os << "self-check:\n";
  auto check = [&](const std::string& what, bool ok) {
    os << "  " << what << ": " << (ok ? "PASS" : "FAIL") << "\n";
    out.ok = out.ok && ok;
  };
  const HermitianForm form(nn);
  bool orthogonal = true;
  for (std::size_t a = 1; a <= nn; ++a)
    for (std::size_t c = a + 1; c <= nn; ++c) orthogonal = orthogonal && form.inner(b[a], b[c]).is_zero();
  check("<f1, f2> = 0 and the base is orthogonal", orthogonal);
  const NumericApartment a_std(standard, k), a_new(b, k);
  const auto other = a_new.element_set();
  std::size_t shared = 0;
  bool exact_share = true;
  for (auto x : all_ksubsets(n, k)) {
    const bool in = other.count(a_std.element(x)) > 0;
    shared += in ? 1 : 0;
    exact_share = exact_share && in == (x.contains(i) == x.contains(j));
  }
  check("shared elements are exactly A(+i,+j) u A(-i,-j)", exact_share);
  check("shared count = binom(n-2,k-2) + binom(n-2,k) = " +
            std::to_string(binom(n - 2, k - 2) + binom(n - 2, k)),
        static_cast<std::int64_t>(shared) == binom(n - 2, k - 2) + binom(n - 2, k));
  check("the apartments differ", shared < other.size());
  os << "self-check " << (out.ok ? "PASS" : "FAIL") << "\n";
  out.text = os.str();
  return out;
}

WitnessOutput witness_compatible_triple(int n, int k, int count) {
  if (n < 2 || n > 64) throw Error(ErrorCode::InvalidArgument, "n must lie in 2..64");
  const auto t = compatible_triple(n, k, count);
  std::ostringstream os;
  WitnessOutput out;
  os << "compatible witnesses n=" << n << " k=" << k << " count=" << count << "\n";
  os << "X  = " << frame_text(t.x) << "\n";
  os << "Y  = " << frame_text(t.y) << "\n";
  for (std::size_t i = 0; i < t.witnesses.size(); ++i)
    os << "W" << i + 1 << " = " << frame_text(t.witnesses[i]) << "\n";
  os << "self-check:\n";
  for (const auto& [what, ok] : t.checks) {
    os << "  " << what << ": " << (ok ? "PASS" : "FAIL") << "\n";
    out.ok = out.ok && ok;
  }
  os << "self-check " << (out.ok ? "PASS" : "FAIL") << "\n";
  out.text = os.str();
  return out;
}

}  // namespace oapt
