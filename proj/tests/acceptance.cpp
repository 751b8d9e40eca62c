// Acceptance harness: one PASS/FAIL line per criterion; exit 0 iff all pass.
// Usage: acceptance <path-to-oapt-cli> <scratch-dir>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oapt/combinatorics.hpp"
#include "oapt/error.hpp"
#include "oapt/gamma_prime.hpp"
#include "oapt/suites.hpp"

using namespace oapt;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
};

RunConfig config(int n_min, int n_max, std::vector<int> ks, std::string suite) {
  RunConfig c;
  c.n_min = n_min;
  c.n_max = n_max;
  c.ks = std::move(ks);
  c.suites = {std::move(suite)};
  c.seed = 7;
  c.threads = 1;
  return c;
}

// Every record passes and none was skipped.
void require_all_pass(Outcome& o, const VerificationReport& r, const std::string& what) {
  o.require(!r.records().empty(), what + ": no records");
  for (const auto& rec : r.records()) {
    o.require(rec.status == Status::Pass,
              what + " (" + std::to_string(rec.n) + "," + std::to_string(rec.k) + ") " +
                  std::string(to_string(rec.status)) + ": " + rec.witness.value_or(rec.anchor));
  }
}

Outcome lemma2() {
  Outcome o;
  Stopwatch sw;
  const auto r = run_verify(config(4, 10, {}, "lemma2"));
  const double secs = sw.millis() / 1000;
  require_all_pass(o, r, "lemma2");
  std::size_t expected = 0;
  for (int n = 4; n <= 10; ++n) expected += static_cast<std::size_t>(n - 3);
  o.require(r.records().size() == expected, "expected one record per (n,k)");
  std::int64_t pairs = 0;
  for (const auto& rec : r.records()) pairs += rec.details["pairs"].get<std::int64_t>();
  o.require(secs < 60, "took " + std::to_string(secs) + " s");
  if (o.ok) o.note = std::to_string(pairs) + " pairs, " + std::to_string(secs) + " s single-threaded";
  return o;
}

Outcome case_table() {
  Outcome o;
  int rows = 0;
  for (int k = 2; 2 * k + 1 <= 41; ++k) {
    for (int n = 2 * k + 3; n <= 40; ++n, ++rows) {
      const auto top = c_formula(n, k, k - 1);
      for (int m = 0; m < k - 1; ++m)
        o.require(top > c_formula(n, k, m), "generic (" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    if (2 * k + 2 <= 42) {
      const int n = 2 * k + 2;
      ++rows;
      o.require(c_formula(n, k, k - 1) == c_formula(n, k, 0), "n=2k+2 tie (" + std::to_string(n) + ")");
      for (int m = 1; m < k - 1; ++m)
        o.require(c_formula(n, k, m) < c_formula(n, k, 0), "n=2k+2 order (" + std::to_string(n) + ")");
    }
    {
      const int n = 2 * k + 1;
      ++rows;
      std::set<std::int64_t> values;
      for (int m = 0; m < k; ++m) values.insert(c_formula(n, k, m));
      o.require(values.size() == static_cast<std::size_t>(k), "n=2k+1 distinct (" + std::to_string(n) + ")");
    }
  }
  if (o.ok) o.note = std::to_string(rows) + " (n,k) rows, integer arithmetic";
  return o;
}

Outcome coincidence() {
  Outcome o;
  for (int k = 2; k <= 50; ++k) {
    const bool holds = binom_big(2 * k, k - 1) == 4 * binom_big(2 * k - 2, k - 2);
    o.require(holds == (k == 2), "identity at k=" + std::to_string(k));
  }
  std::int64_t checked = 0;
  for (auto [n, k] : {std::pair{6, 2}, {8, 3}, {10, 4}, {12, 5}}) {
    std::vector<ComplementaryPair> pairs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b, ++checked) {
        const auto adj = complementary_adjacent(n, k, pairs[a], pairs[b]);
        o.require(adj.intersection == complementary_intersection_formula(n, k, adj.adjacent),
                  "(" + std::to_string(n) + "," + std::to_string(k) + ") " + pairs[a].to_string() +
                      " vs " + pairs[b].to_string());
      }
  }
  if (o.ok) o.note = "k=2 only for k<=50; " + std::to_string(checked) + " intersections brute-forced";
  return o;
}

Outcome resolution() {
  Outcome o;
  std::int64_t disjoint = 0, adjacent = 0;
  for (auto [n, k] : {std::pair{8, 3}, {10, 4}, {12, 5}}) {
    const auto r = run_verify(config(n, n, {k}, "resolution"));
    require_all_pass(o, r, "resolution");
    for (const auto& rec : r.records()) {
      disjoint += rec.details.value("disjoint_pairs", std::int64_t{0});
      adjacent += rec.details.value("adjacent_pairs", std::int64_t{0});
    }
  }
  o.require(disjoint > 0 && adjacent > 0, "no pairs examined");
  if (o.ok) o.note = std::to_string(disjoint) + " disjoint, " + std::to_string(adjacent) + " adjacent pairs";
  return o;
}

Outcome degeneracy() {
  Outcome o;
  const int n = 6, k = 2;
  const auto all = all_ksubsets(n, k);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      o.require(count_complementary_containing(n, k, all[a], all[b]) == 4,
                "count at " + all[a].to_string() + ", " + all[b].to_string());
  std::vector<ComplementaryPair> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      o.require(complementary_adjacent(n, k, pairs[a], pairs[b]).intersection == 4,
                "intersection " + pairs[a].to_string() + " " + pairs[b].to_string());
  std::size_t refused = 0, total = 0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b, ++total) {
      try {
        classify_pair(n, k, all[a], all[b]);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Exceptional) ++refused;
      }
    }
  o.require(refused == total, "classify_pair answered instead of refusing");
  if (o.ok) o.note = "105 pairs count 4, 105 intersections of size 4, " + std::to_string(refused) + " refusals";
  return o;
}

Outcome gamma_prime() {
  Outcome o;
  for (int n : {8, 10}) {
    const int k = n / 2;
    const GammaPrime g(n, k);
    o.require(static_cast<std::int64_t>(g.vertices().size()) == binom(n, k) / 2, "vertex count");
    const auto cliques = maximal_cliques(g.graph());
    o.require(static_cast<std::int64_t>(cliques.size()) == binom(n, k - 1),
              "n=" + std::to_string(n) + ": " + std::to_string(cliques.size()) + " cliques");
    std::set<VertexSet> family;
    for (const auto& s : all_ksubsets(n, k - 1)) family.insert(g.to_set(clique_C(n, k, s)));
    o.require(family.size() == static_cast<std::size_t>(binom(n, k - 1)), "C(S) not distinct");
    for (const auto& c : cliques) {
      o.require(c.count() == static_cast<std::size_t>(k + 1), "clique size");
      o.require(family.count(c) == 1, "clique is not a C(S)");
    }
  }
  const auto hull = run_verify(config(8, 8, {4}, "triple-hull"));
  require_all_pass(o, hull, "triple-hull");
  if (o.ok) o.note = "56 cliques of size 5 (n=8), 210 of size 6 (n=10); triple hulls exhaustive at (8,4)";
  return o;
}

Outcome inexact() {
  Outcome o;
  std::int64_t checked = 0;
  for (int n = 4; n <= 12; ++n)
    for (int k = 2; k < n - 1; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++checked) {
          const auto tag = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(i) +
                           "," + std::to_string(j) + ")";
          o.require(static_cast<std::int64_t>(maximal_inexact(n, k, i, j).size()) ==
                        binom(n - 2, k - 2) + binom(n - 2, k),
                    "inexact size " + tag);
          o.require(static_cast<std::int64_t>(complementary_subset(n, k, {i, j}).size()) ==
                        2 * binom(n - 2, k - 1),
                    "complementary size " + tag);
        }
  if (o.ok) o.note = std::to_string(checked) + " (n,k,i,j) cases enumerated";
  return o;
}

Outcome numeric() {
  Outcome o;
  std::int64_t structured = 0, random = 0;
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
    const auto r = run_verify(config(n, n, {k}, "compat"));
    require_all_pass(o, r, "compat");
    for (const auto& rec : r.records()) {
      const auto pairs = rec.details["pairs"].get<std::int64_t>();
      if (rec.anchor.find("random") != std::string::npos) {
        o.require(pairs >= 1000, "only " + std::to_string(pairs) + " random pairs");
        random += pairs;
      } else {
        const auto members = rec.details["members"].get<std::int64_t>();
        o.require(pairs == members * (members - 1) / 2, "structured corpus not exhausted");
        structured += pairs;
      }
    }
  }
  // Witness constructions outside their dimension budget are skipped, not failed.
  const auto wr = run_verify(config(4, 10, {}, "witness"));
  o.require(wr.failures() == 0 && wr.count(Status::Pass) > 0, "witness suite");
  require_all_pass(o, run_verify(config(4, 10, {}, "inexact")), "inexact");
  const auto w1 = witness_inexact(4, 2, 1, 2);
  o.require(w1.ok, "inexact witness (4,2,1,2) self-check");
  const auto w2 = witness_compatible_triple(8, 4, 3);
  o.require(w2.ok, "compatible triple (8,4) self-check");
  bool refused = false;
  try {
    witness_compatible_triple(5, 2, 3);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::Precondition;
  }
  o.require(refused, "(5,2,3) budget not refused");
  if (o.ok)
    o.note = std::to_string(structured) + " structured + " + std::to_string(random) + " random pairs agree";
  return o;
}

Outcome rigidity() {
  Outcome o;
  const auto r = run_verify(config(4, 10, {}, "rigidity"));
  std::size_t flagged = 0, adversarial = 0, passed = 0;
  for (const auto& rec : r.records()) {
    const bool budget_skip = rec.status == Status::Skipped && rec.anchor.rfind("Lemma 2-6", 0) == 0;
    if (!budget_skip)
      o.require(rec.status == Status::Pass, "rigidity (" + std::to_string(rec.n) + "," +
                                                std::to_string(rec.k) + ") " + rec.anchor + ": " +
                                                rec.witness.value_or(""));
    if (rec.status == Status::Pass) ++passed;
    if (rec.details.contains("scaffold")) {
      ++adversarial;
      if (rec.details.value("verdict", std::string()) == "NON-INDUCED" &&
          !rec.details.value("evidence", std::string()).empty())
        ++flagged;
    }
  }
  o.require(adversarial > 0 && flagged == adversarial,
            std::to_string(flagged) + "/" + std::to_string(adversarial) + " adversarial tables flagged");
  const auto rec = run_verify(config(3, 5, {}, "recovery"));
  require_all_pass(o, rec, "recovery");
  o.require(rec.records().size() == 3, "one recovery record per n");
  for (const auto& x : rec.records()) {
    o.require(x.details["specs"].get<int>() >= 50, "fewer than 50 specs");
    o.require(x.details["lines_per_spec"].get<int>() >= 100, "fewer than 100 lines");
  }
  if (o.ok)
    o.note = std::to_string(passed) + " pattern records, " + std::to_string(flagged) +
             " adversarial tables flagged, 3x50 specs recovered";
  return o;
}

std::string strip_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  for (auto& rec : j) rec.erase("millis");
  return j.dump();
}

Outcome determinism(const std::string& cli, const std::string& dir) {
  Outcome o;
  std::string reports[2];
  for (int run = 0; run < 2; ++run) {
    const std::string path = dir + "/determinism_" + std::to_string(run) + ".json";
    const std::string cmd = "\"" + cli + "\" verify --n 4..10 --seed 7 --out \"" + path + "\" 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, "run " + std::to_string(run) + " exited with " + std::to_string(rc));
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    reports[run] = ss.str();
  }
  if (!o.ok) return o;
  o.require(!reports[0].empty(), "empty report");
  o.require(strip_timing(reports[0]) == strip_timing(reports[1]), "reports differ beyond timing");
  if (o.ok) o.note = std::to_string(reports[0].size()) + "-byte reports identical modulo millis";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <oapt-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1], dir = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Lemma 2 exhaustive counts (n <= 10, < 60 s)", lemma2},
      {"2 c-value case table (n <= 40/41/42)", case_table},
      {"3 binomial coincidence and complementary intersections", coincidence},
      {"4 adjacent-vs-disjoint resolution (8,3) (10,4) (12,5)", resolution},
      {"5 (6,2) degeneracy and EXCEPTIONAL refusal", degeneracy},
      {"6 Gamma' cliques (n = 8, 10) and triple hulls (8,4)", gamma_prime},
      {"7 inexact and complementary cardinalities (n <= 12)", inexact},
      {"8 compatibility oracle agreement and witness self-checks", numeric},
      {"9 rigidity patterns, adversarial corpus, k=1 recovery", rigidity},
      {"10 determinism of verify --n 4..10 --seed 7", [&] { return determinism(cli, dir); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " -- " << o.note << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
