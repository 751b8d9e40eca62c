#include <gtest/gtest.h>

#include <string>

#include "oapt/error.hpp"
#include "oapt/suites.hpp"

using namespace oapt;

namespace {

RunConfig one(int n, int k, const std::string& suite) {
  RunConfig c;
  c.n_min = c.n_max = n;
  c.ks = {k};
  c.suites = {suite};
  c.seed = 7;
  c.threads = 1;
  return c;
}

}  // namespace

TEST(Suites, Lemma2OnePassPerPair) {
  RunConfig c;
  c.n_min = 4;
  c.n_max = 10;
  c.suites = {"lemma2"};
  c.seed = 7;
  const auto r = run_verify(c);
  EXPECT_TRUE(r.passed());
  std::size_t valid = 0;
  for (int n = 4; n <= 10; ++n) valid += static_cast<std::size_t>(n - 3);
  EXPECT_EQ(r.count(Status::Pass), valid);
  for (const auto& rec : r.records()) EXPECT_EQ(rec.anchor.rfind("Lemma 2", 0), 0u) << rec.anchor;
}

TEST(Suites, InvalidKIsSkippedNotError) {
  const auto r = run_verify(one(6, 5, "lemma2"));
  ASSERT_EQ(r.records().size(), 1u);
  EXPECT_EQ(r.records()[0].status, Status::Skipped);
  EXPECT_TRUE(r.passed());
}

TEST(Suites, ClassifyExceptionalDegeneracy) {
  const auto r = run_verify(one(6, 2, "classify"));
  ASSERT_EQ(r.records().size(), 1u);
  const auto& rec = r.records()[0];
  EXPECT_EQ(rec.status, Status::Pass);
  EXPECT_EQ(rec.details["kind"], "EXCEPTIONAL-DEGENERACY");
}

TEST(Suites, GammaPrimeAtEightFour) {
  const auto r = run_verify(one(8, 4, "gamma-prime"));
  ASSERT_EQ(r.records().size(), 1u);
  const auto& d = r.records()[0].details;
  EXPECT_EQ(r.records()[0].status, Status::Pass);
  EXPECT_EQ(d["cliques"], 56);
  EXPECT_EQ(d["clique_size"], 5);
  EXPECT_EQ(d["vertices"], 35);
}

TEST(Suites, GammaPrimeSkippedOffHalf) {
  const auto r = run_verify(one(7, 3, "gamma-prime"));
  ASSERT_EQ(r.records().size(), 1u);
  EXPECT_EQ(r.records()[0].status, Status::Skipped);
}

TEST(Suites, UnknownSuiteRejected) {
  RunConfig c = one(6, 2, "no-such-suite");
  EXPECT_THROW(run_verify(c), Error);
}

TEST(Suites, SortedAndDeterministicAcrossThreadCounts) {
  RunConfig c;
  c.n_min = 4;
  c.n_max = 7;
  c.suites = {"lemma2", "inexact", "witness", "recovery"};
  c.seed = 11;
  c.threads = 1;
  const auto a = render_json(run_verify(c), false);
  c.threads = 4;
  const auto b = render_json(run_verify(c), false);
  EXPECT_EQ(a, b);
  const auto r = run_verify(c);
  for (std::size_t i = 1; i < r.records().size(); ++i) {
    const auto& p = r.records()[i - 1];
    const auto& q = r.records()[i];
    EXPECT_LE(std::tie(p.suite, p.n, p.k), std::tie(q.suite, q.n, q.k));
  }
}

TEST(Suites, SameSeedSameBytes) {
  const RunConfig c = one(5, 2, "compat");
  EXPECT_EQ(render_json(run_verify(c), false), render_json(run_verify(c), false));
  EXPECT_TRUE(run_verify(c).passed());
}

TEST(Suites, ScanRows) {
  const auto csv = scan_csv(7, 8, {3});
  EXPECT_NE(csv.find("8,3,N2K2,\"[9,7,9]\",\"{0,2}\",false"), std::string::npos) << csv;
  EXPECT_NE(csv.find("7,3,N2K1,\"[9,6,7]\",\"∅\",false"), std::string::npos) << csv;
}

TEST(Suites, ScanCoincidenceOnlyAtKTwo) {
  const auto csv = scan_csv(6, 6, {2});
  EXPECT_NE(csv.find("6,2,EXCEPTIONAL"), std::string::npos) << csv;
  EXPECT_EQ(csv.substr(csv.size() - 5), "true\n");
}

TEST(Suites, WitnessInexact) {
  const auto w = witness_inexact(4, 2, 1, 2);
  EXPECT_TRUE(w.ok);
  EXPECT_NE(w.text.find("f1 = (1,1,0,0)"), std::string::npos) << w.text;
  EXPECT_NE(w.text.find("f2 = (1,-1,0,0)"), std::string::npos) << w.text;
  EXPECT_NE(w.text.find("self-check PASS"), std::string::npos);
}

TEST(Suites, WitnessCompatibleTriple) {
  const auto w = witness_compatible_triple(8, 4, 3);
  EXPECT_TRUE(w.ok);
  std::size_t checks = 0;
  for (std::size_t p = w.text.find(" compatible: PASS"); p != std::string::npos;
       p = w.text.find(" compatible: PASS", p + 1))
    ++checks;
  EXPECT_EQ(checks, 9u);
}

TEST(Suites, WitnessCompatibleTripleBudget) {
  try {
    witness_compatible_triple(5, 2, 3);
    FAIL() << "expected a precondition error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
    EXPECT_NE(std::string(e.what()).find("n−k−1 = 2 < 3"), std::string::npos) << e.what();
  }
}

TEST(Suites, RigidityAtEightFourPasses) {
  const auto r = run_verify(one(8, 4, "rigidity"));
  EXPECT_TRUE(r.passed());
  bool flagged = false;
  for (const auto& rec : r.records())
    if (rec.details.contains("verdict") && rec.details["verdict"] == "NON-INDUCED") flagged = true;
  EXPECT_TRUE(flagged);
}

TEST(Suites, SmallHalfLevelsSkipBudgetLemmas) {
  const auto r = run_verify(one(6, 3, "rigidity"));
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.count(Status::Skipped), 1u);
}
