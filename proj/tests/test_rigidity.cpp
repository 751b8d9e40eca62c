#include <gtest/gtest.h>

#include "oapt/error.hpp"
#include "oapt/random.hpp"
#include "oapt/rigidity.hpp"
#include "oapt/scaffold_io.hpp"
#include "test_helpers.hpp"

namespace oapt {
namespace {

using testing::e;
using testing::I;
using testing::span;
using testing::vec;

ExactMatrix rotation3() { return ExactMatrix{{3, 4, 0}, {-4, 3, 0}, {0, 0, 5}}; }

OrthoBase mixed_base3() {
  return OrthoBase({vec({1, 1, 0}), vec({1, -1, 0}), e(3, 3)}, HermitianForm(3));
}

ExactMatrix permutation(std::vector<std::size_t> p) { return permutation_matrix(p); }

bool all_pass(const VerificationReport& r) { return r.failures() == 0; }

TEST(ApartmentPreservation, PermutationAtFiveTwo) {
  const TransformSpec t(permutation({2, 0, 4, 1, 3}));
  EXPECT_TRUE(all_pass(verify_apartment_preservation(t, {OrthoBase::standard(5)}, 2)));
}

TEST(ApartmentPreservation, RotationBlockOnMixedBase) {
  const TransformSpec t(rotation3());
  // Oracle: image of (1,1,0) under v*M is (-1,7,0); of (1,-1,0) is (7,1,0).
  EXPECT_EQ(t.apply(vec({1, 1, 0})), vec({-1, 7, 0}));
  EXPECT_EQ(t.apply(vec({1, -1, 0})), vec({7, 1, 0}));
  const auto r = verify_apartment_preservation(t, {mixed_base3()}, 1);
  EXPECT_TRUE(all_pass(r));
  EXPECT_EQ(r.records().front().details["elements"], 3);
}

TEST(ApartmentPreservation, PerpAtEightFour) {
  const TransformSpec t(ExactMatrix::identity(8), false, true);
  const auto r = verify_apartment_preservation(t, default_bases(8), 4);
  EXPECT_TRUE(all_pass(r));
  EXPECT_EQ(r.records().size(), 2u);
}

TEST(ApartmentPreservation, RandomCompositions) {
  for (std::size_t n : {4u, 5u, 6u}) {
    Rng rng(n);
    for (int trial = 0; trial < 6; ++trial) {
      const int k = static_cast<int>(n) / 2;
      const bool perp = n == 2u * static_cast<std::size_t>(k) && rng.coin();
      const auto t = compose(random_spec(rng, n, true, perp), random_spec(rng, n, true, false));
      EXPECT_TRUE(all_pass(verify_apartment_preservation(t, default_bases(static_cast<int>(n)), k)));
    }
  }
}

TEST(DimPattern, IdentityAndGlobalPerp) {
  for (bool perp : {false, true}) {
    const TransformSpec t(ExactMatrix::identity(8), false, perp);
    const auto s = scaffold_for_transform(TransformSpec::identity(8), default_bases(8), 4);
    const auto r = verify_dim_pattern(t, s);
    EXPECT_TRUE(all_pass(r)) << perp;
    EXPECT_EQ(r.records().front().details["uniform"], true);
  }
}

TEST(DimPattern, MixedTableRealizesComplementaryValue) {
  const Subspace x = span(8, {e(8, 1), e(8, 2), e(8, 3), e(8, 4)});
  const Subspace y = span(8, {e(8, 1), e(8, 2), e(8, 3), e(8, 5)});
  const HermitianForm form(8);
  EXPECT_EQ(intersect(x, y).dim(), 3u);
  EXPECT_EQ(intersect(x, orthocomplement(y, form)).dim(), 1u);

  ScaffoldBuilder b(8, 4);
  b.add_apartment(NumericApartment(OrthoBase::standard(8), 4));
  b.map(y, orthocomplement(y, form));
  b.map(orthocomplement(y, form), y);
  b.fill_identity();
  const auto r = verify_dim_pattern(b.build());
  EXPECT_TRUE(all_pass(r));
  EXPECT_EQ(r.records().front().details["uniform"], false);
}

TEST(DimPattern, RequiresHalfDimension) {
  const auto s = scaffold_for_transform(TransformSpec::identity(5), default_bases(5), 2);
  EXPECT_THROW(verify_dim_pattern(TransformSpec::identity(5), s), Error);
}

TEST(StarPattern, ExhaustiveOnOddConfigurations) {
  Rng rng(3);
  for (auto [n, k] : {std::pair{7, 3}, std::pair{9, 4}, std::pair{5, 2}}) {
    const auto t = random_spec(rng, static_cast<std::size_t>(n), true, false);
    for (const auto& base : default_bases(n)) {
      const auto r = verify_star_pattern(t, base, k);
      EXPECT_EQ(r.status, Status::Pass) << n << "," << k << " " << r.witness.value_or("");
      EXPECT_EQ(r.details["stars"], binom(n, k - 1));
      EXPECT_EQ(r.details["tops"], binom(n, k + 1));
    }
  }
  EXPECT_THROW(verify_star_pattern(TransformSpec::identity(6), OrthoBase::standard(6), 3), Error);
}

TEST(PairClique, EightFour) {
  Rng rng(11);
  for (bool perp : {false, true}) {
    const auto t = random_spec(rng, 8, true, perp);
    const auto r = verify_pair_clique_pattern(t, default_bases(8)[1], 4);
    EXPECT_EQ(r.status, Status::Pass) << r.witness.value_or("");
    EXPECT_EQ(r.details["cliques"], 56);
  }
}

TEST(Scaffold, Validation) {
  const Subspace a = span(4, {e(4, 1), e(4, 2)});
  EXPECT_THROW(Scaffold(4, 2, {a}, {}), Error);  // perp missing
  EXPECT_THROW(Scaffold(4, 2, {span(4, {e(4, 1)})}, {}), Error);
  const Subspace ap = span(4, {e(4, 3), e(4, 4)});
  EXPECT_THROW(Scaffold(4, 2, {a, ap, a}, {}), Error);
  EXPECT_THROW(Scaffold(4, 2, {a, ap}, {{0, 2}}), Error);
  EXPECT_THROW(Scaffold(4, 2, {a, ap}, {{0, 1}, {0, 0}}), Error);
  EXPECT_NO_THROW(Scaffold(4, 2, {a, ap}, {{0, 1}, {1, 0}}));
}

TEST(Scaffold, DiscoversApartments) {
  std::vector<Subspace> subs = NumericApartment(OrthoBase::standard(4), 2).elements();
  subs.push_back(span(4, {vec({1, 1, 0, 0}), e(4, 3)}));
  subs.push_back(span(4, {vec({1, -1, 0, 0}), e(4, 4)}));
  const Scaffold s(4, 2, subs, {});
  ASSERT_EQ(s.apartments().size(), 1u);
  EXPECT_EQ(s.apartments()[0].size(), 6u);
}

TEST(Noninduced, IdentityIsConsistent) {
  for (auto [n, k] : {std::pair{5, 2}, std::pair{8, 4}}) {
    const auto s = scaffold_for_transform(TransformSpec::identity(static_cast<std::size_t>(n)),
                                          default_bases(n), k);
    EXPECT_TRUE(detect_noninduced(s).induced_consistent);
  }
}

TEST(Noninduced, InducedTablesAreConsistent) {
  Rng rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const auto t = random_spec(rng, 6, true, trial % 2 == 1);
    EXPECT_TRUE(detect_noninduced(scaffold_for_transform(t, default_bases(6), 3)).induced_consistent);
  }
}

TEST(Noninduced, SingleSwapAtFiveTwo) {
  const HermitianForm form(5);
  const Subspace x0 = span(5, {e(5, 1), e(5, 2)});
  const Subspace y0 = span(5, {e(5, 1), vec({0, 1, 1, 0, 0})});
  // Oracle pair: e2+e3 has nonzero projection on e3 and on e2, so neither
  // decomposition piece is orthogonal to the other.
  EXPECT_FALSE(compatible(y0, span(5, {e(5, 3), e(5, 4)}), form));

  ScaffoldBuilder b(5, 2);
  b.add_apartment(NumericApartment(OrthoBase::standard(5), 2));
  b.map(x0, y0);
  b.map(y0, x0);
  b.fill_identity();
  const Scaffold s = b.build();
  const auto v = detect_noninduced(s);
  EXPECT_FALSE(v.induced_consistent);
  ASSERT_TRUE(v.images);
  ASSERT_TRUE(v.apartment);
  const auto& subs = s.subspaces();
  EXPECT_FALSE(compatible(subs[v.images->first], subs[v.images->second], form));
  EXPECT_FALSE(v.witness.empty());
}

TEST(Noninduced, AdversarialCorpusAlwaysFlagged) {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 3}, std::pair{7, 3},
                      std::pair{8, 4}}) {
    const auto corpus = adversarial_corpus(n, k);
    EXPECT_EQ(corpus.size(), n == 2 * k ? 3u : 2u);
    for (const auto& [name, s] : corpus) {
      const auto v = detect_noninduced(s);
      EXPECT_FALSE(v.induced_consistent) << name << " at " << n << "," << k;
      EXPECT_FALSE(v.witness.empty()) << name;
    }
  }
}

TEST(Noninduced, SinglePerpCollapsesApartment) {
  const auto corpus = adversarial_corpus(8, 4);
  const auto& s = corpus[1].scaffold;
  EXPECT_EQ(corpus[1].name, "single-perp");
  EXPECT_FALSE(s.injective());
  const auto v = detect_noninduced(s);
  EXPECT_NE(v.reason.find("fewer"), std::string::npos);
}

TEST(Noninduced, RequiresTotalApartment) {
  const Subspace a = span(4, {e(4, 1), e(4, 2)});
  const Subspace ap = span(4, {e(4, 3), e(4, 4)});
  EXPECT_THROW(detect_noninduced(Scaffold(4, 2, {a, ap}, {{0, 0}})), Error);
}

TEST(Recovery, Identity) {
  const auto t = recover_operator_k1(k1_samples(TransformSpec::identity(3)), 3);
  EXPECT_EQ(t.matrix(), ExactMatrix::identity(3));
  EXPECT_FALSE(t.conjugate());
}

TEST(Recovery, Conjugation) {
  const TransformSpec c(ExactMatrix::identity(3), true);
  const auto samples = k1_samples(c);
  EXPECT_EQ(samples.back().second, span(3, {vec({1, -I(), 0})}));
  const auto t = recover_operator_k1(samples, 3);
  EXPECT_EQ(t.matrix(), ExactMatrix::identity(3));
  EXPECT_TRUE(t.conjugate());
}

TEST(Recovery, RotationBlockIsProportional) {
  const TransformSpec orig(rotation3());
  const auto samples = k1_samples(orig);
  const auto t = recover_operator_k1(samples, 3);
  EXPECT_FALSE(t.conjugate());
  // Normalized so the first row starts with 1: M / 3.
  const ExactMatrix expected = GaussianRational(mpq_class(1, 3)) * rotation3();
  EXPECT_EQ(t.matrix(), expected);
  for (const auto& [line, img] : samples) EXPECT_EQ(induced_map(t, line), img);
}

TEST(Recovery, RoundTripRandomSpecs) {
  for (std::size_t n : {3u, 4u, 5u}) {
    Rng rng(100 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto orig = random_spec(rng, n, true, false);
      const auto t = recover_operator_k1(k1_samples(orig), n);
      EXPECT_EQ(t.conjugate(), orig.conjugate());
      for (int l = 0; l < 20; ++l) {
        const Subspace line = random_subspace(rng, n, 1);
        EXPECT_EQ(induced_map(t, line), induced_map(orig, line));
      }
    }
  }
}

TEST(Recovery, Errors) {
  auto samples = k1_samples(TransformSpec::identity(3));
  auto missing = samples;
  missing.pop_back();
  EXPECT_THROW(recover_operator_k1(missing, 3), Error);
  auto bad = samples;
  bad.back().second = span(3, {vec({1, 2, 0})});
  try {
    recover_operator_k1(bad, 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::Inconsistent);
  }
  // A non-unitary linear map: scale e_2 by 2.
  const ExactMatrix skew{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  std::vector<LineSample> s2;
  for (const auto& l : k1_probe_lines(3)) {
    std::vector<Vector> rows;
    Vector v(3);
    const Vector src = l.frame().row(0);
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t r = 0; r < 3; ++r) v[c] = v[c] + src[r] * skew(r, c);
    rows.push_back(v);
    s2.emplace_back(l, Subspace(3, rows));
  }
  EXPECT_THROW(recover_operator_k1(s2, 3), Error);
}

TEST(ScaffoldJson, RoundTrip) {
  for (const auto& [name, s] : adversarial_corpus(4, 2)) {
    const auto text = scaffold_to_json(s);
    const auto back = parse_scaffold_json(text);
    EXPECT_EQ(back.subspaces(), s.subspaces()) << name;
    EXPECT_EQ(back.map_entries(), s.map_entries()) << name;
    EXPECT_EQ(back.apartments(), s.apartments()) << name;
    EXPECT_EQ(scaffold_to_json(back), text);
    EXPECT_EQ(detect_noninduced(back).induced_consistent, detect_noninduced(s).induced_consistent);
  }
}

TEST(ScaffoldJson, HandWrittenWithComplexAndBigEntries) {
  // span{(1, i)} and its orthocomplement span{(1, -i)} in C^2 at k = 1.
  const std::string text = R"({"n": 2, "k": 1,
    "subspaces": [[[[1,1,0,1], [0,1,1,1]]],
                  [[["123456789012345678901234567890","123456789012345678901234567890",0,1], [0,1,-1,1]]]],
    "map": [[0, 1], [1, 0]]})";
  const auto s = parse_scaffold_json(text);
  ASSERT_EQ(s.subspaces().size(), 2u);
  EXPECT_EQ(s.subspaces()[0], span(2, {vec({1, I()})}));
  EXPECT_EQ(s.subspaces()[1], span(2, {vec({1, -I()})}));
  EXPECT_EQ(*s.image(0), 1u);
  // No apartment is declared; the orthogonal pair is discovered as one.
  EXPECT_EQ(s.apartments().size(), 1u);
}

TEST(ScaffoldJson, Errors) {
  auto code = [](const std::string& text) {
    try {
      parse_scaffold_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Inconsistent;  // sentinel: no error
  };
  EXPECT_EQ(code("{"), ErrorCode::Parse);
  EXPECT_EQ(code("[]"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"n":2,"k":1,"map":[]})"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"n":2,"k":1,"subspaces":[[[[1,0,0,1],[0,1,0,1]]]],"map":[]})"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"n":2,"k":1,"subspaces":[[[[1,1,0,1],["x",1,0,1]]]],"map":[]})"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"n":2,"k":1,"subspaces":[[[[1,1,0,1],[0,1,0,1]]]],"map":[[0,-1]]})"),
            ErrorCode::Parse);
  EXPECT_EQ(code(R"({"n":2,"k":1,"subspaces":[[[[1,1,0,1],[0,1,0,1]]]],"map":[[0,5]]})"),
            ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace oapt
