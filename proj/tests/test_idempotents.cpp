#include <gtest/gtest.h>

#include "projcalc/harness/generator.hpp"
#include "projcalc/idempotents.hpp"
#include "test_support.hpp"

using namespace projcalc::testing;
using projcalc::ExactBackend;
using projcalc::ExactRing;
using projcalc::FloatBackend;
using projcalc::FloatRing;
using projcalc::PairAnalysis;
using projcalc::ProjectionPair;
using projcalc::TheoremReport;
using projcalc::Verdict;
using projcalc::harness::Fixture;
using projcalc::harness::RankRule;

namespace {

using ExactPair = ProjectionPair<ExactBackend>;
using ExactAnalysis = PairAnalysis<ExactBackend>;

const ExactMatrix kHalfOnes = mat({{"1/2", "1/2"}, {"1/2", "1/2"}});
// projector onto span{(1,2)}
const ExactMatrix kLine12 = mat({{"1/5", "2/5"}, {"2/5", "4/5"}});

ExactAnalysis analyse(const ExactRing& ring, const ExactMatrix& p, const ExactMatrix& q) {
  return ExactAnalysis(ExactPair::build(ring, p, q));
}

bool clause_equal(const TheoremReport& r) { return r.hypothesis_flags.at("elements_equal"); }

void expect_zero_residuals(const TheoremReport& r) {
  EXPECT_TRUE(r.passed()) << r.statement_id << " " << r.note;
  for (const auto& [name, v] : r.residuals) EXPECT_EQ(v, 0.0) << r.statement_id << " " << name;
}

}  // namespace

TEST(Oblique, DirectSumExample) {
  const ExactRing ring(2);
  const auto an = analyse(ring, diag({"1", "0"}), kLine12);
  // oblique projection onto span{e1} along span{(1,2)}
  const ExactMatrix expected = mat({{"1", "-1/2"}, {"0", "0"}});
  EXPECT_EQ(projcalc::oblique_qbar_p(an).element, expected);
  EXPECT_EQ(projcalc::oblique_one_minus_qp(an).element, expected);
  EXPECT_EQ(projcalc::oblique_p_pqqp(an).element, expected);
}

TEST(Oblique, WitnessesAreMpInverses) {
  const ExactRing ring(2);
  const auto an = analyse(ring, diag({"1", "0"}), kHalfOnes);
  const auto f = projcalc::oblique_one_minus_qp(an);
  const auto g = projcalc::oblique_p_pqqp(an);
  ASSERT_TRUE(f.witness_mp && g.witness_mp);
  EXPECT_TRUE(naive_penrose(f.element, *f.witness_mp));
  EXPECT_TRUE(naive_penrose(g.element, *g.witness_mp));
  EXPECT_EQ(naive_multiply(*f.witness_mp, f.element), an.pair.qbar());
  EXPECT_EQ(naive_multiply(g.element, *g.witness_mp), an.pair.p());
}

TEST(ObliqueQbarP, ExamplesAndFixtures) {
  const ExactRing ring(2);
  expect_zero_residuals(projcalc::check_oblique_qbar_p(analyse(ring, diag({"1", "0"}), kHalfOnes)));
  for (std::size_t n : {2u, 3u, 4u}) {
    const ExactRing rn(n);
    for (Fixture f : projcalc::harness::kFixtures) {
      const ExactAnalysis an(projcalc::harness::fixture_pair(rn, f, 7 * n));
      expect_zero_residuals(projcalc::check_oblique_qbar_p(an));
      expect_zero_residuals(projcalc::check_oblique_pair_witnesses(an));
      expect_zero_residuals(projcalc::check_orthogonal_decomposition(an));
      expect_zero_residuals(projcalc::check_idempotent_ranges(an));
    }
  }
}

TEST(ObliqueQbarP, PEqualsQGivesZero) {
  // qbar p = 0 when p = q
  const ExactRing ring(2);
  EXPECT_EQ(projcalc::oblique_qbar_p(analyse(ring, kHalfOnes, kHalfOnes)).element, ring.zero());
}

TEST(InverseEquivalence, TransversalPairAllClausesHold) {
  const ExactRing ring(2);
  const auto an = analyse(ring, diag({"1", "0"}), kHalfOnes);
  for (int c = 1; c <= 3; ++c) {
    const auto r = projcalc::check_inverse_equivalence(an, c);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(clause_equal(r)) << c;
  }
}

TEST(InverseEquivalence, EqualPairAllClausesFail) {
  const ExactRing ring(2);
  const auto an = analyse(ring, diag({"1", "0"}), diag({"1", "0"}));
  for (int c = 1; c <= 3; ++c) {
    const auto r = projcalc::check_inverse_equivalence(an, c);
    EXPECT_TRUE(r.passed());  // the biconditional holds with both sides false
    EXPECT_FALSE(clause_equal(r)) << c;
  }
  EXPECT_THROW(projcalc::check_inverse_equivalence(an, 4), projcalc::UnknownStatement);
}

TEST(InverseEquivalence, JoinFullButMeetNontrivial) {
  const ExactRing ring(3);
  const auto an = analyse(ring, diag({"1", "1", "0"}), diag({"0", "1", "1"}));
  EXPECT_TRUE(clause_equal(projcalc::check_inverse_equivalence(an, 1)));
  EXPECT_FALSE(clause_equal(projcalc::check_inverse_equivalence(an, 2)));
  EXPECT_FALSE(clause_equal(projcalc::check_inverse_equivalence(an, 3)));
}

TEST(OrthogonalDecomposition, Examples) {
  const ExactRing ring(3);
  EXPECT_EQ(projcalc::orth_decomposition(analyse(ring, diag({"1", "1", "0"}), diag({"0", "1", "1"}))),
            diag({"0", "1", "0"}));
  EXPECT_EQ(projcalc::orth_decomposition(analyse(ring, diag({"1", "0", "0"}), diag({"1", "1", "0"}))),
            diag({"1", "0", "1"}));
  expect_zero_residuals(projcalc::check_orthogonal_decomposition(analyse(ring, diag({"1", "0", "0"}), diag({"1", "1", "0"}))));
}

TEST(MeetTrivialInvertible, Examples) {
  const ExactRing ring(2);
  const auto yes = projcalc::check_meet_trivial_invertible(analyse(ring, diag({"1", "0"}), kHalfOnes));
  EXPECT_TRUE(yes.passed());
  EXPECT_TRUE(yes.hypothesis_flags.at("one_minus_pq_invertible"));
  const auto no = projcalc::check_meet_trivial_invertible(analyse(ring, kHalfOnes, kHalfOnes));
  EXPECT_TRUE(no.passed());
  EXPECT_FALSE(no.hypothesis_flags.at("one_minus_pq_invertible"));
}

TEST(SpecialCases, GatedWhenHypothesisFails) {
  const ExactRing ring(2);
  const auto an = analyse(ring, kHalfOnes, kHalfOnes);
  for (const auto& r : projcalc::check_special_cases(an)) {
    EXPECT_EQ(r.verdict, Verdict::inconclusive) << r.statement_id;
    EXPECT_TRUE(r.hypothesis_gated()) << r.statement_id;
  }
}

TEST(SpecialCases, DirectSumExample) {
  const ExactRing ring(2);
  const auto an = analyse(ring, diag({"1", "0"}), kLine12);
  for (const auto& r : projcalc::check_special_cases(an)) EXPECT_TRUE(r.passed()) << r.statement_id;
}

TEST(IdempotentProperty, RandomExactPairs) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const ExactRing ring(2 + seed % 4);
    const ExactAnalysis an(projcalc::harness::random_pair(ring, RankRule::uniform, seed));
    expect_zero_residuals(projcalc::check_oblique_qbar_p(an));
    expect_zero_residuals(projcalc::check_oblique_pair_witnesses(an));
    expect_zero_residuals(projcalc::check_orthogonal_decomposition(an));
    expect_zero_residuals(projcalc::check_idempotent_ranges(an));
    expect_zero_residuals(projcalc::check_meet_trivial_invertible(an));
    for (int c = 1; c <= 3; ++c) expect_zero_residuals(projcalc::check_inverse_equivalence(an, c));
    for (const auto& r : projcalc::check_special_cases(an)) EXPECT_FALSE(r.failed()) << r.statement_id;
  }
}

TEST(IdempotentProperty, RandomFloatPairs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const FloatRing ring(2 + seed % 7);
    const PairAnalysis<FloatBackend> an(projcalc::harness::random_pair(ring, RankRule::uniform, seed));
    std::vector<TheoremReport> all = {projcalc::check_oblique_qbar_p(an), projcalc::check_oblique_pair_witnesses(an),
                                      projcalc::check_orthogonal_decomposition(an), projcalc::check_idempotent_ranges(an),
                                      projcalc::check_meet_trivial_invertible(an)};
    for (int c = 1; c <= 3; ++c) all.push_back(projcalc::check_inverse_equivalence(an, c));
    for (auto& r : projcalc::check_special_cases(an)) all.push_back(std::move(r));
    for (const auto& r : all) EXPECT_FALSE(r.failed()) << r.statement_id << " seed " << seed;
  }
}

TEST(IdempotentProperty, CellGridExact) {
  for (bool meet_trivial : {false, true}) {
    for (bool join_full : {false, true}) {
      const ExactRing ring(4);
      const ExactAnalysis an(projcalc::harness::random_pair_in_cell(ring, meet_trivial, join_full, 99));
      EXPECT_EQ(an.meet.is_trivial(), meet_trivial);
      EXPECT_EQ(an.join.is_whole(), join_full);
      for (int c = 1; c <= 3; ++c) {
        const auto r = projcalc::check_inverse_equivalence(an, c);
        EXPECT_TRUE(r.passed());
      }
      EXPECT_EQ(clause_equal(projcalc::check_inverse_equivalence(an, 3)), meet_trivial && join_full);
    }
  }
}
