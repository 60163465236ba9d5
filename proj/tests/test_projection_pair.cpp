#include <gtest/gtest.h>

#include "projcalc/harness/generator.hpp"
#include "projcalc/projection_pair.hpp"
#include "test_support.hpp"

using namespace projcalc::testing;
using projcalc::ExactBackend;
using projcalc::ExactRing;
using projcalc::FloatBackend;
using projcalc::FloatRing;
using projcalc::PairAnalysis;
using projcalc::ProjectionPair;
using projcalc::TheoremReport;
using projcalc::harness::Fixture;
using projcalc::harness::RankRule;

namespace {

using ExactPair = ProjectionPair<ExactBackend>;

const ExactMatrix kHalfOnes = mat({{"1/2", "1/2"}, {"1/2", "1/2"}});

void expect_zero_residuals(const TheoremReport& r) {
  EXPECT_TRUE(r.passed()) << r.statement_id << " " << r.note;
  for (const auto& [name, v] : r.residuals) EXPECT_EQ(v, 0.0) << r.statement_id << " " << name;
}

}  // namespace

TEST(BuildPair, DerivedElements) {
  const ExactRing ring(2);
  const auto pr = ExactPair::build(ring, diag({"1", "0"}), kHalfOnes);
  EXPECT_EQ(pr.a(), diag({"1/2", "0"}));
  EXPECT_EQ(pr.b(), mat({{"0", "1/2"}, {"0", "0"}}));
  EXPECT_EQ(pr.d(), diag({"0", "1/2"}));
  EXPECT_EQ(pr.pbar(), diag({"0", "1"}));
  EXPECT_EQ(pr.qbar(), mat({{"1/2", "-1/2"}, {"-1/2", "1/2"}}));
}

TEST(BuildPair, ZeroAndIdentity) {
  const ExactRing ring(3);
  const auto pr = ExactPair::build(ring, ring.zero(), ring.one());
  EXPECT_EQ(pr.a(), ring.zero());
  EXPECT_EQ(pr.b(), ring.zero());
  EXPECT_EQ(pr.d(), ring.one());
}

TEST(BuildPair, RejectsNonProjections) {
  const ExactRing ring(2);
  EXPECT_THROW(ExactPair::build(ring, mat({{"1", "1"}, {"0", "0"}}), ring.one()), projcalc::NotAProjection);
  EXPECT_THROW(ExactPair::build(ring, ring.one(), diag({"2", "0"})), projcalc::NotAProjection);
  EXPECT_THROW(ExactPair::build(ring, ExactMatrix::identity(3), ring.one()), projcalc::DimensionMismatch);
}

TEST(JoinMeet, JoinExample) {
  const ExactRing ring(3);
  const ExactMatrix q = mat({{"0", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}});
  const auto pr = ExactPair::build(ring, diag({"1", "0", "0"}), q);
  EXPECT_EQ(join_projection(pr), mat({{"1", "0", "0"}, {"0", "1/2", "1/2"}, {"0", "1/2", "1/2"}}));
  EXPECT_EQ(meet_projection(pr), ring.zero());
}

TEST(JoinMeet, MeetExample) {
  const ExactRing ring(3);
  const auto pr = ExactPair::build(ring, diag({"1", "1", "0"}), diag({"0", "1", "1"}));
  EXPECT_EQ(meet_projection(pr), diag({"0", "1", "0"}));
  EXPECT_EQ(join_projection(pr), ring.one());
}

TEST(JoinMeet, EqualProjections) {
  const ExactRing ring(2);
  const auto pr = ExactPair::build(ring, kHalfOnes, kHalfOnes);
  EXPECT_EQ(join_projection(pr), kHalfOnes);
  EXPECT_EQ(meet_projection(pr), kHalfOnes);
}

TEST(ClosedForms, MatchBackendOnExample) {
  const ExactRing ring(2);
  const PairAnalysis<ExactBackend> an(ExactPair::build(ring, diag({"1", "0"}), kHalfOnes));
  EXPECT_EQ(projcalc::mp_one_minus_pq(an), an.mp_one_minus_pq);
  EXPECT_EQ(projcalc::mp_p_minus_pqp(an), ring.mp(ExactMatrix(an.pair.p() - an.pair.a())));
  EXPECT_EQ(projcalc::mp_transfer(an), ring.mp(ExactMatrix(an.pair.pbar() * an.pair.q())));
  // p - pqp = diag(1/2, 0)
  EXPECT_EQ(projcalc::mp_p_minus_pqp(an), diag({"2", "0"}));
}

TEST(PairIdentities, ExampleStatementsPassWithZeroResiduals) {
  const ExactRing ring(2);
  const PairAnalysis<ExactBackend> an(ExactPair::build(ring, diag({"1", "0"}), kHalfOnes));
  expect_zero_residuals(projcalc::check_b_products(an));
  expect_zero_residuals(projcalc::check_transfer_identities(an));
  expect_zero_residuals(projcalc::check_closed_form_inverses(an));
  expect_zero_residuals(projcalc::check_pqp_absorbs_pq(an));
  expect_zero_residuals(projcalc::check_transfer_inverse(an));
  expect_zero_residuals(projcalc::check_join(an));
  expect_zero_residuals(projcalc::check_meet(an));
  expect_zero_residuals(projcalc::check_surjectivity_criterion(an));
}

TEST(PairIdentities, FixturesExact) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const ExactRing ring(n);
    for (Fixture f : projcalc::harness::kFixtures) {
      const PairAnalysis<ExactBackend> an(projcalc::harness::fixture_pair(ring, f, 100 + n));
      expect_zero_residuals(projcalc::check_b_products(an));
      expect_zero_residuals(projcalc::check_transfer_identities(an));
      expect_zero_residuals(projcalc::check_closed_form_inverses(an));
      expect_zero_residuals(projcalc::check_pqp_absorbs_pq(an));
      expect_zero_residuals(projcalc::check_transfer_inverse(an));
      expect_zero_residuals(projcalc::check_join(an));
      expect_zero_residuals(projcalc::check_meet(an));
      expect_zero_residuals(projcalc::check_surjectivity_criterion(an));
    }
  }
}

TEST(PairIdentities, FixtureShapes) {
  const ExactRing ring(4);
  const auto pz = projcalc::harness::fixture_pair(ring, Fixture::p_zero, 5);
  EXPECT_EQ(pz.p(), ring.zero());
  const auto po = projcalc::harness::fixture_pair(ring, Fixture::p_one, 5);
  EXPECT_EQ(po.p(), ring.one());
  EXPECT_EQ(projcalc::harness::fixture_pair(ring, Fixture::q_zero, 5).q(), ring.zero());
  EXPECT_EQ(projcalc::harness::fixture_pair(ring, Fixture::q_one, 5).q(), ring.one());
  const auto pe = projcalc::harness::fixture_pair(ring, Fixture::p_eq_q, 5);
  EXPECT_EQ(pe.p(), pe.q());
  const auto pq = projcalc::harness::fixture_pair(ring, Fixture::pq_zero, 5);
  EXPECT_EQ(ExactMatrix(pq.p() * pq.q()), ring.zero());
}

TEST(PairIdentityProperty, RandomExactPairs) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const ExactRing ring(2 + seed % 4);
    const PairAnalysis<ExactBackend> an(projcalc::harness::random_pair(ring, RankRule::uniform, seed));
    expect_zero_residuals(projcalc::check_b_products(an));
    expect_zero_residuals(projcalc::check_transfer_identities(an));
    expect_zero_residuals(projcalc::check_closed_form_inverses(an));
    expect_zero_residuals(projcalc::check_pqp_absorbs_pq(an));
    expect_zero_residuals(projcalc::check_join(an));
    expect_zero_residuals(projcalc::check_meet(an));
  }
}

TEST(PairIdentityProperty, RandomFloatPairs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const FloatRing ring(2 + seed % 7);
    const PairAnalysis<FloatBackend> an(projcalc::harness::random_pair(ring, RankRule::uniform, seed));
    for (const TheoremReport& r :
         {projcalc::check_b_products(an), projcalc::check_transfer_identities(an), projcalc::check_closed_form_inverses(an),
          projcalc::check_pqp_absorbs_pq(an), projcalc::check_transfer_inverse(an), projcalc::check_join(an),
          projcalc::check_meet(an), projcalc::check_surjectivity_criterion(an)}) {
      EXPECT_FALSE(r.failed()) << r.statement_id << " seed " << seed;
    }
  }
}

// The meet of (p, q) is the complement of the join of (1-p, 1-q).
TEST(LatticeProperty, DualityAndOrder) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ExactRing ring(2 + seed % 3);
    const auto pr = projcalc::harness::random_pair(ring, RankRule::uniform, seed);
    const ExactMatrix x = join_projection(pr);
    const ExactMatrix y = meet_projection(pr);
    EXPECT_EQ(y, ExactMatrix(ring.one() - join_projection(pr.complement())));
    EXPECT_EQ(x, ExactMatrix(ring.one() - meet_projection(pr.complement())));
    // y <= p <= x and y <= q <= x in the projection order
    EXPECT_EQ(naive_multiply(y, pr.p()), y);
    EXPECT_EQ(naive_multiply(y, pr.q()), y);
    EXPECT_EQ(naive_multiply(pr.p(), x), pr.p());
    EXPECT_EQ(naive_multiply(pr.q(), x), pr.q());
    // commutation with the pair
    const auto swapped = ExactPair::build(ring, pr.q(), pr.p());
    EXPECT_EQ(join_projection(swapped), x);
    EXPECT_EQ(meet_projection(swapped), y);
  }
}

TEST(IdempotentRanges, ObliqueIdempotent) {
  const ExactRing ring(2);
  const auto r = projcalc::check_idempotent_ranges(ring, mat({{"1", "1"}, {"0", "0"}}));
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(projcalc::check_idempotent_ranges(ring, diag({"2", "0"})), projcalc::NotIdempotent);
}
