#pragma once

#include <optional>
#include <vector>

#include "projcalc/projection_pair.hpp"

namespace projcalc {

template <StarRingBackend B>
struct ObliqueIdempotent {
  using Matrix = typename B::Matrix;
  using Space = typename B::Oracle::Space;

  Matrix element;
  Space onto_space;   // range(element)
  Space along_space;  // range(1 - element)
  std::optional<Matrix> witness_mp;
};

namespace detail {

template <StarRingBackend B>
ObliqueIdempotent<B> make_oblique(const PairAnalysis<B>& an, typename B::Matrix e,
                                  std::optional<typename B::Matrix> witness) {
  using M = typename B::Matrix;
  auto onto = an.oracle.column_space(e);
  auto along = an.oracle.column_space(M(an.ring().one() - e));
  return {std::move(e), std::move(onto), std::move(along), std::move(witness)};
}

}  // namespace detail

// E = (qbar p)^+, from the backend. Its closed form is (1-pq)^+ p qbar.
template <StarRingBackend B>
ObliqueIdempotent<B> oblique_qbar_p(const PairAnalysis<B>& an) {
  return detail::make_oblique(an, an.mp_qbar_p, std::nullopt);
}

// F = (1-qp)^+ qbar with explicit MP inverse z = 1 - qp - dd^+.
template <StarRingBackend B>
ObliqueIdempotent<B> oblique_one_minus_qp(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& pr = an.pair;
  M f = an.mp_one_minus_qp * pr.qbar();
  M z = an.one_minus_qp - pr.d() * an.mp_d;
  return detail::make_oblique(an, std::move(f), std::optional<M>(std::move(z)));
}

// G = p (p+q-qp)^+ with explicit MP inverse z' = 2p - qp - (p-a)(p-a)^+.
template <StarRingBackend B>
ObliqueIdempotent<B> oblique_p_pqqp(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& pr = an.pair;
  M g = pr.p() * an.mp_p_plus_q_minus_qp;
  M z = pr.p() + pr.p() - pr.q() * pr.p() - an.p_minus_a * an.mp_p_minus_a;
  return detail::make_oblique(an, std::move(g), std::optional<M>(std::move(z)));
}

// w = 1 - p qbar (p qbar p)^+ - pbar q (pbar q pbar)^+, the projection onto
// (pR ∩ qR) ⊕ (pbarR ∩ qbarR).
template <StarRingBackend B>
typename B::Matrix orth_decomposition(const PairAnalysis<B>& an) {
  return an.ring().one() - an.p_qbar * an.mp_p_minus_a - an.pbar_q * an.mp_d;
}

template <StarRingBackend B>
ObliqueIdempotent<B> oblique_qbar_p(const ProjectionPair<B>& pair) {
  return oblique_qbar_p(PairAnalysis<B>(pair));
}

template <StarRingBackend B>
ObliqueIdempotent<B> oblique_one_minus_qp(const ProjectionPair<B>& pair) {
  return oblique_one_minus_qp(PairAnalysis<B>(pair));
}

template <StarRingBackend B>
ObliqueIdempotent<B> oblique_p_pqqp(const ProjectionPair<B>& pair) {
  return oblique_p_pqqp(PairAnalysis<B>(pair));
}

template <StarRingBackend B>
typename B::Matrix orth_decomposition(const ProjectionPair<B>& pair) {
  return orth_decomposition(PairAnalysis<B>(pair));
}

template <StarRingBackend B>
TheoremReport check_oblique_qbar_p(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  const auto& o = an.oracle;
  auto rb = detail::builder(an, "T3.4");
  const auto e = oblique_qbar_p(an);
  rb.equal(r, "closed_form", e.element, M(an.mp_one_minus_pq * pr.p() * pr.qbar()));
  rb.equal(r, "idempotent", M(e.element * e.element), e.element);
  rb.claim("range_E", o.equal(e.onto_space, o.intersection(an.p_range, an.cojoin)));
  rb.claim("range_one_minus_E", o.equal(e.along_space, o.sum(an.comeet, an.q_range)));
  rb.claim("summands_orthogonal", o.orthogonal(an.comeet, an.q_range));
  return std::move(rb).finish();
}

// Range identities on the three idempotents of this pair.
template <StarRingBackend B>
TheoremReport check_idempotent_ranges(const PairAnalysis<B>& an) {
  auto rb = detail::builder(an, "L3.3");
  idempotent_range_claims(rb, an.ring(), an.oracle, "qbar_p_plus", an.mp_qbar_p);
  idempotent_range_claims(rb, an.ring(), an.oracle, "F", oblique_one_minus_qp(an).element);
  idempotent_range_claims(rb, an.ring(), an.oracle, "G", oblique_p_pqqp(an).element);
  return std::move(rb).finish();
}

template <StarRingBackend B>
TheoremReport check_oblique_pair_witnesses(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  const auto& o = an.oracle;
  auto rb = detail::builder(an, "T3.9");
  const auto f = oblique_one_minus_qp(an);
  const auto g = oblique_p_pqqp(an);
  rb.equal(r, "F_idempotent", M(f.element * f.element), f.element);
  rb.equal(r, "G_idempotent", M(g.element * g.element), g.element);

  const auto p_cap_cojoin = o.intersection(an.p_range, an.cojoin);
  rb.claim("range_F", o.equal(f.onto_space, o.sum(p_cap_cojoin, an.comeet)));
  rb.claim("range_F_orthogonal", o.orthogonal(p_cap_cojoin, an.comeet));
  rb.claim("range_one_minus_F", o.equal(f.along_space, an.q_range));
  rb.claim("range_G", o.equal(g.onto_space, an.p_range));
  const auto cojoin_cap_q = o.intersection(an.cojoin, an.q_range);
  rb.claim("range_one_minus_G", o.equal(g.along_space, o.sum(cojoin_cap_q, an.comeet)));
  rb.claim("range_one_minus_G_orthogonal", o.orthogonal(cojoin_cap_q, an.comeet));

  detail::penrose_claims(rb, r, "F_z", f.element, *f.witness_mp);
  rb.equal(r, "z_F", M(*f.witness_mp * f.element), pr.qbar());
  detail::penrose_claims(rb, r, "G_zprime", g.element, *g.witness_mp);
  rb.equal(r, "G_zprime", M(g.element * *g.witness_mp), pr.p());
  return std::move(rb).finish();
}

template <StarRingBackend B>
TheoremReport check_orthogonal_decomposition(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& o = an.oracle;
  auto rb = detail::builder(an, "T3.13");
  const M w = orth_decomposition(an);
  rb.claim("is_projection", is_projection(r, w));
  const auto target = o.sum(an.meet, an.comeet);
  rb.claim("range", o.equal(o.column_space(w), target));
  rb.claim("summands_orthogonal", o.orthogonal(an.meet, an.comeet));
  const PairAnalysis<B> co(an.pair.complement());
  detail::flag_numerics(rb, co);
  rb.equal(r, "sum_of_meets", w, M(meet_projection(an) + meet_projection(co)));
  rb.equal(r, "oracle_projector", w, o.projector(target));
  return std::move(rb).finish();
}

// Clause 1: (qbar p)^+ = (1-qp)^+ qbar    iff pR + qR = R
// Clause 2: (qbar p)^+ = p (p+q-qp)^+     iff pR ∩ qR = {0}
// Clause 3: (1-qp)^+ qbar = p (p+q-qp)^+  iff pR ⊕ qR = R
// Element equalities come from backend inverses, conditions from the oracle.
template <StarRingBackend B>
TheoremReport check_inverse_equivalence(const PairAnalysis<B>& an, int clause) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  const auto& o = an.oracle;
  if (clause < 1 || clause > 3) throw UnknownStatement("inverse equivalence has clauses 1-3");
  auto rb = detail::builder(an, "T3.11." + std::to_string(clause));
  const M e = an.mp_qbar_p;
  const M f = an.mp_one_minus_qp * pr.qbar();
  const M g = pr.p() * an.mp_p_plus_q_minus_qp;
  bool equal = false;
  bool condition = false;
  double gap = 0.0;
  switch (clause) {
    case 1:
      gap = r.distance(e, f);
      equal = r.equal(e, f);
      rb.ambiguous(an.join.near_cutoff);
      condition = rb.hypothesis("join_full", an.join.is_whole());
      break;
    case 2:
      gap = r.distance(e, g);
      equal = r.equal(e, g);
      rb.ambiguous(an.meet.near_cutoff);
      condition = rb.hypothesis("meet_trivial", an.meet.is_trivial());
      break;
    default:
      gap = r.distance(f, g);
      equal = r.equal(f, g);
      condition = rb.hypothesis("direct_sum_whole", o.is_direct_sum_whole(an.p_range, an.q_range));
      break;
  }
  // The equality is asserted only where the subspace condition holds.
  if (condition) {
    rb.residual("lhs_minus_rhs", gap);
  } else {
    rb.diagnostic("lhs_minus_rhs", gap);
  }
  rb.hypothesis("elements_equal", equal);
  rb.claim("biconditional", equal == condition);
  return std::move(rb).finish();
}

// pR ∩ qR = {0}  iff  1 - pq is invertible.
template <StarRingBackend B>
TheoremReport check_meet_trivial_invertible(const PairAnalysis<B>& an) {
  const auto& r = an.ring();
  auto rb = detail::builder(an, "R3.8");
  rb.ambiguous(an.meet.near_cutoff);
  const bool meet_trivial = rb.hypothesis("meet_trivial", an.meet.is_trivial());
  const RankInfo rk = r.rank(an.one_minus_pq);
  rb.ambiguous(rk.near_cutoff);
  const bool invertible = rb.hypothesis("one_minus_pq_invertible", rk.rank == r.dimension());
  rb.claim("biconditional", meet_trivial == invertible);
  return std::move(rb).finish();
}

// Applies when pR ∩ qR = {0}.
template <StarRingBackend B>
TheoremReport check_meet_trivial_case(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  const auto& o = an.oracle;
  auto rb = detail::builder(an, "C3.5");
  rb.ambiguous(an.meet.near_cutoff);
  if (!rb.hypothesis("meet_trivial", an.meet.is_trivial())) {
    rb.gate_closed();
    return std::move(rb).finish();
  }
  const auto inv = r.inverse(an.one_minus_pq);
  if (rb.claim("one_minus_pq_invertible", inv.has_value())) {
    rb.equal(r, "inverse_form", an.mp_qbar_p, M(*inv * pr.p() * pr.qbar()));
  }
  const auto e = oblique_qbar_p(an);
  rb.claim("range_E_is_pR", o.equal(e.onto_space, an.p_range));
  rb.claim("range_one_minus_E", o.equal(e.along_space, o.sum(an.comeet, an.q_range)));
  rb.claim("summands_orthogonal", o.orthogonal(an.comeet, an.q_range));
  return std::move(rb).finish();
}

// Applies when pR + qR = R.
template <StarRingBackend B>
TheoremReport check_join_full_case(const PairAnalysis<B>& an) {
  const auto& o = an.oracle;
  auto rb = detail::builder(an, "C3.6");
  rb.ambiguous(an.join.near_cutoff);
  if (!rb.hypothesis("join_full", an.join.is_whole())) {
    rb.gate_closed();
    return std::move(rb).finish();
  }
  const auto e = oblique_qbar_p(an);
  rb.claim("range_E", o.equal(e.onto_space, o.intersection(an.p_range, an.cojoin)));
  rb.claim("range_one_minus_E_is_qR", o.equal(e.along_space, an.q_range));
  return std::move(rb).finish();
}

// Applies when pR ⊕ qR = R.
template <StarRingBackend B>
TheoremReport check_direct_sum_case(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  const auto& o = an.oracle;
  auto rb = detail::builder(an, "C3.10");
  if (!rb.hypothesis("direct_sum_whole", o.is_direct_sum_whole(an.p_range, an.q_range))) {
    rb.gate_closed();
    return std::move(rb).finish();
  }
  const auto inv_qp = r.inverse(an.one_minus_qp);
  const auto inv_sum = r.inverse(an.p_plus_q_minus_qp);
  rb.claim("one_minus_qp_invertible", inv_qp.has_value());
  rb.claim("p_plus_q_minus_qp_invertible", inv_sum.has_value());
  if (inv_qp && inv_sum) {
    const M f = *inv_qp * pr.qbar();
    const M g = pr.p() * *inv_sum;
    const M one = r.one();
    rb.claim("range_F_is_pR", o.equal(o.column_space(f), an.p_range));
    rb.claim("range_G_is_pR", o.equal(o.column_space(g), an.p_range));
    rb.claim("range_one_minus_F_is_qR", o.equal(o.column_space(M(one - f)), an.q_range));
    rb.claim("range_one_minus_G_is_qR", o.equal(o.column_space(M(one - g)), an.q_range));
  }
  return std::move(rb).finish();
}

template <StarRingBackend B>
std::vector<TheoremReport> check_special_cases(const PairAnalysis<B>& an) {
  return {check_meet_trivial_case(an), check_join_full_case(an), check_direct_sum_case(an)};
}

}  // namespace projcalc
