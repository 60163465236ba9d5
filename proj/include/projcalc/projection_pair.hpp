#pragma once

#include <string>
#include <utility>

#include "projcalc/errors.hpp"
#include "projcalc/report.hpp"
#include "projcalc/star_ring.hpp"

namespace projcalc {

// Two projections p, q with the derived elements
//   a = pqp, b = pq(1-p), d = (1-p)q(1-p), pbar = 1-p, qbar = 1-q.
template <StarRingBackend B>
class ProjectionPair {
 public:
  using Backend = B;
  using Ring = StarRing<B>;
  using Matrix = typename B::Matrix;

  // Throws NotAProjection unless both inputs pass is_projection.
  static ProjectionPair build(const Ring& ring, Matrix p, Matrix q) {
    ring.require(p);
    ring.require(q);
    if (!is_projection(ring, p)) throw NotAProjection("p is not a projection");
    if (!is_projection(ring, q)) throw NotAProjection("q is not a projection");
    return ProjectionPair(ring, std::move(p), std::move(q));
  }

  const Ring& ring() const { return ring_; }
  std::size_t dimension() const { return ring_.dimension(); }
  const Matrix& p() const { return p_; }
  const Matrix& q() const { return q_; }
  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const Matrix& d() const { return d_; }
  const Matrix& pbar() const { return pbar_; }
  const Matrix& qbar() const { return qbar_; }

  // The pair (1-p, 1-q).
  ProjectionPair complement() const { return ProjectionPair(ring_, pbar_, qbar_); }

 private:
  ProjectionPair(const Ring& ring, Matrix p, Matrix q)
      : ring_(ring),
        p_(std::move(p)),
        q_(std::move(q)),
        pbar_(ring_.one() - p_),
        qbar_(ring_.one() - q_),
        a_(p_ * q_ * p_),
        b_(p_ * q_ * pbar_),
        d_(pbar_ * q_ * pbar_) {}

  Ring ring_;
  Matrix p_;
  Matrix q_;
  Matrix pbar_;
  Matrix qbar_;
  Matrix a_;
  Matrix b_;
  Matrix d_;
};

// Backend MP inverses and oracle subspaces shared by every statement check on
// one pair. The two halves are computed independently: the inverses never
// touch the oracle and the subspaces never touch an MP inverse.
template <StarRingBackend B>
struct PairAnalysis {
  using Ring = StarRing<B>;
  using Matrix = typename B::Matrix;
  using Oracle = typename B::Oracle;
  using Space = typename Oracle::Space;

  explicit PairAnalysis(ProjectionPair<B> pr) : pair(std::move(pr)), oracle(pair.ring().oracle()) {
    const Ring& r = pair.ring();
    const Matrix& p = pair.p();
    const Matrix& q = pair.q();
    const Matrix one = r.one();
    p_minus_a = p - pair.a();
    one_minus_pq = one - p * q;
    one_minus_qp = one - q * p;
    qbar_p = pair.qbar() * p;
    pbar_q = pair.pbar() * q;
    p_qbar = p * pair.qbar();
    p_plus_q_minus_qp = p + q - q * p;

    const Matrix* critical[] = {&p_minus_a, &pair.d(), &pair.a(), &one_minus_pq, &one_minus_qp,
                                &qbar_p, &pbar_q, &p_plus_q_minus_qp};
    for (const Matrix* m : critical) {
      const RankInfo info = r.rank(*m);
      near_cutoff = near_cutoff || info.near_cutoff;
      condition = std::max(condition, info.condition);
    }

    mp_p_minus_a = r.mp(p_minus_a);
    mp_d = r.mp(pair.d());
    mp_a = r.mp(pair.a());
    mp_one_minus_pq = r.mp(one_minus_pq);
    mp_one_minus_qp = r.mp(one_minus_qp);
    mp_qbar_p = r.mp(qbar_p);
    mp_pbar_q = r.mp(pbar_q);
    mp_p_plus_q_minus_qp = r.mp(p_plus_q_minus_qp);

    p_range = oracle.column_space(p);
    q_range = oracle.column_space(q);
    pbar_range = oracle.column_space(pair.pbar());
    qbar_range = oracle.column_space(pair.qbar());
    meet = oracle.intersection(p_range, q_range);
    comeet = oracle.intersection(pbar_range, qbar_range);
    join = oracle.sum(p_range, q_range);
    cojoin = oracle.sum(pbar_range, qbar_range);
  }

  const Ring& ring() const { return pair.ring(); }

  ProjectionPair<B> pair;
  Oracle oracle;
  bool near_cutoff = false;
  double condition = 1.0;  // worst over the elements above

  Matrix p_minus_a, one_minus_pq, one_minus_qp, qbar_p, pbar_q, p_qbar, p_plus_q_minus_qp;
  Matrix mp_p_minus_a, mp_d, mp_a, mp_one_minus_pq, mp_one_minus_qp, mp_qbar_p, mp_pbar_q, mp_p_plus_q_minus_qp;

  Space p_range, q_range, pbar_range, qbar_range;
  Space meet;    // pR ∩ qR
  Space comeet;  // pbarR ∩ qbarR
  Space join;    // pR + qR
  Space cojoin;  // pbarR + qbarR
};

namespace detail {

template <StarRingBackend B>
void penrose_claims(ReportBuilder& rb, const StarRing<B>& ring, const std::string& prefix,
                    const typename B::Matrix& a, const typename B::Matrix& b) {
  const auto w = penrose_check(ring, a, b);
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string name = prefix + "_penrose" + std::to_string(k + 1);
    rb.residual(name, w.residuals[k]);
    rb.claim(name, w.holds[k]);
  }
}

// Near-cutoff and conditioning flags of an analysis; exact input has neither.
template <StarRingBackend B>
void flag_numerics(ReportBuilder& rb, const StarRing<B>& ring, bool near_cutoff, double condition) {
  if constexpr (B::kind == BackendKind::floating) {
    rb.ambiguous(near_cutoff);
    rb.conditioning(condition, ring.tolerance().conditioning_cap());
  }
}

template <StarRingBackend B>
void flag_numerics(ReportBuilder& rb, const PairAnalysis<B>& an) {
  flag_numerics(rb, an.ring(), an.near_cutoff, an.condition);
}

template <StarRingBackend B>
ReportBuilder builder(const PairAnalysis<B>& an, std::string id) {
  ReportBuilder rb(std::move(id));
  flag_numerics(rb, an);
  return rb;
}

}  // namespace detail

// (1-pq)^+ = (p-a)^+ (1+b) + 1 - p
template <StarRingBackend B>
typename B::Matrix mp_one_minus_pq(const PairAnalysis<B>& an) {
  const auto& pr = an.pair;
  const auto one = an.ring().one();
  return an.mp_p_minus_a * (one + pr.b()) + pr.pbar();
}

// (p - pqp)^+ = (1-pq)^+ p, with the closed form of (1-pq)^+.
template <StarRingBackend B>
typename B::Matrix mp_p_minus_pqp(const PairAnalysis<B>& an) {
  return mp_one_minus_pq(an) * an.pair.p();
}

// (pbar q)^+ = q (pbar q pbar)^+ = q d^+
template <StarRingBackend B>
typename B::Matrix mp_transfer(const PairAnalysis<B>& an) {
  return an.pair.q() * an.mp_d;
}

// x = p + pbar (pbar q)^+, the projection onto pR + qR.
template <StarRingBackend B>
typename B::Matrix join_projection(const PairAnalysis<B>& an) {
  return an.pair.p() + an.pair.pbar() * mp_transfer(an);
}

// y = p - p (p qbar)^+ with (p qbar)^+ = qbar (p qbar p)^+ = qbar (p-a)^+,
// the projection onto pR ∩ qR.
template <StarRingBackend B>
typename B::Matrix meet_projection(const PairAnalysis<B>& an) {
  const auto& pr = an.pair;
  return pr.p() - pr.p() * pr.qbar() * an.mp_p_minus_a;
}

template <StarRingBackend B>
typename B::Matrix join_projection(const ProjectionPair<B>& pair) {
  return join_projection(PairAnalysis<B>(pair));
}

template <StarRingBackend B>
typename B::Matrix meet_projection(const ProjectionPair<B>& pair) {
  return meet_projection(PairAnalysis<B>(pair));
}

// bb^* = (p-a) - (p-a)^2 and b^*b = d - d^2.
template <StarRingBackend B>
TheoremReport check_b_products(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  auto rb = detail::builder(an, "L2.2");
  const M& pa = an.p_minus_a;
  rb.equal(r, "b_bstar", M(pr.b() * r.star(pr.b())), M(pa - pa * pa));
  rb.equal(r, "bstar_b", M(r.star(pr.b()) * pr.b()), M(pr.d() - pr.d() * pr.d()));
  return std::move(rb).finish();
}

// The transfer identities between (p-a)^+ and d^+, and MP invertibility of p-q.
template <StarRingBackend B>
TheoremReport check_transfer_identities(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  auto rb = detail::builder(an, "L2.3");
  const M bstar = r.star(pr.b());
  rb.equal(r, "pa_range_absorbs_b", M(an.p_minus_a * an.mp_p_minus_a * pr.b()), pr.b());
  rb.equal(r, "b_absorbs_d_range", M(pr.b() * pr.d() * an.mp_d), pr.b());
  rb.equal(r, "b_dplus", M(pr.b() * an.mp_d), M(an.mp_p_minus_a * pr.b()));
  rb.equal(r, "dplus_bstar", M(an.mp_d * bstar), M(bstar * an.mp_p_minus_a));
  const M pmq = pr.p() - pr.q();
  detail::penrose_claims(rb, r, "p_minus_q", pmq, r.mp(pmq));
  return std::move(rb).finish();
}

// Closed forms for (p-pqp)^+, (1-pq)^+ and the range projection of 1-pq.
template <StarRingBackend B>
TheoremReport check_closed_form_inverses(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  auto rb = detail::builder(an, "L2.5");
  const M closed_pa = mp_p_minus_pqp(an);
  const M closed_pq = mp_one_minus_pq(an);
  rb.equal(r, "p_minus_a_via_one_minus_pq", an.mp_p_minus_a, M(an.mp_one_minus_pq * pr.p()));
  rb.equal(r, "p_minus_a_closed", closed_pa, an.mp_p_minus_a);
  detail::penrose_claims(rb, r, "p_minus_a", an.p_minus_a, closed_pa);
  rb.equal(r, "one_minus_pq_closed", closed_pq, an.mp_one_minus_pq);
  detail::penrose_claims(rb, r, "one_minus_pq", an.one_minus_pq, closed_pq);
  const M left = an.one_minus_pq * an.mp_one_minus_pq;
  const M right = an.mp_one_minus_pq * an.one_minus_pq;
  const M range_proj = an.p_minus_a * an.mp_p_minus_a + pr.pbar();
  rb.equal(r, "one_minus_pq_sides_agree", left, right);
  rb.equal(r, "one_minus_pq_range_projection", left, range_proj);
  return std::move(rb).finish();
}

// pqp (pqp)^+ pq = pq
template <StarRingBackend B>
TheoremReport check_pqp_absorbs_pq(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  const auto& pr = an.pair;
  auto rb = detail::builder(an, "L3.1");
  const M pq = pr.p() * pr.q();
  rb.equal(r, "a_aplus_pq", M(pr.a() * an.mp_a * pq), pq);
  return std::move(rb).finish();
}

template <StarRingBackend B>
TheoremReport check_transfer_inverse(const PairAnalysis<B>& an) {
  const auto& r = an.ring();
  auto rb = detail::builder(an, "L3.2.1");
  const auto transfer = mp_transfer(an);
  rb.equal(r, "transfer_vs_backend", transfer, an.mp_pbar_q);
  detail::penrose_claims(rb, r, "transfer", an.pbar_q, transfer);
  return std::move(rb).finish();
}

template <StarRingBackend B>
TheoremReport check_join(const PairAnalysis<B>& an) {
  const auto& r = an.ring();
  auto rb = detail::builder(an, "L3.2.2");
  const auto x = join_projection(an);
  rb.claim("is_projection", is_projection(r, x));
  const auto x_range = an.oracle.column_space(x);
  rb.claim("range_is_sum", an.oracle.equal(x_range, an.join));
  rb.equal(r, "oracle_projector", x, an.oracle.projector(an.join));
  return std::move(rb).finish();
}

template <StarRingBackend B>
TheoremReport check_meet(const PairAnalysis<B>& an) {
  using M = typename B::Matrix;
  const auto& r = an.ring();
  auto rb = detail::builder(an, "L3.2.3");
  const M y = meet_projection(an);
  rb.claim("is_projection", is_projection(r, y));
  rb.claim("range_is_intersection", an.oracle.equal(an.oracle.column_space(y), an.meet));
  rb.equal(r, "oracle_projector", y, an.oracle.projector(an.meet));
  const PairAnalysis<B> co(an.pair.complement());
  detail::flag_numerics(rb, co);
  rb.equal(r, "complement_duality", y, M(r.one() - join_projection(co)));
  return std::move(rb).finish();
}

// pR + qR = R  iff  pbar q pbar R = pbar R; both sides evaluated by the oracle.
template <StarRingBackend B>
TheoremReport check_surjectivity_criterion(const PairAnalysis<B>& an) {
  const auto& pr = an.pair;
  auto rb = detail::builder(an, "L3.2.4");
  const bool join_full = rb.hypothesis("join_full", an.join.is_whole());
  rb.ambiguous(an.join.near_cutoff);
  const bool d_full = rb.hypothesis("d_range_is_pbar_range",
                                    an.oracle.equal(an.oracle.column_space(pr.d()), an.pbar_range));
  rb.claim("biconditional", join_full == d_full);
  return std::move(rb).finish();
}

// ee^+ R = eR and (1 - e^+ e) R = (1-e) R for an idempotent e.
template <StarRingBackend B>
void idempotent_range_claims(ReportBuilder& rb, const StarRing<B>& ring, const typename B::Oracle& oracle,
                    const std::string& prefix, const typename B::Matrix& e) {
  using M = typename B::Matrix;
  const M plus = ring.mp(e);
  const RankInfo info = ring.rank(e);
  detail::flag_numerics(rb, ring, info.near_cutoff, info.condition);
  const M one = ring.one();
  rb.claim(prefix + "_range_e_eplus", oracle.equal(oracle.column_space(M(e * plus)), oracle.column_space(e)));
  rb.claim(prefix + "_range_complement",
           oracle.equal(oracle.column_space(M(one - plus * e)), oracle.column_space(M(one - e))));
}

template <StarRingBackend B>
TheoremReport check_idempotent_ranges(const StarRing<B>& ring, const typename B::Matrix& e) {
  ring.require(e);
  if (!is_idempotent(ring, e)) throw NotIdempotent("check_idempotent_ranges needs an idempotent");
  ReportBuilder rb("L3.3");
  idempotent_range_claims(rb, ring, ring.oracle(), "e", e);
  return std::move(rb).finish();
}

}  // namespace projcalc
