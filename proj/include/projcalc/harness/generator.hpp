#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "projcalc/harness/seeds.hpp"
#include "projcalc/projection_pair.hpp"

namespace projcalc::harness {

enum class RankRule {
  uniform,   // rank p, rank q uniform in [0, n]
  interior,  // rank p, rank q uniform in [1, n-1] (falls back to [0, n] when n = 1)
};

enum class Fixture { p_zero, p_one, q_zero, q_one, p_eq_q, pq_zero };

inline constexpr Fixture kFixtures[] = {Fixture::p_zero, Fixture::p_one,  Fixture::q_zero,
                                        Fixture::q_one,  Fixture::p_eq_q, Fixture::pq_zero};

constexpr std::string_view to_string(Fixture f) {
  switch (f) {
    case Fixture::p_zero:
      return "p_zero";
    case Fixture::p_one:
      return "p_one";
    case Fixture::q_zero:
      return "q_zero";
    case Fixture::q_one:
      return "q_one";
    case Fixture::p_eq_q:
      return "p_eq_q";
    case Fixture::pq_zero:
      return "pq_zero";
  }
  return "unknown";
}

constexpr std::string_view to_string(RankRule r) { return r == RankRule::uniform ? "uniform" : "interior"; }

template <StarRingBackend B>
typename B::Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  if constexpr (B::kind == BackendKind::exact) {
    exact::ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const long re = rng.uniform_int(-3, 3);
        const long im = rng.uniform_int(-3, 3);
        m(i, j) = exact::GaussianRational(re, im);
      }
    }
    return m;
  } else {
    floating::FloatMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        m(i, j) = floating::Complex(re, im);
      }
    }
    return m;
  }
}

// Orthogonal projection onto span of the columns of x, through the oracle.
template <StarRingBackend B>
typename B::Matrix span_projector(const StarRing<B>& ring, const typename B::Matrix& x) {
  const auto o = ring.oracle();
  return o.projector(o.column_space(x));
}

// Exact: B (B^*B)^{-1} B^* from a small Gaussian-integer B of full column rank,
// re-drawn until B^*B is invertible. Float: Q Q^* from the thin QR factor of a
// complex Gaussian matrix. Deterministic per (n, rank, rng state).
template <StarRingBackend B>
typename B::Matrix random_projection(const StarRing<B>& ring, std::size_t rank, Rng& rng) {
  using M = typename B::Matrix;
  const std::size_t n = ring.dimension();
  if (rank > n) throw Error("projection rank exceeds dimension");
  if (rank == 0) return ring.zero();
  if (rank == n) return ring.one();
  if constexpr (B::kind == BackendKind::exact) {
    for (;;) {
      const M basis = random_matrix<B>(n, rank, rng);
      const M adj = basis.adjoint();
      const auto gram_inv = exact::inverse(adj * basis);
      if (gram_inv) return basis * (*gram_inv) * adj;
    }
  } else {
    const M z = random_matrix<B>(n, rank, rng);
    Eigen::HouseholderQR<M> qr(z);
    const auto k = static_cast<Eigen::Index>(n);
    const M q = qr.householderQ() * M::Identity(k, static_cast<Eigen::Index>(rank));
    const M p = q * q.adjoint();
    return (p + p.adjoint()) / 2.0;
  }
}

template <StarRingBackend B>
typename B::Matrix random_projection(std::size_t n, std::size_t rank, std::uint64_t seed,
                                     const ToleranceConfig& tol = {}) {
  Rng rng(seed);
  return random_projection(StarRing<B>(n, tol), rank, rng);
}

inline std::pair<std::size_t, std::size_t> draw_ranks(std::size_t n, RankRule rule, Rng& rng) {
  long lo = 0;
  long hi = static_cast<long>(n);
  if (rule == RankRule::interior && n >= 2) {
    lo = 1;
    hi = static_cast<long>(n) - 1;
  }
  const auto rp = static_cast<std::size_t>(rng.uniform_int(lo, hi));
  const auto rq = static_cast<std::size_t>(rng.uniform_int(lo, hi));
  return {rp, rq};
}

template <StarRingBackend B>
ProjectionPair<B> random_pair(const StarRing<B>& ring, RankRule rule, std::uint64_t seed) {
  Rng rng(seed);
  const auto [rp, rq] = draw_ranks(ring.dimension(), rule, rng);
  auto p = random_projection(ring, rp, rng);
  auto q = random_projection(ring, rq, rng);
  return ProjectionPair<B>::build(ring, std::move(p), std::move(q));
}

template <StarRingBackend B>
ProjectionPair<B> fixture_pair(const StarRing<B>& ring, Fixture kind, std::uint64_t seed) {
  using M = typename B::Matrix;
  Rng rng(seed);
  const std::size_t n = ring.dimension();
  const auto any_rank = [&] { return static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n))); };
  switch (kind) {
    case Fixture::p_zero:
      return ProjectionPair<B>::build(ring, ring.zero(), random_projection(ring, any_rank(), rng));
    case Fixture::p_one:
      return ProjectionPair<B>::build(ring, ring.one(), random_projection(ring, any_rank(), rng));
    case Fixture::q_zero:
      return ProjectionPair<B>::build(ring, random_projection(ring, any_rank(), rng), ring.zero());
    case Fixture::q_one:
      return ProjectionPair<B>::build(ring, random_projection(ring, any_rank(), rng), ring.one());
    case Fixture::p_eq_q: {
      const auto r = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(n)));
      M p = random_projection(ring, r, rng);
      M q = p;
      return ProjectionPair<B>::build(ring, std::move(p), std::move(q));
    }
    case Fixture::pq_zero: {
      if (n == 1) return ProjectionPair<B>::build(ring, ring.one(), ring.zero());
      const auto r = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(n) - 1));
      M p = random_projection(ring, r, rng);
      const auto s = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(n - r)));
      const M x = random_matrix<B>(n, s, rng);
      M q = span_projector(ring, M((ring.one() - p) * x));
      return ProjectionPair<B>::build(ring, std::move(p), std::move(q));
    }
  }
  throw Error("unknown fixture");
}

// A pair whose ranges land in the requested cell of
// (pR ∩ qR = {0}) x (pR + qR = R). Needs n >= 3. Cells are confirmed with
// the oracle and re-drawn if a draw lands elsewhere.
template <StarRingBackend B>
ProjectionPair<B> random_pair_in_cell(const StarRing<B>& ring, bool meet_trivial, bool join_full,
                                      std::uint64_t seed) {
  using M = typename B::Matrix;
  const std::size_t n = ring.dimension();
  if (n < 3) throw Error("hypothesis cells need dimension >= 3");
  const long ln = static_cast<long>(n);
  Rng rng(seed);
  const auto o = ring.oracle();
  for (;;) {
    M p;
    M q;
    if (meet_trivial && join_full) {
      const long r = rng.uniform_int(1, ln - 1);
      p = random_projection(ring, static_cast<std::size_t>(r), rng);
      q = random_projection(ring, static_cast<std::size_t>(ln - r), rng);
    } else if (meet_trivial) {
      const long r = rng.uniform_int(1, ln - 2);
      const long s = rng.uniform_int(1, ln - 1 - r);
      p = random_projection(ring, static_cast<std::size_t>(r), rng);
      q = random_projection(ring, static_cast<std::size_t>(s), rng);
    } else if (join_full) {
      const long r = rng.uniform_int(2, ln - 1);
      const long s = rng.uniform_int(ln + 1 - r, ln - 1);
      p = random_projection(ring, static_cast<std::size_t>(r), rng);
      q = random_projection(ring, static_cast<std::size_t>(s), rng);
    } else {
      // Shared vector c plus private directions, total dimension below n.
      const long extra = rng.uniform_int(0, ln - 2);
      const long xr = rng.uniform_int(0, extra);
      const long ys = extra - xr;
      const M c = random_matrix<B>(n, 1, rng);
      const M x = random_matrix<B>(n, static_cast<std::size_t>(xr), rng);
      const M y = random_matrix<B>(n, static_cast<std::size_t>(ys), rng);
      M cx(n, static_cast<std::size_t>(1 + xr));
      M cy(n, static_cast<std::size_t>(1 + ys));
      if constexpr (B::kind == BackendKind::exact) {
        cx = c.hconcat(x);
        cy = c.hconcat(y);
      } else {
        cx << c, x;
        cy << c, y;
      }
      p = span_projector(ring, cx);
      q = span_projector(ring, cy);
    }
    const auto pr = o.column_space(p);
    const auto qr = o.column_space(q);
    if (o.intersection(pr, qr).is_trivial() == meet_trivial && o.sum(pr, qr).is_whole() == join_full) {
      return ProjectionPair<B>::build(ring, std::move(p), std::move(q));
    }
  }
}

}  // namespace projcalc::harness
