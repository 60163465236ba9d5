// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "projcalc/harness/campaign.hpp"
#include "projcalc/idempotents.hpp"
#include "projcalc/statements.hpp"

namespace {

using namespace projcalc;
using harness::CampaignConfig;
using harness::RankRule;

// Pinned thresholds.
constexpr double kFloatCampaignSeconds = 60.0;
constexpr double kExactCampaignSeconds = 120.0;
constexpr double kFloatRelative = 1e-10;
// Absolute floor under the relative test, the default equality_abs_tol; the
// oracle returns exact zeros where closed forms leave rounding noise.
constexpr double kFloatAbsolute = 1e-12;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Distance in units of the allowed error: <= 1 means within tolerance.
double allowance_ratio(const floating::FloatMatrix& x, const floating::FloatMatrix& y) {
  return (x - y).norm() / (kFloatAbsolute + kFloatRelative * std::max(x.norm(), y.norm()));
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

std::string render(const CampaignConfig& c, const harness::CampaignResult& r) {
  std::ostringstream out;
  harness::write_report(out, c, r);
  return out.str();
}

std::string first_failures(const harness::CampaignSummary& s) {
  std::string out;
  for (std::size_t k = 0; k < s.failures.size() && k < 5; ++k) out += "\n    " + s.failures[k];
  return out;
}

Outcome ac1_float_campaign() {
  CampaignConfig c;
  c.backend = BackendKind::floating;
  c.dims = range(2, 8);
  c.trials_per_dim = 200;
  c.seed = 20240601;
  c.theorems = all_statement_ids();
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = harness::run_campaign(c);
  const double secs = seconds_since(t0);
  const auto& s = r.summary;
  std::size_t near = 0, ill = 0;
  for (const auto& rep : r.reports) {
    near += rep.note == kNoteNearCutoff;
    ill += rep.note == kNoteIllConditioned;
  }
  const bool ok = s.fail == 0 && secs <= kFloatCampaignSeconds;
  return {ok, fmt("%zu reports, %zu fail, %zu gated, %zu near-cutoff, %zu ill-conditioned, max residual %.3g, %.1f s",
                  s.total, s.fail, s.inconclusive_hypothesis, near, ill, s.max_residual(), secs) +
                  first_failures(s)};
}

Outcome ac2_exact_campaign() {
  CampaignConfig c;
  c.backend = BackendKind::exact;
  c.dims = range(2, 5);
  c.trials_per_dim = 25;
  c.seed = 20240602;
  c.theorems = all_statement_ids();
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = harness::run_campaign(c);
  const double secs = seconds_since(t0);
  const auto& s = r.summary;
  std::size_t nonzero = 0;
  for (const auto& rep : r.reports) {
    for (const auto& [name, v] : rep.residuals) nonzero += v != 0.0;
  }
  const bool ok = s.fail == 0 && s.inconclusive_numeric == 0 && nonzero == 0 && secs <= kExactCampaignSeconds;
  return {ok, fmt("%zu reports, %zu fail, %zu gated, %zu nonzero residuals, %.1f s", s.total, s.fail,
                  s.inconclusive_hypothesis, nonzero, secs) +
                  first_failures(s)};
}

// Join and meet from the closed forms against the oracle's projector onto the
// sum and intersection of the ranges.
template <StarRingBackend B>
bool duel_one(std::size_t n, std::uint64_t seed, double& worst) {
  const StarRing<B> ring(n);
  const auto pair = harness::random_pair(ring, RankRule::uniform, seed);
  const auto o = ring.oracle();
  const auto pr = o.column_space(pair.p());
  const auto qr = o.column_space(pair.q());
  const auto x = join_projection(pair);
  const auto y = meet_projection(pair);
  const auto px = o.projector(o.sum(pr, qr));
  const auto py = o.projector(o.intersection(pr, qr));
  if constexpr (B::kind == BackendKind::exact) {
    return x == px && y == py;
  } else {
    const double d = std::max(allowance_ratio(x, px), allowance_ratio(y, py));
    worst = std::max(worst, d);
    return d <= 1.0;
  }
}

Outcome ac3_oracle_duel() {
  std::size_t exact_bad = 0, float_bad = 0, exact_n = 0, float_n = 0;
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 5;
    const std::uint64_t seed = harness::child_seed(3, n, k);
    if (k % 2 == 0) {
      ++exact_n;
      exact_bad += !duel_one<ExactBackend>(n, seed, worst);
    } else {
      ++float_n;
      float_bad += !duel_one<FloatBackend>(n, seed, worst);
    }
  }
  return {exact_bad == 0 && float_bad == 0,
          fmt("exact %zu/%zu identical, float %zu/%zu within %.0e rel + %.0e abs (worst %.3g of allowance)",
              exact_n - exact_bad, exact_n, float_n - float_bad, float_n, kFloatRelative, kFloatAbsolute, worst)};
}

template <StarRingBackend B>
std::size_t witness_failures(std::size_t count, std::size_t max_dim) {
  std::size_t bad = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::size_t n = 2 + k % (max_dim - 1);
    const StarRing<B> ring(n);
    const PairAnalysis<B> an(harness::random_pair(ring, RankRule::uniform, harness::child_seed(4, n, k)));
    const auto f = oblique_one_minus_qp(an);
    const auto g = oblique_p_pqqp(an);
    bad += !(penrose_check(ring, f.element, *f.witness_mp).passed() &&
             penrose_check(ring, g.element, *g.witness_mp).passed());
  }
  return bad;
}

Outcome ac4_witnesses() {
  const std::size_t exact_bad = witness_failures<ExactBackend>(200, 5);
  const std::size_t float_bad = witness_failures<FloatBackend>(200, 8);
  return {exact_bad == 0 && float_bad == 0,
          fmt("exact %zu/200, float %zu/200 pairs with both witnesses verified", 200 - exact_bad, 200 - float_bad)};
}

template <StarRingBackend B>
std::string grid(std::size_t per_cell, std::size_t& bad) {
  std::string out;
  for (bool meet_trivial : {false, true}) {
    for (bool join_full : {false, true}) {
      std::size_t cell_bad = 0;
      for (std::uint64_t k = 0; k < per_cell; ++k) {
        const std::size_t n = 3 + k % 3;
        const StarRing<B> ring(n);
        const PairAnalysis<B> an(harness::random_pair_in_cell(ring, meet_trivial, join_full,
                                                              harness::child_seed(5, n, k + 100 * join_full)));
        bool ok = an.meet.is_trivial() == meet_trivial && an.join.is_whole() == join_full;
        for (const char* id : {"T3.11.1", "T3.11.2", "T3.11.3", "R3.8"}) ok = ok && verify(id, an).passed();
        cell_bad += !ok;
      }
      bad += cell_bad;
      out += fmt(" [meet_trivial=%d join_full=%d %zu/%zu]", meet_trivial, join_full, per_cell - cell_bad, per_cell);
    }
  }
  return out;
}

Outcome ac5_biconditional_grid() {
  std::size_t bad = 0;
  const std::string e = grid<ExactBackend>(10, bad);
  const std::string f = grid<FloatBackend>(10, bad);
  return {bad == 0, "exact" + e + "\n    float" + f};
}

template <StarRingBackend B>
std::size_t closed_form_failures(std::size_t count, std::size_t max_dim, double& worst) {
  using M = typename B::Matrix;
  std::size_t bad = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::size_t n = 2 + k % (max_dim - 1);
    const StarRing<B> ring(n);
    const PairAnalysis<B> an(harness::random_pair(ring, RankRule::uniform, harness::child_seed(6, n, k)));
    const auto& pr = an.pair;
    const M one = ring.one();
    const std::pair<M, M> cases[] = {
        {mp_one_minus_pq(an), ring.mp(M(one - pr.p() * pr.q()))},
        {mp_p_minus_pqp(an), ring.mp(M(pr.p() - pr.a()))},
        {mp_transfer(an), ring.mp(M(pr.pbar() * pr.q()))},
        {M(mp_one_minus_pq(an) * pr.p() * pr.qbar()), ring.mp(M(pr.qbar() * pr.p()))},
    };
    bool ok = true;
    for (const auto& [closed, backend] : cases) {
      if constexpr (B::kind == BackendKind::exact) {
        ok = ok && closed == backend;
      } else {
        const double d = allowance_ratio(closed, backend);
        worst = std::max(worst, d);
        ok = ok && d <= 1.0;
      }
    }
    bad += !ok;
  }
  return bad;
}

Outcome ac6_closed_forms() {
  double worst = 0.0;
  const std::size_t exact_bad = closed_form_failures<ExactBackend>(300, 5, worst);
  const std::size_t float_bad = closed_form_failures<FloatBackend>(300, 8, worst);
  return {exact_bad == 0 && float_bad == 0,
          fmt("exact %zu/300 identical, float %zu/300 within %.0e rel + %.0e abs (worst %.3g of allowance)",
              300 - exact_bad, 300 - float_bad, kFloatRelative, kFloatAbsolute, worst)};
}

Outcome ac7_determinism() {
  CampaignConfig c;
  c.backend = BackendKind::exact;
  c.dims = range(2, 4);
  c.trials_per_dim = 6;
  c.seed = 77;
  c.theorems = all_statement_ids();
  const std::string first = render(c, harness::run_campaign(c));
  const std::string second = render(c, harness::run_campaign(c));
  const std::string serial = render(c, harness::run_campaign_serial(c));
  const auto reparsed = CampaignConfig::from_json(c.to_json());
  const std::string from_json = render(reparsed, harness::run_campaign(reparsed));
  const bool ok = !first.empty() && first == second && first == serial && first == from_json;
  return {ok, fmt("%zu bytes; rerun %s, serial %s, config round trip %s", first.size(),
                  first == second ? "identical" : "differs", first == serial ? "identical" : "differs",
                  first == from_json ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC-1 float campaign", ac1_float_campaign},
      {"AC-2 exact campaign", ac2_exact_campaign},
      {"AC-3 oracle duel", ac3_oracle_duel},
      {"AC-4 witness verification", ac4_witnesses},
      {"AC-5 biconditional grid", ac5_biconditional_grid},
      {"AC-6 closed forms vs backend", ac6_closed_forms},
      {"AC-7 determinism", ac7_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
