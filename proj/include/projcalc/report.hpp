#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "projcalc/oracle/subspace.hpp"

namespace projcalc {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

// Why a report is inconclusive.
inline constexpr std::string_view kNoteHypothesis = "hypothesis not met";
inline constexpr std::string_view kNoteNearCutoff = "near rank cutoff";
inline constexpr std::string_view kNoteIllConditioned = "ill-conditioned";

struct TheoremReport {
  std::string statement_id;
  Verdict verdict = Verdict::pass;
  std::map<std::string, double> residuals;
  // Distances between elements the statement does not assert equal.
  std::map<std::string, double> diagnostics;
  std::map<std::string, bool> hypothesis_flags;
  std::map<std::string, bool> claims;
  std::string note;
  std::string pair_fingerprint;
  std::string seed_path;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
  bool hypothesis_gated() const { return verdict == Verdict::inconclusive && note == kNoteHypothesis; }
  double max_residual() const;
};

// Collects claims for one statement and derives the verdict:
//   gate closed            -> inconclusive ("hypothesis not met")
//   any near-cutoff input  -> inconclusive ("near rank cutoff")
//   any claim false        -> fail
//   otherwise              -> pass
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string statement_id) { report_.statement_id = std::move(statement_id); }

  template <class Ring>
  bool equal(const Ring& ring, const std::string& name, const typename Ring::Matrix& lhs,
             const typename Ring::Matrix& rhs) {
    report_.residuals[name] = ring.distance(lhs, rhs);
    return claim(name, ring.equal(lhs, rhs));
  }

  bool claim(const std::string& name, bool holds) {
    report_.claims[name] = holds;
    if (!holds) failed_ = true;
    return holds;
  }

  bool claim(const std::string& name, oracle::Decision d) {
    if (d.near_cutoff) ambiguous_ = true;
    return claim(name, d.holds);
  }

  void residual(const std::string& name, double value) { report_.residuals[name] = value; }
  void diagnostic(const std::string& name, double value) { report_.diagnostics[name] = value; }

  bool hypothesis(const std::string& name, bool holds) {
    report_.hypothesis_flags[name] = holds;
    return holds;
  }

  bool hypothesis(const std::string& name, oracle::Decision d) {
    if (d.near_cutoff) ambiguous_ = true;
    return hypothesis(name, d.holds);
  }

  // Records the largest condition number seen; a failure on input above the
  // cap is reported as inconclusive rather than as a counterexample.
  void conditioning(double kappa, double cap) {
    auto& c = report_.diagnostics["condition"];
    c = std::max(c, kappa);
    if (kappa > cap) ill_conditioned_ = true;
  }

  void gate_closed() { gated_ = true; }
  void ambiguous(bool flag = true) { ambiguous_ = ambiguous_ || flag; }

  TheoremReport finish() &&;

 private:
  TheoremReport report_;
  bool failed_ = false;
  bool ambiguous_ = false;
  bool gated_ = false;
  bool ill_conditioned_ = false;
};

}  // namespace projcalc
