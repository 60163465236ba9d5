#include "projcalc/report.hpp"

#include <algorithm>

namespace projcalc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

double TheoremReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, value] : residuals) m = std::max(m, value);
  return m;
}

TheoremReport ReportBuilder::finish() && {
  if (gated_) {
    report_.verdict = Verdict::inconclusive;
    report_.note = std::string(kNoteHypothesis);
  } else if (ambiguous_) {
    report_.verdict = Verdict::inconclusive;
    report_.note = std::string(kNoteNearCutoff);
  } else if (failed_ && ill_conditioned_) {
    report_.verdict = Verdict::inconclusive;
    report_.note = std::string(kNoteIllConditioned);
  } else {
    report_.verdict = failed_ ? Verdict::fail : Verdict::pass;
  }
  return std::move(report_);
}

}  // namespace projcalc
