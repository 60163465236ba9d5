#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "projcalc/harness/generator.hpp"
#include "projcalc/harness/serialize.hpp"

namespace projcalc::harness {

struct CampaignConfig {
  BackendKind backend = BackendKind::exact;
  std::vector<std::size_t> dims;
  RankRule ranks = RankRule::uniform;
  std::size_t trials_per_dim = 1;
  std::uint64_t seed = 0;
  ToleranceConfig tolerance;
  std::vector<std::string> theorems;
  bool inject_fixtures = true;

  // Throws Error on an invalid configuration.
  void validate() const;

  // Missing "theorems" (or "all") selects every statement.
  static CampaignConfig from_json(const json& j);
  json to_json() const;
};

struct StatementStats {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  double max_residual = 0.0;
};

struct CampaignSummary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive_hypothesis = 0;
  std::size_t inconclusive_numeric = 0;
  std::map<std::string, StatementStats> statements;
  std::vector<std::string> failures;      // "<statement> @ <seed_path>"
  std::vector<std::string> inconclusive;  // numeric inconclusives only, with their note

  // 0 all pass, 1 any hard failure, 2 only numeric (near-cutoff or
  // ill-conditioned) inconclusives.
  // Hypothesis-gated statements do not affect the exit code.
  int exit_code() const;
  double max_residual() const;
  json to_json() const;
};

struct CampaignResult {
  std::vector<TheoremReport> reports;  // (dim, trial) order, fixtures first
  CampaignSummary summary;
};

// OpenMP over trials; results merged in deterministic order.
CampaignResult run_campaign(const CampaignConfig& config);

// Single-threaded reference; produces the same result as run_campaign.
CampaignResult run_campaign_serial(const CampaignConfig& config);

// Line-delimited JSON: one record per report, then the summary object.
void write_report(std::ostream& out, const CampaignConfig& config, const CampaignResult& result);

}  // namespace projcalc::harness
