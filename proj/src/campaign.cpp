#include "projcalc/harness/campaign.hpp"

#include <algorithm>
#include <ostream>

#include "projcalc/statements.hpp"

namespace projcalc::harness {

namespace {

struct Job {
  std::size_t dim = 0;
  bool is_fixture = false;
  Fixture fixture = Fixture::p_zero;
  std::size_t trial = 0;
};

std::vector<Job> plan(const CampaignConfig& c) {
  std::vector<Job> jobs;
  for (const std::size_t n : c.dims) {
    if (c.inject_fixtures) {
      for (const Fixture f : kFixtures) jobs.push_back({n, true, f, 0});
    }
    for (std::size_t t = 0; t < c.trials_per_dim; ++t) jobs.push_back({n, false, Fixture::p_zero, t});
  }
  return jobs;
}

std::string seed_path(const CampaignConfig& c, const Job& job) {
  std::string s = "seed=" + std::to_string(c.seed) + ";dim=" + std::to_string(job.dim);
  if (job.is_fixture) return s + ";fixture=" + std::string(to_string(job.fixture));
  return s + ";trial=" + std::to_string(job.trial);
}

template <StarRingBackend B>
std::vector<TheoremReport> run_job(const CampaignConfig& c, const Job& job) {
  const StarRing<B> ring(job.dim, c.tolerance);
  const std::uint64_t trial_coord =
      job.is_fixture ? kFixtureTrialBase + static_cast<std::uint64_t>(job.fixture) : job.trial;
  const std::uint64_t seed = child_seed(c.seed, job.dim, trial_coord);
  const std::string path = seed_path(c, job);
  std::vector<TheoremReport> out;
  out.reserve(c.theorems.size());
  try {
    const ProjectionPair<B> pair =
        job.is_fixture ? fixture_pair(ring, job.fixture, seed) : random_pair(ring, c.ranks, seed);
    const std::string print = fingerprint(pair_to_json(pair.p(), pair.q()));
    const PairAnalysis<B> an(pair);
    for (const auto& id : c.theorems) {
      TheoremReport r = verify(id, an);
      r.pair_fingerprint = print;
      r.seed_path = path;
      out.push_back(std::move(r));
    }
  } catch (const Error& e) {
    out.clear();
    for (const auto& id : c.theorems) {
      TheoremReport r;
      r.statement_id = id;
      r.verdict = Verdict::fail;
      r.note = std::string("error: ") + e.what();
      r.seed_path = path;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<TheoremReport> dispatch(const CampaignConfig& c, const Job& job) {
  if (c.backend == BackendKind::exact) return run_job<ExactBackend>(c, job);
  return run_job<FloatBackend>(c, job);
}

CampaignSummary summarize(const std::vector<TheoremReport>& reports) {
  CampaignSummary s;
  for (const auto& r : reports) {
    ++s.total;
    StatementStats& st = s.statements[r.statement_id];
    st.max_residual = std::max(st.max_residual, r.max_residual());
    switch (r.verdict) {
      case Verdict::pass:
        ++s.pass;
        ++st.pass;
        break;
      case Verdict::fail:
        ++s.fail;
        ++st.fail;
        s.failures.push_back(r.statement_id + " @ " + r.seed_path);
        break;
      case Verdict::inconclusive:
        ++st.inconclusive;
        if (r.hypothesis_gated()) {
          ++s.inconclusive_hypothesis;
        } else {
          ++s.inconclusive_numeric;
          s.inconclusive.push_back(r.statement_id + " @ " + r.seed_path + " (" + r.note + ")");
        }
        break;
    }
  }
  return s;
}

CampaignResult assemble(std::vector<std::vector<TheoremReport>> per_job) {
  CampaignResult result;
  for (auto& batch : per_job) {
    for (auto& r : batch) result.reports.push_back(std::move(r));
  }
  result.summary = summarize(result.reports);
  return result;
}

}  // namespace

void CampaignConfig::validate() const {
  if (dims.empty()) throw Error("campaign dims must be nonempty");
  for (const auto n : dims) {
    if (n == 0) throw Error("campaign dims must be >= 1");
  }
  if (trials_per_dim < 1) throw Error("trials_per_dim must be >= 1");
  if (!tolerance.valid()) throw Error("tolerance fields must be strictly positive");
  if (theorems.empty()) throw Error("campaign needs at least one statement");
  for (const auto& id : theorems) {
    if (!is_known_statement(id)) throw UnknownStatement("unknown statement id '" + id + "'");
  }
}

CampaignConfig CampaignConfig::from_json(const json& j) {
  CampaignConfig c;
  if (j.contains("schema") && j.at("schema") != kSchema) throw ParseError("unsupported config schema");
  c.backend = parse_backend(j.value("backend", std::string("exact")));
  c.dims = j.at("dims").get<std::vector<std::size_t>>();
  const std::string ranks = j.value("ranks", std::string("uniform"));
  if (ranks == "uniform") {
    c.ranks = RankRule::uniform;
  } else if (ranks == "interior") {
    c.ranks = RankRule::interior;
  } else {
    throw ParseError("unknown rank rule '" + ranks + "'");
  }
  c.trials_per_dim = j.value("trials_per_dim", std::size_t{1});
  c.seed = j.value("seed", std::uint64_t{0});
  c.inject_fixtures = j.value("inject_fixtures", true);
  if (j.contains("tolerance")) {
    const json& t = j.at("tolerance");
    c.tolerance.rank_cutoff_factor = t.value("rank_cutoff_factor", c.tolerance.rank_cutoff_factor);
    c.tolerance.equality_rel_tol = t.value("equality_rel_tol", c.tolerance.equality_rel_tol);
    c.tolerance.equality_abs_tol = t.value("equality_abs_tol", c.tolerance.equality_abs_tol);
    c.tolerance.rank_abs_floor = t.value("rank_abs_floor", c.tolerance.rank_abs_floor);
    c.tolerance.ambiguity_band = t.value("ambiguity_band", c.tolerance.ambiguity_band);
  }
  if (!j.contains("theorems") || j.at("theorems") == "all") {
    c.theorems = all_statement_ids();
  } else {
    c.theorems = j.at("theorems").get<std::vector<std::string>>();
  }
  c.validate();
  return c;
}

json CampaignConfig::to_json() const {
  return json{{"schema", kSchema},
              {"backend", to_string(backend)},
              {"dims", dims},
              {"ranks", to_string(ranks)},
              {"trials_per_dim", trials_per_dim},
              {"seed", seed},
              {"inject_fixtures", inject_fixtures},
              {"tolerance",
               {{"rank_cutoff_factor", tolerance.rank_cutoff_factor},
                {"equality_rel_tol", tolerance.equality_rel_tol},
                {"equality_abs_tol", tolerance.equality_abs_tol},
                {"rank_abs_floor", tolerance.rank_abs_floor},
                {"ambiguity_band", tolerance.ambiguity_band}}},
              {"theorems", theorems}};
}

int CampaignSummary::exit_code() const {
  if (fail > 0) return 1;
  if (inconclusive_numeric > 0) return 2;
  return 0;
}

double CampaignSummary::max_residual() const {
  double m = 0.0;
  for (const auto& [id, st] : statements) m = std::max(m, st.max_residual);
  return m;
}

json CampaignSummary::to_json() const {
  json per = json::object();
  for (const auto& [id, st] : statements) {
    per[id] = {{"pass", st.pass}, {"fail", st.fail}, {"inconclusive", st.inconclusive},
               {"max_residual", st.max_residual}};
  }
  return json{{"schema", kSchema},
              {"kind", "summary"},
              {"total", total},
              {"pass", pass},
              {"fail", fail},
              {"inconclusive_hypothesis", inconclusive_hypothesis},
              {"inconclusive_numeric", inconclusive_numeric},
              {"max_residual", max_residual()},
              {"statements", per},
              {"failures", failures},
              {"inconclusive", inconclusive},
              {"exit_code", exit_code()}};
}

CampaignResult run_campaign_serial(const CampaignConfig& config) {
  config.validate();
  const std::vector<Job> jobs = plan(config);
  std::vector<std::vector<TheoremReport>> per_job;
  per_job.reserve(jobs.size());
  for (const Job& job : jobs) per_job.push_back(dispatch(config, job));
  return assemble(std::move(per_job));
}

CampaignResult run_campaign(const CampaignConfig& config) {
  config.validate();
  const std::vector<Job> jobs = plan(config);
  std::vector<std::vector<TheoremReport>> per_job(jobs.size());
  const auto count = static_cast<long long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < count; ++k) {
    per_job[static_cast<std::size_t>(k)] = dispatch(config, jobs[static_cast<std::size_t>(k)]);
  }
  return assemble(std::move(per_job));
}

void write_report(std::ostream& out, const CampaignConfig& config, const CampaignResult& result) {
  for (const auto& r : result.reports) out << harness::to_json(r).dump() << '\n';
  json summary = result.summary.to_json();
  summary["config"] = config.to_json();
  out << summary.dump() << '\n';
}

}  // namespace projcalc::harness
