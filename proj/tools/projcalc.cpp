// projcalc command-line driver.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "projcalc/floating/mp.hpp"
#include "projcalc/exact/mp.hpp"
#include "projcalc/harness/campaign.hpp"
#include "projcalc/idempotents.hpp"
#include "projcalc/statements.hpp"

namespace {

using namespace projcalc;
using harness::json;

// Exit status for usage, input and I/O errors; 0/1/2 carry verdicts.
constexpr int kExitInputError = 3;

ToleranceConfig tolerance_from(const std::optional<double>& flag) {
  ToleranceConfig tol;
  const char* env = std::getenv("PROJCALC_TOL");
  if (!flag && env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      tol.equality_rel_tol = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("PROJCALC_TOL is not a number: '") + env + "'");
    }
  }
  if (flag) tol.equality_rel_tol = *flag;
  if (!tol.valid()) throw Error("tolerance must be strictly positive");
  return tol;
}

int verdict_exit(const TheoremReport& r) {
  if (r.failed()) return 1;
  if (r.verdict == Verdict::inconclusive && !r.hypothesis_gated()) return 2;
  return 0;
}

template <StarRingBackend B>
ProjectionPair<B> load_pair(const json& j, const ToleranceConfig& tol) {
  const auto p = harness::matrix_from_json_as<B>(j.at("p"));
  const auto q = harness::matrix_from_json_as<B>(j.at("q"));
  if (p.rows() != p.cols()) throw DimensionMismatch("pair elements must be square");
  StarRing<B> ring(static_cast<std::size_t>(p.rows()), tol);
  return ProjectionPair<B>::build(ring, p, q);
}

// Runs f<B>(pair) with B chosen by the file's backend field.
template <class F>
int with_pair(const std::string& path, const ToleranceConfig& tol, F&& f) {
  const json j = harness::read_json_file(path);
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) throw ParseError("pair file needs 'p' and 'q'");
  const BackendKind kp = harness::backend_of(j.at("p"));
  if (harness::backend_of(j.at("q")) != kp) throw ParseError("pair elements use different backends");
  if (kp == BackendKind::exact) return f(load_pair<ExactBackend>(j, tol));
  return f(load_pair<FloatBackend>(j, tol));
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump() << '\n';
  } else {
    harness::write_json_file(out, j);
  }
}

int cmd_gen(const std::string& backend, std::size_t dim, std::size_t rank_p, std::size_t rank_q, std::uint64_t seed,
            const std::string& out) {
  const BackendKind kind = harness::parse_backend(backend);
  if (dim == 0) throw DimensionMismatch("--dim must be >= 1");
  if (rank_p > dim || rank_q > dim) throw Error("requested rank exceeds --dim");
  harness::Rng rng(seed);
  json pair;
  if (kind == BackendKind::exact) {
    const ExactRing ring(dim);
    const auto p = harness::random_projection(ring, rank_p, rng);
    const auto q = harness::random_projection(ring, rank_q, rng);
    pair = harness::pair_to_json(p, q);
  } else {
    const FloatRing ring(dim);
    const auto p = harness::random_projection(ring, rank_p, rng);
    const auto q = harness::random_projection(ring, rank_q, rng);
    pair = harness::pair_to_json(p, q);
  }
  emit(pair, out);
  return 0;
}

int cmd_mp(const std::string& in, const std::optional<double>& tol_flag, const std::string& out) {
  const ToleranceConfig tol = tolerance_from(tol_flag);
  const json j = harness::read_json_file(in);
  json result{{"schema", harness::kSchema}, {"kind", "mp"}};
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, exact::ExactMatrix>) {
          const exact::ExactMatrix plus = exact::mp_exact(m);
          result["rank"] = exact::rank(m);
          result["near_cutoff"] = false;
          result["mp"] = harness::to_json(plus);
          const exact::ExactMatrix ab = m * plus;
          const exact::ExactMatrix ba = plus * m;
          const auto norm = [](const exact::ExactMatrix& x) { return std::sqrt(x.frobenius_norm2().get_d()); };
          result["penrose_residuals"] = {norm(ab * m - m), norm(ba * plus - plus), norm(ab.adjoint() - ab),
                                         norm(ba.adjoint() - ba)};
        } else {
          const auto r = floating::mp_float(m, tol);
          result["rank"] = r.rank;
          result["near_cutoff"] = r.near_cutoff;
          result["mp"] = harness::to_json(r.value);
          const floating::FloatMatrix ab = m * r.value;
          const floating::FloatMatrix ba = r.value * m;
          result["penrose_residuals"] = {(ab * m - m).norm(), (ba * r.value - r.value).norm(),
                                         (ab.adjoint() - ab).norm(), (ba.adjoint() - ba).norm()};
        }
      },
      harness::matrix_from_json(j));
  if (!out.empty()) {
    harness::write_json_file(out, result["mp"]);
  }
  std::cout << result.dump() << '\n';
  return result.value("near_cutoff", false) ? 2 : 0;
}

int cmd_verify(const std::string& id, const std::string& in, const std::optional<double>& tol_flag) {
  if (!is_known_statement(id)) throw UnknownStatement("unknown statement id '" + id + "'");
  const ToleranceConfig tol = tolerance_from(tol_flag);
  return with_pair(in, tol, [&](const auto& pair) {
    TheoremReport r = verify(id, pair);
    r.pair_fingerprint = harness::fingerprint(harness::pair_to_json(pair.p(), pair.q()));
    r.seed_path = "file=" + in;
    std::cout << harness::to_json(r).dump() << '\n';
    return verdict_exit(r);
  });
}

int cmd_subspace(const std::string& op, const std::string& in, const std::optional<double>& tol_flag, bool snap) {
  if (op != "join" && op != "meet" && op != "decomp") throw Error("--op must be join, meet or decomp");
  const ToleranceConfig tol = tolerance_from(tol_flag);
  return with_pair(in, tol, [&](const auto& pair) {
    using B = typename std::decay_t<decltype(pair)>::Backend;
    const PairAnalysis<B> an(pair);
    typename B::Matrix x;
    if (op == "join") {
      x = join_projection(an);
    } else if (op == "meet") {
      x = meet_projection(an);
    } else {
      x = orth_decomposition(an);
    }
    const RankInfo rk = pair.ring().rank(x);
    const bool near = an.near_cutoff || rk.near_cutoff;
    json result{{"schema", harness::kSchema}, {"kind", "subspace"}, {"op", op},
                {"rank", rk.rank},           {"near_cutoff", near},  {"is_projection", is_projection(pair.ring(), x)}};
    if constexpr (B::kind == BackendKind::floating) {
      // Diagnostic only: report the drift and the nearest projection.
      if (snap) {
        const auto snapped = floating::project_to_nearest_projection(x);
        result["drift"] = floating::distance(x, snapped);
        x = snapped;
      }
    }
    result["projection"] = harness::to_json(x);
    std::cout << result.dump() << '\n';
    return near ? 2 : 0;
  });
}

// Samples pairs in every (meet trivial, join full) cell and records how the
// three element equalities line up with their subspace conditions. Matrix
// rings are *-reducing, so the probe cannot separate the hypothesis from the
// conclusions; it records that no sample contradicts them.
template <StarRingBackend B>
json probe(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed, const ToleranceConfig& tol,
           int& exit_code) {
  using M = typename B::Matrix;
  json clauses = json::object();
  std::size_t pairs = 0, star_checks = 0, star_violations = 0;
  std::map<std::string, std::map<std::string, std::size_t>> tally;
  std::vector<std::string> counterexamples;
  for (const std::size_t n : dims) {
    const StarRing<B> ring(n, tol);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = harness::child_seed(seed, n, t);
      const bool use_cell = n >= 3 && t % 2 == 1;
      const auto pair = use_cell ? harness::random_pair_in_cell(ring, (t / 2) % 2 == 1, (t / 4) % 2 == 1, s)
                                 : harness::random_pair(ring, harness::RankRule::uniform, s);
      const PairAnalysis<B> an(pair);
      ++pairs;
      // x^* x = 0 forces x = 0 on the elements the proofs cancel against
      for (const M& x : {an.qbar_p, an.pbar_q, M(pair.p() - pair.q())}) {
        ++star_checks;
        if (ring.is_zero(M(ring.star(x) * x)) && !ring.is_zero(x)) ++star_violations;
      }
      for (int c = 1; c <= 3; ++c) {
        const TheoremReport r = check_inverse_equivalence(an, c);
        const std::string id = r.statement_id;
        bool cond = false;
        for (const auto& [name, v] : r.hypothesis_flags) {
          if (name != "elements_equal") cond = v;
        }
        const bool eq = r.hypothesis_flags.at("elements_equal");
        ++tally[id][std::string(eq ? "equal" : "unequal") + (cond ? "_condition" : "_no_condition")];
        if (r.failed()) counterexamples.push_back(id + " @ seed=" + std::to_string(seed) + ";dim=" + std::to_string(n) +
                                                  ";trial=" + std::to_string(t));
        if (r.verdict == Verdict::inconclusive) ++tally[id]["inconclusive"];
      }
    }
  }
  for (const auto& [id, counts] : tally) clauses[id] = counts;
  if (!counterexamples.empty() || star_violations > 0) {
    exit_code = 1;
  } else {
    for (const auto& [id, counts] : tally) {
      if (counts.count("inconclusive")) exit_code = 2;
    }
  }
  return json{{"schema", harness::kSchema},
              {"kind", "probe"},
              {"backend", to_string(B::kind)},
              {"pairs", pairs},
              {"clauses", clauses},
              {"counterexamples", counterexamples},
              {"star_reducing_checks", star_checks},
              {"star_reducing_violations", star_violations},
              {"note", "matrix rings are *-reducing; the samples test the equivalences, not the hypothesis"}};
}

int cmd_probe(const std::string& backend, const std::vector<std::size_t>& dims, std::size_t trials,
              std::uint64_t seed, const std::optional<double>& tol_flag) {
  const ToleranceConfig tol = tolerance_from(tol_flag);
  if (dims.empty()) throw Error("--dims must be nonempty");
  for (const auto n : dims) {
    if (n == 0) throw DimensionMismatch("--dims entries must be >= 1");
  }
  int code = 0;
  const json out = harness::parse_backend(backend) == BackendKind::exact
                       ? probe<ExactBackend>(dims, trials, seed, tol, code)
                       : probe<FloatBackend>(dims, trials, seed, tol, code);
  std::cout << out.dump() << '\n';
  return code;
}

int cmd_campaign(const std::string& config_path, const std::string& report_path, bool serial) {
  const auto config = harness::CampaignConfig::from_json(harness::read_json_file(config_path));
  const auto result = serial ? harness::run_campaign_serial(config) : harness::run_campaign(config);
  std::ofstream out(report_path, std::ios::binary);
  if (!out) throw Error("cannot open report file '" + report_path + "'");
  harness::write_report(out, config, result);
  out.close();
  if (!out) throw Error("failed writing report file '" + report_path + "'");
  const auto& s = result.summary;
  std::cerr << "total " << s.total << ", pass " << s.pass << ", fail " << s.fail << ", inconclusive "
            << s.inconclusive_hypothesis << " (hypothesis) + " << s.inconclusive_numeric << " (numeric)\n";
  for (const auto& f : s.failures) std::cerr << "FAIL " << f << '\n';
  return s.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projection-pair calculator over exact and floating matrix rings"};
  app.require_subcommand(1);

  std::string backend = "exact", out, in, statement, op, config, report;
  std::size_t dim = 0, rank_p = 0, rank_q = 0;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  bool serial = false, snap = false;
  std::vector<std::size_t> dims{2, 3, 4, 5};
  std::size_t trials = 20;

  auto* gen = app.add_subcommand("gen", "Generate a random projection pair");
  gen->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  gen->add_option("--dim", dim, "Matrix dimension")->required();
  gen->add_option("--rank-p", rank_p, "Rank of p")->required();
  gen->add_option("--rank-q", rank_q, "Rank of q")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--out", out, "Output pair file (stdout if omitted)");

  auto* mp = app.add_subcommand("mp", "Moore-Penrose inverse of a matrix file");
  mp->add_option("--in", in, "Matrix file")->required();
  mp->add_option("--tol", tol, "Relative equality tolerance");
  mp->add_option("--out", out, "Also write the inverse as a matrix file");

  auto* ver = app.add_subcommand("verify", "Check one statement on a pair");
  ver->add_option("--statement", statement, "Statement id, e.g. T3.4")->required();
  ver->add_option("--in", in, "Pair file")->required();
  ver->add_option("--tol", tol, "Relative equality tolerance");

  auto* camp = app.add_subcommand("campaign", "Run a seeded campaign");
  camp->add_option("--config", config, "Campaign config file")->required();
  camp->add_option("--report", report, "Report output (JSON lines)")->required();
  camp->add_flag("--serial", serial, "Use the single-threaded runner");

  auto* sub = app.add_subcommand("subspace", "Join, meet or orthogonal decomposition projection");
  sub->add_option("--op", op, "join, meet or decomp")->required()->check(CLI::IsMember({"join", "meet", "decomp"}));
  sub->add_option("--in", in, "Pair file")->required();
  sub->add_option("--tol", tol, "Relative equality tolerance");
  sub->add_flag("--snap", snap, "Float only: replace the result by the nearest projection and report the drift");

  auto* prb = app.add_subcommand("probe", "Sample pairs against the three element/subspace equivalences");
  prb->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  prb->add_option("--dims", dims, "Dimensions to sample")->delimiter(',');
  prb->add_option("--trials", trials, "Pairs per dimension");
  prb->add_option("--seed", seed, "Random seed");
  prb->add_option("--tol", tol, "Relative equality tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*gen) return cmd_gen(backend, dim, rank_p, rank_q, seed, out);
    if (*mp) return cmd_mp(in, tol, out);
    if (*ver) return cmd_verify(statement, in, tol);
    if (*camp) return cmd_campaign(config, report, serial);
    if (*sub) return cmd_subspace(op, in, tol, snap);
    if (*prb) return cmd_probe(backend, dims, trials, seed, tol);
  } catch (const std::exception& e) {
    std::cerr << "projcalc: error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
