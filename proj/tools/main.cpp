// Copyright 2026 The permwit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "permwit/classifier.hpp"
#include "permwit/json_io.hpp"
#include "permwit/specs.hpp"
#include "permwit/suite.hpp"

namespace {

using namespace permwit;

constexpr int kExitBadFlags = 2;
constexpr int kExitResourceCap = 3;

struct CommonFlags {
  std::string engine = "canonical";
  int threads = 1;
  std::uint64_t cap = 100000000;
  std::string format = "text";

  EvalOptions eval_options() const {
    EvalOptions o;
    o.threads = threads;
    o.term_cap = cap;
    return o;
  }
  Engine engine_choice() const {
    return engine == "reference" ? Engine::Reference : Engine::Auto;
  }
  OverlapPolicy overlap_policy() const {
    return engine == "reference" ? OverlapPolicy::ComposeGeneral : OverlapPolicy::Reject;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--engine", flags.engine, "evaluation engine")
      ->check(CLI::IsMember({"canonical", "reference"}));
  cmd->add_option("--threads", flags.threads, "worker count (canonical engine)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap", flags.cap, "surviving-term cap");
  cmd->add_option("--format", flags.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
}

std::string with_rank(const std::string& witness_spec, int rank) {
  if (rank > 0 && witness_spec.find(':') == std::string::npos &&
      witness_spec.find('@') == std::string::npos)
    return witness_spec + ":" + std::to_string(rank);
  return witness_spec;
}

std::string scalar_text(const Scalar& s) {
  return s.exact() ? s.exact_value().to_string() : s.to_string();
}

int run_evaluate(const std::string& witness_spec, const std::string& state_spec, int replicas,
                 const CommonFlags& flags) {
  Witness w = parse_witness_spec(witness_spec, flags.overlap_policy());
  ReplicaState psi = parse_state_spec(state_spec);
  int m = replicas > 0 ? replicas : w.replicas();
  EvalOutcome ev = evaluate(w, psi, m, flags.eval_options(), flags.engine_choice());

  if (flags.format == "json") {
    json j;
    j["witness"] = w.name();
    j["state"] = state_spec;
    j["m"] = m;
    j["engine"] = ev.engine;
    j["residual_norm_sq"] = scalar_to_json(ev.residual_norm_sq);
    j["zero"] = zero_class_name(ev.zero);
    j["exact"] = ev.exact;
    j["stats"] = stats_to_json(ev.stats);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "witness: " << w.name() << "\n"
              << "state: " << state_spec << "\n"
              << "m: " << m << "\n"
              << "engine: " << ev.engine << "\n"
              << "residual_norm_sq: " << scalar_text(ev.residual_norm_sq) << " ("
              << ev.residual_norm_sq.to_complex().real() << ")\n"
              << "zero: " << zero_class_name(ev.zero) << "\n"
              << "exact: " << (ev.exact ? "true" : "false") << "\n"
              << "stats: enumerated=" << ev.stats.enumerated << " pruned=" << ev.stats.pruned
              << " surviving=" << ev.stats.surviving << " blocks=" << ev.stats.blocks << "\n";
  }
  return 0;
}

int run_classify(const std::string& from_spec, const std::string& to_spec,
                 const std::string& witness_spec, int replicas, const CommonFlags& flags) {
  Witness w = parse_witness_spec(witness_spec, flags.overlap_policy());
  ReplicaState from = parse_state_spec(from_spec);
  ReplicaState to = parse_state_spec(to_spec);
  int m = replicas > 0 ? replicas : w.replicas();
  Verdict v = check_obstruction(from, to, w, m, flags.eval_options(), flags.engine_choice());

  if (flags.format == "json") {
    std::cout << verdict_to_json(v).dump(2) << "\n";
  } else {
    std::cout << "verdict: " << verdict_kind_name(v.kind) << "\n"
              << "witness: " << v.witness_name << "  m: " << v.m << "\n"
              << "residual(from " << from_spec
              << "): " << scalar_text(v.from_eval.residual_norm_sq) << " ["
              << zero_class_name(v.from_eval.zero) << "]\n"
              << "residual(to " << to_spec << "): " << scalar_text(v.to_eval.residual_norm_sq)
              << " [" << zero_class_name(v.to_eval.zero) << "]\n";
    std::cout << "ranks(from):";
    for (int r : v.from_ranks) std::cout << " " << r;
    std::cout << "\nranks(to):";
    for (int r : v.to_ranks) std::cout << " " << r;
    std::cout << "\nexact: " << (v.exact ? "true" : "false") << "\n";
    for (const std::string& a : v.annotations) std::cout << "note: " << a << "\n";
  }
  return v.kind == VerdictKind::Inconclusive ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-symmetry witnesses for multipartite entanglement classes"};
  app.require_subcommand(1);

  CommonFlags ev_flags, cl_flags, rp_flags;

  auto* ev = app.add_subcommand("evaluate", "apply a witness to replicas of a state");
  std::string ev_witness, ev_state;
  int ev_replicas = 0, ev_rank = 0;
  ev->add_option("--witness", ev_witness, "witness spec")->required();
  ev->add_option("--state", ev_state, "state spec")->required();
  ev->add_option("--replicas", ev_replicas, "replica count (defaults to the witness's)");
  ev->add_option("--rank", ev_rank, "rank argument for schmidt_rank/antisym/sym");
  add_common(ev, ev_flags);

  auto* cl = app.add_subcommand("classify", "decide an obstruction between two states");
  std::string cl_from, cl_to, cl_witness;
  int cl_replicas = 0, cl_rank = 0;
  cl->add_option("--from", cl_from, "source state spec")->required();
  cl->add_option("--to", cl_to, "target state spec")->required();
  cl->add_option("--witness", cl_witness, "witness spec")->required();
  cl->add_option("--replicas", cl_replicas, "replica count (defaults to the witness's)");
  cl->add_option("--rank", cl_rank, "rank argument for schmidt_rank/antisym/sym");
  add_common(cl, cl_flags);

  auto* rp = app.add_subcommand("reproduce", "run the full claims table");
  bool rp_n5 = false, rp_timings = false;
  rp->add_flag("--include-n5", rp_n5, "include the five-party five-level rows");
  rp->add_flag("--timings", rp_timings, "include per-row runtimes in the report");
  add_common(rp, rp_flags);

  auto* cm = app.add_subcommand("commute", "randomized local-operation commutation check");
  std::string cm_witness;
  int cm_trials = 20;
  unsigned cm_seed = 1;
  cm->add_option("--witness", cm_witness, "witness spec")->required();
  cm->add_option("--trials", cm_trials, "number of random trials")->check(CLI::PositiveNumber);
  cm->add_option("--seed", cm_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    if (ev->parsed())
      return run_evaluate(with_rank(ev_witness, ev_rank), ev_state, ev_replicas, ev_flags);
    if (cl->parsed())
      return run_classify(cl_from, cl_to, with_rank(cl_witness, cl_rank), cl_replicas, cl_flags);
    if (rp->parsed()) {
      SuiteOptions opts;
      opts.include_n5 = rp_n5;
      opts.eval = rp_flags.eval_options();
      SuiteReport report = reproduce_paper_suite(opts);
      if (rp_flags.format == "json") {
        std::cout << suite_report_to_json(report, rp_timings).dump(2) << "\n";
      } else {
        std::cout << format_suite_text(report, rp_timings);
      }
      return report.all_pass ? 0 : 1;
    }
    if (cm->parsed()) {
      Witness w = parse_witness_spec(cm_witness);
      bool ok = commutes_with_local_powers(w, cm_trials, cm_seed);
      std::cout << "witness: " << w.name() << "\ntrials: " << cm_trials
                << "\ncommutes: " << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }
  return 0;
}
