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

#include "permwit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "permwit/specs.hpp"

namespace permwit {

namespace {

using Kind = SuiteRow::Kind;

std::vector<SuiteRow> build_rows() {
  std::vector<SuiteRow> rows;
  auto add = [&rows](SuiteRow r) { rows.push_back(std::move(r)); };

  add({"bipartite.product.zero", Kind::ResidualZero, "pminus", "schmidt:1", 2, "0", {}, false});
  add({"bipartite.bell.value", Kind::ResidualValue, "pminus", "bell", 2, "1/4", {}, false});

  add({"schmidt.rank2-on-product.zero", Kind::ResidualZero, "schmidt_rank:2", "schmidt:1", 2,
       "0", {}, false});
  add({"schmidt.rank3-on-rank2.zero", Kind::ResidualZero, "schmidt_rank:3", "schmidt:1/2,1/2",
       3, "0", {}, false});
  add({"schmidt.rank3-on-rank3.value", Kind::ResidualValue, "schmidt_rank:3",
       "schmidt:1/2,1/3,1/6", 3, "1/36",
       {"residual equals the product of the three Schmidt coefficients"}, false});
  add({"schmidt.rank4-on-rank3.zero", Kind::ResidualZero, "schmidt_rank:4",
       "schmidt:1/2,1/4,1/4", 4, "0", {}, false});
  add({"schmidt.rank4-on-rank4.value", Kind::ResidualValue, "schmidt_rank:4",
       "schmidt:1/4,1/4,1/4,1/4", 4, "1/256", {}, false});

  add({"qubit.a_tau.w.zero", Kind::ResidualZero, "a_tau", "w", 4, "0", {}, false});
  add({"qubit.a_tau.ghz.value", Kind::ResidualValue, "a_tau", "ghz", 4, "1/256",
       {"published prefactor 1/4 disagrees with its own per-term weight -1/8 entering twice "
        "at amplitude 1/4; exact evaluation merges both into amplitude -1/2, residual 1/256"},
       false});
  add({"qubit.tangle.ghz", Kind::TangleValue, "", "ghz", 4, "1", {}, false});
  add({"qubit.tangle.w", Kind::TangleValue, "", "w", 4, "0", {}, false});
  add({"qubit.a_tau4.ghz4.nonzero", Kind::ResidualNonZero, "a_tau:4", "ghz:4", 4, "nonzero",
       {}, false});
  add({"qubit.a_tau4.w4.zero", Kind::ResidualZero, "a_tau:4", "w:4", 4, "0", {}, false});
  add({"qubit.a_tau5.ghz5.nonzero", Kind::ResidualNonZero, "a_tau:5", "ghz:5", 4, "nonzero",
       {}, false});
  add({"qubit.a_tau5.w5.zero", Kind::ResidualZero, "a_tau:5", "w:5", 4, "0", {}, false});

  add({"threelevel.a_3tau.w3.zero", Kind::ResidualZero, "a_3tau", "w3", 6, "0", {}, false});
  add({"threelevel.a_3tau.ghz3.value", Kind::ResidualValue, "a_3tau", "ghz3", 6, "1/944784",
       {"published prefactor 1/(4*3^5) confirmed exactly"}, false});
  add({"threelevel.a_3tau.chi3.value", Kind::ResidualValue, "a_3tau", "chi3", 6, "1/419904",
       {"published prefactor 1/(2*6^3) is inconsistent with the three-replica "
        "antisymmetrizer normalization; exact evaluation gives 1/(3*6^3), residual 1/419904, "
        "confirmed by the expanded reference engine"},
       false});

  add({"threelevel.aas.ghz3.value", Kind::ResidualValue, "aas", "ghz3", 3, "1/162",
       {"published prefactor 1/(9*sqrt(2)) confirmed exactly"}, false});
  add({"threelevel.aas.chi3.zero", Kind::ResidualZero, "aas", "chi3", 3, "0",
       {"destructive interference of the paired antisymmetric-column terms"}, false});
  add({"threelevel.aas.chi3plus.value", Kind::ResidualValue, "aas", "chi3+", 3, "1/324",
       {"published prefactor 1/36 is inconsistent with the constructive-interference count "
        "(12 surviving terms of weight 6^(-3/2) merge to amplitude sqrt(6)/3); exact "
        "evaluation gives prefactor 1/18, residual 1/324, confirmed by the expanded "
        "reference engine"},
       false});
  add({"threelevel.aas.w3.value", Kind::ResidualValue, "aas", "w3", 3, "1/216",
       {"nonzero on both three-level states, so this operator separates neither"}, false});
  add({"threelevel.aas.biseparable.value", Kind::ResidualValue, "aas",
       "biseparable:1/3,1/3,1/3", 3, "1/27",
       {"closed form lambda1*lambda2*lambda3; the published "
        "(lambda1 lambda2 lambda3)^(3/2)/(6 sqrt 6) is inconsistent with the per-term "
        "sqrt(lambda) weights"},
       false});
  add({"threelevel.aas.biseparable-rank2.zero", Kind::ResidualZero, "aas",
       "biseparable:1/2,1/2,0", 3, "0", {}, false});

  add({"npartite.p3-equals-aas", Kind::OperatorEquals, "p_n:3", "", 3, "aas", {}, false});
  add({"npartite.p3.ghz3.value", Kind::ResidualValue, "p_n:3", "ghz3", 3, "1/162", {}, false});

  add({"rank.bell", Kind::RankProfile, "", "bell", 1, "2,2", {}, false});
  add({"rank.ghz", Kind::RankProfile, "", "ghz", 1, "2,2,2", {}, false});
  add({"rank.w", Kind::RankProfile, "", "w", 1, "2,2,2", {}, false});
  add({"rank.ghz3", Kind::RankProfile, "", "ghz3", 1, "3,3,3", {}, false});
  add({"rank.w3", Kind::RankProfile, "", "w3", 1, "3,3,3", {}, false});
  add({"rank.chi3", Kind::RankProfile, "", "chi3", 1, "3,3,3", {}, false});
  add({"rank.chi3plus", Kind::RankProfile, "", "chi3+", 1, "3,3,3", {}, false});
  add({"rank.biseparable", Kind::RankProfile, "", "biseparable:1/3,1/3,1/3", 1, "3,3,1", {},
       false});

  add({"classify.w-to-ghz", Kind::VerdictIs, "a_tau", "w>ghz", 4, "INEQUIVALENT", {}, false});
  add({"classify.w3-to-ghz3", Kind::VerdictIs, "a_3tau", "w3>ghz3", 6, "INEQUIVALENT", {},
       false});
  add({"classify.chi3-to-biseparable", Kind::VerdictIs, "aas",
       "chi3>biseparable:1/3,1/3,1/3", 3, "OBSTRUCTION",
       {"spectator subsystem breaks the rank profile, so no inequivalence upgrade"}, false});
  add({"classify.ghz3-to-w3.negative", Kind::VerdictIs, "aas", "ghz3>w3", 3, "INCONCLUSIVE",
       {"both residuals finite under this operator; the six-replica operator is the "
        "separating one"},
       false});

  add({"npartite.p5.chi5.zero", Kind::ResidualZero, "p_n:5", "aharonov:5", 5, "0", {}, true});
  add({"npartite.p5.ghz5.value", Kind::ResidualValue, "p_n:5", "ghz5", 5, "1/5400000000",
       {"exact general form N^(-N) (N!)^(-(N-2)) for the residual; the published closed form "
        "1/(sqrt(N) sqrt(N!)^(N-2)) disagrees already at N=3 with the three-party value it "
        "generalizes"},
       true});

  return rows;
}

std::string ranks_to_string(const std::vector<int>& ranks) {
  std::string out;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ranks[i]);
  }
  return out;
}

std::string norm_to_string(const Scalar& s) {
  if (s.exact()) return s.exact_value().to_string();
  std::ostringstream os;
  os << "~" << std::setprecision(17) << s.to_complex().real();
  return os.str();
}

// general-form term sets, compared modulo ordering
bool witnesses_equal(const Witness& a, const Witness& b) {
  if (a.subsystems() != b.subsystems() || a.replicas() != b.replicas()) return false;
  auto key = [](const GeneralTerm& t) {
    std::vector<int> k;
    for (const Permutation& p : t.perms)
      k.insert(k.end(), p.images().begin(), p.images().end());
    return k;
  };
  auto ta = a.expand_to_general();
  auto tb = b.expand_to_general();
  auto sorter = [&key](const GeneralTerm& x, const GeneralTerm& y) { return key(x) < key(y); };
  std::sort(ta.begin(), ta.end(), sorter);
  std::sort(tb.begin(), tb.end(), sorter);
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (key(ta[i]) != key(tb[i])) return false;
    if (!(ta[i].eta == tb[i].eta)) return false;
  }
  return true;
}

}  // namespace

const std::vector<SuiteRow>& paper_suite_rows() {
  static const std::vector<SuiteRow> rows = build_rows();
  return rows;
}

SuiteReport reproduce_paper_suite(const SuiteOptions& opts) {
  SuiteReport report;
  auto resolve_state = [&opts](const std::string& spec) -> ReplicaState {
    auto it = opts.state_overrides.find(spec);
    if (it != opts.state_overrides.end()) return it->second;
    return parse_state_spec(spec);
  };

  for (const SuiteRow& row : paper_suite_rows()) {
    if (row.n5 && !opts.include_n5) continue;
    RowOutcome out;
    out.row = row;
    auto start = std::chrono::steady_clock::now();
    try {
      switch (row.kind) {
        case Kind::ResidualZero:
        case Kind::ResidualValue:
        case Kind::ResidualNonZero: {
          Witness w = parse_witness_spec(row.witness);
          EvalOutcome ev = evaluate(w, resolve_state(row.state), row.m, opts.eval);
          out.got = norm_to_string(ev.residual_norm_sq);
          if (row.kind == Kind::ResidualZero) {
            out.pass = ev.zero == ZeroClass::Zero && ev.exact;
          } else if (row.kind == Kind::ResidualNonZero) {
            out.pass = ev.zero == ZeroClass::NonZero;
          } else {
            out.pass = ev.exact && ev.residual_norm_sq.exact_value().is_rational() &&
                       ev.residual_norm_sq.rational_value() ==
                           rational_from_string(row.expected);
          }
          break;
        }
        case Kind::RankProfile: {
          ReplicaState st = resolve_state(row.state);
          std::vector<int> ranks;
          bool exact = true;
          for (int s = 0; s < st.shape().subsystems; ++s) {
            RankResult r = reduced_density_rank(st, s);
            ranks.push_back(r.rank);
            exact = exact && r.exact;
          }
          out.got = ranks_to_string(ranks);
          out.pass = exact && out.got == row.expected;
          break;
        }
        case Kind::TangleValue: {
          TangleResult t = tangle(resolve_state(row.state), opts.eval);
          out.got = t.value.exact() ? t.value.exact_value().to_string() : t.value.to_string();
          out.pass = t.exact && t.value.exact() && t.value.exact_value().is_rational() &&
                     t.value.rational_value() == rational_from_string(row.expected);
          break;
        }
        case Kind::OperatorEquals: {
          Witness a = parse_witness_spec(row.witness);
          Witness b = parse_witness_spec(row.expected);
          bool eq = witnesses_equal(a, b);
          out.got = eq ? "equal term sets" : "term sets differ";
          out.pass = eq;
          break;
        }
        case Kind::VerdictIs: {
          auto sep = row.state.find('>');
          ReplicaState from = resolve_state(row.state.substr(0, sep));
          ReplicaState to = resolve_state(row.state.substr(sep + 1));
          Witness w = parse_witness_spec(row.witness);
          Verdict v = check_obstruction(from, to, w, row.m, opts.eval);
          out.got = verdict_kind_name(v.kind);
          out.pass = out.got == row.expected;
          break;
        }
      }
    } catch (const std::exception& e) {
      out.got = std::string("error: ") + e.what();
      out.pass = false;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.all_pass = report.all_pass && out.pass;
    report.rows.push_back(std::move(out));
  }
  return report;
}

std::string format_suite_text(const SuiteReport& report, bool timings) {
  std::size_t idw = 8, ww = 7, sw = 5;
  for (const RowOutcome& r : report.rows) {
    idw = std::max(idw, r.row.id.size());
    ww = std::max(ww, r.row.witness.size());
    sw = std::max(sw, r.row.state.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(idw) + 2) << "row"
     << std::setw(static_cast<int>(ww) + 2) << "witness" << std::setw(static_cast<int>(sw) + 2)
     << "state"
     << "m  " << std::setw(16) << "expected" << std::setw(16) << "got"
     << "status\n";
  for (const RowOutcome& r : report.rows) {
    os << std::left << std::setw(static_cast<int>(idw) + 2) << r.row.id
       << std::setw(static_cast<int>(ww) + 2) << r.row.witness
       << std::setw(static_cast<int>(sw) + 2) << r.row.state << r.row.m << "  " << std::setw(16)
       << r.row.expected << std::setw(16) << r.got << (r.pass ? "PASS" : "FAIL");
    if (timings) os << "  " << std::fixed << std::setprecision(3) << r.seconds * 1e3 << " ms";
    os << "\n";
    for (const std::string& a : r.row.annotations) os << "    note: " << a << "\n";
  }
  os << (report.all_pass ? "ALL ROWS PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

json suite_report_to_json(const SuiteReport& report, bool timings) {
  json rows = json::array();
  for (const RowOutcome& r : report.rows) {
    json jr;
    jr["id"] = r.row.id;
    jr["witness"] = r.row.witness;
    jr["state"] = r.row.state;
    jr["m"] = r.row.m;
    jr["expected"] = r.row.expected;
    jr["got"] = r.got;
    jr["pass"] = r.pass;
    jr["annotations"] = r.row.annotations;
    if (timings) jr["seconds"] = r.seconds;
    rows.push_back(std::move(jr));
  }
  json j;
  j["rows"] = std::move(rows);
  j["all_pass"] = report.all_pass;
  return j;
}

}  // namespace permwit
