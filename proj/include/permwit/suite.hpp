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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "permwit/canonical.hpp"
#include "permwit/classifier.hpp"
#include "permwit/json_io.hpp"

namespace permwit {

/// One claim of the reproduction table. Residual rows carry a witness and a
/// state spec; verdict rows encode the pair as "from>to"; operator-equality
/// rows compare two witness specs termwise.
struct SuiteRow {
  enum class Kind {
    ResidualZero,
    ResidualValue,
    ResidualNonZero,
    RankProfile,
    TangleValue,
    OperatorEquals,
    VerdictIs,
  };

  std::string id;
  Kind kind;
  std::string witness;  // witness spec (or left operand for OperatorEquals)
  std::string state;    // state spec / "from>to" / unused
  int m = 0;
  std::string expected;  // rational, rank profile "a,b,c", verdict name, witness spec
  std::vector<std::string> annotations;
  bool n5 = false;
};

struct RowOutcome {
  SuiteRow row;
  bool pass = false;
  std::string got;
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<RowOutcome> rows;
  bool all_pass = true;
};

struct SuiteOptions {
  bool include_n5 = false;
  EvalOptions eval;
  /// Test hook: replaces the named state specs before parsing.
  std::map<std::string, ReplicaState> state_overrides;
};

const std::vector<SuiteRow>& paper_suite_rows();

/// Runs every mandatory claim (plus the five-level rows when asked) and
/// cross-checks the stored expected values.
SuiteReport reproduce_paper_suite(const SuiteOptions& opts = {});

std::string format_suite_text(const SuiteReport& report, bool timings);
json suite_report_to_json(const SuiteReport& report, bool timings);

}  // namespace permwit
