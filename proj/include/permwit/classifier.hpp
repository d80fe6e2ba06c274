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

#include <string>
#include <vector>

#include "permwit/canonical.hpp"
#include "permwit/state.hpp"
#include "permwit/witness.hpp"

namespace permwit {

enum class Engine { Auto, Canonical, Reference };

struct EvalOutcome {
  Scalar residual_norm_sq;
  ZeroClass zero = ZeroClass::Zero;
  bool exact = true;
  TermStats stats;
  std::string engine;  // "canonical" or "reference"
};

/// Residual of the witness criterion on m replicas of a single-copy state.
/// Factored witnesses run on the canonical engine unless overridden; general
/// ones always take the reference path.
EvalOutcome evaluate(const Witness& op, const ReplicaState& psi, int m,
                     const EvalOptions& opts = {}, Engine engine = Engine::Auto);

enum class VerdictKind { Obstruction, Inequivalent, Inconclusive };

std::string verdict_kind_name(VerdictKind k);

/// Outcome of the one-way criterion: Obstruction means `to` is not reachable
/// from `from` by local operations; Inequivalent adds the rank-sufficiency
/// upgrade (all single-subsystem reduced ranks agree). Everything else —
/// both residuals zero, both nonzero, reversed pattern, ambiguous floats —
/// is Inconclusive.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string witness_name;
  int m = 0;
  EvalOutcome from_eval, to_eval;
  std::vector<int> from_ranks, to_ranks;
  bool exact = true;
  std::vector<std::string> annotations;
};

Verdict check_obstruction(const ReplicaState& from, const ReplicaState& to, const Witness& op,
                          int m, const EvalOptions& opts = {}, Engine engine = Engine::Auto);

/// Three-qubit tangle via the four-replica pair-projector operator. Exact
/// states give an exact value; float states carry an interval derived from
/// the norm guard band.
struct TangleResult {
  Scalar value;
  bool exact = true;
  double low = 0.0, high = 0.0;
};

TangleResult tangle(const ReplicaState& psi, const EvalOptions& opts = {});

}  // namespace permwit
