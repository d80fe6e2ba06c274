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

#include <utility>
#include <vector>

#include "permwit/witness.hpp"

namespace permwit {

// factor builders (0-based subsystem/replica indices)
Factor p_minus(int subsystem, std::pair<int, int> replica_pair);
Factor antisymmetrizer(int subsystem, std::vector<int> replicas);
Factor symmetrizer(int subsystem, std::vector<int> replicas);

/// Single antisymmetric-pair projector on subsystem 1 of a bipartite system,
/// two replicas.
Witness pminus_witness();

/// The three-qubit tangle operator on four replicas: pair projectors (1,2)
/// and (3,4) on the first two subsystems, (1,3) and (2,4) on the third,
/// identity on subsystems beyond the third. Requires n >= 3.
Witness a_tau(int total_parties);

/// Six three-replica antisymmetrizers on six replicas of three subsystems,
/// with triples (123)(456) / (125)(346) / (134)(256).
Witness a_3tau();

/// Antisym x antisym x sym on three replicas of three subsystems.
Witness aas();

/// Antisym on subsystems 1 and 2, sym on subsystems 3..n, all over n
/// replicas. The vanishing theorem for the completely antisymmetric state is
/// only claimed for odd n; pass chi_zero_context to enforce that.
Witness p_n(int n, bool chi_zero_context = false);

/// Full antisymmetrizer over k replicas on the first subsystem of a
/// bipartite system, identity on the second; k >= 2.
Witness schmidt_rank_witness(int k);

/// Antisymmetrizer (or symmetrizer) over all k replicas of a single
/// subsystem; the one-party building block exposed on the command line.
Witness antisym_witness(int k);
Witness sym_witness(int k);

}  // namespace permwit
