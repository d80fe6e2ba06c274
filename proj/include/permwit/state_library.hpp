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

#include <vector>

#include "permwit/state.hpp"

namespace permwit {

/// Bipartite state sum_i sqrt(lambda_i)|ii> with d = len(lambda).
/// Requires sum lambda = 1, every lambda > 0.
ReplicaState schmidt_state(const std::vector<mpq_class>& lambdas);

/// (1/sqrt(d)) sum_{i=1..d} |i>^{x n}; n >= 2, d >= 2.
ReplicaState ghz(int parties, int levels);

ReplicaState bell();

/// Uniform superposition of the n single-excitation product vectors; n >= 3.
ReplicaState w_qubit(int parties);

/// The six-term three-level W state on three qutrits.
ReplicaState w3_threelevel();

/// Completely antisymmetric n-party n-level state, amplitudes
/// sgn(i_1...i_n)/sqrt(n!); n >= 3 (even n permitted for exploration).
ReplicaState aharonov(int parties);

/// The all-plus six-term companion of the three-party antisymmetric state.
ReplicaState aharonov_plus3();

/// sum_i sqrt(lambda_i)|i i phi> with |phi> = |k> in a phi_dim-level third
/// subsystem. Requires sum lambda = 1, lambda >= 0, 1 <= k <= phi_dim.
ReplicaState biseparable(const std::vector<mpq_class>& lambdas, int phi_dim, int phi_index);

}  // namespace permwit
