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

#include "permwit/json_io.hpp"
#include "permwit/state.hpp"
#include "permwit/witness.hpp"

namespace permwit {

/// Named-state spec strings used by the command line and the reproduction
/// suite:
///   bell | schmidt:l1,l2,... | ghz[:n[,d]] | ghz<K> (K-party K-level) |
///   w[:n] | w3 (the three-level state) | aharonov[:n] | chi<K> |
///   aharonov_plus | chi3+ | biseparable:l1,l2,l3[:phi_dim[,phi_index]] |
///   @file.json
ReplicaState parse_state_spec(const std::string& spec);

/// Witness spec strings:
///   pminus | antisym:k | sym:k | schmidt_rank:k | a_tau[:n] | a_3tau |
///   aas | p_n:n | @file.json
Witness parse_witness_spec(const std::string& spec,
                           OverlapPolicy policy = OverlapPolicy::Reject);

}  // namespace permwit
