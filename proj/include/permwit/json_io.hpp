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

#include <json.hpp>

#include <string>

#include "permwit/canonical.hpp"
#include "permwit/classifier.hpp"
#include "permwit/state.hpp"
#include "permwit/witness.hpp"

namespace permwit {

using json = nlohmann::json;

/// Exact scalars serialize with their rational parts and a float companion:
/// {"num","den","imag_num","imag_den","root_num","root_den","approx","exact"}.
/// Inexact scalars carry {"approx","approx_imag","exact":false}.
json scalar_to_json(const Scalar& s);

/// Accepts the object form above, a bare integer (exact), a bare float
/// (approximate) or a rational string like "-3/4".
Scalar scalar_from_json(const json& j);

mpq_class rational_from_string(const std::string& text);

/// {"dims":[...], "terms":[{"ket":[...], "amp":...}], "normalize":bool} with
/// 1-based indices; an optional "replicas" field (default 1) extends the ket
/// to the subsystem-major grid layout.
json state_to_json(const ReplicaState& s);
ReplicaState state_from_json(const json& j);
ReplicaState load_state_file(const std::string& path);

enum class OverlapPolicy {
  Reject,          // factored files must have disjoint supports
  ComposeGeneral,  // overlapping factors become an operator product in general form
};

/// Factored: {"factors":[{"subsystem":1,"replicas":[...],"kind":...}]};
/// general: {"terms":[{"eta":...,"perms":[[...],...]}]}. "subsystems"/"m" are
/// optional and default to the maxima found in the body.
json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j, OverlapPolicy policy = OverlapPolicy::Reject);
Witness load_witness_file(const std::string& path, OverlapPolicy policy = OverlapPolicy::Reject);

json stats_to_json(const TermStats& st);
json verdict_to_json(const Verdict& v);

}  // namespace permwit
