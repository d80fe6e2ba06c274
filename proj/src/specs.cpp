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

#include "permwit/specs.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "permwit/state_library.hpp"
#include "permwit/witness_library.hpp"

namespace permwit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer for " + what + ": " + s);
  }
}

std::vector<mpq_class> parse_rationals(const std::string& s) {
  std::vector<mpq_class> out;
  for (const std::string& part : split(s, ',')) out.push_back(rational_from_string(part));
  return out;
}

}  // namespace

ReplicaState parse_state_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty state spec");
  if (spec[0] == '@') return load_state_file(spec.substr(1));

  auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto arg = [&](std::size_t i) -> const std::string& {
    if (i >= parts.size()) throw std::invalid_argument("missing argument in state spec " + spec);
    return parts[i];
  };

  if (name == "bell") return bell();
  if (name == "schmidt") return schmidt_state(parse_rationals(arg(1)));
  if (name == "ghz") {
    if (parts.size() == 1) return ghz(3, 2);
    auto args = split(arg(1), ',');
    int n = parse_int(args[0], "parties");
    int d = args.size() > 1 ? parse_int(args[1], "levels") : 2;
    return ghz(n, d);
  }
  if (name.size() > 3 && name.substr(0, 3) == "ghz") {
    int k = parse_int(name.substr(3), "parties");  // ghzK: K parties, K levels
    return ghz(k, k);
  }
  if (name == "w") return parts.size() == 1 ? w_qubit(3) : w_qubit(parse_int(arg(1), "parties"));
  if (name == "w3") return w3_threelevel();
  if (name == "aharonov")
    return parts.size() == 1 ? aharonov(3) : aharonov(parse_int(arg(1), "parties"));
  if (name == "aharonov_plus" || name == "chi3+" || name == "chi3plus") return aharonov_plus3();
  if (name.size() > 3 && name.substr(0, 3) == "chi")
    return aharonov(parse_int(name.substr(3), "parties"));
  if (name == "biseparable") {
    auto lambdas = parse_rationals(arg(1));
    int phi_dim = 3, phi_index = 1;
    if (parts.size() > 2) {
      auto args = split(arg(2), ',');
      phi_dim = parse_int(args[0], "phi_dim");
      if (args.size() > 1) phi_index = parse_int(args[1], "phi_index");
    }
    return biseparable(lambdas, phi_dim, phi_index);
  }
  throw std::invalid_argument("unknown state spec: " + spec);
}

Witness parse_witness_spec(const std::string& spec, OverlapPolicy policy) {
  if (spec.empty()) throw std::invalid_argument("empty witness spec");
  if (spec[0] == '@') return load_witness_file(spec.substr(1), policy);

  auto parts = split(spec, ':');
  const std::string& name = parts[0];
  auto int_arg = [&](std::size_t i, const char* what) {
    if (i >= parts.size())
      throw std::invalid_argument(std::string("witness spec needs ") + what + ": " + spec);
    return parse_int(parts[i], what);
  };

  if (name == "pminus") return pminus_witness();
  if (name == "antisym") return antisym_witness(int_arg(1, "arity"));
  if (name == "sym") return sym_witness(int_arg(1, "arity"));
  if (name == "schmidt_rank") return schmidt_rank_witness(int_arg(1, "rank"));
  if (name == "a_tau") return a_tau(parts.size() > 1 ? int_arg(1, "parties") : 3);
  if (name == "a_3tau") return a_3tau();
  if (name == "aas") return aas();
  if (name == "p_n") return p_n(int_arg(1, "parties"));
  throw std::invalid_argument("unknown witness spec: " + spec);
}

}  // namespace permwit
