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

#include "permwit/witness_library.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace permwit {

Factor p_minus(int subsystem, std::pair<int, int> replica_pair) {
  if (replica_pair.first == replica_pair.second)
    throw std::invalid_argument("pair projector needs two distinct replicas");
  return Factor{subsystem,
                {std::min(replica_pair.first, replica_pair.second),
                 std::max(replica_pair.first, replica_pair.second)},
                FactorKind::PMinus};
}

Factor antisymmetrizer(int subsystem, std::vector<int> replicas) {
  if (replicas.size() < 2) throw std::invalid_argument("antisymmetrizer needs >= 2 replicas");
  return Factor{subsystem, std::move(replicas), FactorKind::Antisym};
}

Factor symmetrizer(int subsystem, std::vector<int> replicas) {
  if (replicas.size() < 2) throw std::invalid_argument("symmetrizer needs >= 2 replicas");
  return Factor{subsystem, std::move(replicas), FactorKind::Sym};
}

Witness pminus_witness() {
  return Witness::factored("pminus", 2, 2, {p_minus(0, {0, 1})});
}

Witness a_tau(int total_parties) {
  if (total_parties < 3) throw std::invalid_argument("a_tau needs at least three parties");
  std::vector<Factor> fs{p_minus(0, {0, 1}), p_minus(0, {2, 3}),
                         p_minus(1, {0, 1}), p_minus(1, {2, 3}),
                         p_minus(2, {0, 2}), p_minus(2, {1, 3})};
  std::string name = total_parties == 3 ? "a_tau" : "a_tau:" + std::to_string(total_parties);
  return Witness::factored(std::move(name), total_parties, 4, std::move(fs));
}

Witness a_3tau() {
  std::vector<Factor> fs{antisymmetrizer(0, {0, 1, 2}), antisymmetrizer(0, {3, 4, 5}),
                         antisymmetrizer(1, {0, 1, 4}), antisymmetrizer(1, {2, 3, 5}),
                         antisymmetrizer(2, {0, 2, 3}), antisymmetrizer(2, {1, 4, 5})};
  return Witness::factored("a_3tau", 3, 6, std::move(fs));
}

Witness aas() {
  std::vector<Factor> fs{antisymmetrizer(0, {0, 1, 2}), antisymmetrizer(1, {0, 1, 2}),
                         symmetrizer(2, {0, 1, 2})};
  return Witness::factored("aas", 3, 3, std::move(fs));
}

Witness p_n(int n, bool chi_zero_context) {
  if (n < 3) throw std::invalid_argument("p_n needs at least three parties");
  if (chi_zero_context && n % 2 == 0)
    throw std::invalid_argument(
        "the antisymmetric-state vanishing theorem holds for odd party counts only; "
        "p_n with even n is available for exploratory use");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Factor> fs{antisymmetrizer(0, all), antisymmetrizer(1, all)};
  for (int s = 2; s < n; ++s) fs.push_back(symmetrizer(s, all));
  return Witness::factored("p_n:" + std::to_string(n), n, n, std::move(fs));
}

Witness schmidt_rank_witness(int k) {
  if (k < 2) throw std::invalid_argument("schmidt_rank needs k >= 2");
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  return Witness::factored("schmidt_rank:" + std::to_string(k), 2, k,
                           {antisymmetrizer(0, all)});
}

Witness antisym_witness(int k) {
  if (k < 2) throw std::invalid_argument("antisym needs k >= 2");
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  return Witness::factored("antisym:" + std::to_string(k), 1, k, {antisymmetrizer(0, all)});
}

Witness sym_witness(int k) {
  if (k < 2) throw std::invalid_argument("sym needs k >= 2");
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  return Witness::factored("sym:" + std::to_string(k), 1, k, {symmetrizer(0, all)});
}

}  // namespace permwit
