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

#include "permwit/state_library.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permwit/permutation.hpp"

namespace permwit {

namespace {

SystemShape single_copy_shape(std::vector<int> dims) {
  SystemShape sh;
  sh.subsystems = static_cast<int>(dims.size());
  sh.dims = std::move(dims);
  sh.replicas = 1;
  return sh;
}

void check_probabilities(const std::vector<mpq_class>& lambdas, bool allow_zero) {
  if (lambdas.empty()) throw std::invalid_argument("need at least one coefficient");
  mpq_class sum(0);
  for (const mpq_class& l : lambdas) {
    if (l < 0 || (!allow_zero && l == 0))
      throw std::invalid_argument("Schmidt coefficients must be positive rationals");
    sum += l;
  }
  if (sum != 1) throw std::invalid_argument("Schmidt coefficients must sum to one");
}

}  // namespace

ReplicaState schmidt_state(const std::vector<mpq_class>& lambdas) {
  check_probabilities(lambdas, false);
  const int d = static_cast<int>(lambdas.size());
  std::vector<Term> terms;
  for (int i = 0; i < d; ++i) {
    Label lab{static_cast<std::uint8_t>(i + 1), static_cast<std::uint8_t>(i + 1)};
    terms.push_back({std::move(lab), Scalar(ExactScalar::sqrt_rational(lambdas[i]))});
  }
  return ReplicaState(single_copy_shape({d, d}), std::move(terms));
}

ReplicaState ghz(int parties, int levels) {
  if (parties < 2 || levels < 2) throw std::invalid_argument("ghz needs n >= 2, d >= 2");
  std::vector<Term> terms;
  Scalar amp(ExactScalar::sqrt_rational(mpq_class(1, levels)));
  for (int i = 1; i <= levels; ++i)
    terms.push_back({Label(parties, static_cast<std::uint8_t>(i)), amp});
  return ReplicaState(single_copy_shape(std::vector<int>(parties, levels)), std::move(terms));
}

ReplicaState bell() { return ghz(2, 2); }

ReplicaState w_qubit(int parties) {
  if (parties < 3) throw std::invalid_argument("w needs at least three parties");
  std::vector<Term> terms;
  Scalar amp(ExactScalar::sqrt_rational(mpq_class(1, parties)));
  for (int i = 0; i < parties; ++i) {
    Label lab(parties, 1);
    lab[i] = 2;
    terms.push_back({std::move(lab), amp});
  }
  return ReplicaState(single_copy_shape(std::vector<int>(parties, 2)), std::move(terms));
}

ReplicaState w3_threelevel() {
  Scalar amp(ExactScalar::sqrt_rational(mpq_class(1, 6)));
  std::vector<Term> terms;
  for (Label lab : {Label{2, 1, 1}, Label{1, 2, 1}, Label{1, 1, 2},
                    Label{3, 2, 2}, Label{2, 3, 2}, Label{2, 2, 3}})
    terms.push_back({std::move(lab), amp});
  return ReplicaState(single_copy_shape({3, 3, 3}), std::move(terms));
}

ReplicaState aharonov(int parties) {
  if (parties < 3) throw std::invalid_argument("antisymmetric state needs n >= 3");
  mpz_class nfact = 1;
  for (int i = 2; i <= parties; ++i) nfact *= i;
  Scalar amp(ExactScalar::sqrt_rational(mpq_class(1) / mpq_class(nfact)));
  std::vector<Term> terms;
  std::vector<int> idx(parties);
  std::iota(idx.begin(), idx.end(), 1);
  do {
    Label lab(idx.begin(), idx.end());
    Scalar a = sort_signature(idx) < 0 ? -amp : amp;
    terms.push_back({std::move(lab), std::move(a)});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return ReplicaState(single_copy_shape(std::vector<int>(parties, parties)), std::move(terms));
}

ReplicaState aharonov_plus3() {
  Scalar amp(ExactScalar::sqrt_rational(mpq_class(1, 6)));
  std::vector<Term> terms;
  std::vector<int> idx{1, 2, 3};
  do {
    terms.push_back({Label(idx.begin(), idx.end()), amp});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return ReplicaState(single_copy_shape({3, 3, 3}), std::move(terms));
}

ReplicaState biseparable(const std::vector<mpq_class>& lambdas, int phi_dim, int phi_index) {
  check_probabilities(lambdas, true);
  if (phi_index < 1 || phi_index > phi_dim)
    throw std::invalid_argument("spectator index out of range");
  const int d = static_cast<int>(lambdas.size());
  std::vector<Term> terms;
  for (int i = 0; i < d; ++i) {
    if (lambdas[i] == 0) continue;
    Label lab{static_cast<std::uint8_t>(i + 1), static_cast<std::uint8_t>(i + 1),
              static_cast<std::uint8_t>(phi_index)};
    terms.push_back({std::move(lab), Scalar(ExactScalar::sqrt_rational(lambdas[i]))});
  }
  return ReplicaState(single_copy_shape({d, d, phi_dim}), std::move(terms));
}

}  // namespace permwit
