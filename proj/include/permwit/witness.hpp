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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permwit/permutation.hpp"
#include "permwit/state.hpp"

namespace permwit {

enum class FactorKind { PMinus, Antisym, Sym };

std::string factor_kind_name(FactorKind k);

/// One (anti)symmetrizing projector on a subset of the replicas of a single
/// subsystem. PMinus is the two-replica antisymmetrizer kept under its own
/// name for display and wire formats.
struct Factor {
  int subsystem = 0;          // 0-based
  std::vector<int> replicas;  // 0-based, sorted, pairwise distinct, size >= 2
  FactorKind kind = FactorKind::Antisym;

  int arity() const { return static_cast<int>(replicas.size()); }
  bool antisymmetric() const { return kind != FactorKind::Sym; }
  bool operator==(const Factor&) const = default;
};

/// One term of the general operator form: a coefficient times a tensor
/// product of per-subsystem replica permutations.
struct GeneralTerm {
  Scalar eta;
  std::vector<Permutation> perms;  // one per subsystem
};

/// Weighted sum of per-subsystem replica permutations, held either in
/// factored projector form (pairwise disjoint supports) or in general form.
class Witness {
 public:
  static Witness factored(std::string name, int subsystems, int replicas,
                          std::vector<Factor> factors);
  static Witness general(std::string name, int subsystems, int replicas,
                         std::vector<GeneralTerm> terms);

  const std::string& name() const { return name_; }
  int subsystems() const { return subsystems_; }
  int replicas() const { return replicas_; }

  bool factored_form() const { return factors_.has_value(); }
  const std::vector<Factor>& factors() const;
  const std::vector<GeneralTerm>& general_terms() const;

  /// Expands either form into the explicit permutation-tuple sum.
  std::vector<GeneralTerm> expand_to_general() const;

 private:
  std::string name_;
  int subsystems_ = 0;
  int replicas_ = 0;
  std::optional<std::vector<Factor>> factors_;
  std::optional<std::vector<GeneralTerm>> terms_;
};

/// Permutes the replica column of one subsystem: the new row r carries the
/// old row pi^{-1}(r); amplitudes are untouched.
ReplicaState apply_permutation(const ReplicaState& state, int subsystem,
                               const Permutation& perm);

/// (coefficient, embedded full-replica permutation) expansion of one factor.
std::vector<std::pair<Scalar, Permutation>> expand_factor(const Factor& f, int replicas);

/// Fully expanded linear action of the witness; the reference engine.
ReplicaState apply_witness_reference(const Witness& op, const ReplicaState& state);

/// General-form product: apply b first, then a. Like terms merged.
Witness compose(const Witness& a, const Witness& b);

/// Randomized exact check that the operator commutes with M-fold products of
/// local single-copy operators. Returns true iff all trials pass exactly.
bool commutes_with_local_powers(const Witness& op, int trials, unsigned seed);

/// Core of the check with an injectable applier, so corrupted operators that
/// are not expressible as permutation sums can be exercised by tests.
using StateApplier = std::function<ReplicaState(const ReplicaState&)>;
bool commutes_with_local_powers_core(const StateApplier& apply_op, int subsystems,
                                     int replicas, const std::vector<int>& dims, int trials,
                                     unsigned seed);

/// Random invertible local operator with rational entries: nonzero diagonal
/// plus at most `extra_nnz` strictly-upper entries per column.
LocalMatrix random_invertible_local(int dim, int extra_nnz, class RandomSource& rng);

/// Small deterministic rational RNG shared by the property checks.
class RandomSource {
 public:
  explicit RandomSource(unsigned seed) : state_(seed * 2654435761u + 1013904223u) {}
  std::uint64_t next();
  int uniform(int lo, int hi);  // inclusive
  mpq_class small_rational(bool allow_zero = false);

 private:
  std::uint64_t state_;
};

}  // namespace permwit
