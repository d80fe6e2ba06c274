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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "permwit/scalar.hpp"

namespace permwit {

/// N-partite system with per-subsystem local dimensions and M replicas.
struct SystemShape {
  int subsystems = 1;
  std::vector<int> dims;  // size == subsystems, each >= 1
  int replicas = 1;

  int slots() const { return subsystems * replicas; }
  void validate() const;
  bool operator==(const SystemShape&) const = default;
};

/// Basis label grid, flattened subsystem-major: entry (s, r) at index
/// s*replicas + r. Values are 1-based local indices, matching |1>, |2>, ...
/// The lexicographic order of the flat vector is the storage order of terms.
using Label = std::vector<std::uint8_t>;

inline int slot_index(const SystemShape& sh, int s, int r) { return s * sh.replicas + r; }

struct Term {
  Label label;
  Scalar amp;
};

/// Sparse state on a replica grid: sorted unique labels, no stored exact
/// zeros. Immutable after construction. The exactness flag is monotone: it
/// records whether any amplitude fed into this state (even one that was
/// pruned) had already left the exact path.
class ReplicaState {
 public:
  ReplicaState(SystemShape shape, std::vector<Term> terms);
  static ReplicaState empty(SystemShape shape) { return ReplicaState(std::move(shape), {}); }

  const SystemShape& shape() const { return shape_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool exact() const { return exact_; }
  bool is_empty() const { return terms_.empty(); }
  bool single_copy() const { return shape_.replicas == 1; }

  /// Amplitude for a label, or nullptr if absent.
  const Scalar* find(const Label& label) const;

 private:
  SystemShape shape_;
  std::vector<Term> terms_;
  bool exact_;
};

/// |psi>^{tensor m}; psi must be a single-copy state. Term count is
/// (single-copy count)^m; throws ResourceLimitError beyond term_cap.
ReplicaState tensor_power(const ReplicaState& psi, int m, std::uint64_t term_cap = 100000000);

/// <a|b>, conjugate-linear in a. Shapes must agree.
Scalar inner_product(const ReplicaState& a, const ReplicaState& b);

/// Sum of |amp|^2; exactly zero iff the state stores no terms (exact path).
Scalar norm_sq(const ReplicaState& a);

/// a + c*b with zero terms pruned. Shapes must agree.
ReplicaState add_scaled(const ReplicaState& a, const Scalar& c, const ReplicaState& b);

ReplicaState scale(const ReplicaState& a, const Scalar& c);

/// a / sqrt(norm_sq(a)); throws std::domain_error on the empty state.
ReplicaState normalized(const ReplicaState& a);

/// Local single-copy operator on one subsystem: entries [to][from], d x d.
using LocalMatrix = std::vector<std::vector<Scalar>>;

/// Applies F_1 x ... x F_N to every replica row, i.e. (F_1 x...x F_N)^{x M}.
ReplicaState apply_local_operators(const ReplicaState& a, const std::vector<LocalMatrix>& ops);

struct RankResult {
  int rank = 0;
  bool exact = true;
};

/// Rank of the reduced density matrix of one subsystem (0-based) of a
/// single-copy state, via Gaussian elimination of the Gram matrix of
/// conditional vectors. Exact whenever the eliminations stay inside the
/// scalar tower; otherwise recomputed in floating point and flagged.
RankResult reduced_density_rank(const ReplicaState& psi, int subsystem);

/// Rank of a general scalar matrix (used by reduced_density_rank and tests).
RankResult matrix_rank(std::vector<std::vector<Scalar>> m);

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permwit
