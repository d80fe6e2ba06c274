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
#include <vector>

#include "permwit/state.hpp"
#include "permwit/witness.hpp"

namespace permwit {

struct TermStats {
  std::uint64_t enumerated = 0;  // completed grid terms reaching canonicalization
  std::uint64_t pruned = 0;      // partial terms abandoned early
  std::uint64_t surviving = 0;   // merged nonzero block terms
  std::uint64_t blocks = 0;      // projected segments per term (factor count)
};

/// One canonicalized term: the grid label with every projected segment
/// replaced by its sorted content; the amplitude absorbs the antisymmetric
/// sorting signs. A term represents amp times the tensor product of the
/// projector images of its segments, untouched entries verbatim.
struct BlockTerm {
  Label label;
  Scalar amp;
};

/// Canonicalized, merged, zero-pruned result of a factored projector witness.
/// Distinct terms are pairwise orthogonal, which makes the squared norm a
/// weighted sum over terms.
class BlockState {
 public:
  BlockState(SystemShape shape, std::vector<Factor> layout, std::vector<BlockTerm> terms,
             bool exact);

  const SystemShape& shape() const { return shape_; }
  const std::vector<Factor>& layout() const { return layout_; }
  const std::vector<BlockTerm>& terms() const { return terms_; }
  bool exact() const { return exact_; }
  bool is_empty() const { return terms_.empty(); }

 private:
  SystemShape shape_;
  std::vector<Factor> layout_;
  std::vector<BlockTerm> terms_;
  bool exact_;
};

/// Canonicalizes an already-expanded replica state under a factored witness.
BlockState canonicalize(const ReplicaState& state, const Witness& op);

/// Exact squared norm of the represented state: sum over terms of
/// |amp|^2 * prod_f w_f, with w = 1/k! for an antisymmetric segment and
/// w = (prod multiplicity!)/k! for a symmetric one.
Scalar block_norm_sq(const BlockState& bs);

/// Expands the block representation back into a plain replica state.
/// Term count multiplies by up to k! per factor; intended for small inputs.
ReplicaState expand_blocks(const BlockState& bs);

struct EvalOptions {
  std::uint64_t term_cap = 100000000;  // cap on merged surviving terms
  int threads = 1;
  bool prune = true;
};

struct FastResult {
  Scalar norm_sq;
  TermStats stats;
  BlockState blocks;
};

/// Builds |psi>^{x m} lazily, replica by replica in stored term order,
/// abandoning a partial grid as soon as an antisymmetric segment repeats an
/// entry, then canonicalizes and merges. Equals the reference engine exactly.
FastResult evaluate_fast(const Witness& op, const ReplicaState& psi, int m,
                         const EvalOptions& opts = {});

}  // namespace permwit
