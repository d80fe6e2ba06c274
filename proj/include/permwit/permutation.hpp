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

#include <compare>
#include <span>
#include <vector>

namespace permwit {

/// Permutation of replica positions 0..m-1; images_[i] = pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  static Permutation transposition(int m, int a, int b);
  /// Embeds a permutation sigma of the positions of a sorted subset into a
  /// full permutation fixing the complement: slot subset[i] maps to
  /// subset[sigma[i]].
  static Permutation embed_subset(int m, std::span<const int> subset,
                                  std::span<const int> sigma);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// +1 for even, -1 for odd.
  int signature() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (a ∘ b)(x) = a(b(x)): acting with b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);

/// Parity of the permutation that sorts `values` ascending; values must be
/// pairwise distinct.
int sort_signature(std::span<const int> values);

}  // namespace permwit
