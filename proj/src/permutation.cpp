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

#include "permwit/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace permwit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int m, int a, int b) {
  Permutation p = identity(m);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::embed_subset(int m, std::span<const int> subset,
                                      std::span<const int> sigma) {
  Permutation p = identity(m);
  for (std::size_t i = 0; i < subset.size(); ++i) p.images_[subset[i]] = subset[sigma[i]];
  // re-validate through the public ctor
  return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

int Permutation::signature() const {
  std::vector<bool> seen(images_.size(), false);
  int sign = 1;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(a.size());
  for (int i = 0; i < a.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

int sort_signature(std::span<const int> values) {
  int sign = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) sign = -sign;
  return sign;
}

}  // namespace permwit
