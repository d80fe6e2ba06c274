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

#include "permwit/state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace permwit {

void SystemShape::validate() const {
  if (subsystems < 1) throw std::invalid_argument("need at least one subsystem");
  if (replicas < 1) throw std::invalid_argument("need at least one replica");
  if (static_cast<int>(dims.size()) != subsystems)
    throw std::invalid_argument("dims size does not match subsystem count");
  for (int d : dims) {
    if (d < 1 || d > 200) throw std::invalid_argument("local dimension out of range 1..200");
  }
}

ReplicaState::ReplicaState(SystemShape shape, std::vector<Term> terms)
    : shape_(std::move(shape)) {
  shape_.validate();
  exact_ = true;
  for (const Term& t : terms) {
    if (static_cast<int>(t.label.size()) != shape_.slots())
      throw std::invalid_argument("label size does not match shape");
    for (int s = 0; s < shape_.subsystems; ++s) {
      for (int r = 0; r < shape_.replicas; ++r) {
        int v = t.label[slot_index(shape_, s, r)];
        if (v < 1 || v > shape_.dims[s])
          throw std::invalid_argument("basis index out of range for its subsystem");
      }
    }
    if (!t.amp.exact()) exact_ = false;
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.label < b.label; });
  terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().label == t.label) {
      terms_.back().amp += t.amp;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.amp.is_zero(); });
  for (const Term& t : terms_) {
    if (!t.amp.exact()) exact_ = false;  // degraded during merging
  }
}

const Scalar* ReplicaState::find(const Label& label) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), label,
                             [](const Term& t, const Label& l) { return t.label < l; });
  if (it == terms_.end() || it->label != label) return nullptr;
  return &it->amp;
}

ReplicaState tensor_power(const ReplicaState& psi, int m, std::uint64_t term_cap) {
  if (!psi.single_copy()) throw std::invalid_argument("tensor_power needs a single-copy state");
  if (m < 1) throw std::invalid_argument("replica count must be positive");
  SystemShape out_shape = psi.shape();
  out_shape.replicas = m;
  const auto& in = psi.terms();
  if (in.empty()) return ReplicaState::empty(out_shape);

  double est = std::pow(static_cast<double>(in.size()), m);
  if (est > static_cast<double>(term_cap))
    throw ResourceLimitError("tensor power would exceed the term cap");

  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(est));
  std::vector<std::size_t> pick(m, 0);
  const int n = psi.shape().subsystems;
  for (;;) {
    Term t;
    t.label.assign(out_shape.slots(), 0);
    t.amp = Scalar::integer(1);
    for (int r = 0; r < m; ++r) {
      const Term& row = in[pick[r]];
      t.amp = t.amp * row.amp;
      for (int s = 0; s < n; ++s) t.label[slot_index(out_shape, s, r)] = row.label[s];
    }
    out.push_back(std::move(t));
    int r = m - 1;
    while (r >= 0 && ++pick[r] == in.size()) pick[r--] = 0;
    if (r < 0) break;
  }
  return ReplicaState(std::move(out_shape), std::move(out));
}

Scalar inner_product(const ReplicaState& a, const ReplicaState& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("shape mismatch in inner product");
  Scalar acc;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->label < ib->label) {
      ++ia;
    } else if (ib->label < ia->label) {
      ++ib;
    } else {
      acc += ia->amp.conj() * ib->amp;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

Scalar norm_sq(const ReplicaState& a) {
  Scalar acc;
  for (const Term& t : a.terms()) acc += t.amp.abs_sq();
  return acc;
}

ReplicaState add_scaled(const ReplicaState& a, const Scalar& c, const ReplicaState& b) {
  if (!(a.shape() == b.shape())) throw std::invalid_argument("shape mismatch in add_scaled");
  std::vector<Term> merged = a.terms();
  merged.reserve(merged.size() + b.terms().size());
  for (const Term& t : b.terms()) merged.push_back({t.label, c * t.amp});
  return ReplicaState(a.shape(), std::move(merged));
}

ReplicaState scale(const ReplicaState& a, const Scalar& c) {
  std::vector<Term> terms = a.terms();
  for (Term& t : terms) t.amp = t.amp * c;
  return ReplicaState(a.shape(), std::move(terms));
}

ReplicaState normalized(const ReplicaState& a) {
  Scalar n2 = norm_sq(a);
  if (n2.is_zero()) throw std::domain_error("cannot normalize the empty state");
  Scalar factor;
  if (n2.exact()) {
    factor = Scalar(ExactScalar::sqrt_rational(mpq_class(1) / n2.rational_value()));
  } else {
    factor = Scalar::approx(1.0 / std::sqrt(n2.to_complex().real()));
  }
  return scale(a, factor);
}

ReplicaState apply_local_operators(const ReplicaState& a, const std::vector<LocalMatrix>& ops) {
  const SystemShape& sh = a.shape();
  if (static_cast<int>(ops.size()) != sh.subsystems)
    throw std::invalid_argument("one local operator per subsystem required");
  for (int s = 0; s < sh.subsystems; ++s) {
    if (static_cast<int>(ops[s].size()) != sh.dims[s])
      throw std::invalid_argument("local operator dimension mismatch");
  }
  std::vector<Term> out;
  // depth-first over slots; branches on the nonzero column entries of each F
  struct Frame {
    Label label;
    Scalar amp;
  };
  for (const Term& t : a.terms()) {
    std::vector<Frame> frontier{{Label(sh.slots(), 0), t.amp}};
    for (int s = 0; s < sh.subsystems; ++s) {
      for (int r = 0; r < sh.replicas; ++r) {
        int idx = slot_index(sh, s, r);
        int from = t.label[idx];
        std::vector<Frame> next;
        next.reserve(frontier.size());
        for (const Frame& f : frontier) {
          for (int to = 1; to <= sh.dims[s]; ++to) {
            const Scalar& entry = ops[s][to - 1][from - 1];
            if (entry.is_zero()) continue;
            Frame g = f;
            g.label[idx] = static_cast<std::uint8_t>(to);
            g.amp = g.amp * entry;
            next.push_back(std::move(g));
          }
        }
        frontier = std::move(next);
      }
    }
    for (Frame& f : frontier) out.push_back({std::move(f.label), std::move(f.amp)});
  }
  return ReplicaState(sh, std::move(out));
}

RankResult matrix_rank(std::vector<std::vector<Scalar>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());

  bool all_exact = true;
  for (const auto& row : m)
    for (const auto& v : row)
      if (!v.exact()) all_exact = false;

  if (all_exact) {
    // exact elimination; bail out to the float path if a sum leaves the tower
    std::vector<std::vector<Scalar>> a = m;
    int rank = 0;
    bool degraded = false;
    for (int col = 0; col < cols && rank < rows && !degraded; ++col) {
      int pivot = -1;
      for (int r = rank; r < rows; ++r) {
        if (!a[r][col].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(a[rank], a[pivot]);
      for (int r = rank + 1; r < rows && !degraded; ++r) {
        if (a[r][col].is_zero()) continue;
        Scalar f = a[r][col] / a[rank][col];
        for (int c = col; c < cols; ++c) {
          a[r][c] += -(f * a[rank][c]);
          if (!a[r][c].exact()) degraded = true;
        }
      }
      ++rank;
    }
    if (!degraded) return {rank, true};
  }

  // floating-point fallback with threshold pivoting
  std::vector<std::vector<std::complex<double>>> a(rows, std::vector<std::complex<double>>(cols));
  double scale_max = 1.0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      a[r][c] = m[r][c].to_complex();
      scale_max = std::max(scale_max, std::abs(a[r][c]));
    }
  const double eps = 1e-10 * scale_max;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = rank;
    for (int r = rank + 1; r < rows; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) <= eps) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      std::complex<double> f = a[r][col] / a[rank][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return {rank, false};
}

RankResult reduced_density_rank(const ReplicaState& psi, int subsystem) {
  if (!psi.single_copy())
    throw std::invalid_argument("reduced_density_rank needs a single-copy state");
  const SystemShape& sh = psi.shape();
  if (subsystem < 0 || subsystem >= sh.subsystems)
    throw std::invalid_argument("subsystem index out of range");
  const int d = sh.dims[subsystem];

  // conditional vectors v_k over the complement labels; Gram G = <v_k|v_l>
  std::vector<std::map<Label, Scalar>> cond(d);
  for (const Term& t : psi.terms()) {
    int k = t.label[slot_index(sh, subsystem, 0)];
    Label rest;
    rest.reserve(t.label.size() - 1);
    for (int s = 0; s < sh.subsystems; ++s) {
      if (s == subsystem) continue;
      rest.push_back(t.label[slot_index(sh, s, 0)]);
    }
    auto [it, fresh] = cond[k - 1].try_emplace(std::move(rest), t.amp);
    if (!fresh) it->second += t.amp;
  }
  std::vector<std::vector<Scalar>> gram(d, std::vector<Scalar>(d));
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      Scalar acc;
      for (const auto& [rest, amp] : cond[k]) {
        auto it = cond[l].find(rest);
        if (it != cond[l].end()) acc += amp.conj() * it->second;
      }
      gram[k][l] = acc;
    }
  }
  return matrix_rank(std::move(gram));
}

}  // namespace permwit
