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

#include "permwit/canonical.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace permwit {

namespace {

struct LabelHash {
  std::size_t operator()(const Label& l) const {
    // FNV-1a
    std::size_t h = 14695981039346656037ull;
    for (std::uint8_t b : l) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using Accumulator = std::unordered_map<Label, Scalar, LabelHash>;

// Sorts every projected segment in place; returns the product of the
// antisymmetric sorting signatures, or 0 if some antisymmetric segment has a
// repeated entry (the term vanishes).
int canonicalize_label(const SystemShape& sh, const std::vector<Factor>& factors, Label& label) {
  int sign = 1;
  std::array<std::uint8_t, 64> buf;
  for (const Factor& f : factors) {
    const int k = f.arity();
    for (int i = 0; i < k; ++i) buf[i] = label[slot_index(sh, f.subsystem, f.replicas[i])];
    // insertion sort, counting swaps per segment
    int seg_sign = 1;
    for (int i = 1; i < k; ++i) {
      std::uint8_t v = buf[i];
      int j = i - 1;
      while (j >= 0 && buf[j] > v) {
        buf[j + 1] = buf[j];
        --j;
        seg_sign = -seg_sign;
      }
      buf[j + 1] = v;
    }
    if (f.antisymmetric()) {
      for (int i = 1; i < k; ++i)
        if (buf[i] == buf[i - 1]) return 0;
      sign *= seg_sign;
    }
    for (int i = 0; i < k; ++i) label[slot_index(sh, f.subsystem, f.replicas[i])] = buf[i];
  }
  return sign;
}

mpz_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// w_f for one canonical term
mpq_class block_weight(const SystemShape& sh, const std::vector<Factor>& factors,
                       const Label& label) {
  mpq_class w(1);
  for (const Factor& f : factors) {
    const int k = f.arity();
    if (f.antisymmetric()) {
      w /= mpq_class(factorial(k));
    } else {
      mpz_class num = 1;
      int run = 1;
      for (int i = 1; i <= k; ++i) {
        bool same = i < k && label[slot_index(sh, f.subsystem, f.replicas[i])] ==
                                 label[slot_index(sh, f.subsystem, f.replicas[i - 1])];
        if (same) {
          ++run;
        } else {
          num *= factorial(run);
          run = 1;
        }
      }
      mpq_class wf(num, factorial(k));
      wf.canonicalize();
      w *= wf;
    }
  }
  return w;
}

std::vector<BlockTerm> collect_sorted(Accumulator&& acc) {
  std::vector<BlockTerm> out;
  out.reserve(acc.size());
  for (auto& [label, amp] : acc)
    if (!amp.is_zero()) out.push_back({label, std::move(amp)});
  std::sort(out.begin(), out.end(),
            [](const BlockTerm& a, const BlockTerm& b) { return a.label < b.label; });
  return out;
}

void check_factored_shapes(const Witness& op, const SystemShape& sh) {
  if (!op.factored_form())
    throw std::invalid_argument("canonical engine handles factored witnesses only");
  if (op.subsystems() != sh.subsystems || op.replicas() != sh.replicas)
    throw std::invalid_argument("witness and state shapes disagree");
  for (const Factor& f : op.factors()) {
    if (f.arity() > 64) throw std::invalid_argument("projector arity beyond segment buffer");
  }
}

}  // namespace

BlockState::BlockState(SystemShape shape, std::vector<Factor> layout,
                       std::vector<BlockTerm> terms, bool exact)
    : shape_(std::move(shape)), layout_(std::move(layout)), terms_(std::move(terms)),
      exact_(exact) {}

BlockState canonicalize(const ReplicaState& state, const Witness& op) {
  check_factored_shapes(op, state.shape());
  const SystemShape& sh = state.shape();
  Accumulator acc;
  bool exact = state.exact();
  for (const Term& t : state.terms()) {
    Label lab = t.label;
    int sign = canonicalize_label(sh, op.factors(), lab);
    if (sign == 0) continue;
    Scalar contrib = sign < 0 ? -t.amp : t.amp;
    auto [it, fresh] = acc.try_emplace(std::move(lab), contrib);
    if (!fresh) {
      it->second += contrib;
      if (!it->second.exact()) exact = false;
    }
  }
  return BlockState(sh, op.factors(), collect_sorted(std::move(acc)), exact);
}

Scalar block_norm_sq(const BlockState& bs) {
  Scalar acc;
  for (const BlockTerm& t : bs.terms()) {
    Scalar w(ExactScalar(block_weight(bs.shape(), bs.layout(), t.label)));
    acc += t.amp.abs_sq() * w;
  }
  return acc;
}

ReplicaState expand_blocks(const BlockState& bs) {
  const SystemShape& sh = bs.shape();
  std::vector<Term> out;
  for (const BlockTerm& bt : bs.terms()) {
    std::vector<Term> partial{{bt.label, bt.amp}};
    for (const Factor& f : bs.layout()) {
      const int k = f.arity();
      std::vector<std::uint8_t> content(k);
      for (int i = 0; i < k; ++i)
        content[i] = bt.label[slot_index(sh, f.subsystem, f.replicas[i])];
      // distinct arrangements of the sorted content
      std::vector<std::pair<mpq_class, std::vector<std::uint8_t>>> arrangements;
      std::vector<std::uint8_t> arr = content;
      mpq_class sym_weight(1);
      if (!f.antisymmetric()) {
        mpz_class num = 1;
        int run = 1;
        for (int i = 1; i <= k; ++i) {
          if (i < k && arr[i] == arr[i - 1]) {
            ++run;
          } else {
            num *= factorial(run);
            run = 1;
          }
        }
        sym_weight = mpq_class(num, factorial(k));
        sym_weight.canonicalize();
      }
      do {
        mpq_class c;
        if (f.antisymmetric()) {
          std::vector<int> v(arr.begin(), arr.end());
          c = mpq_class(sort_signature(v), 1) / mpq_class(factorial(k));
          c.canonicalize();
        } else {
          c = sym_weight;
        }
        arrangements.emplace_back(std::move(c), arr);
      } while (std::next_permutation(arr.begin(), arr.end()));

      std::vector<Term> next;
      next.reserve(partial.size() * arrangements.size());
      for (const Term& p : partial) {
        for (const auto& [c, values] : arrangements) {
          Term nt = p;
          for (int i = 0; i < k; ++i)
            nt.label[slot_index(sh, f.subsystem, f.replicas[i])] = values[i];
          nt.amp = nt.amp * Scalar(ExactScalar(c));
          next.push_back(std::move(nt));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), std::make_move_iterator(partial.begin()),
               std::make_move_iterator(partial.end()));
  }
  return ReplicaState(sh, std::move(out));
}

namespace {

struct EnumerationPlan {
  SystemShape shape;                      // m-replica shape
  std::vector<std::vector<std::uint8_t>> term_values;  // [term][subsystem]
  std::vector<Scalar> term_amps;
  // per replica r, antisymmetric duplicate checks: (slot of (s,r), earlier slots)
  struct Check {
    int slot;
    std::vector<int> earlier;
  };
  std::vector<std::vector<Check>> checks;  // [replica]
};

class Worker {
 public:
  Worker(const EnumerationPlan& plan, const std::vector<Factor>& factors, bool prune,
         std::uint64_t cap, std::atomic<std::uint64_t>& global_keys,
         std::atomic<bool>& stop, int stride, int offset)
      : plan_(plan), factors_(factors), prune_(prune), cap_(cap), global_keys_(global_keys),
        stop_(stop), stride_(stride), offset_(offset) {
    label_.assign(plan_.shape.slots(), 0);
    amps_.assign(plan_.shape.replicas + 1, Scalar::integer(1));
  }

  void run() {
    if (!plan_.term_values.empty()) descend(0);
  }

  Accumulator acc;
  TermStats stats;

 private:
  void descend(int r) {
    const int m = plan_.shape.replicas;
    const int n = plan_.shape.subsystems;
    const std::size_t tcount = plan_.term_values.size();
    for (std::size_t t = (r == 0 ? static_cast<std::size_t>(offset_) : 0); t < tcount;
         t += (r == 0 ? stride_ : 1)) {
      if (stop_.load(std::memory_order_relaxed))
        throw ResourceLimitError("surviving-term cap exceeded");
      const auto& vals = plan_.term_values[t];
      for (int s = 0; s < n; ++s) label_[slot_index(plan_.shape, s, r)] = vals[s];
      if (prune_) {
        bool dead = false;
        for (const auto& chk : plan_.checks[r]) {
          std::uint8_t v = label_[chk.slot];
          for (int es : chk.earlier) {
            if (label_[es] == v) {
              dead = true;
              break;
            }
          }
          if (dead) break;
        }
        if (dead) {
          ++stats.pruned;
          continue;
        }
      }
      amps_[r + 1] = amps_[r] * plan_.term_amps[t];
      if (r + 1 == m) {
        leaf();
      } else {
        descend(r + 1);
      }
    }
  }

  void leaf() {
    ++stats.enumerated;
    Label lab = label_;
    int sign = canonicalize_label(plan_.shape, factors_, lab);
    if (sign == 0) return;  // only reachable with pruning disabled
    Scalar contrib = sign < 0 ? -amps_[plan_.shape.replicas] : amps_[plan_.shape.replicas];
    auto [it, fresh] = acc.try_emplace(std::move(lab), contrib);
    if (!fresh) {
      it->second += contrib;
    } else if (global_keys_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) {
      stop_.store(true, std::memory_order_relaxed);
      throw ResourceLimitError("surviving-term cap exceeded");
    }
  }

  const EnumerationPlan& plan_;
  const std::vector<Factor>& factors_;
  bool prune_;
  std::uint64_t cap_;
  std::atomic<std::uint64_t>& global_keys_;
  std::atomic<bool>& stop_;
  int stride_, offset_;
  Label label_;
  std::vector<Scalar> amps_;
};

}  // namespace

FastResult evaluate_fast(const Witness& op, const ReplicaState& psi, int m,
                         const EvalOptions& opts) {
  if (!psi.single_copy()) throw std::invalid_argument("evaluate_fast needs a single-copy state");
  if (m != op.replicas())
    throw std::invalid_argument("replica count disagrees with the witness");
  SystemShape sh = psi.shape();
  sh.replicas = m;
  check_factored_shapes(op, sh);

  EnumerationPlan plan;
  plan.shape = sh;
  for (const Term& t : psi.terms()) {
    std::vector<std::uint8_t> vals(sh.subsystems);
    for (int s = 0; s < sh.subsystems; ++s) vals[s] = t.label[s];
    plan.term_values.push_back(std::move(vals));
    plan.term_amps.push_back(t.amp);
  }
  plan.checks.resize(m);
  for (const Factor& f : op.factors()) {
    if (!f.antisymmetric()) continue;
    for (std::size_t i = 1; i < f.replicas.size(); ++i) {
      EnumerationPlan::Check chk;
      chk.slot = slot_index(sh, f.subsystem, f.replicas[i]);
      for (std::size_t j = 0; j < i; ++j)
        chk.earlier.push_back(slot_index(sh, f.subsystem, f.replicas[j]));
      plan.checks[f.replicas[i]].push_back(std::move(chk));
    }
  }

  int threads = std::max(1, opts.threads);
  if (!psi.exact()) threads = 1;  // float sums stay in single enumeration order
  threads = std::min(threads, static_cast<int>(std::max<std::size_t>(plan.term_values.size(), 1)));

  std::atomic<std::uint64_t> global_keys{0};
  std::atomic<bool> stop{false};
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w)
    workers.emplace_back(plan, op.factors(), opts.prune, opts.term_cap, global_keys, stop,
                         threads, w);

  if (threads == 1) {
    workers[0].run();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          workers[w].run();
        } catch (...) {
          errors[w] = std::current_exception();
          stop.store(true, std::memory_order_relaxed);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Accumulator merged = std::move(workers[0].acc);
  TermStats stats = workers[0].stats;
  for (int w = 1; w < threads; ++w) {
    for (auto& [label, amp] : workers[w].acc) {
      auto [it, fresh] = merged.try_emplace(label, amp);
      if (!fresh) it->second += amp;
    }
    stats.enumerated += workers[w].stats.enumerated;
    stats.pruned += workers[w].stats.pruned;
  }

  BlockState blocks(sh, op.factors(), collect_sorted(std::move(merged)), psi.exact());
  stats.surviving = blocks.terms().size();
  stats.blocks = op.factors().size();
  FastResult out{block_norm_sq(blocks), stats, std::move(blocks)};
  return out;
}

}  // namespace permwit
