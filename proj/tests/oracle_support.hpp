// Test-only brute-force evaluator, kept independent of the engine code paths
// it checks: expands the witness into explicit signed permutation maps by
// enumerating subset arrangements directly, applies them term by term to a
// map-based tensor power, and sums |amp|^2. Shares only the scalar tower and
// the label layout with the library.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "permwit/state.hpp"
#include "permwit/witness.hpp"

namespace testoracle {

using permwit::Label;
using permwit::ReplicaState;
using permwit::Scalar;
using permwit::SystemShape;
using permwit::Term;
using permwit::Witness;

using SparseMap = std::map<Label, Scalar>;

inline SparseMap to_map(const ReplicaState& s) {
  SparseMap m;
  for (const Term& t : s.terms()) m[t.label] = t.amp;
  return m;
}

inline SparseMap brute_tensor_power(const ReplicaState& psi, int m) {
  const SystemShape& in = psi.shape();
  SystemShape out_shape = in;
  out_shape.replicas = m;
  SparseMap acc;
  std::vector<std::size_t> pick(m, 0);
  if (psi.terms().empty()) return acc;
  for (;;) {
    Label lab(out_shape.slots(), 0);
    Scalar amp = Scalar::integer(1);
    for (int r = 0; r < m; ++r) {
      const Term& row = psi.terms()[pick[r]];
      amp = amp * row.amp;
      for (int s = 0; s < in.subsystems; ++s)
        lab[s * m + r] = row.label[s];
    }
    auto [it, fresh] = acc.try_emplace(std::move(lab), amp);
    if (!fresh) it->second += amp;
    int r = m - 1;
    while (r >= 0 && ++pick[r] == psi.terms().size()) pick[r--] = 0;
    if (r < 0) break;
  }
  return acc;
}

// one explicit operator term: coefficient and, per subsystem, the slot map
// new_row[s][r] = source row whose value lands in row r
struct BruteTerm {
  Scalar coeff;
  std::vector<std::vector<int>> source_row;  // [subsystem][row]
};

inline int parity(const std::vector<int>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) s = -s;
  return s;
}

inline std::vector<BruteTerm> brute_expand(const Witness& w) {
  const int n = w.subsystems();
  const int m = w.replicas();
  std::vector<BruteTerm> acc;
  {
    BruteTerm id;
    id.coeff = Scalar::integer(1);
    id.source_row.assign(n, std::vector<int>(m));
    for (int s = 0; s < n; ++s)
      for (int r = 0; r < m; ++r) id.source_row[s][r] = r;
    acc.push_back(std::move(id));
  }
  if (!w.factored_form()) {
    std::vector<BruteTerm> out;
    for (const auto& gt : w.general_terms()) {
      BruteTerm bt;
      bt.coeff = gt.eta;
      bt.source_row.assign(n, std::vector<int>(m));
      for (int s = 0; s < n; ++s)
        for (int r = 0; r < m; ++r) bt.source_row[s][gt.perms[s](r)] = r;
      out.push_back(std::move(bt));
    }
    return out;
  }
  for (const auto& f : w.factors()) {
    const int k = f.arity();
    mpz_class kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    std::vector<int> arrangement(k);
    std::iota(arrangement.begin(), arrangement.end(), 0);
    std::vector<BruteTerm> next;
    do {
      mpq_class c(f.antisymmetric() ? parity(arrangement) : 1, 1);
      c /= mpq_class(kfact);
      for (const BruteTerm& base : acc) {
        BruteTerm bt = base;
        bt.coeff = bt.coeff * Scalar(permwit::ExactScalar(c));
        // row f.replicas[arrangement[i]] receives the value of row f.replicas[i]
        std::vector<int> fresh(k);
        for (int i = 0; i < k; ++i)
          fresh[arrangement[i]] = base.source_row[f.subsystem][f.replicas[i]];
        for (int i = 0; i < k; ++i) bt.source_row[f.subsystem][f.replicas[i]] = fresh[i];
        next.push_back(std::move(bt));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    acc = std::move(next);
  }
  return acc;
}

inline SparseMap brute_apply(const Witness& w, const SparseMap& state, const SystemShape& sh) {
  SparseMap out;
  for (const BruteTerm& bt : brute_expand(w)) {
    for (const auto& [label, amp] : state) {
      Label lab(label.size(), 0);
      for (int s = 0; s < sh.subsystems; ++s)
        for (int r = 0; r < sh.replicas; ++r)
          lab[s * sh.replicas + r] = label[s * sh.replicas + bt.source_row[s][r]];
      Scalar contrib = bt.coeff * amp;
      auto [it, fresh] = out.try_emplace(std::move(lab), contrib);
      if (!fresh) it->second += contrib;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline Scalar brute_norm_sq(const Witness& w, const ReplicaState& psi, int m) {
  SystemShape sh = psi.shape();
  sh.replicas = m;
  SparseMap power = brute_tensor_power(psi, m);
  SparseMap image = brute_apply(w, power, sh);
  Scalar acc;
  for (const auto& [label, amp] : image) acc += amp.abs_sq();
  return acc;
}

}  // namespace testoracle
