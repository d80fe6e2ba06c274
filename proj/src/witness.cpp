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

#include "permwit/witness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace permwit {

std::string factor_kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::PMinus: return "pminus";
    case FactorKind::Antisym: return "antisym";
    case FactorKind::Sym: return "sym";
  }
  return "?";
}

Witness Witness::factored(std::string name, int subsystems, int replicas,
                          std::vector<Factor> factors) {
  if (subsystems < 1 || replicas < 1) throw std::invalid_argument("bad witness shape");
  // fixed application order: ascending (subsystem, first replica)
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    if (a.subsystem != b.subsystem) return a.subsystem < b.subsystem;
    return a.replicas < b.replicas;
  });
  std::set<std::pair<int, int>> support;
  for (Factor& f : factors) {
    if (f.subsystem < 0 || f.subsystem >= subsystems)
      throw std::invalid_argument("factor subsystem out of range");
    std::sort(f.replicas.begin(), f.replicas.end());
    if (f.arity() < 2) throw std::invalid_argument("projector factor needs at least two replicas");
    if (f.kind == FactorKind::PMinus && f.arity() != 2)
      throw std::invalid_argument("pminus acts on exactly two replicas");
    for (int r : f.replicas) {
      if (r < 0 || r >= replicas) throw std::invalid_argument("factor replica out of range");
      if (!support.insert({f.subsystem, r}).second)
        throw std::invalid_argument("factor supports overlap");
    }
  }
  Witness w;
  w.name_ = std::move(name);
  w.subsystems_ = subsystems;
  w.replicas_ = replicas;
  w.factors_ = std::move(factors);
  return w;
}

Witness Witness::general(std::string name, int subsystems, int replicas,
                         std::vector<GeneralTerm> terms) {
  if (subsystems < 1 || replicas < 1) throw std::invalid_argument("bad witness shape");
  for (const GeneralTerm& t : terms) {
    if (static_cast<int>(t.perms.size()) != subsystems)
      throw std::invalid_argument("general term needs one permutation per subsystem");
    for (const Permutation& p : t.perms)
      if (p.size() != replicas) throw std::invalid_argument("permutation size mismatch");
  }
  Witness w;
  w.name_ = std::move(name);
  w.subsystems_ = subsystems;
  w.replicas_ = replicas;
  w.terms_ = std::move(terms);
  return w;
}

const std::vector<Factor>& Witness::factors() const {
  if (!factors_) throw std::logic_error("witness is not in factored form");
  return *factors_;
}

const std::vector<GeneralTerm>& Witness::general_terms() const {
  if (!terms_) throw std::logic_error("witness is not in general form");
  return *terms_;
}

std::vector<std::pair<Scalar, Permutation>> expand_factor(const Factor& f, int replicas) {
  const int k = f.arity();
  mpz_class kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  mpq_class unit(1);
  unit /= mpq_class(kfact);

  std::vector<std::pair<Scalar, Permutation>> out;
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    int sgn = f.antisymmetric() ? sort_signature(sigma) : 1;
    mpq_class c = unit * sgn;
    out.emplace_back(Scalar(ExactScalar(c)),
                     Permutation::embed_subset(replicas, f.replicas, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

ReplicaState apply_permutation(const ReplicaState& state, int subsystem,
                               const Permutation& perm) {
  const SystemShape& sh = state.shape();
  if (subsystem < 0 || subsystem >= sh.subsystems)
    throw std::invalid_argument("subsystem out of range");
  if (perm.size() != sh.replicas) throw std::invalid_argument("permutation size mismatch");
  std::vector<Term> out;
  out.reserve(state.terms().size());
  for (const Term& t : state.terms()) {
    Term nt = t;
    for (int r = 0; r < sh.replicas; ++r)
      nt.label[slot_index(sh, subsystem, perm(r))] = t.label[slot_index(sh, subsystem, r)];
    out.push_back(std::move(nt));
  }
  return ReplicaState(sh, std::move(out));
}

namespace {

Label permute_label(const SystemShape& sh, const Label& label,
                    const std::vector<Permutation>& perms) {
  Label out(label.size());
  for (int s = 0; s < sh.subsystems; ++s) {
    const Permutation& p = perms[s];
    for (int r = 0; r < sh.replicas; ++r)
      out[slot_index(sh, s, p(r))] = label[slot_index(sh, s, r)];
  }
  return out;
}

ReplicaState apply_general_terms(const std::vector<GeneralTerm>& terms,
                                 const ReplicaState& state) {
  const SystemShape& sh = state.shape();
  std::vector<Term> out;
  out.reserve(terms.size() * state.terms().size());
  for (const GeneralTerm& g : terms) {
    for (const Term& t : state.terms()) {
      out.push_back({permute_label(sh, t.label, g.perms), g.eta * t.amp});
    }
  }
  return ReplicaState(sh, std::move(out));
}

// single-subsystem sum of (coeff, perm): cheaper than full general terms
ReplicaState apply_local_perm_sum(const std::vector<std::pair<Scalar, Permutation>>& sum,
                                  int subsystem, const ReplicaState& state) {
  const SystemShape& sh = state.shape();
  std::vector<Term> out;
  out.reserve(sum.size() * state.terms().size());
  for (const auto& [coeff, perm] : sum) {
    for (const Term& t : state.terms()) {
      Term nt{t.label, coeff * t.amp};
      for (int r = 0; r < sh.replicas; ++r)
        nt.label[slot_index(sh, subsystem, perm(r))] = t.label[slot_index(sh, subsystem, r)];
      out.push_back(std::move(nt));
    }
  }
  return ReplicaState(sh, std::move(out));
}

}  // namespace

ReplicaState apply_witness_reference(const Witness& op, const ReplicaState& state) {
  const SystemShape& sh = state.shape();
  if (op.subsystems() != sh.subsystems || op.replicas() != sh.replicas)
    throw std::invalid_argument("witness and state shapes disagree");
  if (op.factored_form()) {
    ReplicaState current = state;
    for (const Factor& f : op.factors())
      current = apply_local_perm_sum(expand_factor(f, sh.replicas), f.subsystem, current);
    return current;
  }
  return apply_general_terms(op.general_terms(), state);
}

std::vector<GeneralTerm> Witness::expand_to_general() const {
  if (terms_) return *terms_;
  std::vector<GeneralTerm> acc{
      {Scalar::integer(1), std::vector<Permutation>(subsystems_, Permutation::identity(replicas_))}};
  for (const Factor& f : *factors_) {
    auto fexp = expand_factor(f, replicas_);
    std::vector<GeneralTerm> next;
    next.reserve(acc.size() * fexp.size());
    for (const GeneralTerm& g : acc) {
      for (const auto& [coeff, perm] : fexp) {
        GeneralTerm ng = g;
        ng.eta = ng.eta * coeff;
        ng.perms[f.subsystem] = permwit::compose(perm, ng.perms[f.subsystem]);
        next.push_back(std::move(ng));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

Witness compose(const Witness& a, const Witness& b) {
  if (a.subsystems() != b.subsystems() || a.replicas() != b.replicas())
    throw std::invalid_argument("witness shapes disagree in compose");
  auto ta = a.expand_to_general();
  auto tb = b.expand_to_general();
  // merge on the concatenated image tuples
  std::map<std::vector<int>, GeneralTerm> merged;
  for (const GeneralTerm& x : ta) {
    for (const GeneralTerm& y : tb) {
      GeneralTerm t;
      t.eta = x.eta * y.eta;
      t.perms.reserve(a.subsystems());
      std::vector<int> key;
      key.reserve(a.subsystems() * a.replicas());
      for (int s = 0; s < a.subsystems(); ++s) {
        Permutation p = permwit::compose(x.perms[s], y.perms[s]);
        key.insert(key.end(), p.images().begin(), p.images().end());
        t.perms.push_back(std::move(p));
      }
      auto [it, fresh] = merged.try_emplace(std::move(key), t);
      if (!fresh) it->second.eta += t.eta;
    }
  }
  std::vector<GeneralTerm> out;
  for (auto& [key, t] : merged)
    if (!t.eta.is_zero()) out.push_back(std::move(t));
  return Witness::general("(" + a.name() + "*" + b.name() + ")", a.subsystems(), a.replicas(),
                          std::move(out));
}

std::uint64_t RandomSource::next() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int RandomSource::uniform(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

mpq_class RandomSource::small_rational(bool allow_zero) {
  int num = uniform(allow_zero ? -6 : 1, 6);
  if (!allow_zero && num == 0) num = 1;
  if (allow_zero && num == 0) return mpq_class(0);
  if (uniform(0, 1)) num = -num;
  mpq_class q(num, uniform(1, 6));
  q.canonicalize();
  return q;
}

LocalMatrix random_invertible_local(int dim, int extra_nnz, RandomSource& rng) {
  LocalMatrix m(dim, std::vector<Scalar>(dim));
  for (int i = 0; i < dim; ++i)
    m[i][i] = Scalar(ExactScalar(rng.small_rational(false)));
  for (int e = 0; e < extra_nnz && dim > 1; ++e) {
    int i = rng.uniform(0, dim - 2);
    int j = rng.uniform(i + 1, dim - 1);
    m[i][j] = Scalar(ExactScalar(rng.small_rational(false)));  // strictly upper: stays invertible
  }
  return m;
}

namespace {

ReplicaState random_sparse_state(const SystemShape& sh, int max_terms, RandomSource& rng) {
  std::vector<Term> terms;
  int count = rng.uniform(1, max_terms);
  for (int t = 0; t < count; ++t) {
    Label lab(sh.slots());
    for (int s = 0; s < sh.subsystems; ++s)
      for (int r = 0; r < sh.replicas; ++r)
        lab[slot_index(sh, s, r)] = static_cast<std::uint8_t>(rng.uniform(1, sh.dims[s]));
    mpq_class re = rng.small_rational(false);
    mpq_class im = rng.uniform(0, 3) == 0 ? rng.small_rational(true) : mpq_class(0);
    terms.push_back({std::move(lab), Scalar(ExactScalar(re, im))});
  }
  return ReplicaState(sh, std::move(terms));
}

}  // namespace

bool commutes_with_local_powers_core(const StateApplier& apply_op, int subsystems, int replicas,
                                     const std::vector<int>& dims, int trials, unsigned seed) {
  SystemShape sh{subsystems, dims, replicas};
  sh.validate();

  // expansion work per term is prod_s nnz(F_s)^M; pick the densest F that
  // keeps that bounded
  const double budget = 3e4;
  double dense_work = 1;
  for (int s = 0; s < subsystems; ++s)
    dense_work *= std::pow(static_cast<double>(dims[s]), replicas);
  int nnz_extra;  // entries beyond the diagonal, per matrix
  if (dense_work <= budget) {
    nnz_extra = -1;  // dense
  } else if (std::pow(2.0, sh.slots()) <= budget) {
    nnz_extra = 1;
  } else {
    nnz_extra = 0;  // monomial-like: diagonal only
  }

  RandomSource rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<LocalMatrix> ops;
    ops.reserve(subsystems);
    for (int s = 0; s < subsystems; ++s) {
      if (nnz_extra < 0) {
        LocalMatrix m(dims[s], std::vector<Scalar>(dims[s]));
        for (int i = 0; i < dims[s]; ++i)
          for (int j = 0; j < dims[s]; ++j)
            m[i][j] = Scalar(ExactScalar(rng.small_rational(true)));
        ops.push_back(std::move(m));
      } else {
        ops.push_back(random_invertible_local(dims[s], nnz_extra, rng));
      }
    }
    ReplicaState x = random_sparse_state(sh, 3, rng);
    ReplicaState lhs = apply_op(apply_local_operators(x, ops));
    ReplicaState rhs = apply_local_operators(apply_op(x), ops);
    if (!add_scaled(lhs, Scalar::integer(-1), rhs).is_empty()) return false;
  }
  return true;
}

bool commutes_with_local_powers(const Witness& op, int trials, unsigned seed) {
  // nontrivial local dimension: large enough that the biggest projector on
  // each subsystem does not annihilate everything
  std::vector<int> dims(op.subsystems(), 2);
  if (op.factored_form()) {
    for (const Factor& f : op.factors())
      dims[f.subsystem] = std::max(dims[f.subsystem], std::min(f.arity(), 5));
  } else {
    dims.assign(op.subsystems(), 3);
  }
  return commutes_with_local_powers_core(
      [&op](const ReplicaState& s) { return apply_witness_reference(op, s); }, op.subsystems(),
      op.replicas(), dims, trials, seed);
}

}  // namespace permwit
