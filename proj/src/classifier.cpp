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

#include "permwit/classifier.hpp"

#include <cmath>
#include <stdexcept>

#include "permwit/witness_library.hpp"

namespace permwit {

EvalOutcome evaluate(const Witness& op, const ReplicaState& psi, int m, const EvalOptions& opts,
                     Engine engine) {
  if (!psi.single_copy()) throw std::invalid_argument("evaluate needs a single-copy state");
  if (m != op.replicas())
    throw std::invalid_argument("replica count disagrees with the witness");
  if (psi.shape().subsystems != op.subsystems())
    throw std::invalid_argument("subsystem count disagrees with the witness");

  EvalOutcome out;
  const bool canonical = op.factored_form() && engine != Engine::Reference;
  if (engine == Engine::Canonical && !op.factored_form())
    throw std::invalid_argument("canonical engine handles factored witnesses only");
  if (canonical) {
    FastResult r = evaluate_fast(op, psi, m, opts);
    out.residual_norm_sq = r.norm_sq;
    out.stats = r.stats;
    out.engine = "canonical";
  } else {
    ReplicaState power = tensor_power(psi, m, opts.term_cap);
    ReplicaState image = apply_witness_reference(op, power);
    if (image.terms().size() > opts.term_cap)
      throw ResourceLimitError("surviving-term cap exceeded");
    out.residual_norm_sq = norm_sq(image);
    out.stats.enumerated = power.terms().size();
    out.stats.surviving = image.terms().size();
    out.stats.blocks = op.factored_form() ? op.factors().size() : 0;
    out.engine = "reference";
  }
  out.zero = classify_norm(out.residual_norm_sq);
  out.exact = out.residual_norm_sq.exact();
  return out;
}

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Obstruction: return "OBSTRUCTION";
    case VerdictKind::Inequivalent: return "INEQUIVALENT";
    case VerdictKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

Verdict check_obstruction(const ReplicaState& from, const ReplicaState& to, const Witness& op,
                          int m, const EvalOptions& opts, Engine engine) {
  if (!(from.shape() == to.shape()))
    throw std::invalid_argument("the two states must share one shape");

  Verdict v;
  v.witness_name = op.name();
  v.m = m;
  v.from_eval = evaluate(op, from, m, opts, engine);
  v.to_eval = evaluate(op, to, m, opts, engine);

  bool ranks_exact = true;
  for (int s = 0; s < from.shape().subsystems; ++s) {
    RankResult rf = reduced_density_rank(from, s);
    RankResult rt = reduced_density_rank(to, s);
    v.from_ranks.push_back(rf.rank);
    v.to_ranks.push_back(rt.rank);
    ranks_exact = ranks_exact && rf.exact && rt.exact;
  }
  v.exact = v.from_eval.exact && v.to_eval.exact && ranks_exact;

  if (v.from_eval.zero == ZeroClass::Ambiguous || v.to_eval.zero == ZeroClass::Ambiguous) {
    v.kind = VerdictKind::Inconclusive;
    v.annotations.push_back("a residual fell in the float guard band; no classification");
    return v;
  }
  if (v.from_eval.zero == ZeroClass::Zero && v.to_eval.zero == ZeroClass::NonZero) {
    if (v.from_ranks == v.to_ranks) {
      v.kind = VerdictKind::Inequivalent;
      v.annotations.push_back(
          "all single-subsystem reduced ranks agree; one-way obstruction upgrades to "
          "class inequivalence");
    } else {
      v.kind = VerdictKind::Obstruction;
      v.annotations.push_back("rank profiles differ; one-way obstruction only");
    }
  } else {
    v.kind = VerdictKind::Inconclusive;
  }
  return v;
}

TangleResult tangle(const ReplicaState& psi, const EvalOptions& opts) {
  const SystemShape& sh = psi.shape();
  if (!psi.single_copy() || sh.subsystems != 3 || sh.dims != std::vector<int>{2, 2, 2})
    throw std::invalid_argument("tangle is defined for three qubits");
  Scalar n2 = norm_sq(psi);
  if (n2.exact()) {
    if (n2.rational_value() != 1) throw std::invalid_argument("tangle needs a normalized state");
  } else if (std::abs(n2.to_complex().real() - 1.0) > 1e-9) {
    throw std::invalid_argument("tangle needs a normalized state");
  }

  EvalOutcome ev = evaluate(a_tau(3), psi, 4, opts);
  TangleResult out;
  if (ev.residual_norm_sq.exact()) {
    mpq_class q = ev.residual_norm_sq.rational_value();
    ExactScalar val = ExactScalar::integer(16) * ExactScalar::sqrt_rational(q);
    out.value = Scalar(val);
    out.exact = true;
    double d = val.to_complex().real();
    out.low = out.high = d;
  } else {
    double q = std::max(0.0, ev.residual_norm_sq.to_complex().real());
    out.value = Scalar::approx(16.0 * std::sqrt(q));
    out.exact = false;
    out.low = 16.0 * std::sqrt(std::max(0.0, q - kNormAmbiguousBand));
    out.high = 16.0 * std::sqrt(q + kNormAmbiguousBand);
  }
  return out;
}

}  // namespace permwit
