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

#include "permwit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace permwit {

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer or integer string");
}

mpq_class mpq_from_fields(const json& j, const char* num_key, const char* den_key) {
  mpz_class num = j.contains(num_key) ? mpz_from_json(j.at(num_key)) : mpz_class(0);
  mpz_class den = j.contains(den_key) ? mpz_from_json(j.at(den_key)) : mpz_class(1);
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

json scalar_to_json(const Scalar& s) {
  json j;
  if (s.exact()) {
    const ExactScalar& v = s.exact_value();
    j["num"] = mpz_to_json(v.real_part().get_num());
    j["den"] = mpz_to_json(v.real_part().get_den());
    j["imag_num"] = mpz_to_json(v.imag_part().get_num());
    j["imag_den"] = mpz_to_json(v.imag_part().get_den());
    j["root_num"] = mpz_to_json(v.root());
    j["root_den"] = 1;
    j["approx"] = v.to_complex().real();
    j["exact"] = true;
  } else {
    j["approx"] = s.to_complex().real();
    j["approx_imag"] = s.to_complex().imag();
    j["exact"] = false;
  }
  return j;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(ExactScalar(mpq_class(j.get<long>())));
  if (j.is_number_float()) return Scalar::approx(j.get<double>());
  if (j.is_string()) return Scalar(ExactScalar(rational_from_string(j.get<std::string>())));
  if (!j.is_object()) throw std::invalid_argument("bad scalar encoding");
  if (j.contains("exact") && !j.at("exact").get<bool>()) {
    double re = j.value("approx", 0.0);
    double im = j.value("approx_imag", 0.0);
    return Scalar::approx({re, im});
  }
  mpq_class re = mpq_from_fields(j, "num", "den");
  mpq_class im = mpq_from_fields(j, "imag_num", "imag_den");
  mpq_class root(1);
  if (j.contains("root_num") || j.contains("root_den"))
    root = mpq_from_fields(j, "root_num", "root_den");
  return Scalar(ExactScalar::from_parts(re, im, root));
}

json state_to_json(const ReplicaState& s) {
  json j;
  j["dims"] = s.shape().dims;
  if (s.shape().replicas != 1) j["replicas"] = s.shape().replicas;
  json terms = json::array();
  for (const Term& t : s.terms()) {
    json jt;
    jt["ket"] = std::vector<int>(t.label.begin(), t.label.end());
    jt["amp"] = scalar_to_json(t.amp);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  j["normalize"] = false;
  return j;
}

ReplicaState state_from_json(const json& j) {
  SystemShape sh;
  sh.dims = j.at("dims").get<std::vector<int>>();
  sh.subsystems = static_cast<int>(sh.dims.size());
  sh.replicas = j.value("replicas", 1);
  std::vector<Term> terms;
  for (const json& jt : j.at("terms")) {
    auto ket = jt.at("ket").get<std::vector<int>>();
    if (static_cast<int>(ket.size()) != sh.slots())
      throw std::invalid_argument("ket length does not match dims/replicas");
    Label lab;
    lab.reserve(ket.size());
    for (int v : ket) {
      if (v < 1 || v > 255) throw std::invalid_argument("ket index out of range");
      lab.push_back(static_cast<std::uint8_t>(v));
    }
    terms.push_back({std::move(lab), scalar_from_json(jt.at("amp"))});
  }
  ReplicaState out(sh, std::move(terms));
  if (j.value("normalize", false)) out = normalized(out);
  return out;
}

ReplicaState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  json j = json::parse(in);
  return state_from_json(j);
}

json witness_to_json(const Witness& w) {
  json j;
  j["subsystems"] = w.subsystems();
  j["m"] = w.replicas();
  if (w.factored_form()) {
    json factors = json::array();
    for (const Factor& f : w.factors()) {
      json jf;
      jf["subsystem"] = f.subsystem + 1;
      std::vector<int> reps;
      for (int r : f.replicas) reps.push_back(r + 1);
      jf["replicas"] = reps;
      jf["kind"] = factor_kind_name(f.kind);
      factors.push_back(std::move(jf));
    }
    j["factors"] = std::move(factors);
  } else {
    json terms = json::array();
    for (const GeneralTerm& t : w.general_terms()) {
      json jt;
      jt["eta"] = scalar_to_json(t.eta);
      json perms = json::array();
      for (const Permutation& p : t.perms) {
        std::vector<int> img;
        for (int i = 0; i < p.size(); ++i) img.push_back(p(i) + 1);
        perms.push_back(img);
      }
      jt["perms"] = std::move(perms);
      terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
  }
  return j;
}

Witness witness_from_json(const json& j, OverlapPolicy policy) {
  if (j.contains("factors")) {
    std::vector<Factor> factors;
    int max_sub = 0, max_rep = 0;
    for (const json& jf : j.at("factors")) {
      Factor f;
      f.subsystem = jf.at("subsystem").get<int>() - 1;
      for (int r : jf.at("replicas").get<std::vector<int>>()) f.replicas.push_back(r - 1);
      std::string kind = jf.at("kind").get<std::string>();
      if (kind == "antisym") {
        f.kind = FactorKind::Antisym;
      } else if (kind == "sym") {
        f.kind = FactorKind::Sym;
      } else if (kind == "pminus") {
        f.kind = FactorKind::PMinus;
      } else {
        throw std::invalid_argument("unknown factor kind: " + kind);
      }
      max_sub = std::max(max_sub, f.subsystem + 1);
      for (int r : f.replicas) max_rep = std::max(max_rep, r + 1);
      factors.push_back(std::move(f));
    }
    int subsystems = j.value("subsystems", max_sub);
    int m = j.value("m", max_rep);
    try {
      return Witness::factored("file", subsystems, m, factors);
    } catch (const std::invalid_argument&) {
      if (policy == OverlapPolicy::Reject) throw;
      // operator product of the factors, most significant last applied
      Witness acc = Witness::general(
          "file", subsystems, m,
          {{Scalar::integer(1),
            std::vector<Permutation>(subsystems, Permutation::identity(m))}});
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        std::vector<GeneralTerm> terms;
        for (auto& [coeff, perm] : expand_factor(*it, m)) {
          std::vector<Permutation> perms(subsystems, Permutation::identity(m));
          perms[it->subsystem] = perm;
          terms.push_back({coeff, std::move(perms)});
        }
        acc = compose(acc, Witness::general("f", subsystems, m, std::move(terms)));
      }
      return Witness::general("file", subsystems, m, acc.general_terms());
    }
  }
  if (j.contains("terms")) {
    int max_sub = 0, m = j.value("m", 0);
    for (const json& jt : j.at("terms")) {
      max_sub = std::max(max_sub, static_cast<int>(jt.at("perms").size()));
      for (const json& jp : jt.at("perms")) m = std::max(m, static_cast<int>(jp.size()));
    }
    int subsystems = j.value("subsystems", max_sub);
    std::vector<GeneralTerm> terms;
    for (const json& jt : j.at("terms")) {
      GeneralTerm t;
      t.eta = scalar_from_json(jt.at("eta"));
      for (const json& jp : jt.at("perms")) {
        std::vector<int> img;
        for (int v : jp.get<std::vector<int>>()) img.push_back(v - 1);
        t.perms.emplace_back(std::move(img));
      }
      if (static_cast<int>(t.perms.size()) != subsystems)
        throw std::invalid_argument("each term needs one permutation per subsystem");
      terms.push_back(std::move(t));
    }
    return Witness::general("file", subsystems, m, std::move(terms));
  }
  throw std::invalid_argument("witness file needs \"factors\" or \"terms\"");
}

Witness load_witness_file(const std::string& path, OverlapPolicy policy) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open witness file: " + path);
  json j = json::parse(in);
  return witness_from_json(j, policy);
}

json stats_to_json(const TermStats& st) {
  json j;
  j["enumerated"] = st.enumerated;
  j["pruned"] = st.pruned;
  j["surviving"] = st.surviving;
  j["blocks"] = st.blocks;
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["kind"] = verdict_kind_name(v.kind);
  j["witness"] = v.witness_name;
  j["m"] = v.m;
  j["residuals"] = {{"psi", scalar_to_json(v.from_eval.residual_norm_sq)},
                    {"phi", scalar_to_json(v.to_eval.residual_norm_sq)}};
  j["ranks"] = {{"psi", v.from_ranks}, {"phi", v.to_ranks}};
  j["exact"] = v.exact;
  j["annotations"] = v.annotations;
  return j;
}

}  // namespace permwit
