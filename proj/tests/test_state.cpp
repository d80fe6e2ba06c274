#include <doctest.h>

#include "permwit/state.hpp"
#include "permwit/state_library.hpp"
#include "permwit/witness.hpp"

using namespace permwit;

namespace {

Scalar sqrtq(const mpq_class& q) { return Scalar(ExactScalar::sqrt_rational(q)); }

ReplicaState two_term_bipartite() {
  SystemShape sh{2, {2, 2}, 1};
  return ReplicaState(sh, {{{1, 1}, Scalar::integer(1)}, {{2, 2}, Scalar::integer(1)}});
}

}  // namespace

TEST_CASE("tensor power of the bell state") {
  ReplicaState b2 = tensor_power(bell(), 2);
  REQUIRE(b2.terms().size() == 4);
  for (const Term& t : b2.terms()) {
    CHECK(t.amp.exact());
    CHECK(t.amp.exact_value().real_part() == mpq_class(1, 2));
    CHECK(t.amp.exact_value().root() == 1);
    // rows are (1,1) or (2,2): subsystem columns agree
    CHECK(t.label[0] == t.label[2]);
    CHECK(t.label[1] == t.label[3]);
  }
}

TEST_CASE("tensor power with one replica is the identity") {
  ReplicaState w = w_qubit(3);
  ReplicaState w1 = tensor_power(w, 1);
  CHECK(w1.shape() == w.shape());
  REQUIRE(w1.terms().size() == w.terms().size());
  for (std::size_t i = 0; i < w.terms().size(); ++i) {
    CHECK(w1.terms()[i].label == w.terms()[i].label);
    CHECK(w1.terms()[i].amp == w.terms()[i].amp);
  }
}

TEST_CASE("duplicated Schmidt state carries the four expected amplitudes") {
  mpq_class l1(1, 3), l2(2, 3);
  ReplicaState psi = schmidt_state({l1, l2});
  ReplicaState psi2 = tensor_power(psi, 2);
  REQUIRE(psi2.terms().size() == 4);
  auto amp_at = [&psi2](Label lab) {
    const Scalar* a = psi2.find(lab);
    REQUIRE(a != nullptr);
    return *a;
  };
  // label layout: (s1 r1, s1 r2, s2 r1, s2 r2)
  CHECK(amp_at({1, 1, 1, 1}) == Scalar(ExactScalar(l1)));
  CHECK(amp_at({2, 2, 2, 2}) == Scalar(ExactScalar(l2)));
  CHECK(amp_at({1, 2, 1, 2}) == sqrtq(l1 * l2));
  CHECK(amp_at({2, 1, 2, 1}) == sqrtq(l1 * l2));
}

TEST_CASE("inner products") {
  ReplicaState g = ghz(3, 2);
  CHECK(inner_product(g, g).rational_value() == 1);

  SystemShape sh{3, {2, 2, 2}, 1};
  ReplicaState a(sh, {{{1, 1, 1}, Scalar::integer(1)}});
  ReplicaState b(sh, {{{2, 2, 2}, Scalar::integer(1)}});
  CHECK(inner_product(a, b).is_zero());

  ReplicaState p2 = tensor_power(schmidt_state({mpq_class(1, 2), mpq_class(1, 2)}), 2);
  CHECK(inner_product(p2, p2).rational_value() == 1);
}

TEST_CASE("inner product is conjugate-linear in the left argument") {
  SystemShape sh{1, {2}, 1};
  Scalar i_half(ExactScalar(mpq_class(0), mpq_class(1, 2)));
  ReplicaState a(sh, {{{1}, i_half}});
  ReplicaState b(sh, {{{1}, Scalar::integer(1)}});
  CHECK(inner_product(a, b) == Scalar(ExactScalar(mpq_class(0), mpq_class(-1, 2))));
  CHECK(inner_product(b, a) == i_half);
}

TEST_CASE("norm_sq basics") {
  SystemShape sh{2, {2, 2}, 1};
  CHECK(norm_sq(ReplicaState::empty(sh)).is_zero());
  CHECK(norm_sq(bell()).rational_value() == 1);
}

TEST_CASE("add_scaled") {
  ReplicaState a = two_term_bipartite();
  CHECK(add_scaled(a, Scalar::integer(-1), a).is_empty());

  ReplicaState same = add_scaled(a, Scalar(), a);
  REQUIRE(same.terms().size() == 2);
  CHECK(same.terms()[0].amp == a.terms()[0].amp);

  SystemShape sh{2, {2, 2}, 1};
  ReplicaState x(sh, {{{1, 1}, Scalar::integer(1)}});
  ReplicaState y(sh, {{{2, 2}, Scalar::integer(1)}});
  CHECK(add_scaled(x, Scalar::integer(1), y).terms().size() == 2);

  SystemShape other{2, {2, 3}, 1};
  CHECK_THROWS_AS(add_scaled(x, Scalar::integer(1), ReplicaState::empty(other)),
                  std::invalid_argument);
}

TEST_CASE("tensor power norm multiplies") {
  RandomSource rng(77);
  for (int t = 0; t < 20; ++t) {
    SystemShape sh{rng.uniform(1, 3), {}, 1};
    sh.dims.assign(sh.subsystems, rng.uniform(2, 3));
    std::vector<Term> terms;
    int count = rng.uniform(1, 4);
    for (int i = 0; i < count; ++i) {
      Label lab(sh.subsystems);
      for (int s = 0; s < sh.subsystems; ++s)
        lab[s] = static_cast<std::uint8_t>(rng.uniform(1, sh.dims[s]));
      terms.push_back({std::move(lab), Scalar(ExactScalar(rng.small_rational()))});
    }
    ReplicaState psi(sh, std::move(terms));
    int m = rng.uniform(1, 3);
    mpq_class n1 = norm_sq(psi).rational_value();
    mpq_class expect = 1;
    for (int i = 0; i < m; ++i) expect *= n1;
    CHECK(norm_sq(tensor_power(psi, m)).rational_value() == expect);
  }
}

TEST_CASE("inner_product(a, a) equals norm_sq and vanishes only when empty") {
  ReplicaState a = w3_threelevel();
  CHECK(inner_product(a, a) == norm_sq(a));
  SystemShape sh{2, {2, 2}, 1};
  CHECK(inner_product(ReplicaState::empty(sh), ReplicaState::empty(sh)).is_zero());
}

TEST_CASE("stored zero amplitudes are pruned and labels validated") {
  SystemShape sh{2, {2, 2}, 1};
  ReplicaState s(sh, {{{1, 1}, Scalar::integer(0)}, {{1, 2}, Scalar::integer(2)}});
  CHECK(s.terms().size() == 1);
  CHECK_THROWS_AS(ReplicaState(sh, {{{1, 3}, Scalar::integer(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(ReplicaState(sh, {{{1}, Scalar::integer(1)}}), std::invalid_argument);
}

TEST_CASE("degenerate one-dimensional subsystems are allowed") {
  SystemShape sh{2, {1, 2}, 1};
  ReplicaState s(sh, {{{1, 2}, Scalar::integer(1)}});
  CHECK(norm_sq(s).rational_value() == 1);
  CHECK(reduced_density_rank(s, 0).rank == 1);
}

TEST_CASE("tensor power respects the term cap") {
  ReplicaState chi = aharonov(3);  // six terms
  CHECK_THROWS_AS(tensor_power(chi, 6, 1000), ResourceLimitError);
}

TEST_CASE("reduced density ranks of named examples") {
  CHECK(reduced_density_rank(ghz(3, 2), 0).rank == 2);
  CHECK(reduced_density_rank(ghz(3, 2), 0).exact);

  SystemShape sh{3, {2, 2, 2}, 1};
  ReplicaState product(sh, {{{1, 1, 1}, Scalar::integer(1)}});
  for (int s = 0; s < 3; ++s) CHECK(reduced_density_rank(product, s).rank == 1);

  ReplicaState bs = biseparable({mpq_class(1, 3), mpq_class(1, 3), mpq_class(1, 3)}, 3, 1);
  CHECK(reduced_density_rank(bs, 2).rank == 1);
  CHECK(reduced_density_rank(bs, 0).rank == 3);

  CHECK(reduced_density_rank(aharonov_plus3(), 0).rank == 3);
}

TEST_CASE("rank is invariant under local relabeling") {
  RandomSource rng(4242);
  for (int t = 0; t < 15; ++t) {
    SystemShape sh{2, {3, 3}, 1};
    std::vector<Term> terms;
    for (int i = 0; i < 4; ++i) {
      Label lab{static_cast<std::uint8_t>(rng.uniform(1, 3)),
                static_cast<std::uint8_t>(rng.uniform(1, 3))};
      terms.push_back({std::move(lab), Scalar(ExactScalar(rng.small_rational()))});
    }
    ReplicaState psi(sh, terms);
    // relabel subsystem 1 by the cycle 1->2->3->1
    std::vector<Term> renamed = terms;
    for (Term& t2 : renamed) t2.label[0] = static_cast<std::uint8_t>(t2.label[0] % 3 + 1);
    ReplicaState psi2(sh, std::move(renamed));
    CHECK(reduced_density_rank(psi, 0).rank == reduced_density_rank(psi2, 0).rank);
    CHECK(reduced_density_rank(psi, 1).rank == reduced_density_rank(psi2, 1).rank);
  }
}

TEST_CASE("matrix_rank falls back to floats across incompatible radicals") {
  // rows proportional over Q(sqrt2, sqrt3): rank 1, but elimination has to mix radicals
  std::vector<std::vector<Scalar>> m{
      {Scalar::integer(1), Scalar(ExactScalar::sqrt_rational(mpq_class(2)))},
      {Scalar(ExactScalar::sqrt_rational(mpq_class(3))),
       Scalar(ExactScalar::sqrt_rational(mpq_class(6)))}};
  RankResult r = matrix_rank(m);
  CHECK(r.rank == 1);
  CHECK_FALSE(r.exact);
}

TEST_CASE("normalization divides by the exact norm") {
  SystemShape sh{1, {2}, 1};
  ReplicaState s(sh, {{{1}, Scalar::integer(3)}, {{2}, Scalar::integer(4)}});
  ReplicaState n = normalized(s);
  CHECK(norm_sq(n).rational_value() == 1);
  CHECK(n.exact());
  CHECK_THROWS_AS(normalized(ReplicaState::empty(sh)), std::domain_error);
}
