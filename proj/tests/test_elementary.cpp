#include <random>

#include "doctest.h"
#include "jpst/elementary_lie.hpp"

using namespace jpst;

TEST_SUITE("tkk") {

TEST_CASE("Psi is onto tkk with kernel the centre") {
  struct Case {
    RingSpec::Ptr ring;
    std::size_t p, q, dim_e, dim_tkk;
  };
  auto f2 = RingSpec::prime_field(2), f3 = RingSpec::prime_field(3);
  // e = gl_N over prime fields unless the characteristic divides p and q
  // (then sl_N); over F4 the diagonal is only k e1 + F4 1
  std::vector<Case> cases{{f2, 1, 1, 4, 3}, {f3, 1, 1, 4, 3}, {f2, 1, 2, 9, 8}, {f3, 1, 2, 9, 8},
                          {f2, 2, 2, 15, 14}, {RingSpec::finite_field_q(4), 1, 1, 7, 5}};
  for (auto& c : cases) {
    auto rep = verify_psi(c.ring, c.p, c.q);
    CHECK_MESSAGE(rep.passed(), c.ring->name() << " " << c.p << "," << c.q << ": " << rep.first_failure());
    CHECK(rep.data()["dim e"] == c.dim_e);
    CHECK(rep.data()["dim tkk"] == c.dim_tkk);
  }
}

TEST_CASE("Psi over Mat2(F2)") {
  // [A, A] = sl2 contains 1, so e1 lies in sl_N(A): dim e = 16 - 1
  auto rep = verify_psi(RingSpec::matrix(RingSpec::prime_field(2), 2), 1, 1);
  CHECK_MESSAGE(rep.passed(), rep.first_failure());
  CHECK(rep.data()["dim e"] == 15);
  CHECK(rep.data()["dim centre"] == 1);
  CHECK(rep.data()["dim tkk"] == 14);
}

TEST_CASE("Psi on small matrices") {
  auto f3 = RingSpec::prime_field(3);
  auto e = ElementaryLie::build(f3, 1, 1);
  auto alg = TkkAlgebra::build(rect_pair(f3, 1, 1));
  PsiMap psi(e, alg);
  CHECK(psi.apply(e.entry(0, 1, {1})) == alg.from_plus({1}));
  CHECK(psi.apply(e.entry(1, 0, {1})) == alg.from_minus({2}));
  CHECK(psi.apply(e.e1()) == alg.zeta());
  CHECK(vec::is_zero(psi.apply(vec::add(e.e1(), e.e2(), 3))));
}

TEST_CASE("Ad e_s(w) induces exp_s(w)") {
  for (Coeff n : {2u, 3u}) {
    auto ring = RingSpec::prime_field(n);
    auto e = ElementaryLie::build(ring, 1, 2);
    auto alg = TkkAlgebra::build(rect_pair(ring, 1, 2));
    PsiMap psi(e, alg);
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (auto& w : alg.pair().elements(s)) {
        auto got = psi.uad(e.e(s, w));
        CHECK_MESSAGE(got == exp_aut(alg, s, w, false), "n=" << n << " sign " << sign_str(s));
      }
  }
}

TEST_CASE("uad is multiplicative") {
  auto ring = RingSpec::prime_field(3);
  auto e = ElementaryLie::build(ring, 1, 2);
  auto alg = TkkAlgebra::build(rect_pair(ring, 1, 2));
  PsiMap psi(e, alg);
  std::mt19937 g(7);
  auto rnd = [&] { return Vec{static_cast<Coeff>(g() % 3), static_cast<Coeff>(g() % 3)}; };
  for (int t = 0; t < 20; ++t) {
    FinMatrix a = e.e(Sign::Plus, rnd()) * e.e(Sign::Minus, rnd());
    FinMatrix b = e.e(Sign::Minus, rnd()) * e.e(Sign::Plus, rnd());
    CHECK(psi.uad(a * b) == psi.uad(a) * psi.uad(b));
    CHECK(preserves_bracket(alg, psi.uad(a)));
  }
  CHECK(psi.uad(FinMatrix::identity(ring, IndexSet::range(1, 3))).is_identity());
}

TEST_CASE("blocks follow the pair layout") {
  auto ring = RingSpec::prime_field(3);
  auto e = ElementaryLie::build(ring, 2, 1);
  // V+ coordinates (r q + c), V- coordinates (c p + r)
  FinMatrix x = e.block(Sign::Plus, {1, 2});
  CHECK(x.at(1, 3) == ring->code({1}));
  CHECK(x.at(2, 3) == ring->code({2}));
  FinMatrix y = e.block(Sign::Minus, {1, 2});
  CHECK(y.at(3, 2) == ring->code({2}));
  FinMatrix m = e.e(Sign::Minus, {1, 0});
  CHECK(m.at(3, 1) == ring->code({2}));
  CHECK_THROWS_AS(e.block(Sign::Plus, {1}), Error);
  CHECK_THROWS_AS(e.from_fin(FinMatrix::identity(ring, IndexSet::range(1, 2))), Error);
}

}
