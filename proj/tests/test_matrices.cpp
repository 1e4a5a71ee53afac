#include "doctest.h"
#include "jpst/matrices.hpp"
#include "oracle.hpp"

using namespace jpst;

namespace {
RingSpec::Code c(const RingSpec::Ptr& r, Coeff v) { return r->scalar_code(v); }
}  // namespace

TEST_SUITE("matrices") {

TEST_CASE("elementary matrix is offset one plus a single entry") {
  auto f3 = RingSpec::prime_field(3);
  auto n = IndexSet::range(1, 3);
  auto e = elementary(f3, n, 1, 2, c(f3, 2));
  CHECK(e.offset() == 1);
  CHECK(e.entries().size() == 1);
  CHECK(e.at(1, 2) == c(f3, 2));
  CHECK(e.at(3, 3) == c(f3, 1));
  CHECK(elementary(f3, n, 1, 2, 0).is_identity());
  CHECK_THROWS_AS(elementary(f3, n, 2, 2, 1), Error);
}

TEST_CASE("stable embedding: e_12(a) in EL_3 and EL_5 carry the same data") {
  auto f2 = RingSpec::prime_field(2);
  auto a = elementary(f2, IndexSet::range(1, 3), 1, 2, 1);
  auto b = elementary(f2, IndexSet::range(1, 5), 1, 2, 1);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("inverse over a noncommutative ring") {
  auto m2 = RingSpec::matrix(RingSpec::prime_field(2), 2);
  auto n = IndexSet::range(1, 2);
  // [[E11, E22], [E22, E11]] has no unit entry but is invertible
  FinMatrix g = FinMatrix::identity(m2, n);
  auto e11 = m2->code(vec::unit(4, 0)), e22 = m2->code(vec::unit(4, 3));
  g.assign(1, 1, e11);
  g.assign(1, 2, e22);
  g.assign(2, 1, e22);
  g.assign(2, 2, e11);
  auto gi = g.inverse();
  CHECK((g * gi) == FinMatrix::identity(m2, n));
  CHECK((gi * g) == FinMatrix::identity(m2, n));
}

TEST_CASE("commutator identities") {
  auto f3 = RingSpec::prime_field(3);
  auto n = IndexSet::range(1, 3);
  auto g = elementary(f3, n, 1, 2, 1) * elementary(f3, n, 2, 3, 2);
  auto h = elementary(f3, n, 3, 1, 1);
  CHECK(commutator(g, h).inverse() == commutator(h, g));
  CHECK(commutator(g, g).is_identity());
}

TEST_CASE("EL orders match unimodular counts") {
  struct Case { int n; Coeff p; };
  for (auto cs : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    auto r = RingSpec::prime_field(cs.p);
    auto g = el_group(r, IndexSet::range(1, cs.n));
    CHECK(g.order() == oracle::count_det(cs.n, cs.p, true));
  }
  CHECK(el_group(RingSpec::prime_field(2), IndexSet::range(1, 2)).order() == 6);
  CHECK(el_group(RingSpec::prime_field(3), IndexSet::range(1, 2)).order() == 24);
  CHECK(el_group(RingSpec::prime_field(2), IndexSet::range(1, 3)).order() == 168);
}

TEST_CASE("EL2(Z/4) is SL2(Z/4)") {
  // |SL2(Z/4)| = 48; EL = SL for local rings
  CHECK(el_group(RingSpec::modular(4), IndexSet::range(1, 2)).order() == 48);
}

TEST_CASE("E1-E4 over F2 and F3 for n = 3") {
  for (Coeff p : {2u, 3u}) {
    ElementaryOptions opt;
    opt.n = IndexSet::range(1, 3);
    auto rep = verify_elementary_relations(RingSpec::prime_field(p), opt);
    CHECK(rep.passed());
    CHECK(rep.find("E3")->instances > 0);
    CHECK(rep.find("E4")->instances > 0);
  }
}

TEST_CASE("E1-E4 over the noncommutative ring Mat2(F2)") {
  ElementaryOptions opt;
  opt.n = IndexSet::range(1, 3);
  auto rep = verify_elementary_relations(RingSpec::matrix(RingSpec::prime_field(2), 2), opt);
  CHECK(rep.passed());
}

TEST_CASE("E suite needs three indices") {
  ElementaryOptions opt;
  opt.n = IndexSet::range(1, 2);
  CHECK_THROWS_AS(verify_elementary_relations(RingSpec::prime_field(2), opt), Error);
}

TEST_CASE("instance budget is enforced") {
  ElementaryOptions opt;
  opt.n = IndexSet::range(1, 3);
  opt.max_instances = 10;
  CHECK_THROWS_AS(verify_elementary_relations(RingSpec::prime_field(2), opt), BudgetExceeded);
}

TEST_CASE("block commutator formula on M_{1,2}(F3)") {
  ElementaryOptions opt;
  opt.suite = ElementarySuite::Exc2;
  opt.i = IndexSet({1});
  opt.j = IndexSet({2, 3});
  auto rep = verify_elementary_relations(RingSpec::prime_field(3), opt);
  CHECK(rep.passed());
  CHECK(rep.data()["pairs"] == 81);
}

TEST_CASE("block commutator formula over Mat2(F2)") {
  ElementaryOptions opt;
  opt.suite = ElementarySuite::Exc2;
  opt.i = IndexSet({1});
  opt.j = IndexSet({2});
  CHECK(verify_elementary_relations(RingSpec::matrix(RingSpec::prime_field(2), 2), opt).passed());
}

TEST_CASE("EJ relations for a rectangular partition") {
  ElementaryOptions opt;
  opt.suite = ElementarySuite::EJ;
  opt.i = IndexSet({1});
  opt.j = IndexSet({2, 3});
  for (Coeff p : {2u, 3u}) CHECK(verify_elementary_relations(RingSpec::prime_field(p), opt).passed());
  opt.i = IndexSet({1, 2});
  opt.j = IndexSet({3});
  CHECK(verify_elementary_relations(RingSpec::prime_field(2), opt).passed());
}

TEST_CASE("block unipotents generate EL") {
  ElementaryOptions opt;
  opt.suite = ElementarySuite::Generation;
  opt.i = IndexSet({1});
  opt.j = IndexSet({2, 3});
  auto rep = verify_elementary_relations(RingSpec::prime_field(2), opt);
  CHECK(rep.passed());
  CHECK(rep.data()["order"] == 168);
}

TEST_CASE("e_block rejects overlapping or misshapen input") {
  auto f2 = RingSpec::prime_field(2);
  FinMatrix u(f2, IndexSet({1}), IndexSet({2}));
  CHECK_THROWS_AS(e_block(Sign::Plus, u, IndexSet({1}), IndexSet({1, 2})), Error);
  CHECK_THROWS_AS(e_block(Sign::Minus, u, IndexSet({1}), IndexSet({2})), Error);
}

TEST_CASE("group fingerprint of EL2(F3)") {
  auto g = el_group(RingSpec::prime_field(3), IndexSet::range(1, 2));
  auto f = fingerprint(g);
  CHECK(f.order == 24);
  CHECK(f.centre_order == 2);
  CHECK(f.derived_order == 8);  // SL2(F3)' = Q8
  CHECK(f.abelian_invariants == std::vector<std::size_t>{3});
}

}
