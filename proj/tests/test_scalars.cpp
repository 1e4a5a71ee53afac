#include "doctest.h"
#include "jpst/scalars.hpp"
#include "oracle.hpp"

using namespace jpst;

TEST_SUITE("scalars") {

TEST_CASE("prime field F3 has units 1 and 2") {
  auto f3 = RingSpec::prime_field(3);
  auto units = enumerate_units(f3);
  REQUIRE(units.size() == 2);
  CHECK(units[0].coords() == Vec{1});
  CHECK(units[1].coords() == Vec{2});
  CHECK(f3->is_field());
}

TEST_CASE("Z/4 units are 1 and 3") {
  auto z4 = RingSpec::modular(4);
  auto units = enumerate_units(z4);
  REQUIRE(units.size() == 2);
  CHECK(units[0].coords() == Vec{1});
  CHECK(units[1].coords() == Vec{3});
  CHECK_FALSE(z4->is_field());
}

TEST_CASE("F4 from the built-in polynomial") {
  auto f4 = RingSpec::finite_field_q(4);
  CHECK(f4->cardinality() == 4);
  CHECK(f4->is_field());
  CHECK(enumerate_units(f4).size() == 3);
  // x^2 = x + 1
  Vec x{0, 1};
  CHECK(f4->mul(x, x) == Vec{1, 1});
  CHECK(verify_ring_axioms(*f4).passed());
}

TEST_CASE("F9 is a field of order 9") {
  auto f9 = RingSpec::finite_field_q(9);
  CHECK(f9->cardinality() == 9);
  CHECK(enumerate_units(f9).size() == 8);
}

TEST_CASE("reducible polynomial is rejected") {
  // x^2 + 1 = (x + 1)^2 over F2
  CHECK_THROWS_AS(RingSpec::finite_field(2, {1, 0, 1}), Error);
  // x^2 + x + 1 over F3 has the root 1
  CHECK_THROWS_AS(RingSpec::finite_field(3, {1, 1, 1}), Error);
}

TEST_CASE("Mat2(F2): 16 elements, 6 units, transpose involution") {
  auto m2 = RingSpec::matrix(RingSpec::prime_field(2), 2);
  CHECK(m2->cardinality() == 16);
  CHECK_FALSE(m2->commutative());
  CHECK(m2->has_involution());
  CHECK(verify_ring_axioms(*m2).passed());
  auto units = enumerate_units(m2);
  CHECK(units.size() == oracle::count_det(2, 2, false));
  CHECK(units.size() == 6);
  // E12^J = E21
  Vec e12 = vec::unit(4, 1), e21 = vec::unit(4, 2);
  CHECK(m2->involution(e12) == e21);
}

TEST_CASE("Mat2(F3) units match the GL2 count") {
  auto m2 = RingSpec::matrix(RingSpec::prime_field(3), 2);
  CHECK(enumerate_units(m2).size() == oracle::count_det(2, 3, false));
}

TEST_CASE("dual numbers from JSON") {
  auto j = nlohmann::json::parse(R"({
    "name": "F2[e]", "p": 2, "labels": ["1", "e"],
    "table": [[0, 0, [1, 0]], [0, 1, [0, 1]], [1, 0, [0, 1]], [1, 1, [0, 0]]],
    "unit": [1, 0]
  })");
  auto r = RingSpec::from_json(j);
  CHECK(r->cardinality() == 4);
  CHECK(enumerate_units(r).size() == 2);
  CHECK_FALSE(r->is_field());
  CHECK(r->str(r->code(Vec{1, 1})) == "1+e");
}

TEST_CASE("non-associative structure constants are rejected") {
  // a a = b, b b = a, a b = b a = 0: (a a) b = a but a (a b) = 0
  std::vector<std::vector<Vec>> t = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
      {{0, 0, 1}, {0, 0, 0}, {0, 1, 0}},
  };
  CHECK_THROWS_AS(RingSpec::structure_constants("bad", {"1", "a", "b"}, 2, t, {1, 0, 0}), Error);
}

TEST_CASE("involution that is not an anti-homomorphism is rejected") {
  // Mat2(F2) with the identity map as involution: (E12 E21)^J = E11 but E21 E12 = E22
  auto m2 = RingSpec::matrix(RingSpec::prime_field(2), 2);
  CHECK_THROWS_AS(RingSpec::structure_constants("M", m2->labels(), 2, m2->table(), m2->one(),
                                                ModMatrix::identity(4, 2)),
                  Error);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (auto r : {RingSpec::modular(4), RingSpec::modular(6), RingSpec::finite_field_q(8),
                 RingSpec::matrix(RingSpec::modular(4), 2)}) {
    auto rep = verify_ring_axioms(*r);
    CHECK_MESSAGE(rep.passed(), r->name());
  }
}

TEST_CASE("code tables agree with coordinate arithmetic") {
  auto r = RingSpec::matrix(RingSpec::prime_field(2), 2);
  for (RingSpec::Code a = 0; a < 16; ++a)
    for (RingSpec::Code b = 0; b < 16; ++b) {
      CHECK(r->mul(a, b) == r->code(r->mul(r->coords(a), r->coords(b))));
      CHECK(r->add(a, b) == r->code(r->add(r->coords(a), r->coords(b))));
    }
}

TEST_CASE("RingElement arithmetic") {
  auto f4 = RingSpec::finite_field_q(4);
  RingElement x(f4, Vec{0, 1});
  RingElement one(f4, f4->one());
  CHECK(x * x == x + one);
  CHECK((x * x * x) == one);
  CHECK((x - x).is_zero());
}

}
