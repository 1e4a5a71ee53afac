#include <random>

#include "doctest.h"
#include "jpst/tkk.hpp"

using namespace jpst;

namespace {

Vec rnd(std::mt19937& g, std::size_t d, Coeff n) {
  Vec v(d);
  for (auto& c : v) c = g() % n;
  return v;
}

std::vector<JordanPair> zoo() {
  auto f2 = RingSpec::prime_field(2);
  return {full_pair(f2),
          full_pair(RingSpec::prime_field(3)),
          full_pair(RingSpec::modular(4)),
          rect_pair(f2, 1, 2),
          rect_pair(f2, 2, 2),
          hermitian_pair(f2, 2),
          alternating_pair(f2, 4),
          quadform_hyperbolic(3, {1}),
          quadform_hyperbolic(2, {1}),
          full_pair(RingSpec::matrix(f2, 2))};
}

}  // namespace

TEST_SUITE("tkk") {

TEST_CASE("full(F3): L0 is spanned by zeta") {
  auto alg = TkkAlgebra::build(full_pair(RingSpec::prime_field(3)));
  CHECK(alg.dim() == 3);
  CHECK(alg.zeta_in_basis());
  Vec x = alg.from_plus({1}), y = alg.from_minus({1}), z = alg.zeta();
  CHECK(z == Vec{0, 1, 0});
  // delta(1, 1) = (2, -2) = 2 zeta, [x, y] = -delta
  CHECK(alg.delta({1}, {1}) == Vec{0, 2, 0});
  CHECK(alg.bracket(x, y) == Vec{0, 1, 0});
  CHECK(alg.bracket(z, x) == x);
  CHECK(alg.bracket(z, y) == Vec{0, 0, 2});
}

TEST_CASE("full(F5) has the sl2 table") {
  auto alg = TkkAlgebra::build(full_pair(RingSpec::prime_field(5)));
  REQUIRE(alg.dim() == 3);
  // x = E12, zeta = H/2, y = -E21: [x, y] = -H = -2 zeta
  Vec x = alg.from_plus({1}), y = alg.from_minus({1}), z = alg.zeta();
  CHECK(alg.bracket(x, y) == Vec{0, 3, 0});
  CHECK(alg.bracket(z, x) == x);
  CHECK(alg.bracket(z, y) == Vec{0, 0, 4});
}

TEST_CASE("rect(F2,1,2): dim L0 = 4") {
  auto alg = TkkAlgebra::build(rect_pair(RingSpec::prime_field(2), 1, 2));
  CHECK(alg.dim_plus() == 2);
  CHECK(alg.dim0() == 4);
  CHECK(alg.dim() == 8);
}

TEST_CASE("zero pair is degenerate") {
  auto alg = TkkAlgebra::build(zero_pair(3));
  CHECK(alg.dim() == 0);
  CHECK(alg.degenerate());
  auto rep = verify_tkk_suite(alg);
  CHECK(rep.passed());
  CHECK(rep.data()["degenerate"] == true);
}

TEST_CASE("tkk suite passes on the zoo") {
  for (auto& p : zoo()) {
    auto alg = TkkAlgebra::build(p);
    auto rep = verify_tkk_suite(alg);
    CHECK_MESSAGE(rep.passed(), p.name() << ": " << rep.first_failure());
    CHECK(rep.data()["centre size"] == 1);
  }
}

TEST_CASE("brackets inside V+ vanish") {
  auto alg = TkkAlgebra::build(rect_pair(RingSpec::prime_field(3), 1, 2));
  std::mt19937 g(1);
  for (int t = 0; t < 50; ++t) {
    Vec a = alg.from_plus(rnd(g, 2, 3)), b = alg.from_plus(rnd(g, 2, 3));
    CHECK(vec::is_zero(alg.bracket(a, b)));
    Vec c = alg.from_minus(rnd(g, 2, 3)), d = alg.from_minus(rnd(g, 2, 3));
    CHECK(vec::is_zero(alg.bracket(c, d)));
  }
}

TEST_CASE("delta brackets follow the derivation identity") {
  auto p = rect_pair(RingSpec::prime_field(3), 1, 2);
  auto alg = TkkAlgebra::build(p);
  std::mt19937 g(2);
  for (int t = 0; t < 100; ++t) {
    Vec x = rnd(g, 2, 3), y = rnd(g, 2, 3), u = rnd(g, 2, 3), v = rnd(g, 2, 3);
    Vec lhs = alg.bracket(alg.delta(x, y), alg.delta(u, v));
    Vec rhs = vec::sub(alg.delta(p.triple(Sign::Plus, x, y, u), v), alg.delta(u, p.triple(Sign::Minus, y, x, v)), 3);
    CHECK(lhs == rhs);
    // [delta(x, y), z] = {x y z}
    CHECK(alg.bracket(alg.delta(x, y), alg.from_plus(u)) == alg.from_plus(p.triple(Sign::Plus, x, y, u)));
  }
}

TEST_CASE("mutated bracket breaks Jacobi") {
  auto alg = TkkAlgebra::build(rect_pair(RingSpec::prime_field(2), 1, 2));
  std::size_t i = 0, j = alg.dim_plus();  // [x0, L0 basis 0]
  REQUIRE_FALSE(vec::is_zero(alg.basis_bracket(j, i)));
  alg.set_basis_bracket(i, j, alg.zero());
  alg.set_basis_bracket(j, i, alg.zero());
  auto rep = verify_tkk_suite(alg);
  CHECK(rep.find("alternating")->passed());
  CHECK_FALSE(rep.find("Jacobi")->passed());
  CHECK_FALSE(rep.find("Jacobi")->witnesses.empty());
}

TEST_CASE("exp is a homomorphism from V+") {
  auto alg = TkkAlgebra::build(rect_pair(RingSpec::prime_field(2), 1, 1));
  CHECK(exp_aut(alg, Sign::Plus, {0}).is_identity());
  for (Coeff a = 0; a < 2; ++a)
    for (Coeff b = 0; b < 2; ++b)
      CHECK(exp_aut(alg, Sign::Plus, {a}) * exp_aut(alg, Sign::Plus, {b}) ==
            exp_aut(alg, Sign::Plus, {static_cast<Coeff>((a + b) % 2)}));
  auto a3 = TkkAlgebra::build(rect_pair(RingSpec::prime_field(3), 1, 2));
  std::mt19937 g(4);
  for (int t = 0; t < 30; ++t) {
    Vec u = rnd(g, 2, 3), v = rnd(g, 2, 3);
    CHECK(exp_aut(a3, Sign::Minus, u) * exp_aut(a3, Sign::Minus, v) == exp_aut(a3, Sign::Minus, vec::add(u, v, 3)));
    if (!vec::is_zero(u)) CHECK_FALSE(exp_aut(a3, Sign::Plus, u).is_identity());
  }
}

TEST_CASE("exp+(x) on y is y - delta(x, y) + Q_x y") {
  auto p = rect_pair(RingSpec::prime_field(3), 1, 2);
  auto alg = TkkAlgebra::build(p);
  Vec x{1, 2}, y{2, 1};
  Vec img = exp_aut(alg, Sign::Plus, x).apply(alg.from_minus(y));
  Vec want = vec::add(vec::sub(alg.from_minus(y), alg.delta(x, y), 3), alg.from_plus(p.Q(Sign::Plus, x, y)), 3);
  CHECK(img == want);
}

TEST_CASE("pair automorphisms act on tkk") {
  auto p = full_pair(RingSpec::prime_field(3));
  auto alg = TkkAlgebra::build(p);
  CHECK(tkk_of_pair_aut(alg, ModMatrix::identity(1, 3), ModMatrix::identity(1, 3)).is_identity());
  ModMatrix two(1, 1, 3);
  two.at(0, 0) = 2;
  auto m = tkk_of_pair_aut(alg, two, two);
  ModMatrix want(3, 3, 3);
  want.at(0, 0) = 2;
  want.at(1, 1) = 1;
  want.at(2, 2) = 2;
  CHECK(m == want);
  CHECK_THROWS_AS(tkk_of_pair_aut(alg, two, ModMatrix::identity(1, 3)), Error);
}

TEST_CASE("Bergmann pair gives an automorphism") {
  auto p = rect_pair(RingSpec::prime_field(3), 1, 2);
  auto alg = TkkAlgebra::build(p);
  auto b = bergmann(p, {1, 0}, {0, 1});
  REQUIRE(b.minus_inverse.has_value());
  auto m = tkk_of_pair_aut(alg, b.plus, *b.minus_inverse);
  CHECK(preserves_bracket(alg, m));
}

TEST_CASE("L0 membership") {
  auto p = full_pair(RingSpec::prime_field(3));
  OpPair zeta{ModMatrix::identity(1, 3), ModMatrix::identity(1, 3)};
  zeta.minus.at(0, 0) = 2;
  CHECK(l0_contains(p, zeta));
  CHECK_FALSE(l0_contains(p, {ModMatrix::identity(1, 3), ModMatrix::identity(1, 3)}));
  auto z4 = full_pair(RingSpec::modular(4));
  OpPair two{ModMatrix(1, 1, 4), ModMatrix(1, 1, 4)};
  two.plus.at(0, 0) = 2;
  two.minus.at(0, 0) = 2;
  CHECK(l0_contains(z4, two));
}

}
