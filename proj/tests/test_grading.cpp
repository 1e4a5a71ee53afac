#include "doctest.h"
#include "jpst/grading.hpp"

using namespace jpst;

namespace {

Root e(int i) { return Root::eps(i); }

std::vector<RootGrading> zoo_gradings() {
  return {make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::AI),
          make_grading(rect_pair(RingSpec::prime_field(3), 1, 2), GradingKind::AI),
          make_grading(hermitian_pair(RingSpec::prime_field(2), 2), GradingKind::Cher),
          make_grading(alternating_pair(RingSpec::prime_field(2), 4), GradingKind::Dalt),
          make_grading(quadform_hyperbolic(2, {1}), GradingKind::Bqf)};
}

}  // namespace

TEST_SUITE("grading") {

TEST_CASE("A^I grading of rect(F2,1,2)") {
  auto g = make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::AI);
  REQUIRE(g.roots() == std::vector<Root>{e(1) - e(2), e(1) - e(3)});
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::size_t k = 0; k < 2; ++k) CHECK(g.space(s, k).rank() == 1);
  CHECK(g.space(Sign::Plus, e(1) - e(3)) == Submodule(2, 2, {{0, 1}}));
  CHECK(g.fully_idempotent() == true);
  CHECK(g.family().at(e(1) - e(2)) == Idempotent{{1, 0}, {1, 0}});
  auto fi = is_fully_idempotent(g);
  CHECK(fi.holds);
  CHECK(fi.family.size() == 2);
}

TEST_CASE("grading suite passes on the zoo gradings") {
  for (auto& g : zoo_gradings()) {
    auto rep = verify_grading_suite(g);
    CHECK_MESSAGE(rep.passed(), g.name() << ": " << rep.first_failure());
    CHECK(rep.find("RG1 triple")->instances > 0);
  }
}

TEST_CASE("C^her grading of H2(F2)") {
  auto g = make_grading(hermitian_pair(RingSpec::prime_field(2), 2), GradingKind::Cher);
  REQUIRE(g.roots().size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(g.space(Sign::Plus, k).rank() == 1);
  // Q(h12) h11 = h22
  Vec h11 = g.space(Sign::Plus, e(1).scaled(2)).basis()[0];
  Vec h12 = g.space(Sign::Plus, e(1) + e(2)).basis()[0];
  Vec q = g.pair().Q(Sign::Plus, h12, h11);
  CHECK_FALSE(vec::is_zero(q));
  CHECK(g.space(Sign::Plus, e(2).scaled(2)).contains(q));
  CHECK(g.fully_idempotent() == true);
  CHECK(g.family().at(e(1) + e(2)) == Idempotent{h12, h12});
  auto rep = verify_grading_suite(g);
  // the printed forms of rgjp4 and rgjp5 are violated here
  CHECK(rep.data()["rgjp4 printed direction violations"].get<int>() > 0);
  CHECK(rep.data()["rgjp5 printed list violations"].get<int>() > 0);
}

TEST_CASE("D^alt and B^qf gradings are fully idempotent") {
  auto d = make_grading(alternating_pair(RingSpec::prime_field(3), 4), GradingKind::Dalt);
  CHECK(d.roots().size() == 6);
  CHECK(d.fully_idempotent() == true);
  CHECK(verify_grading_suite(d).passed());
  auto b = make_grading(quadform_hyperbolic(3, {1, 2}), GradingKind::Bqf);
  CHECK(b.roots() == std::vector<Root>{e(0), e(0) - e(1), e(0) + e(1)});
  CHECK(b.space(Sign::Plus, e(0)).rank() == 2);
  CHECK(b.space(Sign::Plus, e(0) + e(1)) == Submodule(3, 4, {{1, 0, 0, 0}}));
  CHECK(b.space(Sign::Minus, e(0) + e(1)) == Submodule(3, 4, {{0, 1, 0, 0}}));
  CHECK(verify_grading_suite(b).passed());
  CHECK(b.fully_idempotent() == true);
}

TEST_CASE("moving a basis vector breaks RG1") {
  auto g = make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::AI);
  std::array<std::vector<Submodule>, 2> spaces{
      std::vector<Submodule>{Submodule::whole(2, 2), Submodule::zero(2, 2)},
      std::vector<Submodule>{g.space(Sign::Minus, 0), g.space(Sign::Minus, 1)}};
  RootGrading bad(g.pair(), g.grading(), spaces);
  auto rep = verify_grading_suite(bad);
  CHECK(rep.find("direct sum")->passed());
  CHECK_FALSE(rep.find("RG1 triple")->passed());
  CHECK_FALSE(rep.find("RG1 triple")->witnesses.empty());
}

TEST_CASE("overlapping root spaces fail the direct sum") {
  auto g = make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::AI);
  std::array<std::vector<Submodule>, 2> spaces{
      std::vector<Submodule>{Submodule::whole(2, 2), g.space(Sign::Plus, 1)},
      std::vector<Submodule>{g.space(Sign::Minus, 0), g.space(Sign::Minus, 1)}};
  CHECK_FALSE(verify_grading_suite(RootGrading(g.pair(), g.grading(), spaces)).find("direct sum")->passed());
}

TEST_CASE("cog intersections reproduce the A^I grading of rect(F2,2,2)") {
  auto pair = rect_pair(RingSpec::prime_field(2), 2, 2);
  auto ref = make_grading(pair, GradingKind::AI);
  REQUIRE(ref.family().size() == 4);
  auto full = grading_from_cog(pair, ref.grading(), ref.family(), &ref);
  CHECK(verify_grading_suite(full).passed());
  // i0 = 1, j0 = 3
  std::map<Root, Idempotent> small;
  for (auto a : {e(1) - e(3), e(2) - e(3), e(1) - e(4)}) small[a] = ref.family().at(a);
  auto g = grading_from_cog(pair, ref.grading(), small, &ref);
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::size_t k = 0; k < 4; ++k) CHECK(g.space(s, k) == ref.space(s, k));
}

TEST_CASE("cog of full(F2) with e = (1,1) is the whole pair") {
  auto pair = full_pair(RingSpec::prime_field(2));
  auto ref = make_grading(pair, GradingKind::AI);
  auto g = grading_from_cog(pair, ref.grading(), {{e(1) - e(2), {{1}, {1}}}});
  CHECK(g.space(Sign::Plus, 0) == Submodule::whole(2, 1));
  CHECK(g.space(Sign::Minus, 0) == Submodule::whole(2, 1));
}

TEST_CASE("cog rejects bad families") {
  auto pair = rect_pair(RingSpec::prime_field(2), 1, 2);
  auto ref = make_grading(pair, GradingKind::AI);
  CHECK_THROWS_AS(grading_from_cog(pair, ref.grading(), {{e(1) - e(2), {{1, 0}, {0, 1}}}}), Error);
  CHECK_THROWS_AS(grading_from_cog(pair, ref.grading(), {}), Error);
  // idempotent of the other root
  CHECK_THROWS_AS(grading_from_cog(pair, ref.grading(), {{e(1) - e(2), {{0, 1}, {0, 1}}}}, &ref), Error);
}

TEST_CASE("nil subpair grading is not idempotent") {
  Submodule nil(4, 1, {{2}});
  auto s = rect_subpair(RingSpec::modular(4), 1, 2, nil, nil);
  auto g = make_grading(s, GradingKind::AI);
  CHECK(verify_grading_suite(g).passed());
  CHECK(g.fully_idempotent() == false);
  auto fi = is_fully_idempotent(g);
  CHECK_FALSE(fi.holds);
  CHECK(fi.reason.find("no nonzero idempotent") != std::string::npos);
}

TEST_CASE("rect over Z/4 is graded and fully idempotent") {
  auto g = make_grading(rect_pair(RingSpec::modular(4), 1, 2), GradingKind::AI);
  CHECK(verify_grading_suite(g).passed());
  CHECK(g.fully_idempotent() == true);
}

TEST_CASE("grading kind must match the pair") {
  CHECK_THROWS_AS(make_grading(hermitian_pair(RingSpec::prime_field(2), 2), GradingKind::AI), Error);
  CHECK_THROWS_AS(make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::Cher), Error);
  ModMatrix b(1, 1, 3);
  b.at(0, 0) = 2;
  CHECK_THROWS_AS(make_grading(quadform_pair(3, {1}, b), GradingKind::Bqf), Error);
  CHECK_THROWS_AS(make_grading(quadform_hyperbolic(3, {}), GradingKind::Dqf), Error);
}

TEST_CASE("every basis vector has a root") {
  for (auto& g : zoo_gradings())
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (std::size_t k = 0; k < g.roots().size(); ++k)
        for (auto& b : g.space(s, k).basis()) CHECK(g.root_of(s, b) == k);
}

}
