#include <algorithm>
#include <random>

#include "doctest.h"
#include "jpst/steinberg.hpp"

using namespace jpst;

namespace {

std::vector<RootGrading> zoo_gradings() {
  auto f2 = RingSpec::prime_field(2), f3 = RingSpec::prime_field(3);
  return {make_grading(full_pair(f2), GradingKind::AI),
          make_grading(full_pair(f3), GradingKind::AI),
          make_grading(rect_pair(f2, 1, 2), GradingKind::AI),
          make_grading(rect_pair(f3, 1, 2), GradingKind::AI),
          make_grading(hermitian_pair(f2, 2), GradingKind::Cher),
          make_grading(quadform_hyperbolic(2, {1}), GradingKind::Bqf)};
}

Word pow(int letter, int k) { return Word(static_cast<std::size_t>(k), letter); }

}  // namespace

TEST_SUITE("steinberg") {

TEST_CASE("word reduction") {
  CHECK(free_reduce({0, 2, 3, 1}).empty());
  CHECK(free_reduce({0, 2, 3, 4}) == Word{0, 4});
  CHECK(cyclic_reduce({1, 2, 4, 0}) == Word{2, 4});
  CHECK(inverse({0, 3}) == Word{2, 1});
  CHECK(comm({0}, {2}) == Word{0, 2, 1, 3});
  CHECK(free_reduce(comm({}, {2})).empty());
}

TEST_CASE("coset enumeration of small groups") {
  auto c3 = todd_coxeter(1, {pow(0, 3)}, {}, 100);
  CHECK(c3.complete);
  CHECK(c3.size() == 3);
  // S3 = <a, b | a^2, b^2, (ab)^3>
  std::vector<Word> s3{pow(0, 2), pow(2, 2), {0, 2, 0, 2, 0, 2}};
  CHECK(todd_coxeter(2, s3, {}, 100).size() == 6);
  CHECK(todd_coxeter(2, s3, {{0}}, 100).size() == 3);
  // A5 = <a, b | a^2, b^3, (ab)^5>
  Word ab5;
  for (int k = 0; k < 5; ++k) ab5 = ab5 * Word{0, 2};
  auto a5 = todd_coxeter(2, {pow(0, 2), pow(2, 3), ab5}, {}, 1000);
  CHECK(a5.complete);
  CHECK(a5.size() == 60);
  // rows are closed under the relators
  for (int c = 0; c < 60; ++c) CHECK(a5.act(c, ab5) == c);
}

TEST_CASE("coset budget exhaustion returns an incomplete table") {
  auto t = todd_coxeter(2, {pow(0, 2), pow(2, 2)}, {}, 500);
  CHECK_FALSE(t.complete);
  CHECK(t.status.find("exhausted") != std::string::npos);
  CHECK_THROWS_AS(todd_coxeter(1, {{4}}, {}, 10), Error);
}

TEST_CASE("linear(F2,3) presentation") {
  auto p = linear_presentation(RingSpec::prime_field(2), 3);
  CHECK(p.generators().size() == 6);
  // oracle counts over ordered index pairs
  std::size_t e2 = 0, e3 = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          if (i == j || k == l) continue;
          if (j != k && i != l) ++e2;
          if (k == j && l != i) ++e3;
        }
  CHECK(p.instances().at("E1") == 6 * 4);
  CHECK(p.instances().at("E2") == e2 * 4);
  CHECK(p.instances().at("E3") == e3 * 4);
  CHECK_THROWS_AS(linear_presentation(RingSpec::prime_field(2), 2), Error);
}

TEST_CASE("linear(F2,3) maps onto EL3(F2)") {
  auto p = linear_presentation(RingSpec::prime_field(2), 3);
  auto h = linear_hom(p);
  auto rep = evaluate_hom<FinMatrix, FinMatrixHash>(p, h, 168);
  CHECK_MESSAGE(rep.passed(), rep.first_failure());
  auto t = todd_coxeter(p, {}, 100'000);
  REQUIRE(t.complete);
  CHECK(t.size() % 168 == 0);
  auto k = kernel_centrality_report<FinMatrix, FinMatrixHash>(t, h);
  CHECK(k.passed());
  CHECK(k.data()["verdict"] == "central");
  CHECK(k.data()["image order"] == 168);
  MESSAGE("St3(F2) order " << t.size());
}

TEST_CASE("relator order does not change the coset count") {
  auto p = linear_presentation(RingSpec::prime_field(2), 3);
  std::vector<std::size_t> order(p.relators().size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::mt19937 g(5);
  std::shuffle(order.begin(), order.end(), g);
  CHECK(todd_coxeter(p.permuted(order), {}, 100'000).size() == todd_coxeter(p, {}, 100'000).size());
}

TEST_CASE("a broken assignment is caught with a witness") {
  auto p = linear_presentation(RingSpec::prime_field(3), 3);
  auto h = linear_hom(p);
  std::swap(h.images[0], h.images[1]);
  auto rep = evaluate_hom<FinMatrix, FinMatrixHash>(p, h);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.find("relators")->witnesses.empty());
}

TEST_CASE("rect-EJ(F2,1,2) maps onto EL3(F2)") {
  auto p = rect_ej_presentation(RingSpec::prime_field(2), 1, 2);
  CHECK(p.generators().size() == 6);
  CHECK(p.instances().at("EJ1") == 2 * 16);
  auto rep = evaluate_hom<FinMatrix, FinMatrixHash>(p, rect_hom(p), 168);
  CHECK_MESSAGE(rep.passed(), rep.first_failure());
  auto t = todd_coxeter(p, {}, 100'000);
  REQUIRE(t.complete);
  CHECK(t.size() % 168 == 0);
  CHECK(kernel_centrality_report<FinMatrix, FinMatrixHash>(t, rect_hom(p)).passed());
}

TEST_CASE("rect-EJ(F3,1,2) and (F2,2,2) relations hold in EL") {
  for (auto [pp, qq, n] : {std::tuple{1, 2, 3u}, std::tuple{2, 2, 2u}}) {
    auto p = rect_ej_presentation(RingSpec::prime_field(n), pp, qq);
    auto rep = evaluate_hom<FinMatrix, FinMatrixHash>(p, rect_hom(p));
    CHECK_MESSAGE(rep.passed(), rep.first_failure());
  }
}

TEST_CASE("rect-EJ(F2,1,1) does not close") {
  auto p = rect_ej_presentation(RingSpec::prime_field(2), 1, 1);
  CHECK(p.relators().size() == 2);
  CHECK_FALSE(todd_coxeter(p, {}, 2000).complete);
}

TEST_CASE("pi is a homomorphism on the zoo gradings") {
  for (auto& g : zoo_gradings()) {
    auto p = jordan_st_presentation(g);
    auto alg = TkkAlgebra::build(g.pair());
    auto rep = evaluate_hom<ModMatrix, ModMatrixHash>(p, pi_hom(p, alg), pe_group(alg).order());
    CHECK_MESSAGE(rep.passed(), g.name() << ": " << rep.first_failure());
    std::size_t vp = g.pair().elements(Sign::Plus).size(), vm = g.pair().elements(Sign::Minus).size();
    CHECK(p.instances().at("St1") == vp * vp + vm * vm);
  }
}

TEST_CASE("jordan-St refuses an unverified grading") {
  auto g = make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::AI);
  std::array<std::vector<Submodule>, 2> spaces{
      std::vector<Submodule>{Submodule::whole(2, 2), Submodule::zero(2, 2)},
      std::vector<Submodule>{g.space(Sign::Minus, 0), g.space(Sign::Minus, 1)}};
  CHECK_THROWS_AS(jordan_st_presentation(RootGrading(g.pair(), g.grading(), spaces)), Error);
}

TEST_CASE("b words follow the case split") {
  auto g = make_grading(hermitian_pair(RingSpec::prime_field(2), 2), GradingKind::Cher);
  auto p = free_presentation(g.pair());
  auto a11 = *g.root_index(Root::eps(1).scaled(2)), a22 = *g.root_index(Root::eps(2).scaled(2)),
       a12 = *g.root_index(Root::eps(1) + Root::eps(2));
  Vec h11 = g.space(Sign::Plus, a11).basis()[0], h22 = g.space(Sign::Minus, a22).basis()[0];
  Vec h12p = g.space(Sign::Plus, a12).basis()[0], h12m = g.space(Sign::Minus, a12).basis()[0];
  Vec h11m = g.space(Sign::Minus, a11).basis()[0];
  // 2e1 and 2e2 are orthogonal
  CHECK(b_word(p, g, a11, a22, h11, h22).empty());
  // e1+e2 <- 2e1: trailing x+(-Q_u v)
  Word w = b_word(p, g, a12, a11, h12p, h11m);
  Vec q = g.pair().Q(Sign::Plus, h12p, h11m);
  REQUIRE_FALSE(vec::is_zero(q));
  CHECK(w.back() == p.x(Sign::Plus, vec::neg(q, 2))[0]);
  // 2e1 -> e1+e2: leading x-(-Q_v u)
  Word w2 = b_word(p, g, a11, a12, h11, h12m);
  CHECK(w2.front() == p.x(Sign::Minus, vec::neg(g.pair().Q(Sign::Minus, h12m, h11), 2))[0]);
  CHECK(b_word(p, g, a11, a12, h11, Vec(3, 0)).empty());
  CHECK_THROWS_AS(b_word(p, g, a11, a11, h11, h11m), Error);
}

TEST_CASE("b words factor x+(u) x-(v) in PE and EL") {
  for (auto& g : zoo_gradings()) {
    auto rep = verify_b_words(g);
    CHECK_MESSAGE(rep.passed(), g.name() << ": " << rep.first_failure());
  }
  auto rep = verify_b_words(make_grading(rect_pair(RingSpec::prime_field(2), 1, 2), GradingKind::AI));
  CHECK(rep.data()["EL checked"] == true);
  CHECK(rep.find("stvr1 EL")->instances > 0);
  CHECK(rep.find("Bergmann")->instances > 0);
}

TEST_CASE("Phi triangle") {
  for (auto [n, pp, qq] : {std::tuple{2u, 1, 2}, std::tuple{3u, 1, 2}, std::tuple{3u, 2, 1}, std::tuple{2u, 2, 2}}) {
    auto rep = verify_phi_triangle(RingSpec::prime_field(n), pp, qq);
    CHECK_MESSAGE(rep.passed(), rep.first_failure());
  }
  CHECK(verify_phi_triangle(RingSpec::prime_field(2), 2, 1).find("less1")->instances > 0);
  CHECK(verify_phi_triangle(RingSpec::prime_field(2), 1, 2).find("less2")->instances > 0);
}

TEST_CASE("orthogonal St3 instances are redundant") {
  auto g = make_grading(rect_pair(RingSpec::prime_field(2), 2, 2), GradingKind::AI);
  auto full = jordan_st_presentation(g, true);
  auto reduced = jordan_st_presentation(g, false);
  CHECK(reduced.instances().at("St3+") < full.instances().at("St3+"));
  auto a = todd_coxeter(full, {}, 200'000), b = todd_coxeter(reduced, {}, 200'000);
  REQUIRE(a.complete);
  REQUIRE(b.complete);
  CHECK(a.size() == b.size());
  CHECK(a.size() % 20160 == 0);
}

TEST_CASE("St(J) of full(F3)") {
  auto pair = full_pair(RingSpec::prime_field(3));
  auto p = stj_presentation(pair);
  auto alg = TkkAlgebra::build(pair);
  auto h = pi_hom(p, alg);
  auto rep = evaluate_hom<ModMatrix, ModMatrixHash>(p, h, 12);
  CHECK_MESSAGE(rep.passed(), rep.first_failure());
  auto t = todd_coxeter(p, {}, 100'000);
  REQUIRE(t.complete);
  CHECK(t.size() % 12 == 0);
  auto k = kernel_centrality_report<ModMatrix, ModMatrixHash>(t, h);
  CHECK(k.data()["verdict"] == "central");
  CHECK(k.data()["kernel order"].get<std::size_t>() * 12 == t.size());
  MESSAGE("St(F3) order " << t.size());
  CHECK_THROWS_AS(stj_presentation(rect_pair(RingSpec::prime_field(2), 1, 2)), Error);
}

TEST_CASE("kernel report needs a closed table") {
  auto p = rect_ej_presentation(RingSpec::prime_field(2), 1, 1);
  auto t = todd_coxeter(p, {}, 100);
  CHECK_THROWS_AS((kernel_centrality_report<FinMatrix, FinMatrixHash>(t, rect_hom(p))), Error);
}

TEST_CASE("text export") {
  auto p = linear_presentation(RingSpec::prime_field(2), 3);
  auto s = export_text(p);
  CHECK(s.rfind("# linear(F2,3)", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == static_cast<long>(p.relators().size() + 2));
  CHECK(s.find("x12_0 x12_0") != std::string::npos);
}

}
