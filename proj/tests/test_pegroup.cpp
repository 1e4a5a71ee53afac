#include "doctest.h"
#include "jpst/pegroup.hpp"

using namespace jpst;

namespace {

PeGroup pe(const JordanPair& p) { return pe_group(TkkAlgebra::build(p)); }

}  // namespace

TEST_SUITE("pegroup") {

TEST_CASE("reference fingerprints") {
  auto s3 = symmetric_fingerprint(3);
  CHECK(s3.order == 6);
  CHECK(s3.centre_order == 1);
  CHECK(s3.derived_order == 3);
  auto a4 = alternating_fingerprint(4);
  CHECK(a4.order == 12);
  CHECK(a4.derived_order == 4);
  CHECK(a4.order_histogram.count(6) == 0);
  auto a6 = alternating_fingerprint(6);
  CHECK(a6.order == 360);
  CHECK(a6.perfect);
}

TEST_CASE("PE(full(F2)) is S3") {
  auto g = pe(full_pair(RingSpec::prime_field(2)));
  CHECK(g.order() == 6);
  auto r = group_analyze(g);
  CHECK(r.centre_order == 1);
  CHECK(r.derived_order == 3);
  CHECK_FALSE(r.perfect);
  CHECK(matches_symmetric(g, 3).matches);
  CHECK_FALSE(matches_alternating(g, 4).matches);
}

TEST_CASE("PE(full(F3)) is A4") {
  auto g = pe(full_pair(RingSpec::prime_field(3)));
  CHECK(g.order() == 12);
  auto r = group_analyze(g);
  CHECK(r.derived_order == 4);
  CHECK(r.order_histogram.count(6) == 0);
  CHECK(matches_alternating(g, 4).matches);
}

TEST_CASE("PE(H2(F2)) has the S6 fingerprint") {
  auto g = pe(hermitian_pair(RingSpec::prime_field(2), 2));
  CHECK(g.order() == 720);
  auto m = matches_symmetric(g, 6);
  CHECK_MESSAGE(m.matches, m.detail);
}

TEST_CASE("larger PE groups are perfect") {
  // PSL2(5) and GL3(F2)
  auto g5 = pe(full_pair(RingSpec::prime_field(5)));
  CHECK(g5.order() == 60);
  CHECK(group_analyze(g5).perfect);
  auto g = pe(rect_pair(RingSpec::prime_field(2), 1, 2));
  CHECK(g.order() == 168);
  CHECK(group_analyze(g).perfect);
}

TEST_CASE("an abelian closure is not perfect") {
  auto alg = TkkAlgebra::build(rect_pair(RingSpec::prime_field(3), 1, 2));
  std::vector<ModMatrix> gens{exp_aut(alg, Sign::Plus, {1, 0}), exp_aut(alg, Sign::Plus, {0, 1})};
  auto g = PeGroup::closure(gens, ModMatrix::identity(alg.dim(), 3),
                            [](const ModMatrix& a, const ModMatrix& b) { return a * b; });
  CHECK(g.order() == 9);
  auto r = group_analyze(g);
  CHECK(r.centre_order == 9);
  CHECK(r.derived_order == 1);
  CHECK_FALSE(r.perfect);
  CHECK(r.abelian_invariants == std::vector<std::size_t>{3, 3});
}

TEST_CASE("PE elements preserve the bracket") {
  auto alg = TkkAlgebra::build(hermitian_pair(RingSpec::prime_field(2), 2));
  auto g = pe_group(alg);
  for (std::size_t i = 0; i < g.order(); i += 37) CHECK(preserves_bracket(alg, g[i]));
}

TEST_CASE("EL modulo its centre is PE") {
  struct Case {
    Coeff p;
    std::size_t i, j, el, centre, pe;
  };
  for (auto c : {Case{2, 1, 1, 6, 1, 6}, Case{3, 1, 1, 24, 2, 12}, Case{2, 1, 2, 168, 1, 168}}) {
    auto rep = verify_pe_quotient(RingSpec::prime_field(c.p), c.i, c.j);
    CHECK_MESSAGE(rep.passed(), rep.first_failure());
    CHECK(rep.data()["EL order"] == c.el);
    CHECK(rep.data()["centre order"] == c.centre);
    CHECK(rep.data()["PE order"] == c.pe);
  }
  CHECK_THROWS_AS(verify_pe_quotient(RingSpec::modular(4), 1, 1), Error);
}

TEST_CASE("relative kernels for the trivial ideals") {
  auto p = full_pair(RingSpec::prime_field(3));
  auto zero = pe_relative_kernel(p, {Submodule::zero(3, 1), Submodule::zero(3, 1)});
  CHECK(zero.report.passed());
  CHECK(zero.kernel.size() == 1);
  CHECK(zero.image.order() == 12);
  auto all = pe_relative_kernel(p, {Submodule::whole(3, 1), Submodule::whole(3, 1)});
  CHECK(all.report.passed());
  CHECK(all.kernel.size() == 12);
  CHECK(all.image.order() == 1);
}

TEST_CASE("relative kernel of full(Z/4) -> full(F2)") {
  Submodule two(4, 1, {{2}});
  auto r = pe_relative_kernel(full_pair(RingSpec::modular(4)), {two, two});
  CHECK_MESSAGE(r.report.passed(), r.report.first_failure());
  CHECK(r.image.order() == 6);
  CHECK(r.group.order() == r.kernel.size() * 6);
  CHECK(r.kernel.size() > 1);
}

TEST_CASE("Weyl elements of full(F_q)") {
  for (Coeff q : {2u, 3u, 5u}) {
    auto alg = TkkAlgebra::build(full_pair(RingSpec::prime_field(q)));
    auto rep = verify_weyl(alg);
    CHECK_MESSAGE(rep.passed(), rep.first_failure());
    CHECK(rep.find("Weyl relation")->instances == (q - 1) * q);
  }
  auto alg = TkkAlgebra::build(full_pair(RingSpec::prime_field(3)));
  ModMatrix w = weyl_element(alg, {1});
  CHECK((w * w * w * w).is_identity());
  CHECK(pair_inverse(alg.pair(), Sign::Plus, {2}) == Vec{2});
  CHECK(pair_inverse(full_pair(RingSpec::prime_field(5)), Sign::Plus, {2}) == Vec{3});
}

TEST_CASE("Weyl element errors") {
  auto alg = TkkAlgebra::build(full_pair(RingSpec::prime_field(3)));
  CHECK_THROWS_AS(weyl_element(alg, {0}), Error);
  auto rect = TkkAlgebra::build(rect_pair(RingSpec::prime_field(2), 1, 2));
  CHECK_THROWS_AS(weyl_element(rect, {1, 0}), Error);
}

}
