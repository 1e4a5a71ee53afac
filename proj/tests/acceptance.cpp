// One PASS/FAIL line per criterion; exit status 1 if any selected criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jpst/elementary_lie.hpp"
#include "jpst/steinberg.hpp"
#include "jpst/zoo.hpp"

using namespace jpst;

namespace {

// Failure notes; empty means pass.
struct Outcome {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void report(const Report& r) {
    if (!r.passed()) problems.push_back(r.title() + ": " + r.first_failure());
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> run;
};

RingSpec::Ptr F(Coeff q) { return ring_from_name("F" + std::to_string(q)); }

void elementary_suite(Outcome& o) {
  for (std::size_t n : {3, 4, 5})
    for (Coeff q : {2, 3}) {
      auto t0 = std::chrono::steady_clock::now();
      ElementaryOptions opt;
      opt.suite = ElementarySuite::E;
      opt.n = IndexSet::range(1, static_cast<int>(n));
      auto r = verify_elementary_relations(F(q), opt);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.report(r);
      o.require(s < 30, "EL" + std::to_string(n) + "(F" + std::to_string(q) + ") took " + std::to_string(s) + " s");
      for (auto name : {"E1", "E2", "E3", "E4"}) o.require(r.find(name) && r.find(name)->instances > 0, name);
    }
}

void block_identity(Outcome& o) {
  ElementaryOptions opt;
  opt.suite = ElementarySuite::Exc2;
  opt.i = IndexSet::range(1, 1);
  opt.j = IndexSet::range(2, 3);
  auto r = verify_elementary_relations(F(3), opt);
  o.report(r);
  // every (u, v) in M_12(F3) x M_21(F3)
  o.require(r.find("exc2")->instances == 9 * 9, "exc2 instances " + std::to_string(r.find("exc2")->instances));
}

void jordan_identities(Outcome& o) {
  JordanOptions ex;
  ex.mode = SampleMode::Exhaustive;
  for (auto name : {"F2", "F3", "Z4"}) {
    auto r = verify_jp_suite(full_pair(ring_from_name(name)), ex);
    o.report(r);
    o.require(r.data()["mode"] == "exhaustive", std::string("full(") + name + ") not exhaustive");
  }
  auto r = verify_jp_suite(rect_pair(F(2), 1, 2), ex);
  o.report(r);
  JordanOptions sm;
  sm.mode = SampleMode::Sample;
  sm.samples = 10'000;
  for (auto& pair : {rect_pair(F(2), 2, 2), hermitian_pair(F(2), 2), alternating_pair(F(2), 4),
                     quadform_hyperbolic(3, {1})}) {
    auto s = verify_jp_suite(pair, sm);
    o.report(s);
    o.require(s.find("JP1")->instances >= 10'000, pair.name() + " sampled too little");
  }
}

void peirce_ranks(Outcome& o) {
  auto pair = full_pair(ring_from_name("Mat2(F2)"));
  Vec e11{1, 0, 0, 0};
  auto pd = peirce(pair, e11, e11);
  for (Sign s : {Sign::Plus, Sign::Minus})
    o.require(pd.ranks(s) == std::array<std::size_t, 3>{1, 2, 1}, std::string("ranks ") + sign_str(s));
  o.report(pd.report);
  for (auto name : {"Q rule", "triple rule", "V2 V0 rule"})
    o.require(pd.report.find(name) && pd.report.find(name)->instances > 0, name);
}

void grading_suite(Outcome& o) {
  std::vector<RootGrading> gs{make_grading(rect_pair(F(2), 1, 2), GradingKind::AI),
                              make_grading(rect_pair(F(3), 1, 2), GradingKind::AI),
                              make_grading(hermitian_pair(F(2), 2), GradingKind::Cher),
                              make_grading(alternating_pair(F(2), 4), GradingKind::Dalt),
                              make_grading(quadform_hyperbolic(2, {1}), GradingKind::Bqf)};
  for (auto& g : gs) o.report(verify_grading_suite(g));
}

void tkk_suite(Outcome& o) {
  for (auto& e : pair_zoo()) {
    auto r = verify_tkk_suite(TkkAlgebra::build(zoo_pair(e.selector)));
    o.report(r);
    for (auto name : {"Jacobi", "grading", "centre", "delta vs triple"})
      o.require(r.find(name) != nullptr, e.label + " lacks " + name);
  }
}

void psi_iso(Outcome& o) {
  for (auto [q, p, r] : {std::tuple{2u, 1, 1}, std::tuple{2u, 1, 2}, std::tuple{3u, 1, 1}}) {
    auto rep = verify_psi(F(q), p, r);
    o.report(rep);
    o.note(rep.title() + ": dim e " + rep.data()["dim e"].dump() + ", centre " + rep.data()["dim centre"].dump() +
           ", tkk " + rep.data()["dim tkk"].dump());
  }
}

void finite_pe(Outcome& o) {
  auto fp = [](const JordanPair& pair, GroupReport* out) {
    auto g = pe_group(TkkAlgebra::build(pair));
    *out = group_analyze(g);
    return g;
  };
  GroupReport a, b, c;
  auto g2 = fp(full_pair(F(2)), &a);
  o.require(a.order == 6, "PE(full F2) order " + std::to_string(a.order));
  o.require(matches_symmetric(g2, 3).matches, "PE(full F2) is not S3");
  auto g3 = fp(full_pair(F(3)), &b);
  o.require(b.order == 12, "PE(full F3) order " + std::to_string(b.order));
  o.require(b.derived_order == 4, "PE(full F3) derived order " + std::to_string(b.derived_order));
  o.require(!b.order_histogram.count(6), "PE(full F3) has an element of order 6");
  o.require(matches_alternating(g3, 4).matches, "PE(full F3) is not A4");
  auto g6 = fp(hermitian_pair(F(2), 2), &c);
  o.require(c.order == 720, "PE(H2 F2) order " + std::to_string(c.order));
  auto m = matches_symmetric(g6, 6);
  o.require(m.matches, "PE(H2 F2) is not S6: " + m.detail);
}

void pe_quotient(Outcome& o) {
  struct Want {
    Coeff q;
    std::size_t p, r, el, z, pe;
  };
  for (auto w : {Want{2, 1, 1, 6, 1, 6}, Want{3, 1, 1, 24, 2, 12}, Want{2, 1, 2, 168, 1, 168}}) {
    auto rep = verify_pe_quotient(F(w.q), w.p, w.r);
    o.report(rep);
    auto& d = rep.data();
    o.require(d["EL order"] == w.el && d["centre order"] == w.z && d["PE order"] == w.pe,
              rep.title() + " orders " + d["EL order"].dump() + "/" + d["centre order"].dump() + "/" +
                  d["PE order"].dump());
  }
}

void homomorphisms(Outcome& o) {
  auto lin = linear_presentation(F(2), 3);
  o.report(evaluate_hom<FinMatrix, FinMatrixHash>(lin, linear_hom(lin), 168));
  auto ej = rect_ej_presentation(F(2), 1, 2);
  o.report(evaluate_hom<FinMatrix, FinMatrixHash>(ej, rect_hom(ej), 168));
  for (auto& e : graded_zoo()) {
    auto g = zoo_grading(e.selector);
    auto p = jordan_st_presentation(g);
    auto alg = TkkAlgebra::build(g.pair());
    // surjectivity only where PE closes under the cap; alternating(F2,4) has PE of type D4
    std::optional<std::size_t> pe;
    try {
      pe = pe_group(alg, 100'000).order();
    } catch (const BudgetExceeded&) {
    }
    auto rep = evaluate_hom<ModMatrix, ModMatrixHash>(p, pi_hom(p, alg), pe);
    o.report(rep);
    o.note(e.label + ": " + std::to_string(p.relators().size()) + " relators, " +
           (pe ? "onto PE of order " + std::to_string(*pe) : std::string("PE over the closure cap")));
  }
}

void b_words(Outcome& o) {
  std::size_t el = 0, bergmann = 0;
  for (auto& e : graded_zoo()) {
    auto r = verify_b_words(zoo_grading(e.selector));
    o.report(r);
    if (auto c = r.find("stvr1 EL")) el += c->instances;
    if (auto c = r.find("Bergmann")) bergmann += c->instances;
  }
  o.require(el > 0, "no EL instances");
  o.require(bergmann > 0, "no Bergmann instances");
  o.note("EL instances " + std::to_string(el) + ", Bergmann instances " + std::to_string(bergmann));
}

void cosets(Outcome& o) {
  auto check = [&](const Presentation& p, std::size_t target) {
    auto t = todd_coxeter(p, {}, 100'000);
    if (!t.complete) {
      o.require(false, p.name() + ": " + t.status);
      return;
    }
    auto k = kernel_centrality_report<FinMatrix, FinMatrixHash>(
        t, p.kind() == PresentationKind::Linear ? linear_hom(p) : rect_hom(p));
    o.report(k);
    o.require(k.data()["image order"] == target, p.name() + " image order " + k.data()["image order"].dump());
    o.note(p.name() + ": order " + std::to_string(t.size()) + ", kernel " + k.data()["kernel order"].dump() + " " +
           k.data()["verdict"].get<std::string>());
  };
  check(linear_presentation(F(2), 3), 168);
  check(rect_ej_presentation(F(2), 1, 1), 6);
}

void weyl(Outcome& o) {
  for (Coeff q : {2, 3, 5}) {
    auto r = verify_weyl(TkkAlgebra::build(full_pair(F(q))));
    o.report(r);
    o.require(r.find("Weyl relation")->instances == (q - 1) * q, r.title() + " instance count");
  }
}

std::vector<Criterion> criteria() {
  return {
      {1, "elementary relations in EL_n(F_q)", 30 * 6, elementary_suite},
      {2, "block identity over M_12(F3)", 5, block_identity},
      {3, "Jordan pair identities", 60, jordan_identities},
      {4, "Peirce ranks in full(Mat2(F2))", 5, peirce_ranks},
      {5, "root grading suite", 60, grading_suite},
      {6, "TKK suite", 60, tkk_suite},
      {7, "Psi isomorphism", 30, psi_iso},
      {8, "finite PE groups", 120, finite_pe},
      {9, "EL/Z = PE", 120, pe_quotient},
      {10, "Steinberg homomorphisms", 120, homomorphisms},
      {11, "b(u,v) factorization", 60, b_words},
      {12, "coset enumeration", 300, cosets},
      {13, "Weyl relation", 10, weyl},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only_arg;
  bool verbose = false;
  app.add_option("--only", only_arg, "run a single criterion, 1 to 13");
  app.add_flag("-v,--verbose", verbose, "print notes");
  CLI11_PARSE(app, argc, argv);
  int only = 0;
  if (!only_arg.empty()) {
    try {
      only = std::stoi(only_arg, nullptr, 10);
    } catch (const std::exception&) {
    }
    if (only < 1 || only > 13) {
      std::cerr << "--only takes 1 to 13\n";
      return 2;
    }
  }

  int failed = 0;
  for (auto& c : criteria()) {
    if (only && c.id != only) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.problems.push_back("time " + std::to_string(s) + " s over " + std::to_string(c.limit_s));
    bool ok = o.problems.empty();
    failed += !ok;
    std::printf("%s %02d %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), s);
    for (auto& p : o.problems) std::printf("    %s\n", p.c_str());
    if (verbose || only)
      for (auto& n : o.notes) std::printf("    note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
