#include "jpst/scenario.hpp"

#include <chrono>
#include <fstream>
#include <functional>

#include "jpst/elementary_lie.hpp"
#include "jpst/steinberg.hpp"
#include "jpst/zoo.hpp"

namespace jpst {

nlohmann::json ScenarioConfig::to_json() const {
  return {{"command", command},
          {"suite", suite},
          {"group", group},
          {"presentation", presentation},
          {"pair", pair},
          {"ring", ring},
          {"ring_file", ring_file},
          {"I", i},
          {"J", j},
          {"n", n},
          {"budget",
           {{"max_group_elements", budget.max_group_elements},
            {"max_instances", budget.max_instances},
            {"max_enumeration", budget.max_enumeration},
            {"samples", budget.samples},
            {"max_cosets", budget.max_cosets},
            {"seed", budget.seed}}},
          {"out", out},
          {"export", export_path}};
}

std::vector<std::string> scenario_suites() {
  return {"ring", "elementary", "exc2", "jp", "quadratic", "roots", "grading", "tkk",
          "psi", "pe-quotient", "weyl", "b-words", "phi"};
}

namespace {

// Collects reports with timings.
struct Run {
  nlohmann::json reports = nlohmann::json::array();
  bool passed = true;

  void add(const std::function<Report()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto j = r.to_json();
    j["elapsed_ms"] = ms;
    passed = passed && r.passed();
    reports.push_back(std::move(j));
  }
};

RingSpec::Ptr resolve_ring(const ScenarioConfig& c) {
  if (c.ring_file.empty()) return ring_from_name(c.ring);
  std::ifstream in(c.ring_file);
  if (!in) throw Error("cannot read ring file " + c.ring_file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ring file " + c.ring_file + ": " + e.what());
  }
  return RingSpec::from_json(j);
}

PairSelector selector(const ScenarioConfig& c) { return {c.pair, resolve_ring(c), c.i, c.j}; }

JordanOptions jordan_options(const Budget& b) {
  JordanOptions o;
  o.samples = b.samples;
  o.seed = b.seed;
  return o;
}

void run_verify(const ScenarioConfig& c, Run& run) {
  const auto& s = c.suite;
  const Budget& b = c.budget;
  if (s == "ring") {
    auto ring = resolve_ring(c);
    run.add([&] { return verify_ring_axioms(*ring); });
  } else if (s == "elementary" || s == "exc2") {
    auto ring = resolve_ring(c);
    ElementaryOptions o;
    o.max_instances = b.max_instances;
    o.max_group = b.max_group_elements;
    if (s == "elementary") {
      o.suite = ElementarySuite::E;
      o.n = IndexSet::range(1, static_cast<int>(c.n));
    } else {
      o.suite = ElementarySuite::Exc2;
      o.i = IndexSet::range(1, static_cast<int>(c.i));
      o.j = IndexSet::range(static_cast<int>(c.i) + 1, static_cast<int>(c.i + c.j));
    }
    run.add([&] { return verify_elementary_relations(ring, o); });
  } else if (s == "jp" || s == "quadratic") {
    auto pair = zoo_pair(selector(c));
    auto o = jordan_options(b);
    if (s == "jp")
      run.add([&] { return verify_jp_suite(pair, o); });
    else
      run.add([&] { return verify_quadratic_contract(pair, o); });
  } else if (s == "roots") {
    auto g = zoo_grading(selector(c));
    run.add([&] { return verify_root_suite(g.grading().system()); });
    for (auto suite : {RootSuite::Grading, RootSuite::Gra2})
      run.add([&] { return verify_root_suite(g.grading(), suite); });
  } else if (s == "grading") {
    auto g = zoo_grading(selector(c));
    run.add([&] { return verify_grading_suite(g); });
  } else if (s == "tkk") {
    auto alg = TkkAlgebra::build(zoo_pair(selector(c)));
    run.add([&] { return verify_tkk_suite(alg); });
  } else if (s == "psi") {
    auto ring = resolve_ring(c);
    run.add([&] { return verify_psi(ring, c.i, c.j); });
  } else if (s == "pe-quotient") {
    auto ring = resolve_ring(c);
    run.add([&] { return verify_pe_quotient(ring, c.i, c.j, b.max_group_elements); });
  } else if (s == "weyl") {
    auto alg = TkkAlgebra::build(zoo_pair(selector(c)));
    run.add([&] { return verify_weyl(alg); });
  } else if (s == "b-words") {
    auto g = zoo_grading(selector(c));
    run.add([&] { return verify_b_words(g, b.max_instances); });
  } else if (s == "phi") {
    auto ring = resolve_ring(c);
    run.add([&] { return verify_phi_triangle(ring, c.i, c.j); });
  } else {
    throw Error("unknown suite '" + s + "'");
  }
}

void run_enumerate(const ScenarioConfig& c, Run& run) {
  if (c.group == "el") {
    auto ring = resolve_ring(c);
    run.add([&] {
      Report r("EL_" + std::to_string(c.n) + "(" + ring->name() + ")");
      auto g = el_group(ring, IndexSet::range(1, static_cast<int>(c.n)), c.budget.max_group_elements);
      r.data()["order"] = g.order();
      r.data()["fingerprint"] = group_analyze(g).to_json();
      return r;
    });
  } else if (c.group == "pe") {
    auto pair = zoo_pair(selector(c));
    run.add([&] {
      Report r("PE(" + pair.name() + ")");
      auto alg = TkkAlgebra::build(pair);
      auto g = pe_group(alg, c.budget.max_group_elements);
      auto fp = group_analyze(g);
      r.data()["order"] = g.order();
      r.data()["fingerprint"] = fp.to_json();
      for (std::size_t n : {3, 4, 5, 6}) {
        auto s = matches_symmetric(g, n), a = matches_alternating(g, n);
        if (s.matches) r.data()["matches"].push_back("S" + std::to_string(n));
        if (a.matches) r.data()["matches"].push_back("A" + std::to_string(n));
      }
      return r;
    });
  } else {
    throw Error("unknown group '" + c.group + "'");
  }
}

// Builds the presentation with its homomorphism to the matching finite group,
// enumerates cosets of the trivial subgroup, and reports the kernel.
template <class E, class Hash>
bool coset_chain(const ScenarioConfig& c, const Presentation& p, const Homomorphism<E>& h, Run& run) {
  if (!c.export_path.empty()) {
    std::ofstream out(c.export_path);
    if (!out) throw Error("cannot write " + c.export_path);
    out << export_text(p);
  }
  auto target = FiniteGroup<E, Hash>::closure(h.images, h.identity, h.mul, c.budget.max_group_elements).order();
  run.add([&] { return evaluate_hom<E, Hash>(p, h, target, c.budget.max_group_elements); });
  CosetTable t;
  run.add([&] {
    Report r("coset enumeration " + p.name());
    t = todd_coxeter(p, {}, c.budget.max_cosets);
    r.data()["complete"] = t.complete;
    r.data()["status"] = t.status;
    r.data()["cosets defined"] = t.defined;
    r.data()["generators"] = p.generators().size();
    r.data()["relators"] = p.relators().size();
    r.data()["instances"] = p.instances();
    if (t.complete) r.data()["order"] = t.size();
    return r;
  });
  if (!t.complete) return false;
  run.add([&] {
    auto r = kernel_centrality_report<E, Hash>(t, h);
    r.check("surjective").expect(r.data()["image order"] == target,
                                 "image order " + r.data()["image order"].dump() + " of " + std::to_string(target));
    return r;
  });
  return true;
}

bool run_coset(const ScenarioConfig& c, Run& run) {
  const auto& k = c.presentation;
  const Budget& b = c.budget;
  if (k == "linear") {
    auto p = linear_presentation(resolve_ring(c), c.n, b.max_instances);
    return coset_chain<FinMatrix, FinMatrixHash>(c, p, linear_hom(p), run);
  }
  if (k == "rect-EJ") {
    auto p = rect_ej_presentation(resolve_ring(c), c.i, c.j, b.max_instances);
    return coset_chain<FinMatrix, FinMatrixHash>(c, p, rect_hom(p), run);
  }
  if (k == "jordan-St" || k == "stJ") {
    auto sel = selector(c);
    auto p = k == "stJ" ? stj_presentation(zoo_pair(sel), b.max_instances)
                        : jordan_st_presentation(zoo_grading(sel), true, b.max_instances);
    auto alg = TkkAlgebra::build(*p.pair());
    return coset_chain<ModMatrix, ModMatrixHash>(c, p, pi_hom(p, alg), run);
  }
  throw Error("unknown presentation '" + k + "'");
}

void validate(const ScenarioConfig& c) {
  const Budget& b = c.budget;
  if (b.max_group_elements == 0 || b.max_instances == 0 || b.max_enumeration == 0 || b.samples == 0 ||
      b.max_cosets == 0)
    throw Error("budgets must be positive");
  if (c.i == 0 || c.j == 0 || c.n == 0) throw Error("sizes must be positive");
}

}  // namespace

ScenarioResult run_scenario(const ScenarioConfig& config) {
  ScenarioResult res;
  auto& rep = res.report;
  rep["schema_version"] = kReportSchemaVersion;
  rep["config"] = config.to_json();
  Run run;
  auto t0 = std::chrono::steady_clock::now();
  try {
    validate(config);
    if (config.command == "verify")
      run_verify(config, run);
    else if (config.command == "enumerate")
      run_enumerate(config, run);
    else if (config.command == "coset") {
      if (!run_coset(config, run)) res.exit_code = kExitBudget;
    } else
      throw Error("unknown command '" + config.command + "'");
    if (res.exit_code == kExitOk && !run.passed) res.exit_code = kExitFailures;
  } catch (const BudgetExceeded& e) {
    res.exit_code = kExitBudget;
    rep["error"] = {{"kind", "budget"}, {"message", e.what()}, {"reached", e.reached()}};
  } catch (const Error& e) {
    res.exit_code = kExitConfig;
    rep["error"] = {{"kind", "config"}, {"message", e.what()}};
  }
  // a budget stop keeps any failure already recorded
  if (res.exit_code == kExitBudget && !run.passed) res.exit_code = kExitFailures;
  rep["reports"] = run.reports;
  rep["passed"] = run.passed && res.exit_code == kExitOk;
  rep["exit_code"] = res.exit_code;
  rep["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace jpst
