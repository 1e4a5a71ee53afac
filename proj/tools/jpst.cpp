#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "jpst/scenario.hpp"

using jpst::ScenarioConfig;

namespace {

void add_common(CLI::App* sub, ScenarioConfig& c) {
  sub->add_option("--pair", c.pair, "full, rect, hermitian, alternating, quadform")->capture_default_str();
  sub->add_option("--ring", c.ring, "F<q>, Z<n>, Mat<m>(<ring>)")->capture_default_str();
  sub->add_option("--ring-file", c.ring_file, "structure constants JSON")->check(CLI::ExistingFile);
  sub->add_option("--I", c.i, "rows, or size for hermitian/alternating")->capture_default_str();
  sub->add_option("--J", c.j, "columns, or extra quadform vectors")->capture_default_str();
  sub->add_option("--n", c.n, "matrix size for linear groups")->capture_default_str();
  sub->add_option("--max-group", c.budget.max_group_elements)->capture_default_str();
  sub->add_option("--max-instances", c.budget.max_instances)->capture_default_str();
  sub->add_option("--max-enumeration", c.budget.max_enumeration)->capture_default_str();
  sub->add_option("--samples", c.budget.samples)->capture_default_str();
  sub->add_option("--max-cosets", c.budget.max_cosets)->capture_default_str();
  sub->add_option("--seed", c.budget.seed)->capture_default_str();
  sub->add_option("--out", c.out, "write the JSON report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan pair and Steinberg group verification"};
  app.require_subcommand(1);
  ScenarioConfig c;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", c.suite)->required()->check(CLI::IsMember(jpst::scenario_suites()));
  add_common(verify, c);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate a finite group");
  enumerate->add_option("--group", c.group)->required()->check(CLI::IsMember({"el", "pe"}));
  add_common(enumerate, c);

  auto* coset = app.add_subcommand("coset", "coset enumeration of a Steinberg presentation");
  coset->add_option("--presentation", c.presentation)
      ->required()
      ->check(CLI::IsMember({"linear", "rect-EJ", "jordan-St", "stJ"}));
  coset->add_option("--export", c.export_path, "write the relators as text");
  add_common(coset, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : jpst::kExitConfig;
  }
  for (auto* sub : {verify, enumerate, coset})
    if (sub->parsed()) c.command = sub->get_name();

  auto res = jpst::run_scenario(c);
  std::string text = res.report.dump(2);
  if (c.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(c.out);
    if (!out) {
      std::cerr << "cannot write " << c.out << '\n';
      return jpst::kExitConfig;
    }
    out << text << '\n';
  }
  if (res.report.contains("error")) std::cerr << res.report["error"]["message"].get<std::string>() << '\n';
  return res.exit_code;
}
