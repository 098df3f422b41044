#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pga/commands.hpp"
#include "pga/registry.hpp"
#include "pga/scenario.hpp"

namespace {

std::string command_list() {
  std::string s;
  for (const auto& c : pga::command_names()) s += (s.empty() ? "" : ", ") + c;
  return s + ", checks, show";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial groupoid actions on split rings"};
  std::string command;
  std::string fixture;
  std::string file;
  std::string format = "text";
  std::uint32_t p = 3;
  pga::RunOptions opt;
  std::size_t atoms = 0;

  app.add_option("command", command, "One of: " + command_list())->required();
  auto* fx = app.add_option("--fixture", fixture, "Built-in scenario: FX-HEX, FX-B2, FX-GAMMA, FX-DAT, FX-GLOB");
  auto* fl = app.add_option("--file", file, "Scenario file")->check(CLI::ExistingFile);
  fx->excludes(fl);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--p", p, "Prime for built-in fixtures")->needs(fx);
  app.add_flag("--all-transversals", opt.all_transversals, "Use every base and transversal");
  app.add_option("--max-census", opt.max_census, "Candidate cap for census")->check(CLI::PositiveNumber);
  app.add_option("--atoms", atoms, "Census over F_p^N instead of the scenario ring")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (atoms) opt.census_atoms = atoms;

  std::optional<pga::Scenario> scenario;
  std::string input = fixture.empty() ? file : fixture;
  const auto fail_input = [&](const std::string& msg) {
    pga::Outcome o{command, input, 2, {"error: " + msg}, pga::Json{{"error", msg}}};
    std::cout << (format == "json" ? pga::render_json(o) : pga::render_text(o));
    return 2;
  };
  try {
    if (!fixture.empty()) {
      scenario = pga::fixture_scenario(fixture, p);
    } else if (!file.empty()) {
      std::ifstream in(file);
      std::stringstream buf;
      buf << in.rdbuf();
      scenario = pga::parse_scenario(buf.str());
    }
  } catch (const pga::Error& e) {
    return fail_input(e.what());
  }

  if (command == "show") {
    if (!scenario) return fail_input("show needs --fixture or --file");
    std::cout << pga::serialize_scenario(*scenario);
    return 0;
  }
  if (command == "checks") {
    if (!scenario) return fail_input("checks needs --fixture or --file");
    if (scenario->checks.empty()) return fail_input("the scenario has no check lines");
    int worst = 0;
    for (const pga::Outcome& o : pga::run_checks(*scenario, input, opt)) {
      std::cout << (format == "json" ? pga::render_json(o) : pga::render_text(o));
      worst = std::max(worst, o.exit_code);
    }
    return worst;
  }
  const pga::Outcome o = pga::run_command(command, scenario ? &*scenario : nullptr, input, opt);
  std::cout << (format == "json" ? pga::render_json(o) : pga::render_text(o));
  return o.exit_code;
}
