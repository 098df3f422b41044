#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "pga/commands.hpp"
#include "pga/registry.hpp"

using namespace pga;

namespace {

Outcome run_fixture(const std::string& command, const std::string& fixture, RunOptions opt = {}) {
  const Scenario s = fixture_scenario(fixture);
  return run_command(command, &s, fixture, opt);
}

bool has_line(const Outcome& o, const std::string& line) {
  for (const auto& l : o.lines) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("recoverable on the non-recoverable action") {
  const Outcome o = run_fixture("recoverable", "FX-B2");
  CHECK(o.exit_code == 0);
  CHECK(has_line(o, "not recoverable; 4/4 (base,transversal) pairs fail"));
  CHECK(o.result["recoverable"] == false);
  CHECK(o.result["failing"] == 4);
}

TEST_CASE("verify passes on every fixture") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    CHECK(run_fixture("verify", name).exit_code == 0);
  }
}

TEST_CASE("equivalence on the global fixture is all true") {
  const Outcome o = run_fixture("equivalence", "FX-GAMMA");
  CHECK(o.exit_code == 0);
  REQUIRE(o.result["reports"].size() == 1);
  const auto& r = o.result["reports"][0];
  CHECK(r["galois_and_trace"] == true);
  CHECK(r["groupoid_context_strict"] == true);
  CHECK(r["group_context_strict"] == true);
  CHECK(r["group_galois_and_trace"] == true);

  RunOptions all;
  all.all_transversals = true;
  const Outcome every = run_fixture("equivalence", "FX-GAMMA", all);
  CHECK(every.result["reports"].size() == 4);
}

TEST_CASE("commands report the fixture values") {
  CHECK(has_line(run_fixture("invariants", "FX-B2"), "dim 4"));
  CHECK(has_line(run_fixture("trace", "FX-B2"), "t(e1) = 2*e1"));
  CHECK(has_line(run_fixture("trace", "FX-B2"), "t(e2) = e2 + e4"));
  CHECK(has_line(run_fixture("skew", "FX-DAT"), "dim 12"));
  const Outcome g = run_fixture("galois", "FX-GAMMA");
  CHECK(g.result["galois"] == true);
  CHECK(has_line(g, "checked at 8 arrows: pass"));
  CHECK(run_fixture("galois", "FX-DAT").result["galois"] == false);
  CHECK(run_fixture("morita", "FX-DAT").exit_code == 0);
  const Outcome e = run_fixture("ext", "FX-DAT");
  CHECK(e.result["res_ext_identity"] == true);
  CHECK(e.result["action"]["l"]["map"] == Json{{"e1", "e4"}, {"e3", "e2"}});
  CHECK(run_fixture("globalize", "FX-GLOB").exit_code == 0);
  CHECK(run_fixture("globalize", "FX-DAT").exit_code == 0);
  CHECK(run_fixture("res", "FX-B2").result["datums"][0]["datum"]["ideals"]["y"] == Json{"e4", "e5", "e6"});
}

TEST_CASE("exit codes") {
  SECTION("input errors give 2") {
    CHECK(run_fixture("equivalence", "FX-B2").exit_code == 2);
    CHECK(run_fixture("ext", "FX-B2").exit_code == 2);
    CHECK(run_fixture("res", "FX-DAT").exit_code == 2);
    CHECK(run_fixture("nonsense", "FX-B2").exit_code == 2);
    CHECK(run_command("verify", nullptr, "").exit_code == 2);
    CHECK(run_fixture("skew", "FX-HEX").exit_code == 2);
  }
  SECTION("mathematical failures give 1") {
    Scenario s = fixture_scenario("FX-B2");
    const Arrow l = s.groupoid->at("l");
    s.action->iso[l] = PartialRingIso::from_pairs({{1, 4}});
    const Outcome o = run_command("verify", &s, "broken");
    CHECK(o.exit_code == 1);
    CHECK(o.status() == "fail");

    Scenario g = fixture_scenario("FX-GLOB");
    g.globalization = fx_glob_whole_ring();
    CHECK(run_command("verify", &g, "whole ring").exit_code == 1);
    CHECK(run_command("globalize", &g, "whole ring").exit_code == 1);
  }
}

TEST_CASE("census") {
  const Scenario s = fixture_scenario("FX-HEX");
  RunOptions opt;
  opt.census_atoms = 2;
  const Outcome o = run_command("census", &s, "FX-HEX", opt);
  CHECK(o.exit_code == 0);
  CHECK(o.result["datums"] == 106);
  CHECK(o.result["truncated"] == false);
  CHECK(o.result["disagreements"] == 0);
  CHECK(o.result["ext_failures"] == 0);
  CHECK(o.result["roundtrip_failures"] == 0);

  opt.max_census = 50;
  const Outcome cut = run_command("census", &s, "FX-HEX", opt);
  CHECK(cut.result["truncated"] == true);
  CHECK(cut.result["candidates"] == 50);

  opt.max_census = kDefaultCensusCap;
  opt.all_transversals = true;
  const Outcome every = run_command("census", &s, "FX-HEX", opt);
  CHECK(every.result["per_transversal"].size() == 4);
  CHECK(every.result["disagreements"] == 0);
}

TEST_CASE("all-fixtures runs every claim") {
  const Outcome o = run_command("all-fixtures", nullptr, "");
  CHECK(o.exit_code == 0);
  CHECK(o.result["passed"] == o.result["total"]);
}

TEST_CASE("output is deterministic and versioned") {
  for (const char* cmd : {"verify", "skew", "galois", "equivalence", "trace"}) {
    INFO(cmd);
    const Outcome a = run_fixture(cmd, "FX-GAMMA");
    const Outcome b = run_fixture(cmd, "FX-GAMMA");
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a) == render_json(b));
    const Json j = Json::parse(render_json(a));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["command"] == cmd);
    CHECK(j["status"] == "pass");
  }
}
