#include <catch_amalgamated.hpp>

#include <string>

#include "pga/registry.hpp"
#include "pga/scenario.hpp"

using namespace pga;

namespace {

struct Caught {
  ErrorKind kind;
  std::size_t line;
  std::size_t column;
};

Caught parse_failure(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  }
  FAIL("parse succeeded on:\n" << text);
  return {};
}

// 1-based line and column of the first occurrence of needle.
std::pair<std::size_t, std::size_t> position_of(const std::string& text, const std::string& needle) {
  const std::size_t at = text.find(needle);
  REQUIRE(at != std::string::npos);
  const std::size_t line_start = text.rfind('\n', at) == std::string::npos ? 0 : text.rfind('\n', at) + 1;
  std::size_t line = 1;
  for (std::size_t i = 0; i < at; ++i) line += text[i] == '\n';
  return {line, at - line_start + 1};
}

const char* kB2Text = R"(# the non-recoverable hexagon action, lines in a different order
groupoid
  object x
  object y
  arrow g x x
  arrow h y y
  arrow l x y
  arrow m x y
  arrow l^-1 y x
  arrow m^-1 y x
  product g g x
  product h h y
  product l g m
  product h l m
  product m g l
  product h m l
  product l^-1 l x
  product l l^-1 y
  product m^-1 m x
  product m m^-1 y
  product l^-1 m g
  product m^-1 l g
  product m l^-1 h
  product l m^-1 h
  product g l^-1 m^-1
  product g m^-1 l^-1
  product l^-1 h m^-1
  product m^-1 h l^-1
end
ring 3
  atoms e1 e2 e3
  atoms e4 e5 e6
end
action
  map y e4->e4 e5->e5 e6->e6
  map x e1->e1 e2->e2 e3->e3
  map g e1->e1
  map h e6->e6
  map l e2->e4
  map l^-1 e4->e2
  map m e3->e5
  map m^-1 e5->e3
end
)";

}  // namespace

TEST_CASE("every fixture round-trips through text") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    const Scenario s = fixture_scenario(name);
    const std::string text = serialize_scenario(s);
    const Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(serialize_scenario(back) == text);
  }
}

TEST_CASE("round trip keeps checks and other primes") {
  Scenario s = fixture_scenario("FX-DAT", 5);
  s.checks = {"verify", "ext"};
  CHECK(parse_scenario(serialize_scenario(s)) == s);
  Scenario t = s;
  t.checks.pop_back();
  CHECK_FALSE(t == s);
}

TEST_CASE("hand-written file matches the fixture") {
  const Scenario s = parse_scenario(kB2Text);
  CHECK(s == fixture_scenario("FX-B2"));
  CHECK(verify_partial_action(*s.action).ok());
}

TEST_CASE("empty input") {
  CHECK(parse_failure("").kind == ErrorKind::ParseError);
  CHECK(parse_failure("\n# only a comment\n   \n").kind == ErrorKind::ParseError);
}

TEST_CASE("unknown atom is reported at its position") {
  const std::string good = serialize_scenario(fixture_scenario("FX-DAT"));
  const std::size_t at = good.find("  loop g ");
  REQUIRE(at != std::string::npos);
  std::string bad = good;
  const std::size_t arrow = bad.find("->", at);
  bad.replace(arrow + 2, 2, "e9");
  const auto [line, col] = position_of(bad, "e9");
  const Caught c = parse_failure(bad);
  CHECK(c.kind == ErrorKind::UnresolvedReference);
  CHECK(c.line == line);
  CHECK(c.column == col);

  std::string bad_ideal = good;
  const std::size_t ideal = bad_ideal.find("  ideal x e1");
  bad_ideal.replace(ideal + 10, 2, "e9");
  const auto [l2, c2] = position_of(bad_ideal, "e9");
  const Caught d = parse_failure(bad_ideal);
  CHECK(d.kind == ErrorKind::UnresolvedReference);
  CHECK(d.line == l2);
  CHECK(d.column == c2);
}

TEST_CASE("other malformed inputs") {
  const std::string b2 = kB2Text;
  SECTION("unknown arrow in the action") {
    std::string t = b2;
    t.replace(t.find("map h "), 6, "map k ");
    const auto [line, col] = position_of(t, "map k");
    const Caught c = parse_failure(t);
    CHECK(c.kind == ErrorKind::UnresolvedReference);
    CHECK(c.line == line);
    CHECK(c.column == col + 4);
  }
  SECTION("missing map") {
    std::string t = b2;
    t.erase(t.find("  map h e6->e6\n"), 15);
    CHECK(parse_failure(t).kind == ErrorKind::ParseError);
  }
  SECTION("unclosed stanza") {
    std::string t = b2;
    t.erase(t.rfind("end"));
    const Caught c = parse_failure(t);
    CHECK(c.kind == ErrorKind::ParseError);
    CHECK(c.line == position_of(t, "\naction\n").first + 1);
  }
  SECTION("map that is not a bijection") {
    std::string t = b2;
    t.replace(t.find("e1->e1 e2->e2 e3->e3"), 20, "e1->e1 e2->e1 e3->e3");
    CHECK(parse_failure(t).kind == ErrorKind::ParseError);
  }
  SECTION("malformed pair") {
    std::string t = b2;
    t.replace(t.find("e2->e4"), 6, "e2-e4 ");
    CHECK(parse_failure(t).kind == ErrorKind::ParseError);
  }
  SECTION("groupoid errors keep their kind and point at end") {
    std::string t = b2;
    t.erase(t.find("  product g g x\n"), 16);
    const Caught c = parse_failure(t);
    CHECK(c.kind != ErrorKind::ParseError);
    CHECK(c.kind != ErrorKind::UnresolvedReference);
    CHECK(c.line == position_of(t, "end").first);
  }
  SECTION("not a prime") {
    std::string t = b2;
    t.replace(t.find("ring 3"), 6, "ring 4");
    CHECK(parse_failure(t).kind == ErrorKind::InvalidRing);
  }
  SECTION("unknown stanza") {
    const Caught c = parse_failure(b2 + "frobnicate\n");
    CHECK(c.kind == ErrorKind::ParseError);
    CHECK(c.column == 1);
  }
  SECTION("action before ring") {
    const std::string t = "groupoid\n  object x\nend\naction\n  map x\nend\n";
    CHECK(parse_failure(t).line == 4);
  }
}

TEST_CASE("unknown fixture") {
  CHECK_THROWS_AS(fixture_scenario("FX-NOPE"), Error);
}
