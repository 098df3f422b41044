#include <catch_amalgamated.hpp>

#include "pga/claims.hpp"

using namespace pga;

TEST_CASE("every fixture claim holds") {
  const auto results = run_claims(fixture_claims());
  CHECK(results.size() >= 50);
  for (const ClaimResult& r : results) {
    INFO(r.fixture << ": " << r.statement << " " << r.error);
    CHECK(r.passed);
    CHECK(r.error.empty());
    CHECK(r.corrected == !r.note.empty());
  }
}

TEST_CASE("a failing or throwing claim is reported, not propagated") {
  const std::vector<Claim> claims{
      {"X", "false", [] { return false; }, false, {}},
      {"X", "throws", []() -> bool { throw Error(ErrorKind::InternalInconsistency, "boom"); }, false, {}},
  };
  const auto r = run_claims(claims);
  REQUIRE(r.size() == 2);
  CHECK_FALSE(r[0].passed);
  CHECK(r[0].error.empty());
  CHECK_FALSE(r[1].passed);
  CHECK(r[1].error.find("boom") != std::string::npos);
}
