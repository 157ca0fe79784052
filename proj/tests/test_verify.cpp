#include "doctest.h"

#include <cmath>

#include "dunkl/verify.hpp"

using namespace dunkl;

TEST_CASE("verify config validation") {
  VerifyConfig c;
  CHECK_NOTHROW(c.validate());
  c.alphas = {-0.6};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = VerifyConfig();
  c.suites = {"taylor", "nope"};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = VerifyConfig();
  c.ks = {0};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = VerifyConfig();
  c.betas = {1.0};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = VerifyConfig();
  c.x_grid = {};
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("reproduction preset pins the parameter matrix") {
  const VerifyConfig c = VerifyConfig::paper_defaults();
  CHECK(c.alphas == std::vector<double>{-0.25, 0.5, 1.5});
  CHECK(c.ks == std::vector<int>{1, 2, 3});
  CHECK(c.ps == std::vector<double>{1.0, 2.0});
  REQUIRE(c.qs.size() == 2);
  CHECK(std::isinf(c.qs[1]));
  CHECK(c.betas == std::vector<double>{0.3, 0.7});
  CHECK(c.functions.size() == 3);
  const auto j = c.to_json();
  CHECK(j["q"][1] == "inf");
}

TEST_CASE("kernel suite passes and records reproducible inputs") {
  VerifyConfig c;
  const VerificationReport r = run_suite("kernel", c);
  CHECK(r.count(CheckStatus::fail) == 0);
  CHECK(r.count(CheckStatus::inconclusive) == 0);
  for (const auto& check : r.checks()) {
    CHECK(check.inputs.contains("alpha"));
    CHECK_FALSE(check.anchor.empty());
  }
}

TEST_CASE("suite filter keeps the canonical order") {
  VerifyConfig c;
  c.suites = {"translation", "kernel"};
  const VerifyOutcome out = run_verify(c);
  REQUIRE(out.suites.size() == 2);
  CHECK(out.suites[0].suite() == "kernel");
  CHECK(out.suites[1].suite() == "translation");
  CHECK_FALSE(out.any_fail());
  const auto j = out.to_json(c);
  CHECK(j["summary"]["checks"] == out.suites[0].checks().size() + out.suites[1].checks().size());
}
