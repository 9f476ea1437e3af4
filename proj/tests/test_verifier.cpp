#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sigma/embedding.hpp"
#include "sigma/errors.hpp"
#include "sigma/verifier.hpp"

using namespace sigma;

TEST_CASE("suite resolution expands umbrellas and rejects unknown ids") {
  auto all = suite_ids();
  CHECK(all.size() == 34);
  CHECK(resolve_suites({}) == all);
  CHECK(resolve_suites({"all"}) == all);
  CHECK(resolve_suites({"lemma_2_1"}).size() == 9);
  CHECK(resolve_suites({"lemma_2_2"}).size() == 4);
  CHECK(resolve_suites({"thm_1_3_i", "thm_1_3_i"}).size() == 1);

  // output follows registry order regardless of request order
  auto two = resolve_suites({"cor_1_6", "thm_1_3_i"});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == "thm_1_3_i");
  CHECK(two[1] == "cor_1_6");

  // umbrella plus one of its members does not duplicate
  CHECK(resolve_suites({"lemma_2_2", "lemma_2_2_3"}).size() == 4);

  CHECK_THROWS_AS(resolve_suites({"thm_9_9"}), DomainError);

  VerifyConfig bad;
  bad.suites = {"no_such_suite"};
  CHECK_THROWS_AS(run_verify(bad), DomainError);

  VerifyConfig missing;
  missing.suites = {"example_42"};
  missing.corpus_dir = "/nonexistent/corpus/dir";
  CHECK_THROWS_AS(run_verify(missing), DomainError);
}

TEST_CASE("a small verification run passes and renders deterministically") {
  VerifyConfig cfg;
  cfg.suites = {"thm_1_3_ii", "cor_1_13", "lemma_2_1_3"};
  cfg.max_order = 60;
  VerifyResult a = run_verify(cfg);
  CHECK(a.exit_code == 0);
  REQUIRE(a.suites.size() == 3);
  for (auto const &s : a.suites) {
    CHECK(s.status == SuiteStatus::PASS);
    CHECK(s.violations.empty());
    CHECK(s.instances_tested - s.instances_vacuous >= s.nonvacuity_floor);
  }

  VerifyResult b = run_verify(cfg);
  CHECK(report_json(a, cfg) == report_json(b, cfg));
  CHECK(report_text(a, cfg) == report_text(b, cfg));
}

TEST_CASE("a vacuous-only suite warns and exits 4") {
  VerifyConfig cfg;
  cfg.suites = {"cor_1_4"};
  cfg.max_order = 6;
  VerifyResult r = run_verify(cfg);
  REQUIRE(r.suites.size() == 1);
  CHECK(r.suites[0].status == SuiteStatus::WARN);
  CHECK(r.suites[0].instances_tested - r.suites[0].instances_vacuous <
        r.suites[0].nonvacuity_floor);
  CHECK(r.exit_code == 4);

  auto j = nlohmann::json::parse(report_json(r, cfg));
  CHECK(j["exit_code"] == 4);
  CHECK(j["config"]["corpus"] == "builtin");
  CHECK(j["config"]["max_order"] == 6);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["id"] == "cor_1_4");
  CHECK(j["suites"][0]["status"] == "WARN");
  // wall times stay out of the rendering unless timings are requested
  CHECK(!j.contains("total_wall_time_ms"));
  CHECK(!j["suites"][0].contains("wall_time_ms"));
}

TEST_CASE("resource skips beyond the budget exit 3") {
  VerifyConfig cfg;
  cfg.suites = {"thm_1_3_i"};
  cfg.max_order = 60;
  cfg.skip_budget = 0;
  cfg.limits.universe_cap = 30; // groups above this order are skipped
  VerifyResult r = run_verify(cfg);
  REQUIRE(r.suites.size() == 1);
  CHECK(r.suites[0].resource_skips > 0);
  CHECK(r.exit_code == 3);
}

TEST_CASE("every fault is caught by at least one suite") {
  for (auto const &[name, fault] : detail::fault_registry()) {
    CAPTURE(name);
    detail::FaultGuard guard(fault);
    VerifyConfig cfg;
    cfg.suites = {"thm_1_3_ii", "cor_1_6", "example_1_2_3"};
    cfg.max_order = 100;
    VerifyResult r = run_verify(cfg);
    CHECK(r.exit_code == 1);
    std::uint64_t found = 0;
    for (auto const &s : r.suites)
      found += s.violations.size();
    CHECK(found >= 1);
  }
}

TEST_CASE("violation records replay through check") {
  Violation v;
  {
    detail::FaultGuard guard(detail::fault_by_name("drop-conjugates"));
    VerifyConfig cfg;
    cfg.suites = {"thm_1_3_ii"};
    cfg.max_order = 24;
    VerifyResult r = run_verify(cfg);
    REQUIRE(r.exit_code == 1);
    REQUIRE(!r.suites[0].violations.empty());
    v = r.suites[0].violations.front();
    CHECK(v.replay.find("sigmaverify check") != std::string::npos);

    CheckRequest req;
    req.group = v.group;
    req.sigma = v.sigma;
    req.pi = v.pi;
    req.subgroup = v.subgroup;
    req.aux = v.aux;
    req.predicate = "thm_1_3_ii";
    CheckResult faulted = run_check(req);
    CHECK_FALSE(faulted.holds);
    CHECK(faulted.detail.find("violation reproduced") == 0);
  }

  // the same instance passes once the fault is gone
  CheckRequest req;
  req.group = v.group;
  req.sigma = v.sigma;
  req.pi = v.pi;
  req.subgroup = v.subgroup;
  req.aux = v.aux;
  req.predicate = "thm_1_3_ii";
  CheckResult clean = run_check(req);
  CHECK(clean.holds);
}

TEST_CASE("check evaluates atomic predicates") {
  CHECK(atomic_predicates().size() == 19);

  CheckRequest req;
  req.group = "symmetric(4)";
  req.sigma = "2|3";
  req.predicate = "sigma-soluble";
  CHECK(run_check(req).holds);
  req.predicate = "sigma-nilpotent";
  CHECK_FALSE(run_check(req).holds);

  req.subgroup = "(0 1)";
  req.predicate = "s-permutable";
  CHECK_FALSE(run_check(req).holds);
  req.predicate = "subnormal";
  CHECK_FALSE(run_check(req).holds);
  req.subgroup = "(0 1)(2 3), (0 2)(1 3)";
  req.predicate = "normal";
  CHECK(run_check(req).holds);
  req.pi = "2";
  req.predicate = "hall";
  CHECK_FALSE(run_check(req).holds); // order 4 is not the full 2-part
  req.subgroup = "";
  req.predicate = "pi-separable";
  CHECK(run_check(req).holds);
}

TEST_CASE("check validates its arguments") {
  CheckRequest req;
  req.group = "symmetric(3)";
  CHECK_THROWS_AS(run_check(req), DomainError); // no predicate

  req.predicate = "no-such-predicate";
  CHECK_THROWS_AS(run_check(req), DomainError);

  req.predicate = "sigma-nilpotent"; // needs a partition
  CHECK_THROWS_AS(run_check(req), DomainError);

  req.sigma = "2"; // does not cover the prime 3
  CHECK_THROWS_AS(run_check(req), DomainError);

  req.sigma = "";
  req.pi = "2"; // block selection without a partition
  req.predicate = "pi-permutable";
  CHECK_THROWS_AS(run_check(req), DomainError);

  // a suite replay that matches no instance of the suite
  CheckRequest miss;
  miss.group = "cyclic(6)";
  miss.sigma = "2|3";
  miss.pi = "2|3";
  miss.predicate = "example_1_2_3";
  CHECK_THROWS_AS(run_check(miss), DomainError);
}

TEST_CASE("example suites fire exactly on their reference groups") {
  VerifyConfig cfg;
  cfg.suites = {"example_1_2_3", "example_42"};
  cfg.max_order = 10; // references are force-included regardless
  VerifyResult r = run_verify(cfg);
  REQUIRE(r.suites.size() == 2);
  CHECK(r.suites[0].id == "example_1_2_3");
  CHECK(r.suites[0].nonvacuity_floor == 1);
  CHECK(r.suites[0].status == SuiteStatus::PASS);
  CHECK(r.suites[0].instances_tested >= 1);
  CHECK(r.suites[1].id == "example_42");
  CHECK(r.suites[1].nonvacuity_floor == 1);
  CHECK(r.suites[1].status == SuiteStatus::PASS);
  CHECK(r.exit_code == 0);
}
