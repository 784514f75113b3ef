#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "powser/verify.hpp"
#include "powser/witness.hpp"

using namespace powser;

namespace {

RunConfig tiny_config() {
  RunConfig cfg;
  cfg.max_index = 2;
  cfg.max_degree = 2;
  cfg.i_values = {1, 2};
  cfg.seed = 1;
  cfg.samples = 25;
  cfg.psi_samples = 5;
  cfg.seq_limit = 3;
  cfg.m_limit = 2;
  cfg.k_limit = 2;
  cfg.mode = ExecMode::Serial;
  return cfg;
}

const CheckResult& find_check(const VerificationReport& rep,
                              const std::string& id) {
  for (const CheckResult& c : rep.checks) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("check not found: " + id);
}

}  // namespace

TEST_CASE("full run: only the two refuted identity forms fail") {
  const VerificationReport rep = run_verify(tiny_config());
  REQUIRE(!rep.checks.empty());

  std::set<std::string> ids;
  for (const CheckResult& c : rep.checks) {
    CHECK_MESSAGE(ids.insert(c.id).second, "duplicate id ", c.id);
  }

  std::vector<std::string> failing;
  for (const CheckResult& c : rep.checks) {
    if (!c.pass) failing.push_back(c.id);
  }
  std::sort(failing.begin(), failing.end());
  CHECK(failing == std::vector<std::string>{"psi.diagonal_identity",
                                            "statements.coefficient_recovery"});
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.assertions_failed() > 0);
  CHECK(rep.assertions_checked() > rep.assertions_failed());

  // The two failures carry the frozen first counterexample.
  const CheckResult& rec = find_check(rep, "statements.coefficient_recovery");
  REQUIRE(!rec.counterexample.is_null());
  CHECK(rec.counterexample["r"] == 1);
  CHECK(rec.counterexample["n"] == 2);
  CHECK(rec.counterexample["i"] == 1);
  CHECK(rec.counterexample["l"] == "X1");
  CHECK(rec.counterexample["u"] == "X2");
  CHECK(rec.counterexample["got"] == "1");
  CHECK(rec.counterexample["want"] == "0");

  // Everything the refined analysis claims does hold.
  CHECK(find_check(rep, "statements.refined_recovery").pass);
  CHECK(find_check(rep, "statements.lower_annihilation").pass);
  CHECK(find_check(rep, "psi.refined_triangular").pass);
  CHECK(find_check(rep, "psi.unit_diagonal").pass);
  CHECK(find_check(rep, "psi.determinant_one").pass);
  CHECK(find_check(rep, "psi.invert_roundtrip").pass);
  CHECK(find_check(rep, "extension.submultiplicative.q").pass);
  CHECK(find_check(rep, "singer_wermer.image_in_radical").pass);
  CHECK(find_check(rep, "laws.leibniz_partial").pass);
  CHECK(find_check(rep, "laws.alpha_tau_i_ratio").informational);
}

TEST_CASE("repeat runs and serial/parallel runs agree") {
  RunConfig cfg = tiny_config();
  cfg.samples = 10;
  cfg.psi_samples = 3;
  const VerificationReport a = run_verify(cfg);
  const VerificationReport b = run_verify(cfg);
  CHECK(report_to_json(a).dump(2) == report_to_json(b).dump(2));

  cfg.mode = ExecMode::Parallel;
  const VerificationReport p = run_verify(cfg);
  // config echoes the mode, so compare the decided content only
  const auto ja = report_to_json(a);
  const auto jp = report_to_json(p);
  CHECK(ja["checks"].dump() == jp["checks"].dump());
  CHECK(ja["summary"].dump() == jp["summary"].dump());
}

TEST_CASE("corrupted functional family trips the negative controls") {
  RunConfig cfg = tiny_config();
  cfg.samples = 10;
  cfg.psi_samples = 3;
  cfg.corrupt_psi = true;
  cfg.suites = {"statements", "psi", "singer_wermer"};
  const VerificationReport rep = run_verify(cfg);
  CHECK_FALSE(find_check(rep, "statements.lower_annihilation").pass);
  CHECK_FALSE(find_check(rep, "psi.block_triangular").pass);
  CHECK_FALSE(find_check(rep, "psi.refined_triangular").pass);
  CHECK(find_check(rep, "psi.unit_diagonal").pass);
}

TEST_CASE("suite filter restricts the run") {
  RunConfig cfg = tiny_config();
  cfg.suites = {"bounds"};
  const VerificationReport rep = run_verify(cfg);
  CHECK(!rep.checks.empty());
  for (const CheckResult& c : rep.checks) {
    CHECK(c.id.rfind("bounds.", 0) == 0);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("config validation rejects bad values") {
  RunConfig cfg = tiny_config();
  cfg.suites = {"nonsense"};
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
  cfg = tiny_config();
  cfg.i_values = {};
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
  cfg = tiny_config();
  cfg.seq_limit = 1;
  CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
}

TEST_CASE("set_config_value parses every key and rejects junk") {
  RunConfig cfg;
  set_config_value(cfg, "max_index", "5");
  CHECK(cfg.max_index == 5);
  set_config_value(cfg, "i_values", "2, 4");
  CHECK(cfg.i_values == std::vector<Letter>{2, 4});
  set_config_value(cfg, "seed", "99");
  CHECK(cfg.seed == 99);
  set_config_value(cfg, "corrupt_psi", "yes");
  CHECK(cfg.corrupt_psi);
  set_config_value(cfg, "corrupt_psi", "0");
  CHECK_FALSE(cfg.corrupt_psi);
  set_config_value(cfg, "mode", "serial");
  CHECK(cfg.mode == ExecMode::Serial);
  set_config_value(cfg, "suites", "laws,bounds");
  CHECK(cfg.suites == std::vector<std::string>{"laws", "bounds"});
  CHECK_THROWS_AS(set_config_value(cfg, "bogus", "1"), std::invalid_argument);
  CHECK_THROWS_AS(set_config_value(cfg, "samples", "7x"), std::invalid_argument);
  CHECK_THROWS_AS(set_config_value(cfg, "mode", "fast"), std::invalid_argument);
  CHECK_THROWS_AS(set_config_value(cfg, "suites", "laws,huh"),
                  std::invalid_argument);
  CHECK_THROWS_AS(set_config_value(cfg, "corrupt_psi", "maybe"),
                  std::invalid_argument);
}

TEST_CASE("config file roundtrip") {
  const std::string path = "test_verify_config.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "max_index = 2\n";
    out << "max_degree=2\n";
    out << "i_values = 1,2\n";
    out << "samples = 7   # trailing comment\n";
    out << "mode = serial\n";
    out << "\n";
  }
  const RunConfig cfg = load_config_file(path);
  CHECK(cfg.max_index == 2);
  CHECK(cfg.max_degree == 2);
  CHECK(cfg.i_values == std::vector<Letter>{1, 2});
  CHECK(cfg.samples == 7);
  CHECK(cfg.mode == ExecMode::Serial);
  {
    std::ofstream out(path);
    out << "unknown_key = 1\n";
  }
  CHECK_THROWS_AS(load_config_file(path), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "no equals sign here\n";
  }
  CHECK_THROWS_AS(load_config_file(path), std::invalid_argument);
  CHECK_THROWS_AS(load_config_file("does_not_exist.cfg"), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("text report names failures and the overall verdict") {
  RunConfig cfg = tiny_config();
  cfg.samples = 10;
  cfg.psi_samples = 3;
  cfg.suites = {"statements"};
  const VerificationReport rep = run_verify(cfg);
  const std::string text = report_to_text(rep);
  CHECK(text.find("[FAIL] statements.coefficient_recovery") !=
        std::string::npos);
  CHECK(text.find("[PASS] statements.lower_annihilation") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);

  cfg.suites = {"bounds"};
  const std::string ok = report_to_text(run_verify(cfg));
  CHECK(ok.find("result: PASS") != std::string::npos);
}

TEST_CASE("json report shape") {
  RunConfig cfg = tiny_config();
  cfg.samples = 5;
  cfg.psi_samples = 2;
  cfg.suites = {"convergence"};
  const auto j = report_to_json(run_verify(cfg));
  CHECK(j["tool"] == "powser");
  CHECK(j["format"] == "verification-report/1");
  CHECK(j["config"]["max_index"] == 2);
  CHECK(j["config"]["mode"] == "serial");
  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("checked"));
  }
  CHECK(j["summary"]["all_pass"] == true);
}

TEST_CASE("witness verdict classification") {
  CHECK(verdict_for({}, {}) == "empty range");
  CHECK(verdict_for({0, 0, 0}, {1, 2, 3}) == "identically 0 within range");
  CHECK(verdict_for({2, 1, 0, 0}, {1, 2, 3, 4}) ==
        "eventually 0 within range (N >= 3)");
  CHECK(verdict_for({Rational(5), Rational(5)}, {1, 2}) ==
        "constant 5 within range");
  CHECK(verdict_for({1, 2, 3}, {1, 2, 3}) == "growing within range");
  CHECK(verdict_for({1, 3, 2}, {1, 2, 3}) ==
        "bounded within range (max = 3)");
  CHECK(verdict_for({0, 1, 0}, {1, 2, 3}) ==
        "bounded within range (max = 1)");
}
