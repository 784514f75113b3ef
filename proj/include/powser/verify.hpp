#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "powser/exec.hpp"
#include "powser/indices.hpp"

namespace powser {

struct RunConfig {
  Letter max_index = 3;            // letters {0..max_index}
  std::uint32_t max_degree = 3;    // total-degree window
  std::vector<Letter> i_values = {1, 2, 3};  // summing positions to exercise
  std::uint64_t seed = 1;
  std::uint32_t samples = 1000;      // randomized cases per sampled check
  std::uint32_t psi_samples = 200;   // roundtrip cases per matrix
  std::uint32_t seq_limit = 6;       // sequence index N ranges over 1..seq_limit
  std::uint32_t m_limit = 4;         // degree-window grid bound
  std::uint32_t k_limit = 4;         // diagonal seminorm grid bound
  bool corrupt_psi = false;          // negative control: break the summing rule
  bool strict_ctx = false;           // mismatched windows throw instead of meeting
  ExecMode mode = ExecMode::Parallel;
  std::vector<std::string> suites;   // empty = all
};

// One verified identity/inequality family. `checked` counts individual
// assertions; the first failing instance is kept as a counterexample.
struct CheckResult {
  std::string id;
  std::string anchor;  // the formula this check decides, in code notation
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  nlohmann::ordered_json counterexample;        // null when none
  nlohmann::ordered_json values;                // informational extras
  bool informational = false;  // never gates: reports observed values only
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::uint64_t assertions_checked() const;
  std::uint64_t assertions_failed() const;
};

const std::vector<std::string>& known_suites();

VerificationReport run_verify(const RunConfig& config);

nlohmann::ordered_json config_to_json(const RunConfig& config);
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

// key=value configuration file ('#' starts a comment). Unknown keys are
// rejected. CLI flags override file values.
RunConfig load_config_file(const std::string& path);
void set_config_value(RunConfig& config, const std::string& key,
                      const std::string& value);

}  // namespace powser
