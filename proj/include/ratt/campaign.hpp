#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ratt/curvature.hpp"
#include "ratt/harness.hpp"

namespace ratt {

struct BudgetPair {
  int alpha_s{0};
  long long alpha_c{0};
};

// Parsed campaign description (JSON, schema_version 1; see docs/formats.md).
struct CampaignConfig {
  std::uint64_t seed{0};
  int trials{1};
  std::vector<PlannerKind> planners;
  AttackMode attack_mode{AttackMode::WorstCase};
  std::vector<BudgetPair> budgets;
  GeneratorSpec generator;
  double cap_evals{1e8};
  int jobs{1};
};

CampaignConfig load_campaign_config(const std::filesystem::path& file);
CampaignConfig parse_campaign_config(const std::string& json_text);

// Runs the full planner x budget x trial product and writes results.csv
// (deterministic under the seed), timing.csv (wall times, informational), and
// meta.json into out_dir. Returns the results.csv path.
std::filesystem::path run_campaign(const CampaignConfig& config,
                                   const std::filesystem::path& out_dir);

// Grouped-bar SVG per (metric x budget combination) from a results.csv.
// Returns the written paths; an empty CSV produces none and a warning on
// stderr.
std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& csv_path,
                                              const std::filesystem::path& out_dir);

struct CertifyConfig {
  std::uint64_t seed{0};
  int instances{1};
  int alpha_s{0};
  long long alpha_c{0};
  GeneratorSpec generator;
  double cap_evals{1e8};
};

CertifyConfig load_certify_config(const std::filesystem::path& file);

// One BoundCertificate CSV row per seeded instance, written to out (or stdout
// when out is empty).
int run_certify(const CertifyConfig& config, std::ostream& out);

struct AttackEvalConfig {
  std::uint64_t seed{0};
  PlannerKind planner{PlannerKind::Ratt};
  int alpha_s{0};
  long long alpha_c{0};
  GeneratorSpec generator;
  double cap_evals{1e8};
};

AttackEvalConfig load_attack_eval_config(const std::filesystem::path& file);

// Plans once, then evaluates the empty, worst-case, and bounded-rational
// attacks against that assignment; one CSV row per attack.
void run_attack_eval(const AttackEvalConfig& config, std::ostream& out);

// Shared CSV float format: 17 significant digits.
std::string format_double(double value);

}  // namespace ratt
