#include "ratt/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ratt/adversary.hpp"
#include "ratt/caa.hpp"
#include "ratt/errors.hpp"
#include "ratt/planner.hpp"

namespace ratt {

using nlohmann::json;

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

constexpr int kSchemaVersion = 1;

json parse_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigInvalid("cannot open config file: " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigInvalid("config parse error in " + file.string() + ": " + e.what());
  }
}

void check_schema(const json& j, const std::string& where) {
  if (!j.contains("schema_version")) {
    throw ConfigInvalid(where + ": missing field 'schema_version'");
  }
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw ConfigInvalid(where + ": unsupported schema_version");
  }
}

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("field '") + key + "': " + e.what());
  }
}

GeneratorSpec parse_generator(const json& j) {
  GeneratorSpec spec;
  if (!j.contains("generator")) return spec;
  const json& g = j.at("generator");
  spec.n_robots = field_or(g, "n_robots", spec.n_robots);
  spec.n_targets = field_or(g, "n_targets", spec.n_targets);
  spec.arena_w = field_or(g, "arena_w", spec.arena_w);
  spec.arena_h = field_or(g, "arena_h", spec.arena_h);
  spec.tau = field_or(g, "tau", spec.tau);
  spec.input_nu = field_or(g, "input_nu", spec.input_nu);
  spec.input_omega = field_or(g, "input_omega", spec.input_omega);
  spec.target_speed = field_or(g, "target_speed", spec.target_speed);
  spec.target_omega = field_or(g, "target_omega", spec.target_omega);
  spec.sigma_q = field_or(g, "sigma_q", spec.sigma_q);
  spec.initial_cov = field_or(g, "initial_cov", spec.initial_cov);
  spec.initial_mean_std = field_or(g, "initial_mean_std", spec.initial_mean_std);
  if (g.contains("sensor")) {
    const json& s = g.at("sensor");
    spec.sensor.sigma_r0 = field_or(s, "sigma_r0", spec.sensor.sigma_r0);
    spec.sensor.kappa_r = field_or(s, "kappa_r", spec.sensor.kappa_r);
    spec.sensor.sigma_b0 = field_or(s, "sigma_b0", spec.sensor.sigma_b0);
    spec.sensor.kappa_b = field_or(s, "kappa_b", spec.sensor.kappa_b);
  }
  if (spec.n_robots < 1) throw ConfigInvalid("field 'generator.n_robots': must be >= 1");
  if (spec.n_targets < 1) throw ConfigInvalid("field 'generator.n_targets': must be >= 1");
  if (spec.input_nu.empty() || spec.input_omega.empty()) {
    throw ConfigInvalid("field 'generator.input_nu'/'input_omega': must be non-empty");
  }
  return spec;
}

json generator_to_json(const GeneratorSpec& spec) {
  return json{{"n_robots", spec.n_robots},
              {"n_targets", spec.n_targets},
              {"arena_w", spec.arena_w},
              {"arena_h", spec.arena_h},
              {"tau", spec.tau},
              {"input_nu", spec.input_nu},
              {"input_omega", spec.input_omega},
              {"target_speed", spec.target_speed},
              {"target_omega", spec.target_omega},
              {"sigma_q", spec.sigma_q},
              {"initial_cov", spec.initial_cov},
              {"initial_mean_std", spec.initial_mean_std},
              {"sensor",
               {{"sigma_r0", spec.sensor.sigma_r0},
                {"kappa_r", spec.sensor.kappa_r},
                {"sigma_b0", spec.sensor.sigma_b0},
                {"kappa_b", spec.sensor.kappa_b}}}};
}

}  // namespace

CampaignConfig parse_campaign_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigInvalid(std::string("config parse error: ") + e.what());
  }
  check_schema(j, "campaign config");

  CampaignConfig config;
  config.seed = field_or<std::uint64_t>(j, "seed", 0);
  config.trials = field_or(j, "trials", 1);
  if (config.trials < 1) throw ConfigInvalid("field 'trials': must be >= 1");

  if (!j.contains("planners") || !j.at("planners").is_array() || j.at("planners").empty()) {
    throw ConfigInvalid("field 'planners': must be a non-empty array");
  }
  for (const auto& p : j.at("planners")) {
    config.planners.push_back(planner_from_string(p.get<std::string>()));
  }

  config.attack_mode =
      attack_mode_from_string(field_or<std::string>(j, "attack_mode", "worst-case"));

  if (!j.contains("budgets") || !j.at("budgets").is_array() || j.at("budgets").empty()) {
    throw ConfigInvalid("field 'budgets': must be a non-empty array");
  }
  for (const auto& b : j.at("budgets")) {
    BudgetPair pair;
    pair.alpha_s = field_or(b, "alpha_s", 0);
    pair.alpha_c = field_or<long long>(b, "alpha_c", 0);
    if (pair.alpha_s < 0 || pair.alpha_c < 0) {
      throw ConfigInvalid("field 'budgets': alpha_s/alpha_c must be >= 0");
    }
    config.budgets.push_back(pair);
  }

  config.generator = parse_generator(j);
  config.cap_evals = field_or(j, "cap_evals", config.cap_evals);
  config.jobs = field_or(j, "jobs", config.jobs);
  if (config.jobs < 1) throw ConfigInvalid("field 'jobs': must be >= 1");
  return config;
}

CampaignConfig load_campaign_config(const std::filesystem::path& file) {
  return parse_campaign_config(parse_json_file(file).dump());
}

namespace {

constexpr const char* kResultsHeader =
    "schema_version,kind,planner,attack_mode,alpha_s,alpha_c,alpha_cs,trial,"
    "avg_trace,mse,evals";

std::string record_row(const TrialRecord& r, int trial) {
  std::ostringstream row;
  row << kSchemaVersion << ",trial," << r.planner << ',' << r.attack_mode << ','
      << r.alpha_s << ',' << r.alpha_c << ',' << r.alpha_cs << ',' << trial << ','
      << format_double(r.avg_trace) << ',' << format_double(r.mse) << ',' << r.evals;
  return row.str();
}

std::string summary_row(const char* kind, const TrialRecord& sample, double avg_trace,
                        double mse, double evals) {
  std::ostringstream row;
  row << kSchemaVersion << ',' << kind << ',' << sample.planner << ','
      << sample.attack_mode << ',' << sample.alpha_s << ',' << sample.alpha_c << ','
      << sample.alpha_cs << ",," << format_double(avg_trace) << ',' << format_double(mse)
      << ',' << format_double(evals);
  return row.str();
}

// Index-stealing parallel loop; each cell writes only its own slot, so the
// output is identical for any job count.
void parallel_cells(int total, int jobs, const std::function<void(int)>& work) {
  if (jobs <= 1 || total <= 1) {
    for (int c = 0; c < total; ++c) work(c);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto runner = [&]() {
    while (true) {
      const int c = next.fetch_add(1);
      if (c >= total) return;
      try {
        work(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int n_threads = std::min(jobs, total);
  threads.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) threads.emplace_back(runner);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::filesystem::path run_campaign(const CampaignConfig& config,
                                   const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);

  const int n_budgets = static_cast<int>(config.budgets.size());
  const int n_planners = static_cast<int>(config.planners.size());
  const int cells = n_budgets * config.trials;

  std::vector<std::vector<TrialRecord>> records(
      static_cast<std::size_t>(cells), std::vector<TrialRecord>(n_planners));

  parallel_cells(cells, config.jobs, [&](int cell) {
    const int budget_idx = cell / config.trials;
    const int trial = cell % config.trials;
    const BudgetPair& budget = config.budgets[budget_idx];

    const std::uint64_t trial_seed =
        derive_seed(config.seed, static_cast<std::uint64_t>(budget_idx) * 1000003u +
                                     static_cast<std::uint64_t>(trial));
    const Scenario scenario = generate_scenario(config.generator, trial_seed);
    for (int p = 0; p < n_planners; ++p) {
      records[cell][p] =
          run_trial(scenario, config.planners[p], config.attack_mode, budget.alpha_s,
                    budget.alpha_c, trial_seed, {config.cap_evals});
    }
  });

  const std::filesystem::path results_path = out_dir / "results.csv";
  const std::filesystem::path timing_path = out_dir / "timing.csv";
  std::ofstream results(results_path);
  std::ofstream timing(timing_path);
  results << kResultsHeader << '\n';
  timing << "planner,attack_mode,alpha_s,alpha_c,trial,wall_time_s\n";

  for (int cell = 0; cell < cells; ++cell) {
    const int trial = cell % config.trials;
    for (int p = 0; p < n_planners; ++p) {
      const TrialRecord& r = records[cell][p];
      results << record_row(r, trial) << '\n';
      timing << r.planner << ',' << r.attack_mode << ',' << r.alpha_s << ',' << r.alpha_c
             << ',' << trial << ',' << format_double(r.wall_time_s) << '\n';
    }
  }

  // Per (budget, planner) mean and sample standard deviation over trials.
  for (int b = 0; b < n_budgets; ++b) {
    for (int p = 0; p < n_planners; ++p) {
      double sum_trace = 0.0, sum_mse = 0.0, sum_evals = 0.0;
      for (int t = 0; t < config.trials; ++t) {
        const TrialRecord& r = records[b * config.trials + t][p];
        sum_trace += r.avg_trace;
        sum_mse += r.mse;
        sum_evals += static_cast<double>(r.evals);
      }
      const double k = config.trials;
      const double mean_trace = sum_trace / k;
      const double mean_mse = sum_mse / k;
      double var_trace = 0.0, var_mse = 0.0;
      for (int t = 0; t < config.trials; ++t) {
        const TrialRecord& r = records[b * config.trials + t][p];
        var_trace += (r.avg_trace - mean_trace) * (r.avg_trace - mean_trace);
        var_mse += (r.mse - mean_mse) * (r.mse - mean_mse);
      }
      const double denom = config.trials > 1 ? k - 1.0 : 1.0;
      const TrialRecord& sample = records[b * config.trials][p];
      results << summary_row("mean", sample, mean_trace, mean_mse, sum_evals / k) << '\n';
      results << summary_row("stddev", sample, std::sqrt(var_trace / denom),
                             std::sqrt(var_mse / denom), 0.0)
              << '\n';
    }
  }
  results.close();
  timing.close();

  json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["seed"] = config.seed;
  meta["trials"] = config.trials;
  meta["attack_mode"] = to_string(config.attack_mode);
  meta["generator"] = generator_to_json(config.generator);
  std::ofstream(out_dir / "meta.json") << meta.dump(2) << '\n';

  return results_path;
}

CertifyConfig load_certify_config(const std::filesystem::path& file) {
  const json j = parse_json_file(file);
  check_schema(j, "certify config");
  CertifyConfig config;
  config.seed = field_or<std::uint64_t>(j, "seed", 0);
  config.instances = field_or(j, "instances", 1);
  if (config.instances < 1) throw ConfigInvalid("field 'instances': must be >= 1");
  config.alpha_s = field_or(j, "alpha_s", 0);
  config.alpha_c = field_or<long long>(j, "alpha_c", 0);
  config.generator = parse_generator(j);
  config.cap_evals = field_or(j, "cap_evals", config.cap_evals);
  return config;
}

int run_certify(const CertifyConfig& config, std::ostream& out) {
  out << "schema_version,instance,seed,alpha_s,alpha_c,alpha_cs,ratio,bound,c_phi,"
         "k_phi,satisfied\n";
  const int alpha_cs =
      caa(config.generator.n_robots, config.alpha_c).alpha_cs;
  int violations = 0;
  for (int k = 0; k < config.instances; ++k) {
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(k));
    const Scenario scenario = generate_scenario(config.generator, seed);
    CertifyOptions options;
    options.eval_cap = config.cap_evals;
    const BoundCertificate cert =
        certify_theorem1(scenario, config.alpha_s, config.alpha_c, options);
    out << kSchemaVersion << ',' << k << ',' << seed << ',' << config.alpha_s << ','
        << config.alpha_c << ',' << alpha_cs << ',' << format_double(cert.ratio) << ','
        << format_double(cert.bound) << ','
        << (cert.c_phi ? format_double(*cert.c_phi) : std::string()) << ','
        << (cert.k_phi ? format_double(*cert.k_phi) : std::string()) << ','
        << (cert.satisfied ? "true" : "false") << '\n';
    if (!cert.satisfied) ++violations;
  }
  return violations;
}

AttackEvalConfig load_attack_eval_config(const std::filesystem::path& file) {
  const json j = parse_json_file(file);
  check_schema(j, "attack-eval config");
  AttackEvalConfig config;
  config.seed = field_or<std::uint64_t>(j, "seed", 0);
  config.planner = planner_from_string(field_or<std::string>(j, "planner", "ratt"));
  config.alpha_s = field_or(j, "alpha_s", 0);
  config.alpha_c = field_or<long long>(j, "alpha_c", 0);
  config.generator = parse_generator(j);
  config.cap_evals = field_or(j, "cap_evals", config.cap_evals);
  return config;
}

void run_attack_eval(const AttackEvalConfig& config, std::ostream& out) {
  const Scenario scenario = generate_scenario(config.generator, config.seed);
  const Objective objective(scenario);

  Assignment assignment;
  switch (config.planner) {
    case PlannerKind::Opt:
      assignment =
          plan_opt(objective, config.alpha_s, config.alpha_c, {config.cap_evals, false})
              .assignment;
      break;
    case PlannerKind::Ratt:
      assignment = plan_ratt(objective, config.alpha_s, config.alpha_c).assignment;
      break;
    case PlannerKind::NrOpt:
      assignment = plan_nropt(objective, {config.cap_evals, false}).assignment;
      break;
    case PlannerKind::Greedy:
      assignment = plan_greedy(objective).assignment;
      break;
    case PlannerKind::Random: {
      Rng rng(derive_seed(config.seed, 0x706c616e));
      assignment = plan_random(scenario, rng);
      break;
    }
  }

  out << "schema_version,planner,attack,alpha_s,alpha_c,value,sensing,blocked_edges\n";
  auto emit = [&](const char* name, const AttackRealization& attack) {
    std::string sensing;
    for (int i : attack.sensing) {
      if (!sensing.empty()) sensing += ';';
      sensing += std::to_string(i);
    }
    std::string edges;
    for (const Edge& e : attack.edges) {
      if (!edges.empty()) edges += ';';
      edges += std::to_string(e.first) + '-' + std::to_string(e.second);
    }
    out << kSchemaVersion << ',' << to_string(config.planner) << ',' << name << ','
        << config.alpha_s << ',' << config.alpha_c << ','
        << format_double(objective.team(assignment, attack)) << ',' << sensing << ','
        << edges << '\n';
  };

  emit("none", {});
  emit("worst-case", worst_case_attack(objective, assignment, config.alpha_s,
                                       config.alpha_c, {config.cap_evals, false})
                         .attack);
  emit("bounded-rational",
       bounded_rational_attack(objective, assignment, config.alpha_s, config.alpha_c)
           .attack);
}

}  // namespace ratt
