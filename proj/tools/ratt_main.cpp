#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ratt/caa.hpp"
#include "ratt/campaign.hpp"
#include "ratt/errors.hpp"

namespace {

// Exit codes: 0 ok, 2 config/usage error, 3 scale cap exceeded, 1 anything else.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitScale = 3;

std::string resolve_out_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("RATT_OUT_DIR"); env && *env) return env;
  return flag_value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust multi-robot active target tracking planner and experiment driver"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed_override;
  std::optional<int> jobs_override;
  std::optional<double> cap_override;
  app.add_option("--seed", seed_override, "Override the config seed");
  app.add_option("--jobs", jobs_override, "Worker threads for trial execution");
  app.add_option("--cap-evals", cap_override, "Exhaustive-search evaluation cap");

  auto* simulate = app.add_subcommand("simulate", "Run a Monte-Carlo campaign");
  std::string sim_config, sim_out = "out";
  simulate->add_option("--config", sim_config, "Campaign config (JSON)")->required();
  simulate->add_option("--out", sim_out, "Output directory");

  auto* caa_cmd = app.add_subcommand("caa", "Communication attack approximation");
  int caa_n = 0;
  long long caa_alpha_c = 0;
  caa_cmd->add_option("--n", caa_n, "Number of robots")->required();
  caa_cmd->add_option("--alpha-c", caa_alpha_c, "Communication-attack budget")->required();

  auto* certify = app.add_subcommand("certify", "Certify the approximation bound");
  std::string cert_config;
  certify->add_option("--config", cert_config, "Certify config (JSON)")->required();

  auto* attack_eval = app.add_subcommand("attack-eval", "Evaluate attacks on one instance");
  std::string atk_config;
  attack_eval->add_option("--config", atk_config, "Attack-eval config (JSON)")->required();

  auto* plot = app.add_subcommand("plot", "Render grouped-bar SVGs from a results CSV");
  std::string plot_csv, plot_out = "plots";
  plot->add_option("--csv", plot_csv, "results.csv path")->required();
  plot->add_option("--out", plot_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      ratt::CampaignConfig config = ratt::load_campaign_config(sim_config);
      if (seed_override) config.seed = *seed_override;
      if (jobs_override) config.jobs = *jobs_override;
      if (cap_override) config.cap_evals = *cap_override;
      const auto csv = ratt::run_campaign(config, resolve_out_dir(sim_out));
      std::cout << csv.string() << '\n';
    } else if (caa_cmd->parsed()) {
      const ratt::CaaResult result = ratt::caa(caa_n, caa_alpha_c);
      std::cout << "schema_version,n,alpha_c,e_r,n_max,alpha_cs,ebar\n";
      std::string table;
      for (long long e : result.ebar) {
        if (!table.empty()) table += ';';
        table += std::to_string(e);
      }
      std::cout << 1 << ',' << caa_n << ',' << caa_alpha_c << ',' << result.e_r << ','
                << result.n_max << ',' << result.alpha_cs << ',' << table << '\n';
    } else if (certify->parsed()) {
      ratt::CertifyConfig config = ratt::load_certify_config(cert_config);
      if (seed_override) config.seed = *seed_override;
      if (cap_override) config.cap_evals = *cap_override;
      ratt::run_certify(config, std::cout);
    } else if (attack_eval->parsed()) {
      ratt::AttackEvalConfig config = ratt::load_attack_eval_config(atk_config);
      if (seed_override) config.seed = *seed_override;
      if (cap_override) config.cap_evals = *cap_override;
      ratt::run_attack_eval(config, std::cout);
    } else if (plot->parsed()) {
      ratt::emit_plots(plot_csv, resolve_out_dir(plot_out));
    }
  } catch (const ratt::ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ratt::BudgetExceeded& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ratt::CsvMalformed& e) {
    std::cerr << "csv error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ratt::ScaleExceeded& e) {
    std::cerr << "scale error: " << e.what() << '\n';
    return kExitScale;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
