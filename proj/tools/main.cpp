#include "commands.hpp"

#include "nrenergy/errors.hpp"
#include "nrenergy/legacy_models.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int fail(std::string_view code, std::string_view message)
{
  std::cerr << code << ": " << message << '\n';
  return 1;
}

} // namespace

int main(int argc, char** argv)
{
  using namespace nrenergy;

  CLI::App app{"Operation-count energy model for the 5G NR downlink PHY"};
  app.require_subcommand(1);

  cli::run_config cfg;
  std::string     format_text = "structured-text";
  std::string     out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", cfg.scenario_path, "Scenario configuration (JSON)")->required();
    cmd->add_option("--cost-table", cfg.cost_table_path, "Instruction cost table; default $NRENERGY_COST_TABLE or bundled");
    cmd->add_option("--kappa", cfg.kappa, "Energy coefficient in J*s^2");
    cmd->add_option("--clock-hz", cfg.clock_hz, "Processor clock in Hz");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "structured-text or delimited-table")
        ->check(CLI::IsMember({"structured-text", "delimited-table"}));
    cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  CLI::App* estimate = app.add_subcommand("estimate", "Per-block micro-ops, cycles and energy of one scenario");
  add_common(estimate);
  add_output(estimate);

  std::string param, values;
  CLI::App*   sweep = app.add_subcommand("sweep", "Cycles per bit across values of one scenario parameter");
  add_common(sweep);
  add_output(sweep);
  sweep->add_option("--param", param, "modulation, n_prb, n_layers or n_slots")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();

  std::string measured, filter;
  CLI::App*   compare = app.add_subcommand("compare", "Compare modeled against measured cycles per block");
  add_common(compare);
  add_output(compare);
  compare->add_option("--measured", measured, "Measurement report (delimited text)")->required();
  compare->add_option("--filter", filter, "Path filter and block map (JSON)")->required();

  std::string model, params;
  CLI::App*   legacy_cmd = app.add_subcommand("legacy", "Evaluate a literature RAN power model");
  add_output(legacy_cmd);
  legacy_cmd->add_option("--model", model, "auer, desset, yan, yu, tombaz, fu-bb or fu-rf")->required();
  legacy_cmd->add_option("--params", params, "Model parameters (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(to_string(error_code::usage), e.what()) + 1;
  }

  cfg.format = *parse_output_format(format_text);
  try {
    std::string text;
    if (*estimate) {
      text = cli::run_estimate(cfg);
    } else if (*sweep) {
      text = cli::run_sweep(cfg, param, values);
    } else if (*compare) {
      text = cli::run_compare(cfg, measured, filter);
    } else {
      text = cli::run_legacy(model, params, cfg.format);
    }

    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << text)) {
        return fail(to_string(error_code::io), "cannot write '" + out_path + "'");
      }
    }
  } catch (const nrenergy::error& e) {
    return fail(to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail("NRE_INTERNAL", e.what());
  }
  return 0;
}
