#pragma once

#include "nrenergy/report_format.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace nrenergy::cli {

/// Inputs shared by the scenario-driven subcommands.
struct run_config {
  std::filesystem::path                scenario_path;
  std::optional<std::filesystem::path> cost_table_path; ///< bundled default when empty
  std::optional<double>                kappa;
  std::optional<double>                clock_hz;
  output_format                        format = output_format::structured_text;
};

/// Parameters accepted by run_sweep.
inline constexpr std::string_view sweep_params[] = {"modulation", "n_prb", "n_layers", "n_slots"};

// Each command returns the full text to emit. Failures throw nrenergy::error before anything is produced.

std::string run_estimate(const run_config& cfg);
std::string run_sweep(const run_config& cfg, std::string_view param, std::string_view values);
std::string run_compare(const run_config&            cfg,
                        const std::filesystem::path& measured_path,
                        const std::filesystem::path& filter_path);
std::string run_legacy(std::string_view model, const std::filesystem::path& params_path, output_format format);

} // namespace nrenergy::cli
