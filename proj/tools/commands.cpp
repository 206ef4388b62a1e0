#include "commands.hpp"

#include "nrenergy/cost_model.hpp"
#include "nrenergy/data_paths.hpp"
#include "nrenergy/errors.hpp"
#include "nrenergy/legacy_models.hpp"
#include "nrenergy/opcount.hpp"
#include "nrenergy/report_ingest.hpp"
#include "nrenergy/scenario.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <vector>

namespace nrenergy::cli {

namespace {

void require_valid(const scenario& sc)
{
  auto problems = validate(sc);
  if (problems.empty()) {
    return;
  }
  std::string text;
  for (const violation& v : problems) {
    text += text.empty() ? v.message : "; " + v.message;
  }
  throw config_error("invalid scenario: " + text);
}

void check_positive(const std::optional<double>& value, std::string_view flag)
{
  if (value && (!std::isfinite(*value) || *value <= 0.0)) {
    throw error(error_code::usage, fmt::format("{} must be a positive number", flag));
  }
}

/// Scenario with command-line energy overrides applied, validated.
scenario load_configured(const run_config& cfg)
{
  check_positive(cfg.kappa, "--kappa");
  check_positive(cfg.clock_hz, "--clock-hz");
  scenario sc = load_scenario(cfg.scenario_path);
  if (cfg.kappa) {
    sc.kappa = *cfg.kappa;
  }
  if (cfg.clock_hz) {
    sc.clock_hz = *cfg.clock_hz;
  }
  require_valid(sc);
  return sc;
}

instruction_cost_table load_table(const run_config& cfg)
{
  return load_cost_table(cfg.cost_table_path.value_or(default_cost_table_path()));
}

energy_report estimate(const scenario& sc, const instruction_cost_table& table)
{
  energy_report report = build_report(tally_pipeline(sc), table, {.kappa = sc.kappa, .clock_hz = sc.clock_hz});
  report.echo          = sc;
  return report;
}

std::vector<std::string_view> split_values(std::string_view values)
{
  std::vector<std::string_view> out;
  std::size_t                   start = 0;
  for (;;) {
    const std::size_t pos = values.find(',', start);
    out.push_back(values.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

unsigned parse_positive(std::string_view param, std::string_view text)
{
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw error(error_code::usage, fmt::format("invalid {} value '{}'", param, text));
  }
  return value;
}

} // namespace

std::string run_estimate(const run_config& cfg)
{
  const scenario sc = load_configured(cfg);
  return render_estimate(estimate(sc, load_table(cfg)), cfg.format);
}

std::string run_sweep(const run_config& cfg, std::string_view param, std::string_view values)
{
  bool known = false;
  for (std::string_view p : sweep_params) {
    known = known || p == param;
  }
  if (!known) {
    throw error(error_code::usage,
                fmt::format("cannot sweep '{}'; choose one of modulation, n_prb, n_layers, n_slots", param));
  }
  if (values.empty()) {
    throw error(error_code::usage, "--values is empty");
  }

  const scenario base = load_configured(cfg);

  // Build and validate every point before producing any output.
  std::vector<std::pair<std::string, scenario>> variants;
  for (std::string_view text : split_values(values)) {
    scenario sc = base;
    std::string label;
    if (param == "modulation") {
      auto mod = parse_modulation(text);
      if (!mod) {
        throw error(error_code::usage, fmt::format("invalid modulation value '{}'", text));
      }
      sc.mod = *mod;
      label  = std::string(to_string(*mod));
    } else {
      const unsigned v = parse_positive(param, text);
      if (param == "n_prb") {
        sc.n_prb = v;
      } else if (param == "n_layers") {
        sc.n_layers = v;
      } else {
        sc.n_slots = v;
      }
      label = std::to_string(v);
    }
    require_valid(sc);
    variants.emplace_back(std::move(label), sc);
  }

  const instruction_cost_table table = load_table(cfg);
  std::vector<sweep_point>     points;
  points.reserve(variants.size());
  for (const auto& [label, sc] : variants) {
    points.push_back({label, estimate(sc, table)});
  }
  return render_sweep(param, points, cfg.format);
}

std::string run_compare(const run_config&            cfg,
                        const std::filesystem::path& measured_path,
                        const std::filesystem::path& filter_path)
{
  const scenario               sc     = load_configured(cfg);
  const instruction_cost_table table  = load_table(cfg);
  const ingest_config          ingest = load_ingest_config(filter_path);

  const measured_report measured = parse_measurement(measured_path, ingest.filter);
  if (measured.empty()) {
    throw error(error_code::empty_report,
                fmt::format("measurement report '{}' is empty after filtering ({} rows rejected)",
                            measured_path.string(),
                            measured.rejected_rows));
  }
  const energy_report modeled = estimate(sc, table);
  return render_comparison(compare(modeled, measured_cycles_for(measured, table, ingest.blocks)), cfg.format);
}

std::string run_legacy(std::string_view model, const std::filesystem::path& params_path, output_format format)
{
  return render_legacy(legacy::evaluate_file(model, params_path), format);
}

} // namespace nrenergy::cli
