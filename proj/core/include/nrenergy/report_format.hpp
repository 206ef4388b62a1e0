#pragma once

#include "nrenergy/cost_model.hpp"
#include "nrenergy/legacy_models.hpp"
#include "nrenergy/report_ingest.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nrenergy {

enum class output_format : std::uint8_t { structured_text, delimited_table };

/// "structured-text" (JSON) or "delimited-table" (CSV).
std::optional<output_format> parse_output_format(std::string_view text);

/// Floating quantities are printed with 6 significant digits, counts as exact integers, cycles as exact
/// decimals. Key and row order is fixed, so identical inputs render byte-identical text.
std::string render_estimate(const energy_report& report, output_format format);

struct sweep_point {
  std::string   value;
  energy_report report;
};

std::string render_sweep(std::string_view param, const std::vector<sweep_point>& points, output_format format);

std::string render_comparison(const comparison_report& cmp, output_format format);

std::string render_legacy(const legacy::model_result& result, output_format format);

/// "%.6g"-style text used for every floating value.
std::string format_float(double value);

} // namespace nrenergy
