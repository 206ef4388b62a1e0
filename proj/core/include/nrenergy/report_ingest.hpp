#pragma once

#include "nrenergy/block.hpp"
#include "nrenergy/cost_model.hpp"
#include "nrenergy/opcount.hpp"
#include "nrenergy/tally.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nrenergy {

/// One operator record of a measurement export.
struct measured_row {
  std::string             function_path;
  std::optional<block_id> block;
  op_kind                 op = op_kind::add;
  data_class              data_type = data_class::logical_scalar;
  std::string             shape;
  std::uint64_t           count = 0;

  bool operator==(const measured_row&) const = default;
};

struct measured_report {
  std::vector<measured_row> rows;
  std::string               source;
  std::size_t               rejected_rows = 0; ///< rows dropped by the path filter

  /// True when no rows survived filtering.
  bool empty() const { return rows.empty(); }
};

/// Keeps rows whose function path starts with an allowed prefix (any path when the allowlist is empty)
/// and with no blocked prefix.
struct path_filter {
  std::vector<std::string> allow;
  std::vector<std::string> block;

  bool accepts(std::string_view path) const;
};

/// Attributes unlabeled rows to a block by longest matching path prefix.
struct block_map {
  std::vector<std::pair<std::string, block_id>> prefixes;

  std::optional<block_id> resolve(std::string_view path) const;
};

struct ingest_config {
  path_filter filter;
  block_map   blocks;
};

/// Reads {"allow": [...], "block": [...], "block_map": {"prefix": "A", ...}}. Unknown keys are rejected.
ingest_config parse_ingest_config(std::string_view json_text, std::string_view source_name = "<filter>");
ingest_config load_ingest_config(const std::filesystem::path& path);

/// Column header of the measurement format.
inline constexpr std::string_view measurement_header = "function_path,block,operator,data_type,shape,count";

/// Parses the measurement format and applies \p filter. Throws parse_error naming the line of a malformed row.
measured_report parse_measurement(std::istream& in, const path_filter& filter, std::string_view source_name);
measured_report parse_measurement(const std::filesystem::path& path, const path_filter& filter);

void write_measurement(std::ostream& out, const measured_report& report);

measured_report apply_filter(const measured_report& report, const path_filter& filter);

/// Measurement rows equivalent to the modeled tallies, one row per non-zero entry per block.
measured_report synthesize_measurement(const pipeline_tallies& tallies);

struct measured_cycles {
  per_block<rational> cycles;
  per_block<bool>     present{}; ///< block had at least one row
  rational            unattributed;
  std::size_t         unattributed_rows = 0;
};

/// Costs every row through the same path as the model. Throws coverage_error for an uncovered pair.
measured_cycles
measured_cycles_for(const measured_report& report, const instruction_cost_table& table, const block_map& blocks = {});

enum class estimate_bias : std::uint8_t { match, over, under, undefined };

std::string_view to_string(estimate_bias bias);

struct block_comparison {
  rational              modeled;
  rational              measured;
  std::optional<double> ratio;          ///< modeled / measured; empty when measured is zero
  std::optional<double> relative_error; ///< (modeled - measured) / measured
  estimate_bias         bias = estimate_bias::undefined;
};

struct comparison_report {
  per_block<block_comparison> blocks;
  block_comparison            total;
  rational                    unattributed;
  std::size_t                 unattributed_rows = 0;
};

comparison_report compare(const energy_report& modeled, const measured_cycles& measured);

} // namespace nrenergy
