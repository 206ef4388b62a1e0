#include "nrenergy/report_ingest.hpp"
#include "nrenergy/errors.hpp"

#include "json_util.hpp"

#include <fstream>
#include <ostream>

namespace nrenergy {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t                   start = 0;
  for (;;) {
    const std::size_t pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

bool has_prefix(std::string_view path, const std::vector<std::string>& prefixes)
{
  for (const std::string& p : prefixes) {
    if (path.starts_with(p)) {
      return true;
    }
  }
  return false;
}

std::optional<std::uint64_t> parse_count(std::string_view text)
{
  if (text.empty() || text.size() > 19) {
    return std::nullopt;
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      return std::nullopt;
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

block_comparison compare_block(const rational& modeled, const rational& measured)
{
  block_comparison c;
  c.modeled  = modeled;
  c.measured = measured;
  if (measured == 0) {
    c.bias = estimate_bias::undefined;
    return c;
  }
  c.ratio          = to_double(modeled / measured);
  c.relative_error = to_double((modeled - measured) / measured);
  if (modeled > measured) {
    c.bias = estimate_bias::over;
  } else if (modeled < measured) {
    c.bias = estimate_bias::under;
  } else {
    c.bias = estimate_bias::match;
  }
  return c;
}

} // namespace

bool path_filter::accepts(std::string_view path) const
{
  if (!allow.empty() && !has_prefix(path, allow)) {
    return false;
  }
  return !has_prefix(path, block);
}

std::optional<block_id> block_map::resolve(std::string_view path) const
{
  std::optional<block_id> best;
  std::size_t             best_len = 0;
  for (const auto& [prefix, block] : prefixes) {
    if (path.starts_with(prefix) && (!best || prefix.size() > best_len)) {
      best     = block;
      best_len = prefix.size();
    }
  }
  return best;
}

ingest_config parse_ingest_config(std::string_view json_text, std::string_view source_name)
{
  const detail::json          doc = detail::parse_json(json_text, source_name);
  const detail::object_reader root(doc, std::string(source_name), {"allow", "block", "block_map"});

  auto read_list = [&root](std::string_view key) {
    std::vector<std::string> out;
    if (!root.has(key)) {
      return out;
    }
    const detail::json& list = root.at(key);
    if (!list.is_array()) {
      throw config_error(root.field(key) + ": must be an array of strings");
    }
    for (const auto& item : list) {
      if (!item.is_string()) {
        throw config_error(root.field(key) + ": must be an array of strings");
      }
      out.push_back(item.get<std::string>());
    }
    return out;
  };

  ingest_config cfg;
  cfg.filter.allow = read_list("allow");
  cfg.filter.block = read_list("block");
  if (root.has("block_map")) {
    const detail::json& map = root.at("block_map");
    if (!map.is_object()) {
      throw config_error(root.field("block_map") + ": must be an object");
    }
    for (const auto& item : map.items()) {
      auto block = item.value().is_string() ? parse_block_id(item.value().get<std::string>()) : std::nullopt;
      if (!block) {
        throw config_error(fmt::format("{}: '{}' must map to a block A..H", root.field("block_map"), item.key()));
      }
      cfg.blocks.prefixes.emplace_back(item.key(), *block);
    }
  }
  return cfg;
}

ingest_config load_ingest_config(const std::filesystem::path& path)
{
  return parse_ingest_config(detail::read_text_file(path), path.string());
}

measured_report parse_measurement(std::istream& in, const path_filter& filter, std::string_view source_name)
{
  measured_report report;
  report.source = std::string(source_name);

  std::string line;
  std::size_t line_no     = 0;
  bool        have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    if (!have_header) {
      if (text != measurement_header) {
        throw parse_error(source_name, line_no, fmt::format("expected header '{}'", measurement_header));
      }
      have_header = true;
      continue;
    }

    const auto fields = split_fields(text);
    if (fields.size() != 6) {
      throw parse_error(source_name, line_no, fmt::format("expected 6 columns, found {}", fields.size()));
    }
    measured_row row;
    row.function_path = std::string(fields[0]);
    if (row.function_path.empty()) {
      throw parse_error(source_name, line_no, "empty function_path");
    }
    if (!fields[1].empty()) {
      row.block = parse_block_id(fields[1]);
      if (!row.block) {
        throw parse_error(source_name, line_no, fmt::format("unknown block '{}'", fields[1]));
      }
    }
    auto op = parse_op_kind(fields[2]);
    if (!op) {
      throw parse_error(source_name, line_no, fmt::format("unknown operator '{}'", fields[2]));
    }
    row.op        = *op;
    auto data_type = parse_data_class(fields[3]);
    if (!data_type) {
      throw parse_error(source_name, line_no, fmt::format("unknown data_type '{}'", fields[3]));
    }
    row.data_type = *data_type;
    row.shape     = std::string(fields[4]);
    auto count    = parse_count(fields[5]);
    if (!count) {
      throw parse_error(source_name, line_no, fmt::format("count '{}' is not a non-negative integer", fields[5]));
    }
    row.count = *count;

    if (filter.accepts(row.function_path)) {
      report.rows.push_back(std::move(row));
    } else {
      ++report.rejected_rows;
    }
  }
  if (!have_header) {
    throw parse_error(source_name, line_no, "missing header row");
  }
  return report;
}

measured_report parse_measurement(const std::filesystem::path& path, const path_filter& filter)
{
  std::ifstream in(path);
  if (!in) {
    throw io_error(fmt::format("cannot open measurement report '{}'", path.string()));
  }
  return parse_measurement(in, filter, path.string());
}

void write_measurement(std::ostream& out, const measured_report& report)
{
  out << measurement_header << '\n';
  for (const measured_row& row : report.rows) {
    out << row.function_path << ',' << (row.block ? to_string(*row.block) : "") << ',' << to_string(row.op) << ','
        << to_string(row.data_type) << ',' << row.shape << ',' << row.count << '\n';
  }
}

measured_report apply_filter(const measured_report& report, const path_filter& filter)
{
  measured_report out;
  out.source        = report.source;
  out.rejected_rows = report.rejected_rows;
  for (const measured_row& row : report.rows) {
    if (filter.accepts(row.function_path)) {
      out.rows.push_back(row);
    } else {
      ++out.rejected_rows;
    }
  }
  return out;
}

measured_report synthesize_measurement(const pipeline_tallies& tallies)
{
  measured_report report;
  report.source = "model";
  for (block_id block : all_blocks) {
    const std::string path = fmt::format("model/block_{}", to_string(block));
    tallies.blocks[block].for_each([&](op_kind kind, data_class cls, std::uint64_t n) {
      report.rows.push_back({.function_path = path,
                             .block         = block,
                             .op            = kind,
                             .data_type     = cls,
                             .shape         = is_vector(cls) ? "1xN" : "1x1",
                             .count         = n});
    });
  }
  return report;
}

measured_cycles
measured_cycles_for(const measured_report& report, const instruction_cost_table& table, const block_map& blocks)
{
  per_block<operation_tally> tallies;
  operation_tally            unattributed;
  measured_cycles            out;
  for (const measured_row& row : report.rows) {
    std::optional<block_id> block = row.block ? row.block : blocks.resolve(row.function_path);
    if (block) {
      tallies[*block].add(row.op, row.data_type, row.count);
      out.present[*block] = true;
    } else {
      unattributed.add(row.op, row.data_type, row.count);
      ++out.unattributed_rows;
    }
  }
  for (block_id block : all_blocks) {
    out.cycles[block] = cycles_for(tallies[block], table).cycles;
  }
  out.unattributed = cycles_for(unattributed, table).cycles;
  return out;
}

std::string_view to_string(estimate_bias bias)
{
  switch (bias) {
    case estimate_bias::match:
      return "match";
    case estimate_bias::over:
      return "over";
    case estimate_bias::under:
      return "under";
    case estimate_bias::undefined:
      return "undefined";
  }
  return "?";
}

comparison_report compare(const energy_report& modeled, const measured_cycles& measured)
{
  comparison_report out;
  rational          measured_total;
  for (block_id block : all_blocks) {
    out.blocks[block] = compare_block(modeled.blocks[block].cycles, measured.cycles[block]);
    measured_total += measured.cycles[block];
  }
  out.total             = compare_block(modeled.total.cycles, measured_total);
  out.unattributed      = measured.unattributed;
  out.unattributed_rows = measured.unattributed_rows;
  return out;
}

} // namespace nrenergy
