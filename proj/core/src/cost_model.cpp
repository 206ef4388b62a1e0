#include "nrenergy/cost_model.hpp"
#include "nrenergy/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace nrenergy {

namespace {

using boost::multiprecision::cpp_int;

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
  std::vector<std::string_view> out;
  std::size_t                   start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

/// Non-negative decimal literal ("3", "0.25") as an exact rational.
std::optional<rational> parse_decimal(std::string_view text)
{
  if (text.empty()) {
    return std::nullopt;
  }
  cpp_int     numerator   = 0;
  cpp_int     denominator = 1;
  bool        seen_point  = false;
  std::size_t digits      = 0;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) {
        return std::nullopt;
      }
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') {
      return std::nullopt;
    }
    numerator = numerator * 10 + (c - '0');
    if (seen_point) {
      denominator *= 10;
    }
    ++digits;
  }
  if (digits == 0 || text.back() == '.') {
    return std::nullopt;
  }
  return rational(numerator, denominator);
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

constexpr std::string_view cost_table_header = "op_kind,data_class,operand_location,micro_ops,cycles";

} // namespace

std::string_view to_string(operand_location loc)
{
  switch (loc) {
    case operand_location::reg:
      return "register";
    case operand_location::mmx:
      return "mmx";
    case operand_location::xmm:
      return "xmm";
    case operand_location::memory:
      return "memory";
  }
  return "?";
}

std::optional<operand_location> parse_operand_location(std::string_view text)
{
  for (operand_location loc :
       {operand_location::reg, operand_location::mmx, operand_location::xmm, operand_location::memory}) {
    if (to_string(loc) == text) {
      return loc;
    }
  }
  return std::nullopt;
}

void instruction_cost_table::insert(op_kind kind, data_class cls, operand_location loc, cost_entry entry)
{
  if (kind == op_kind::flop) {
    throw domain_error("FLOP has no table entry; it is costed as ADD + MUL");
  }
  if (!entries_.emplace(key{kind, cls, loc}, std::move(entry)).second) {
    throw domain_error(
        fmt::format("duplicate cost entry ({}, {}, {})", to_string(kind), to_string(cls), to_string(loc)));
  }
}

const cost_entry* instruction_cost_table::find(op_kind kind, data_class cls, operand_location loc) const
{
  auto it = entries_.find(key{kind, cls, loc});
  return it == entries_.end() ? nullptr : &it->second;
}

const cost_entry& instruction_cost_table::resolve(op_kind kind, data_class cls) const
{
  const operand_location loc = assign_location(cls);
  if (const cost_entry* e = find(kind, cls, loc)) {
    return *e;
  }
  throw coverage_error(fmt::format("cost table '{}' has no entry for ({}, {}, {})",
                                   source.empty() ? "<unnamed>" : source,
                                   to_string(kind),
                                   to_string(cls),
                                   to_string(loc)));
}

instruction_cost_table instruction_cost_table::uniform()
{
  instruction_cost_table table;
  table.source = "uniform";
  for (op_kind kind : all_op_kinds) {
    if (kind == op_kind::flop) {
      continue;
    }
    for (data_class cls : all_data_classes) {
      table.insert(kind, cls, assign_location(cls), {.micro_ops = 1, .cycles = 1});
    }
  }
  return table;
}

instruction_cost_table parse_cost_table(std::istream& in, std::string_view source_name)
{
  instruction_cost_table table;
  table.source = std::string(source_name);

  std::string line;
  std::size_t line_no     = 0;
  bool        have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) {
      continue;
    }
    if (text.front() == '#') {
      std::string_view comment = trim(text.substr(1));
      if (comment.starts_with("source:")) {
        table.source = std::string(trim(comment.substr(7)));
      } else if (comment.starts_with("date:")) {
        table.date = std::string(trim(comment.substr(5)));
      }
      continue;
    }
    if (!have_header) {
      if (text != cost_table_header) {
        throw parse_error(source_name, line_no, fmt::format("expected header '{}'", cost_table_header));
      }
      have_header = true;
      continue;
    }

    const auto fields = split(text, ',');
    if (fields.size() != 5) {
      throw parse_error(source_name, line_no, fmt::format("expected 5 columns, found {}", fields.size()));
    }
    auto kind = parse_op_kind(fields[0]);
    if (!kind) {
      throw parse_error(source_name, line_no, fmt::format("unknown op_kind '{}'", fields[0]));
    }
    if (*kind == op_kind::flop) {
      throw parse_error(source_name, line_no, "FLOP rows are not allowed; FLOP is costed as ADD + MUL");
    }
    auto cls = parse_data_class(fields[1]);
    if (!cls) {
      throw parse_error(source_name, line_no, fmt::format("unknown data_class '{}'", fields[1]));
    }
    auto loc = parse_operand_location(fields[2]);
    if (!loc) {
      throw parse_error(source_name, line_no, fmt::format("unknown operand_location '{}'", fields[2]));
    }
    auto uops = parse_count(fields[3]);
    if (!uops) {
      throw parse_error(source_name, line_no, fmt::format("micro_ops '{}' is not a non-negative integer", fields[3]));
    }
    auto cycles = parse_decimal(fields[4]);
    if (!cycles) {
      throw parse_error(source_name, line_no, fmt::format("cycles '{}' is not a non-negative decimal", fields[4]));
    }
    if (table.find(*kind, *cls, *loc) != nullptr) {
      throw parse_error(source_name,
                        line_no,
                        fmt::format("duplicate key ({}, {}, {})", fields[0], fields[1], fields[2]));
    }
    table.insert(*kind, *cls, *loc, {.micro_ops = *uops, .cycles = *cycles});
  }
  if (!have_header) {
    throw parse_error(source_name, line_no, "empty cost table");
  }
  return table;
}

instruction_cost_table load_cost_table(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) {
    throw io_error(fmt::format("cannot open cost table '{}'", path.string()));
  }
  return parse_cost_table(in, path.string());
}

cycle_cost cycles_for(const operation_tally& tally, const instruction_cost_table& table)
{
  cycle_cost out;
  auto       charge = [&](op_kind kind, data_class cls, std::uint64_t n) {
    const cost_entry& e = table.resolve(kind, cls);
    out.micro_ops += n * e.micro_ops;
    out.cycles += e.cycles * n;
  };
  tally.for_each([&](op_kind kind, data_class cls, std::uint64_t n) {
    if (kind == op_kind::flop) {
      charge(op_kind::add, cls, n);
      charge(op_kind::mul, cls, n);
    } else {
      charge(kind, cls, n);
    }
  });
  return out;
}

double energy_per_cycle(double kappa, double clock_hz)
{
  return kappa * clock_hz * clock_hz;
}

double to_double(const rational& value)
{
  return value.convert_to<double>();
}

std::string to_decimal_string(const rational& value)
{
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  cpp_int     scale  = 1;
  std::size_t places = 0;
  while (scale % den != 0) {
    if (++places > 40) {
      return fmt::format("{:.6g}", to_double(value));
    }
    scale *= 10;
  }
  const bool    negative = num < 0;
  const cpp_int scaled   = (negative ? cpp_int(-num) : num) * (scale / den);
  std::string   digits   = scaled.str();
  if (digits.size() <= places) {
    digits.insert(0, places - digits.size() + 1, '0');
  }
  std::string text = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
  while (text.back() == '0') {
    text.pop_back();
  }
  if (text.back() == '.') {
    text.pop_back();
  }
  return negative ? "-" + text : text;
}

energy_report
build_report(const pipeline_tallies& tallies, const instruction_cost_table& table, const energy_params& energy)
{
  energy_report report;
  report.bits_transmitted    = tallies.bits_transmitted;
  report.energy              = energy;
  report.epsilon_j_per_cycle = energy.epsilon();
  report.table_source        = table.source;
  report.table_date          = table.date;

  auto finish = [&](block_cost& b) {
    b.energy_j = to_double(b.cycles) * report.epsilon_j_per_cycle;
    if (report.bits_transmitted != 0) {
      b.cycles_per_bit = to_double(b.cycles / report.bits_transmitted);
    }
  };

  for (block_id block : all_blocks) {
    const cycle_cost c = cycles_for(tallies.blocks[block], table);
    block_cost&      b = report.blocks[block];
    b.micro_ops        = c.micro_ops;
    b.cycles           = c.cycles;
    finish(b);
    report.total.micro_ops += b.micro_ops;
    report.total.cycles += b.cycles;
  }
  finish(report.total);
  return report;
}

} // namespace nrenergy
