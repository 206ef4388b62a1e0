#include "nrenergy/report_format.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <limits>
#include <string>

namespace nrenergy {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view undefined_marker = "undefined";

ojson float_value(double v)
{
  return std::stod(format_float(v));
}

ojson optional_float(const std::optional<double>& v)
{
  return v ? float_value(*v) : ojson(nullptr);
}

std::string optional_text(const std::optional<double>& v)
{
  return v ? format_float(*v) : std::string(undefined_marker);
}

ojson cycles_value(const rational& cycles)
{
  if (boost::multiprecision::denominator(cycles) == 1 && cycles >= 0 &&
      boost::multiprecision::numerator(cycles) <= std::numeric_limits<std::uint64_t>::max()) {
    return boost::multiprecision::numerator(cycles).convert_to<std::uint64_t>();
  }
  return std::stod(to_decimal_string(cycles));
}

std::optional<double> nj_per_bit(const block_cost& b, std::uint64_t bits)
{
  if (bits == 0) {
    return std::nullopt;
  }
  return b.energy_j / static_cast<double>(bits) * 1e9;
}

ojson block_json(std::string_view name, std::string_view side, const block_cost& b, std::uint64_t bits)
{
  ojson j;
  j["block"]          = name;
  j["side"]           = side;
  j["micro_ops"]      = b.micro_ops;
  j["cycles"]         = cycles_value(b.cycles);
  j["energy_j"]       = float_value(b.energy_j);
  j["cycles_per_bit"] = optional_float(b.cycles_per_bit);
  j["nj_per_bit"]     = optional_float(nj_per_bit(b, bits));
  return j;
}

ojson scenario_json(const scenario& sc)
{
  ojson j;
  j["n_slots"]    = sc.n_slots;
  j["snr_db"]     = float_value(sc.snr_db);
  j["scs_khz"]    = sc.scs_khz;
  j["n_prb"]      = sc.n_prb;
  j["modulation"] = to_string(sc.mod);
  j["code_rate"]  = fmt::format("{}/1024", sc.code_rate_x1024);
  j["antennas"]   = {{"n_tx", sc.n_tx}, {"n_rx", sc.n_rx}, {"n_layers", sc.n_layers}, {"n_ports", sc.n_ports}};
  j["energy"]     = {{"kappa", float_value(sc.kappa)}, {"clock_hz", float_value(sc.clock_hz)}};
  j["channel"]    = {{"channel_len", sc.channel_len},
                     {"pilot_sc_per_prb", sc.pilot_sc_per_prb},
                     {"pilot_symbols", sc.pilot_symbols}};
  j["decoder"]    = {{"check_degree", sc.decoder.check_degree},
                     {"variable_degree", sc.decoder.variable_degree},
                     {"iterations", sc.decoder.iterations}};
  j["crc_step_bits"] = sc.crc_step_bits;
  if (sc.tb_size_override || sc.demod_antennas_override) {
    ojson ov = ojson::object();
    if (sc.tb_size_override) {
      ov["tb_size"] = *sc.tb_size_override;
    }
    if (sc.demod_antennas_override) {
      ov["demod_antennas"] = *sc.demod_antennas_override;
    }
    j["overrides"] = ov;
  }
  return j;
}

ojson blocks_json(const energy_report& report)
{
  ojson list = ojson::array();
  for (block_id block : all_blocks) {
    list.push_back(
        block_json(to_string(block), to_string(side_of(block)), report.blocks[block], report.bits_transmitted));
  }
  return list;
}

std::string csv_row(std::string_view first, std::string_view side, const block_cost& b, std::uint64_t bits)
{
  return fmt::format("{},{},{},{},{},{},{}\n",
                     first,
                     side,
                     b.micro_ops,
                     to_decimal_string(b.cycles),
                     format_float(b.energy_j),
                     optional_text(b.cycles_per_bit),
                     optional_text(nj_per_bit(b, bits)));
}

std::string dump(const ojson& j)
{
  return j.dump(2) + "\n";
}

} // namespace

std::string format_float(double value)
{
  return fmt::format("{:.6g}", value);
}

std::optional<output_format> parse_output_format(std::string_view text)
{
  if (text == "structured-text") {
    return output_format::structured_text;
  }
  if (text == "delimited-table") {
    return output_format::delimited_table;
  }
  return std::nullopt;
}

std::string render_estimate(const energy_report& report, output_format format)
{
  if (format == output_format::delimited_table) {
    std::string out = "block,side,micro_ops,cycles,energy_j,cycles_per_bit,nj_per_bit\n";
    for (block_id block : all_blocks) {
      out += csv_row(to_string(block), to_string(side_of(block)), report.blocks[block], report.bits_transmitted);
    }
    out += csv_row("TOTAL", "", report.total, report.bits_transmitted);
    return out;
  }

  ojson j;
  if (report.echo) {
    j["scenario"] = scenario_json(*report.echo);
  }
  j["cost_table"]       = {{"source", report.table_source}, {"date", report.table_date}};
  j["energy"]           = {{"kappa", float_value(report.energy.kappa)},
                           {"clock_hz", float_value(report.energy.clock_hz)},
                           {"epsilon_j_per_cycle", float_value(report.epsilon_j_per_cycle)}};
  j["bits_transmitted"] = report.bits_transmitted;
  j["blocks"]           = blocks_json(report);
  j["total"]            = block_json("TOTAL", "", report.total, report.bits_transmitted);
  return dump(j);
}

std::string render_sweep(std::string_view param, const std::vector<sweep_point>& points, output_format format)
{
  if (format == output_format::delimited_table) {
    std::string out = "param,value,block,micro_ops,cycles,cycles_per_bit,energy_j,nj_per_bit\n";
    auto        row = [&](const sweep_point& p, std::string_view block, const block_cost& b) {
      out += fmt::format("{},{},{},{},{},{},{},{}\n",
                         param,
                         p.value,
                         block,
                         b.micro_ops,
                         to_decimal_string(b.cycles),
                         optional_text(b.cycles_per_bit),
                         format_float(b.energy_j),
                         optional_text(nj_per_bit(b, p.report.bits_transmitted)));
    };
    for (const sweep_point& p : points) {
      for (block_id block : all_blocks) {
        row(p, to_string(block), p.report.blocks[block]);
      }
      row(p, "TOTAL", p.report.total);
    }
    return out;
  }

  ojson j;
  j["param"]  = param;
  ojson list  = ojson::array();
  for (const sweep_point& p : points) {
    ojson item;
    item["value"]            = p.value;
    item["bits_transmitted"] = p.report.bits_transmitted;
    item["blocks"]           = blocks_json(p.report);
    item["total"]            = block_json("TOTAL", "", p.report.total, p.report.bits_transmitted);
    list.push_back(std::move(item));
  }
  j["points"] = std::move(list);
  return dump(j);
}

std::string render_comparison(const comparison_report& cmp, output_format format)
{
  if (format == output_format::delimited_table) {
    std::string out = "block,modeled_cycles,measured_cycles,ratio,relative_error,bias\n";
    auto        row = [&out](std::string_view name, const block_comparison& c) {
      out += fmt::format("{},{},{},{},{},{}\n",
                         name,
                         to_decimal_string(c.modeled),
                         to_decimal_string(c.measured),
                         optional_text(c.ratio),
                         optional_text(c.relative_error),
                         to_string(c.bias));
    };
    for (block_id block : all_blocks) {
      row(to_string(block), cmp.blocks[block]);
    }
    row("TOTAL", cmp.total);
    out += fmt::format("UNATTRIBUTED,,{},{},{},unattributed\n",
                       to_decimal_string(cmp.unattributed),
                       undefined_marker,
                       undefined_marker);
    return out;
  }

  auto item = [](std::string_view name, const block_comparison& c) {
    ojson j;
    j["block"]           = name;
    j["modeled_cycles"]  = cycles_value(c.modeled);
    j["measured_cycles"] = cycles_value(c.measured);
    j["ratio"]           = optional_float(c.ratio);
    j["relative_error"]  = optional_float(c.relative_error);
    j["bias"]            = to_string(c.bias);
    return j;
  };
  ojson j;
  ojson list = ojson::array();
  for (block_id block : all_blocks) {
    list.push_back(item(to_string(block), cmp.blocks[block]));
  }
  j["blocks"]       = std::move(list);
  j["total"]        = item("TOTAL", cmp.total);
  j["unattributed"] = {{"measured_cycles", cycles_value(cmp.unattributed)}, {"rows", cmp.unattributed_rows}};
  return dump(j);
}

std::string render_legacy(const legacy::model_result& result, output_format format)
{
  if (format == output_format::delimited_table) {
    return fmt::format("model,value,unit\n{},{},{}\n", result.model, format_float(result.value), result.unit);
  }
  ojson j;
  j["model"] = result.model;
  j["value"] = float_value(result.value);
  j["unit"]  = result.unit;
  return dump(j);
}

} // namespace nrenergy
