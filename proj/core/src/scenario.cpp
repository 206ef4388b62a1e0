#include "nrenergy/scenario.hpp"
#include "nrenergy/errors.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>

namespace nrenergy {

namespace {

constexpr unsigned subcarriers_per_prb = 12;
constexpr unsigned symbols_per_slot    = 14; // normal cyclic prefix
constexpr unsigned crc_length          = 24;
constexpr unsigned max_prb             = 275;

/// Lifting sizes grouped by set index i_LS (TS 38.212 Table 5.3.2-1).
constexpr std::array<std::array<unsigned, 8>, 8> lifting_sets = {{
    {2, 4, 8, 16, 32, 64, 128, 256},
    {3, 6, 12, 24, 48, 96, 192, 384},
    {5, 10, 20, 40, 80, 160, 320, 0},
    {7, 14, 28, 56, 112, 224, 0, 0},
    {9, 18, 36, 72, 144, 288, 0, 0},
    {11, 22, 44, 88, 176, 352, 0, 0},
    {13, 26, 52, 104, 208, 0, 0, 0},
    {15, 30, 60, 120, 240, 0, 0, 0},
}};

std::string upper(std::string_view text)
{
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

} // namespace

std::string_view to_string(modulation mod)
{
  switch (mod) {
    case modulation::qpsk:
      return "QPSK";
    case modulation::qam16:
      return "16QAM";
    case modulation::qam64:
      return "64QAM";
    case modulation::qam256:
      return "256QAM";
  }
  return "?";
}

std::optional<modulation> parse_modulation(std::string_view text)
{
  const std::string name = upper(text);
  if (name == "QPSK") {
    return modulation::qpsk;
  }
  if (name == "16QAM" || name == "QAM16" || name == "16-QAM") {
    return modulation::qam16;
  }
  if (name == "64QAM" || name == "QAM64" || name == "64-QAM") {
    return modulation::qam64;
  }
  if (name == "256QAM" || name == "QAM256" || name == "256-QAM") {
    return modulation::qam256;
  }
  return std::nullopt;
}

std::vector<violation> validate(const scenario& sc)
{
  std::vector<violation> out;
  auto                   fail = [&out](std::string field, std::string message) {
    out.push_back({std::move(field), std::move(message)});
  };

  if (sc.n_slots < 1) {
    fail("n_slots", "n_slots must be >= 1");
  }
  if (!std::isfinite(sc.snr_db)) {
    fail("snr_db", "snr_db must be finite");
  }
  if (sc.scs_khz != 15 && sc.scs_khz != 30 && sc.scs_khz != 60 && sc.scs_khz != 120) {
    fail("scs_khz", "scs_khz must be one of 15, 30, 60, 120");
  }
  if (sc.n_prb < 1 || sc.n_prb > max_prb) {
    fail("n_prb", "n_prb must be in [1, 275]");
  }
  if (sc.code_rate_x1024 < 1 || sc.code_rate_x1024 > 1023) {
    fail("code_rate", "code_rate out of range");
  }
  if (sc.n_tx < 1) {
    fail("n_tx", "n_tx must be >= 1");
  }
  if (sc.n_rx < 1) {
    fail("n_rx", "n_rx must be >= 1");
  }
  if (sc.n_layers < 1) {
    fail("n_layers", "n_layers must be >= 1");
  } else if (sc.n_layers > std::min(sc.n_tx, sc.n_rx)) {
    fail("n_layers", "n_layers exceeds min(n_tx,n_rx)");
  }
  if (sc.n_ports < sc.n_layers) {
    fail("n_ports", "n_ports below n_layers");
  }
  if (!(sc.clock_hz > 0.0) || !std::isfinite(sc.clock_hz)) {
    fail("clock_hz", "clock_hz must be positive");
  }
  if (!(sc.kappa > 0.0) || !std::isfinite(sc.kappa)) {
    fail("kappa", "kappa must be positive");
  }
  if (sc.channel_len < 1) {
    fail("channel_len", "channel_len must be >= 1");
  }
  if (sc.pilot_sc_per_prb < 1 || sc.pilot_sc_per_prb > subcarriers_per_prb) {
    fail("pilot_sc_per_prb", "pilot_sc_per_prb must be in [1, 12]");
  }
  if (sc.pilot_symbols < 1 || sc.pilot_symbols >= symbols_per_slot) {
    fail("pilot_symbols", "pilot_symbols must be in [1, 13]");
  }
  if (sc.crc_step_bits < 1) {
    fail("crc_step_bits", "crc_step_bits must be >= 1");
  }
  if (sc.decoder.check_degree < 1) {
    fail("decoder.check_degree", "check_degree must be >= 1");
  }
  if (sc.decoder.variable_degree < 1) {
    fail("decoder.variable_degree", "variable_degree must be >= 1");
  }
  if (sc.tb_size_override && *sc.tb_size_override < 1) {
    fail("overrides.tb_size", "tb_size override must be >= 1");
  }
  if (sc.demod_antennas_override && *sc.demod_antennas_override < 1) {
    fail("overrides.demod_antennas", "demod_antennas override must be >= 1");
  }
  return out;
}

std::uint64_t fft_size_for(std::uint64_t subcarriers)
{
  return std::max<std::uint64_t>(128, std::bit_ceil(subcarriers + 1));
}

unsigned lifting_size_for(std::uint64_t min_bits, unsigned info_cols)
{
  unsigned best = 0;
  for (const auto& set : lifting_sets) {
    for (unsigned z : set) {
      if (z != 0 && static_cast<std::uint64_t>(info_cols) * z >= min_bits && (best == 0 || z < best)) {
        best = z;
      }
    }
  }
  if (best == 0) {
    throw domain_error(fmt::format("no lifting size covers {} bits with {} information columns", min_bits, info_cols));
  }
  return best;
}

unsigned lifting_set_of(unsigned lifting_size)
{
  for (unsigned i = 0; i != lifting_sets.size(); ++i) {
    if (std::find(lifting_sets[i].begin(), lifting_sets[i].end(), lifting_size) != lifting_sets[i].end()) {
      return i;
    }
  }
  throw domain_error(fmt::format("{} is not a valid lifting size", lifting_size));
}

derived_params derive(const scenario& sc, const base_graph_catalog& catalog)
{
  if (auto problems = validate(sc); !problems.empty()) {
    std::string text;
    for (const violation& v : problems) {
      text += text.empty() ? "" : "; ";
      text += v.message;
    }
    throw config_error("invalid scenario: " + text);
  }

  derived_params d;
  d.qm                = bits_per_symbol(sc.mod);
  d.n_subcarriers     = static_cast<std::uint64_t>(subcarriers_per_prb) * sc.n_prb;
  d.symbols_per_slot  = symbols_per_slot;
  d.fft_size          = fft_size_for(d.n_subcarriers);
  d.pilot_subcarriers = static_cast<std::uint64_t>(sc.pilot_sc_per_prb) * sc.n_prb;
  d.data_re           = d.n_subcarriers * d.symbols_per_slot - d.pilot_subcarriers * sc.pilot_symbols;
  d.n_symbols         = d.data_re * sc.n_layers;
  d.codeword_bits     = d.n_symbols * d.qm;
  d.symbols_per_layer = d.n_symbols / sc.n_layers;

  // A: largest multiple of 8 not exceeding N_RE * Qm * v * R.
  d.tb_size = sc.tb_size_override.value_or(d.codeword_bits * sc.code_rate_x1024 / (1024 * 8) * 8);
  if (d.tb_size == 0) {
    throw config_error("transport block size is zero for this scenario");
  }

  d.base_graph         = select_base_graph(d.tb_size, sc.code_rate_x1024, catalog);
  d.crc_bits           = crc_length;
  const std::uint64_t max_cb = d.base_graph.id == 1 ? 8448 : 3840;
  if (d.tb_size + crc_length <= max_cb) {
    d.n_code_blocks = 1;
  } else {
    const std::uint64_t per_cb = max_cb - crc_length;
    d.n_code_blocks            = static_cast<unsigned>((d.tb_size + crc_length + per_cb - 1) / per_cb);
  }
  d.cb_bits_total = d.tb_size + static_cast<std::uint64_t>(d.crc_bits) * d.n_code_blocks;

  const std::uint64_t bits_per_cb = (d.tb_size + d.n_code_blocks - 1) / d.n_code_blocks + d.crc_bits;
  d.lifting_size                  = lifting_size_for(bits_per_cb, d.base_graph.info_cols);
  d.lifting_set                   = lifting_set_of(d.lifting_size);
  d.cb_size                       = static_cast<std::uint64_t>(d.base_graph.info_cols) * d.lifting_size;
  // The encoder output drops the first two punctured systematic columns.
  d.coded_cb_size = static_cast<std::uint64_t>(d.base_graph.cols - 2) * d.lifting_size;
  return d;
}

derived_params derive(const scenario& sc)
{
  return derive(sc, base_graph_catalog::bundled());
}

namespace {

unsigned parse_code_rate(const detail::object_reader& root)
{
  const detail::json& v = root.at("code_rate");
  if (v.is_number_unsigned() || v.is_number_integer()) {
    std::int64_t n = v.get<std::int64_t>();
    if (n < 0 || n > 1024) {
      throw config_error("code_rate out of range");
    }
    return static_cast<unsigned>(n);
  }
  if (v.is_string()) {
    // "490/1024"
    const std::string text  = v.get<std::string>();
    const auto        slash = text.find('/');
    unsigned          num = 0, den = 0;
    if (slash != std::string::npos) {
      auto r1 = std::from_chars(text.data(), text.data() + slash, num);
      auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
      if (r1.ec == std::errc{} && r1.ptr == text.data() + slash && r2.ec == std::errc{} &&
          r2.ptr == text.data() + text.size() && den == 1024) {
        return num;
      }
    }
  }
  throw config_error("code_rate must be an integer numerator over 1024 or a string \"n/1024\"");
}

} // namespace

scenario parse_scenario(std::string_view json_text, std::string_view source_name)
{
  const detail::json doc = detail::parse_json(json_text, source_name);
  const detail::object_reader root(doc,
                                   std::string(source_name),
                                   {"n_slots",
                                    "snr_db",
                                    "scs_khz",
                                    "n_prb",
                                    "modulation",
                                    "code_rate",
                                    "antennas",
                                    "energy",
                                    "channel",
                                    "decoder",
                                    "crc_step_bits",
                                    "overrides"});

  scenario sc;
  root.read_unsigned("n_slots", sc.n_slots);
  root.read_double("snr_db", sc.snr_db);
  sc.scs_khz = root.get_unsigned("scs_khz");
  sc.n_prb   = root.get_unsigned("n_prb");

  const std::string mod_name = root.get_string("modulation");
  auto              mod      = parse_modulation(mod_name);
  if (!mod) {
    throw config_error(fmt::format("{}: unsupported modulation '{}'", root.field("modulation"), mod_name));
  }
  sc.mod             = *mod;
  sc.code_rate_x1024 = parse_code_rate(root);

  const detail::object_reader ant(
      root.at("antennas"), root.field("antennas"), {"n_tx", "n_rx", "n_layers", "n_ports"});
  sc.n_tx     = ant.get_unsigned("n_tx");
  sc.n_rx     = ant.get_unsigned("n_rx");
  sc.n_layers = ant.get_unsigned("n_layers");
  sc.n_ports  = ant.has("n_ports") ? ant.get_unsigned("n_ports") : sc.n_tx;

  if (root.has("energy")) {
    const detail::object_reader energy(root.at("energy"), root.field("energy"), {"kappa", "clock_hz"});
    energy.read_double("kappa", sc.kappa);
    energy.read_double("clock_hz", sc.clock_hz);
  }
  if (root.has("channel")) {
    const detail::object_reader channel(
        root.at("channel"), root.field("channel"), {"channel_len", "pilot_sc_per_prb", "pilot_symbols"});
    channel.read_unsigned("channel_len", sc.channel_len);
    channel.read_unsigned("pilot_sc_per_prb", sc.pilot_sc_per_prb);
    channel.read_unsigned("pilot_symbols", sc.pilot_symbols);
  }
  if (root.has("decoder")) {
    const detail::object_reader dec(
        root.at("decoder"), root.field("decoder"), {"check_degree", "variable_degree", "iterations"});
    dec.read_unsigned("check_degree", sc.decoder.check_degree);
    dec.read_unsigned("variable_degree", sc.decoder.variable_degree);
    dec.read_unsigned("iterations", sc.decoder.iterations);
  }
  root.read_unsigned("crc_step_bits", sc.crc_step_bits);
  if (root.has("overrides")) {
    const detail::object_reader ov(root.at("overrides"), root.field("overrides"), {"tb_size", "demod_antennas"});
    if (ov.has("tb_size")) {
      sc.tb_size_override = ov.get_uint("tb_size");
    }
    if (ov.has("demod_antennas")) {
      sc.demod_antennas_override = ov.get_unsigned("demod_antennas");
    }
  }
  return sc;
}

scenario load_scenario(const std::filesystem::path& path)
{
  return parse_scenario(detail::read_text_file(path), path.string());
}

} // namespace nrenergy
