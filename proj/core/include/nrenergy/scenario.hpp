#pragma once

#include "nrenergy/base_graph.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nrenergy {

enum class modulation : std::uint8_t { qpsk, qam16, qam64, qam256 };

/// Bits per modulation symbol (Qm).
constexpr unsigned bits_per_symbol(modulation mod)
{
  switch (mod) {
    case modulation::qpsk:
      return 2;
    case modulation::qam16:
      return 4;
    case modulation::qam64:
      return 6;
    case modulation::qam256:
      return 8;
  }
  return 0;
}

/// "QPSK", "16QAM", "64QAM", "256QAM".
std::string_view to_string(modulation mod);
/// Accepts the canonical names plus "QAM16"-style spellings, case-insensitive.
std::optional<modulation> parse_modulation(std::string_view text);

/// Min-sum decoder constants. Node degrees are treated as uniform over the graph.
struct min_sum_config {
  unsigned check_degree    = 19;
  unsigned variable_degree = 3;
  unsigned iterations      = 8;

  bool operator==(const min_sum_config&) const = default;
};

/// One downlink transmission to be costed. Default values describe the reference scenario: one slot,
/// 10 dB SNR, 15 kHz SCS, 52 PRBs, 16-QAM at rate 490/1024, 4x4 antennas, 2 layers, 2.1 GHz, kappa 1e-25.
struct scenario {
  unsigned   n_slots         = 1;
  double     snr_db          = 10.0; ///< metadata only
  unsigned   scs_khz         = 15;
  unsigned   n_prb           = 52;
  modulation mod             = modulation::qam16;
  unsigned   code_rate_x1024 = 490;
  unsigned   n_tx            = 4;
  unsigned   n_rx            = 4;
  unsigned   n_layers        = 2;
  unsigned   n_ports         = 4;
  double     clock_hz        = 2.1e9;
  double     kappa           = 1e-25; ///< J*s^2

  unsigned channel_len      = 8; ///< channel taps L
  unsigned pilot_sc_per_prb = 6;
  unsigned pilot_symbols    = 1; ///< pilot-bearing OFDM symbols per slot
  unsigned crc_step_bits    = 32;

  min_sum_config decoder;

  /// Replaces the computed transport block size.
  std::optional<std::uint64_t> tb_size_override;
  /// Antenna count used by the OFDM demodulation block; defaults to n_tx.
  std::optional<unsigned> demod_antennas_override;

  bool operator==(const scenario&) const = default;
};

struct violation {
  std::string field;
  std::string message;

  bool operator==(const violation&) const = default;
};

/// Checks every scenario invariant. An empty result means the scenario is valid.
std::vector<violation> validate(const scenario& sc);

/// NR quantities consumed by the operation counters.
struct derived_params {
  unsigned      qm                = 0;
  std::uint64_t n_subcarriers     = 0; ///< N_f = 12 * n_prb
  unsigned      symbols_per_slot  = 0; ///< g
  std::uint64_t fft_size          = 0; ///< N_FFT, power of two > N_f
  std::uint64_t pilot_subcarriers = 0; ///< K_p
  std::uint64_t data_re           = 0; ///< data resource elements per layer per slot
  std::uint64_t n_symbols         = 0; ///< modulation symbols of the codeword
  std::uint64_t codeword_bits     = 0; ///< M_cw
  std::uint64_t symbols_per_layer = 0; ///< M_symb_layer

  std::uint64_t   tb_size       = 0; ///< A
  unsigned        crc_bits      = 0; ///< L
  unsigned        n_code_blocks = 0; ///< C
  unsigned        lifting_size  = 0; ///< Z
  unsigned        lifting_set   = 0; ///< set index i_LS of Z
  std::uint64_t   cb_size       = 0; ///< K
  std::uint64_t   cb_bits_total = 0; ///< B = A + L * C
  std::uint64_t   coded_cb_size = 0; ///< N_cCB
  base_graph_spec base_graph;

  bool operator==(const derived_params&) const = default;
};

/// Smallest power of two strictly greater than \p subcarriers, at least 128.
std::uint64_t fft_size_for(std::uint64_t subcarriers);

/// Smallest lifting size Z with info_cols * Z >= min_bits. Throws domain_error if none exists.
unsigned lifting_size_for(std::uint64_t min_bits, unsigned info_cols);

/// Set index (0..7) of a valid lifting size.
unsigned lifting_set_of(unsigned lifting_size);

/// Derives the transport-layer parameters. Throws config_error when the scenario is invalid.
derived_params derive(const scenario& sc, const base_graph_catalog& catalog);
derived_params derive(const scenario& sc);

/// Reads a scenario from a JSON document. Unknown keys are rejected.
scenario parse_scenario(std::string_view json_text, std::string_view source_name = "<scenario>");
scenario load_scenario(const std::filesystem::path& path);

} // namespace nrenergy
