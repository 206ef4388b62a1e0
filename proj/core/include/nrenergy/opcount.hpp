#pragma once

#include "nrenergy/block.hpp"
#include "nrenergy/scenario.hpp"
#include "nrenergy/tally.hpp"

#include <cstdint>

namespace nrenergy {

// Closed-form operation counts for the eight processing blocks. Every count is an exact integer.

/// CRC over \p bits input bits reading \p step_bits per step: AND, XOR and SHIFT each occur
/// 5 * floor(bits / step_bits) + 1 times.
std::uint64_t crc_ops_per_kind(std::uint64_t bits, unsigned step_bits);
operation_tally count_crc(std::uint64_t bits, unsigned step_bits);

/// Code block segmentation costs nine integer operations per transport block, whatever \p n_code_blocks is.
operation_tally count_segmentation(unsigned n_code_blocks);

struct ldpc_encode_dims {
  std::uint64_t cb_size       = 0; ///< K
  unsigned      lifting_size  = 0; ///< Z
  unsigned      nonnull       = 0; ///< n1
  unsigned      rows          = 0;
  unsigned      cols          = 0;
  std::uint64_t coded_cb_size = 0; ///< N_cCB
  unsigned      n_code_blocks = 1; ///< C
};

/// Per-code-block terms of the LDPC encoder count.
struct ldpc_encode_terms {
  std::uint64_t validation     = 0; ///< 2 (K - 2Z)
  std::uint64_t replacement    = 0; ///< rows * cols
  std::uint64_t modulo         = 0; ///< n1
  std::uint64_t matrix_product = 0; ///< rows * Z * (2 cols Z - 1)
  std::uint64_t output_set     = 0; ///< N_cCB + 2Z - K
};

/// Throws domain_error unless K >= 2Z and N_cCB + 2Z >= K.
ldpc_encode_terms ldpc_encode_terms_for(const ldpc_encode_dims& dims);
operation_tally   count_ldpc_encode(const ldpc_encode_dims& dims);

/// CRC on the transport block, segmentation, CRC over all code blocks, LDPC encoding.
operation_tally count_block_a(const derived_params& d, unsigned crc_step_bits);

/// Scrambling (6 XOR per codeword bit), one table lookup and one layer-mapping shift per symbol.
/// Throws domain_error unless codeword_bits = n_symbols * Qm for a valid Qm.
operation_tally count_block_b(std::uint64_t codeword_bits, std::uint64_t n_symbols);

/// Precoder SVD plus the P x v by v x 1 product, per layer symbol.
std::uint64_t   precoding_flops(unsigned ports, unsigned layers, std::uint64_t symbols_per_layer);
operation_tally count_block_c(unsigned ports, unsigned layers, std::uint64_t symbols_per_layer);

/// Radix-2 (i)FFT: 5 g n_ant N log2 N. Throws domain_error for a non-power-of-two size.
std::uint64_t   ofdm_flops(unsigned symbols, unsigned antennas, std::uint64_t fft_size);
operation_tally count_ofdm(unsigned symbols, unsigned antennas, std::uint64_t fft_size);
operation_tally count_block_d(unsigned symbols, unsigned antennas, std::uint64_t fft_size);
operation_tally count_block_e(unsigned symbols, unsigned antennas, std::uint64_t fft_size);

/// Terms of the least-squares pilot pseudo-inverse for one (layer, rx antenna) pair.
struct ls_terms {
  std::uint64_t gram_product  = 0; ///< (L Nt)^2 (2 g Kp - 1)
  std::uint64_t inversion     = 0; ///< (L Nt)^3
  std::uint64_t final_product = 0; ///< (g Kp L Nt)(2 L Nt - 1)

  std::uint64_t sum() const { return gram_product + inversion + final_product; }
};

ls_terms ls_terms_for(unsigned n_tx, unsigned channel_len, unsigned symbols, std::uint64_t pilot_subcarriers);
std::uint64_t   ls_flops(unsigned layers,
                         unsigned n_rx,
                         unsigned n_tx,
                         unsigned channel_len,
                         unsigned symbols,
                         std::uint64_t pilot_subcarriers);
operation_tally count_ls(unsigned layers,
                         unsigned n_rx,
                         unsigned n_tx,
                         unsigned channel_len,
                         unsigned symbols,
                         std::uint64_t pilot_subcarriers);

/// MMSE equalization: SVD head terms once, then the per-subcarrier bracket.
std::uint64_t   mmse_flops(unsigned n_rx, unsigned n_tx, std::uint64_t n_subcarriers, unsigned symbols);
operation_tally count_mmse(unsigned n_rx, unsigned n_tx, std::uint64_t n_subcarriers, unsigned symbols);

operation_tally count_block_f(const derived_params& d, const scenario& sc);

/// Inverse of block B; same formulas.
operation_tally count_block_g(std::uint64_t codeword_bits, std::uint64_t n_symbols);

struct min_sum_dims {
  std::uint64_t variable_nodes  = 0; ///< N, coded code block length
  std::uint64_t check_nodes     = 0; ///< W, redundancy bits
  unsigned      check_degree    = 0; ///< |N(w)|
  unsigned      variable_degree = 0; ///< |W(n)|
  unsigned      iterations      = 0;
  unsigned      n_code_blocks   = 1;
};

/// Min-sum LDPC decoding. Per code block: N divisions and N logs at initialization; per iteration
/// W |N(w)| products, N |W(n)| additions, N (|W(n)| + 1) additions and W |N(w)| XORs.
operation_tally count_ldpc_decode(const min_sum_dims& dims);

/// CRC recomputation plus one comparison.
operation_tally count_crc_decode(std::uint64_t bits, unsigned step_bits);

operation_tally count_block_h(const derived_params& d, const scenario& sc);

/// Per-block tallies of a whole transmission.
struct pipeline_tallies {
  per_block<operation_tally> blocks;
  std::uint64_t              bits_transmitted = 0; ///< A * n_slots

  operation_tally total() const;

  bool operator==(const pipeline_tallies&) const = default;
};

/// Runs all eight block counters for one slot and scales by n_slots.
pipeline_tallies tally_pipeline(const scenario& sc, const derived_params& d);
pipeline_tallies tally_pipeline(const scenario& sc);

} // namespace nrenergy
