#include "nrenergy/opcount.hpp"
#include "nrenergy/errors.hpp"

#include <fmt/format.h>

#include <bit>

namespace nrenergy {

namespace {

// Bit-level work of the encoder side and the CRCs is logical/integer; signal processing is double.
constexpr data_class bit_class    = data_class::logical_vector;
constexpr data_class signal_class = data_class::double_vector;

operation_tally flops(std::uint64_t n)
{
  return operation_tally{}.add(op_kind::flop, signal_class, n);
}

} // namespace

std::uint64_t crc_ops_per_kind(std::uint64_t bits, unsigned step_bits)
{
  if (step_bits == 0) {
    throw domain_error("CRC step width must be >= 1 bit");
  }
  return 5 * (bits / step_bits) + 1;
}

operation_tally count_crc(std::uint64_t bits, unsigned step_bits)
{
  const std::uint64_t n = crc_ops_per_kind(bits, step_bits);
  operation_tally     t;
  t.add(op_kind::bit_and, bit_class, n).add(op_kind::bit_xor, bit_class, n).add(op_kind::shift, bit_class, n);
  return t;
}

operation_tally count_segmentation(unsigned n_code_blocks)
{
  if (n_code_blocks < 1) {
    throw domain_error("segmentation needs at least one code block");
  }
  return operation_tally{}.add(op_kind::add, data_class::int_scalar, 9);
}

ldpc_encode_terms ldpc_encode_terms_for(const ldpc_encode_dims& dims)
{
  const std::uint64_t z = dims.lifting_size;
  if (dims.cb_size < 2 * z) {
    throw domain_error(fmt::format("LDPC encode needs K >= 2Z (K={}, Z={})", dims.cb_size, z));
  }
  if (dims.coded_cb_size + 2 * z < dims.cb_size) {
    throw domain_error(
        fmt::format("LDPC encode needs N_cCB + 2Z >= K (N_cCB={}, Z={}, K={})", dims.coded_cb_size, z, dims.cb_size));
  }
  ldpc_encode_terms t;
  t.validation     = 2 * (dims.cb_size - 2 * z);
  t.replacement    = static_cast<std::uint64_t>(dims.rows) * dims.cols;
  t.modulo         = dims.nonnull;
  t.matrix_product = dims.rows * z * (2 * dims.cols * z - (dims.cols * z == 0 ? 0 : 1));
  t.output_set     = dims.coded_cb_size + 2 * z - dims.cb_size;
  return t;
}

operation_tally count_ldpc_encode(const ldpc_encode_dims& dims)
{
  const ldpc_encode_terms terms = ldpc_encode_terms_for(dims);

  // The matrix product produces rows*Z outputs, each cols*Z multiplies and cols*Z - 1 additions.
  const std::uint64_t z       = dims.lifting_size;
  const std::uint64_t outputs = dims.rows * z;
  const std::uint64_t inner   = dims.cols * z;

  operation_tally t;
  t.add(op_kind::cmp, bit_class, terms.validation);
  t.add(op_kind::set, data_class::int_vector, terms.replacement);
  t.add(op_kind::div, data_class::int_scalar, terms.modulo);
  if (inner != 0) {
    t.add(op_kind::mul, data_class::int_vector, outputs * inner);
    t.add(op_kind::add, data_class::int_vector, outputs * (inner - 1));
  }
  t.add(op_kind::set, bit_class, terms.output_set);
  t *= dims.n_code_blocks;
  return t;
}

operation_tally count_block_a(const derived_params& d, unsigned crc_step_bits)
{
  operation_tally t = count_crc(d.tb_size, crc_step_bits);
  t += count_segmentation(d.n_code_blocks);
  t += count_crc(d.cb_bits_total, crc_step_bits);
  t += count_ldpc_encode({.cb_size       = d.cb_size,
                          .lifting_size  = d.lifting_size,
                          .nonnull       = d.base_graph.nonnull,
                          .rows          = d.base_graph.rows,
                          .cols          = d.base_graph.cols,
                          .coded_cb_size = d.coded_cb_size,
                          .n_code_blocks = d.n_code_blocks});
  return t;
}

operation_tally count_block_b(std::uint64_t codeword_bits, std::uint64_t n_symbols)
{
  if (n_symbols == 0 ? codeword_bits != 0 : codeword_bits % n_symbols != 0) {
    throw domain_error(fmt::format("codeword of {} bits does not split into {} symbols", codeword_bits, n_symbols));
  }
  if (n_symbols != 0) {
    const std::uint64_t qm = codeword_bits / n_symbols;
    if (qm != 2 && qm != 4 && qm != 6 && qm != 8) {
      throw domain_error(fmt::format("{} bits per symbol is not a supported modulation order", qm));
    }
  }
  operation_tally t;
  t.add(op_kind::bit_xor, bit_class, 6 * codeword_bits);
  t.add(op_kind::lookup, data_class::int_vector, n_symbols);
  t.add(op_kind::shift, data_class::int_vector, n_symbols);
  return t;
}

std::uint64_t precoding_flops(unsigned ports, unsigned layers, std::uint64_t symbols_per_layer)
{
  if (layers < 1 || ports < layers) {
    throw domain_error(fmt::format("precoding needs P >= v >= 1 (P={}, v={})", ports, layers));
  }
  const std::uint64_t p = ports;
  const std::uint64_t v = layers;
  // SVD of the P x v precoder source plus the P x v by v x 1 product.
  const std::uint64_t per_symbol = 2 * p * v * v + v * v * v + v + p * v + 2 * p * v - p;
  return symbols_per_layer * per_symbol;
}

operation_tally count_block_c(unsigned ports, unsigned layers, std::uint64_t symbols_per_layer)
{
  return flops(precoding_flops(ports, layers, symbols_per_layer));
}

std::uint64_t ofdm_flops(unsigned symbols, unsigned antennas, std::uint64_t fft_size)
{
  if (!std::has_single_bit(fft_size)) {
    throw domain_error(fmt::format("FFT size {} is not a power of two", fft_size));
  }
  const auto log2n = static_cast<std::uint64_t>(std::countr_zero(fft_size));
  return 5 * static_cast<std::uint64_t>(symbols) * antennas * fft_size * log2n;
}

operation_tally count_ofdm(unsigned symbols, unsigned antennas, std::uint64_t fft_size)
{
  return flops(ofdm_flops(symbols, antennas, fft_size));
}

operation_tally count_block_d(unsigned symbols, unsigned antennas, std::uint64_t fft_size)
{
  return count_ofdm(symbols, antennas, fft_size);
}

operation_tally count_block_e(unsigned symbols, unsigned antennas, std::uint64_t fft_size)
{
  return count_ofdm(symbols, antennas, fft_size);
}

ls_terms ls_terms_for(unsigned n_tx, unsigned channel_len, unsigned symbols, std::uint64_t pilot_subcarriers)
{
  const std::uint64_t taps   = static_cast<std::uint64_t>(channel_len) * n_tx; // L Nt
  const std::uint64_t pilots = static_cast<std::uint64_t>(symbols) * pilot_subcarriers; // g Kp
  ls_terms            t;
  if (taps == 0) {
    return t;
  }
  t.gram_product  = pilots == 0 ? 0 : taps * taps * (2 * pilots - 1);
  t.inversion     = taps * taps * taps;
  t.final_product = pilots * taps * (2 * taps - 1);
  return t;
}

std::uint64_t ls_flops(unsigned      layers,
                       unsigned      n_rx,
                       unsigned      n_tx,
                       unsigned      channel_len,
                       unsigned      symbols,
                       std::uint64_t pilot_subcarriers)
{
  return static_cast<std::uint64_t>(layers) * n_rx * ls_terms_for(n_tx, channel_len, symbols, pilot_subcarriers).sum();
}

operation_tally count_ls(unsigned      layers,
                         unsigned      n_rx,
                         unsigned      n_tx,
                         unsigned      channel_len,
                         unsigned      symbols,
                         std::uint64_t pilot_subcarriers)
{
  return flops(ls_flops(layers, n_rx, n_tx, channel_len, symbols, pilot_subcarriers));
}

std::uint64_t mmse_flops(unsigned n_rx, unsigned n_tx, std::uint64_t n_subcarriers, unsigned symbols)
{
  if (n_rx < 1 || n_tx < 1) {
    throw domain_error("MMSE equalization needs at least one antenna on each side");
  }
  const std::uint64_t nr = n_rx;
  const std::uint64_t nt = n_tx;
  const std::uint64_t g  = symbols;
  // Head terms as in the closed form: the SVD is charged once with an Nr^3 term.
  const std::uint64_t head    = 2 * nr * nt * nt + nr * nr * nr + nr + nr * nt;
  const std::uint64_t bracket = 3 * nt + nt * nr * (2 * nt - 1) + nt * nr * (2 * nr - 1) + nt * g * (2 * nr - 1);
  return head + n_subcarriers * bracket;
}

operation_tally count_mmse(unsigned n_rx, unsigned n_tx, std::uint64_t n_subcarriers, unsigned symbols)
{
  return flops(mmse_flops(n_rx, n_tx, n_subcarriers, symbols));
}

operation_tally count_block_f(const derived_params& d, const scenario& sc)
{
  return count_ls(sc.n_layers, sc.n_rx, sc.n_tx, sc.channel_len, d.symbols_per_slot, d.pilot_subcarriers) +
         count_mmse(sc.n_rx, sc.n_tx, d.n_subcarriers, d.symbols_per_slot);
}

operation_tally count_block_g(std::uint64_t codeword_bits, std::uint64_t n_symbols)
{
  return count_block_b(codeword_bits, n_symbols);
}

operation_tally count_ldpc_decode(const min_sum_dims& dims)
{
  const std::uint64_t n     = dims.variable_nodes;
  const std::uint64_t edges = dims.check_nodes * dims.check_degree; // sum over w of |N(w)|

  operation_tally per_iteration;
  per_iteration.add(op_kind::mul, signal_class, edges);                            // horizontal
  per_iteration.add(op_kind::add, signal_class, n * dims.variable_degree);         // vertical
  per_iteration.add(op_kind::add, signal_class, n * (dims.variable_degree + 1ULL)); // decision
  per_iteration.add(op_kind::bit_xor, signal_class, edges);                        // decision parity

  operation_tally t;
  t.add(op_kind::div, signal_class, n).add(op_kind::log, signal_class, n);
  t += per_iteration * dims.iterations;
  t *= dims.n_code_blocks;
  return t;
}

operation_tally count_crc_decode(std::uint64_t bits, unsigned step_bits)
{
  return count_crc(bits, step_bits).add(op_kind::cmp, data_class::logical_scalar, 1);
}

operation_tally count_block_h(const derived_params& d, const scenario& sc)
{
  operation_tally t = count_ldpc_decode({.variable_nodes  = d.coded_cb_size,
                                         .check_nodes     = d.coded_cb_size - d.cb_size,
                                         .check_degree    = sc.decoder.check_degree,
                                         .variable_degree = sc.decoder.variable_degree,
                                         .iterations      = sc.decoder.iterations,
                                         .n_code_blocks   = d.n_code_blocks});
  t += count_crc_decode(d.cb_bits_total, sc.crc_step_bits);
  t += count_crc_decode(d.tb_size, sc.crc_step_bits);
  return t;
}

operation_tally pipeline_tallies::total() const
{
  operation_tally sum;
  for (const operation_tally& t : blocks) {
    sum += t;
  }
  return sum;
}

pipeline_tallies tally_pipeline(const scenario& sc, const derived_params& d)
{
  const unsigned demod_antennas = sc.demod_antennas_override.value_or(sc.n_tx);

  pipeline_tallies out;
  out.blocks[block_id::A] = count_block_a(d, sc.crc_step_bits);
  out.blocks[block_id::B] = count_block_b(d.codeword_bits, d.n_symbols);
  out.blocks[block_id::C] = count_block_c(sc.n_ports, sc.n_layers, d.symbols_per_layer);
  out.blocks[block_id::D] = count_block_d(d.symbols_per_slot, sc.n_tx, d.fft_size);
  out.blocks[block_id::E] = count_block_e(d.symbols_per_slot, demod_antennas, d.fft_size);
  out.blocks[block_id::F] = count_block_f(d, sc);
  out.blocks[block_id::G] = count_block_g(d.codeword_bits, d.n_symbols);
  out.blocks[block_id::H] = count_block_h(d, sc);
  for (operation_tally& t : out.blocks) {
    t *= sc.n_slots;
  }
  out.bits_transmitted = d.tb_size * sc.n_slots;
  return out;
}

pipeline_tallies tally_pipeline(const scenario& sc)
{
  return tally_pipeline(sc, derive(sc));
}

} // namespace nrenergy
