#include "nrenergy/errors.hpp"
#include "nrenergy/opcount.hpp"
#include "nrenergy/scenario.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nrenergy;

namespace {

constexpr auto lv = data_class::logical_vector;
constexpr auto dv = data_class::double_vector;

void expect_crc_kinds(const operation_tally& t, std::uint64_t n)
{
  EXPECT_EQ(t.count(op_kind::bit_and, lv), n);
  EXPECT_EQ(t.count(op_kind::bit_xor, lv), n);
  EXPECT_EQ(t.count(op_kind::shift, lv), n);
}

operation_tally random_tally(std::mt19937& rng)
{
  operation_tally                              t;
  std::uniform_int_distribution<std::uint64_t> n(0, 1000);
  for (op_kind k : all_op_kinds) {
    for (data_class c : all_data_classes) {
      if (rng() % 3 == 0) {
        t.add(k, c, n(rng));
      }
    }
  }
  return t;
}

} // namespace

TEST(Tally, MonoidLaws)
{
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_tally(rng);
    const auto b = random_tally(rng);
    const auto c = random_tally(rng);
    ASSERT_EQ(a + operation_tally{}, a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a + b).total(), a.total() + b.total());
    ASSERT_EQ(a * 3, a + a + a);
  }
}

TEST(Tally, FlopExpansionCountsTwice)
{
  operation_tally t;
  t.add(op_kind::flop, dv, 10).add(op_kind::add, data_class::int_scalar, 4);
  EXPECT_EQ(t.total(), 14U);
  EXPECT_EQ(t.total_expanded(), 24U);
  EXPECT_EQ(t.count(op_kind::flop), 10U);
}

TEST(Tally, Names)
{
  EXPECT_EQ(to_string(op_kind::bit_xor), "XOR");
  EXPECT_EQ(parse_op_kind("AND"), op_kind::bit_and);
  EXPECT_FALSE(parse_op_kind("FOO"));
  EXPECT_EQ(to_string(data_class::structure), "struct");
  EXPECT_EQ(parse_data_class("int_vector"), data_class::int_vector);
}

TEST(Crc, ClosedForm)
{
  expect_crc_kinds(count_crc(3824, 32), 596);
  expect_crc_kinds(count_crc(0, 32), 1);
  expect_crc_kinds(count_crc(32, 32), 6);
  EXPECT_EQ(count_crc(3824, 32).total(), 3U * 596U);
  EXPECT_THROW(count_crc(10, 0), domain_error);
}

TEST(Crc, MatchesLoopSimulation)
{
  for (std::uint64_t bits = 0; bits < 2000; bits += 7) {
    for (unsigned p : {1U, 8U, 32U, 64U}) {
      ASSERT_EQ(crc_ops_per_kind(bits, p), oracle::crc_loop_ops(bits, p)) << bits << " " << p;
    }
  }
}

TEST(Segmentation, NineOpsWhateverC)
{
  for (unsigned c : {1U, 4U, 100U}) {
    const auto t = count_segmentation(c);
    EXPECT_EQ(t.total(), 9U);
    EXPECT_EQ(t.count(op_kind::add, data_class::int_scalar), 9U);
  }
  EXPECT_THROW(count_segmentation(0), domain_error);
}

TEST(Segmentation, MergedWithCodeBlockCrc)
{
  const auto t = count_segmentation(1) + count_crc(3848, 32);
  EXPECT_EQ(t.total(), 9U + 3U * 601U);
  expect_crc_kinds(t, 601);
  // A = 0 with one code block: the CB CRC sees only the 24 CRC bits.
  expect_crc_kinds(count_crc(0 + 24 * 1, 32), 1);
  expect_crc_kinds(count_crc(24, 4), 31);
}

TEST(LdpcEncode, SmallExample)
{
  const ldpc_encode_dims dims{
      .cb_size = 44, .lifting_size = 2, .nonnull = 316, .rows = 46, .cols = 68, .coded_cb_size = 128, .n_code_blocks = 1};
  const auto terms = ldpc_encode_terms_for(dims);
  EXPECT_EQ(terms.validation, 80U);
  EXPECT_EQ(terms.replacement, 3128U);
  EXPECT_EQ(terms.modulo, 316U);
  EXPECT_EQ(terms.matrix_product, 24932U);
  EXPECT_EQ(terms.output_set, 88U);

  const auto schoolbook = oracle::schoolbook_product(46 * 2, 68 * 2, 1);
  EXPECT_EQ(terms.matrix_product, schoolbook.total());

  const auto t = count_ldpc_encode(dims);
  EXPECT_EQ(t.count(op_kind::cmp, lv), 80U);
  EXPECT_EQ(t.count(op_kind::set, data_class::int_vector), 3128U);
  EXPECT_EQ(t.count(op_kind::div, data_class::int_scalar), 316U);
  EXPECT_EQ(t.count(op_kind::mul, data_class::int_vector), schoolbook.mul);
  EXPECT_EQ(t.count(op_kind::add, data_class::int_vector), schoolbook.add);
  EXPECT_EQ(t.count(op_kind::set, lv), 88U);
  EXPECT_EQ(t.total(), 80U + 3128U + 316U + 24932U + 88U);
}

TEST(LdpcEncode, BoundaryAndPreconditions)
{
  ldpc_encode_dims dims{
      .cb_size = 4, .lifting_size = 2, .nonnull = 1, .rows = 1, .cols = 3, .coded_cb_size = 2, .n_code_blocks = 1};
  EXPECT_EQ(ldpc_encode_terms_for(dims).validation, 0U);
  dims.cb_size = 3;
  EXPECT_THROW(count_ldpc_encode(dims), domain_error);
  dims.cb_size       = 20;
  dims.coded_cb_size = 10;
  EXPECT_THROW(count_ldpc_encode(dims), domain_error);
}

TEST(LdpcEncode, LinearInCodeBlocks)
{
  ldpc_encode_dims dims{
      .cb_size = 8448, .lifting_size = 384, .nonnull = 316, .rows = 46, .cols = 68, .coded_cb_size = 25344};
  const auto one = count_ldpc_encode(dims);
  for (unsigned c : {2U, 3U, 7U}) {
    dims.n_code_blocks = c;
    EXPECT_EQ(count_ldpc_encode(dims), one * c);
  }
}

TEST(BlockB, Example)
{
  const auto t = count_block_b(1000, 250);
  EXPECT_EQ(t.count(op_kind::bit_xor, lv), 6000U);
  EXPECT_EQ(t.count(op_kind::lookup, data_class::int_vector), 250U);
  EXPECT_EQ(t.count(op_kind::shift, data_class::int_vector), 250U);
  EXPECT_TRUE(count_block_b(0, 0).empty());
  EXPECT_THROW(count_block_b(1000, 300), domain_error);
  EXPECT_THROW(count_block_b(1000, 1000), domain_error); // one bit per symbol
  EXPECT_EQ(count_block_g(1000, 250), t);
}

TEST(BlockC, Examples)
{
  EXPECT_EQ(precoding_flops(4, 2, 100), 6200U);
  EXPECT_EQ(precoding_flops(1, 1, 1), 6U);
  EXPECT_EQ(precoding_flops(4, 2, 0), 0U);
  EXPECT_EQ(count_block_c(4, 2, 100).count(op_kind::flop, dv), 6200U);
  EXPECT_THROW(precoding_flops(1, 2, 1), domain_error);
  EXPECT_THROW(precoding_flops(1, 0, 1), domain_error);
}

TEST(BlockD, Example)
{
  EXPECT_EQ(ofdm_flops(14, 4, 256), 573440U);
  EXPECT_EQ(ofdm_flops(14, 4, 256), 14U * 4U * oracle::fft_ops(256));
  EXPECT_EQ(ofdm_flops(14, 4, 1), 0U);
  EXPECT_THROW(ofdm_flops(14, 4, 1000), domain_error);
  EXPECT_EQ(count_block_e(14, 4, 256), count_block_d(14, 4, 256));
}

TEST(BlockD, MatchesRadix2Oracle)
{
  for (std::uint64_t n = 2; n <= 1024; n *= 2) {
    EXPECT_EQ(ofdm_flops(1, 1, n), oracle::fft_ops(n)) << n;
  }
}

TEST(LeastSquares, Example)
{
  const auto terms = ls_terms_for(2, 2, 14, 24);
  EXPECT_EQ(terms.gram_product, 16U * 671U);
  EXPECT_EQ(terms.inversion, 64U);
  EXPECT_EQ(terms.final_product, 1344U * 7U);
  EXPECT_EQ(terms.sum(), 20208U);
  EXPECT_EQ(ls_flops(2, 2, 2, 2, 14, 24), 80832U);

  // The bracket terms as products that actually run: (4 x 336)(336 x 4), a 4 x 4 inversion, (336 x 4)(4 x 4).
  EXPECT_EQ(terms.gram_product, oracle::schoolbook_product(4, 336, 4).total());
  EXPECT_EQ(terms.inversion, oracle::lu_triple_loop(4));
  EXPECT_EQ(terms.final_product, oracle::schoolbook_product(336, 4, 4).total());
}

TEST(LeastSquares, Degenerate)
{
  EXPECT_EQ(ls_terms_for(1, 1, 1, 1).sum(), 3U);
  EXPECT_EQ(ls_flops(0, 2, 2, 2, 14, 24), 0U);
}

TEST(Mmse, Examples)
{
  EXPECT_EQ(mmse_flops(2, 2, 12, 14), 1398U);
  EXPECT_EQ(mmse_flops(2, 2, 0, 14), 30U);
  EXPECT_EQ(mmse_flops(1, 1, 1, 1), 11U);
  EXPECT_THROW(mmse_flops(0, 1, 1, 1), domain_error);
}

TEST(BlockF, MergeOfSubCounts)
{
  const scenario sc;
  const auto     d = derive(sc);
  EXPECT_EQ(count_block_f(d, sc),
            count_ls(sc.n_layers, sc.n_rx, sc.n_tx, sc.channel_len, 14, d.pilot_subcarriers) +
                count_mmse(sc.n_rx, sc.n_tx, d.n_subcarriers, 14));
}

TEST(LdpcDecode, Example)
{
  const min_sum_dims dims{
      .variable_nodes = 128, .check_nodes = 64, .check_degree = 6, .variable_degree = 3, .iterations = 2};
  const auto t = count_ldpc_decode(dims);
  EXPECT_EQ(t.total(), 3584U);
  EXPECT_EQ(t.count(op_kind::div, dv), 128U);
  EXPECT_EQ(t.count(op_kind::log, dv), 128U);
  EXPECT_EQ(t.count(op_kind::mul, dv), 2U * 384U);
  EXPECT_EQ(t.count(op_kind::add, dv), 2U * (384U + 512U));
  EXPECT_EQ(t.count(op_kind::bit_xor, dv), 2U * 384U);

  min_sum_dims none = dims;
  none.iterations   = 0;
  EXPECT_EQ(count_ldpc_decode(none).total(), 256U);

  min_sum_dims many  = dims;
  many.n_code_blocks = 5;
  EXPECT_EQ(count_ldpc_decode(many), t * 5);
}

TEST(CrcDecode, AddsOneCompare)
{
  const auto t = count_crc_decode(3824, 32);
  expect_crc_kinds(t, 596);
  EXPECT_EQ(t.count(op_kind::cmp, data_class::logical_scalar), 1U);
  const auto z = count_crc_decode(0, 32);
  expect_crc_kinds(z, 1);
  EXPECT_EQ(z.total(), 4U);
}

TEST(BlockA, MergeOfSubCounts)
{
  const scenario sc;
  const auto     d = derive(sc);
  const auto     expected =
      count_crc(d.tb_size, 32) + count_segmentation(d.n_code_blocks) + count_crc(d.cb_bits_total, 32) +
      count_ldpc_encode({d.cb_size, d.lifting_size, d.base_graph.nonnull, d.base_graph.rows, d.base_graph.cols,
                         d.coded_cb_size, d.n_code_blocks});
  EXPECT_EQ(count_block_a(d, 32), expected);
}

TEST(Pipeline, ReferenceScenarioHasEightNonZeroBlocks)
{
  const auto tallies = tally_pipeline(scenario{});
  for (block_id b : all_blocks) {
    EXPECT_FALSE(tallies.blocks[b].empty()) << to_string(b);
  }
  EXPECT_EQ(tallies.bits_transmitted, 32248U);
}

TEST(Pipeline, ScalesWithSlots)
{
  scenario   sc;
  const auto one = tally_pipeline(sc);
  for (unsigned n : {2U, 3U, 14U}) {
    sc.n_slots     = n;
    const auto got = tally_pipeline(sc);
    for (block_id b : all_blocks) {
      EXPECT_EQ(got.blocks[b], one.blocks[b] * n);
    }
    EXPECT_EQ(got.bits_transmitted, one.bits_transmitted * n);
  }
}

TEST(Pipeline, ModulationLeavesSignalBlocksUnchanged)
{
  scenario   sc;
  sc.mod         = modulation::qpsk;
  const auto ref = tally_pipeline(sc);
  for (modulation m : {modulation::qam16, modulation::qam64, modulation::qam256}) {
    sc.mod         = m;
    const auto got = tally_pipeline(sc);
    for (block_id b : {block_id::C, block_id::D, block_id::E, block_id::F}) {
      EXPECT_EQ(got.blocks[b], ref.blocks[b]) << to_string(b);
    }
  }
}

TEST(Pipeline, DemodAntennaOverride)
{
  scenario sc;
  sc.demod_antennas_override = 2;
  const auto t               = tally_pipeline(sc);
  EXPECT_EQ(t.blocks[block_id::E], count_ofdm(14, 2, 1024));
  EXPECT_EQ(t.blocks[block_id::D], count_ofdm(14, 4, 1024));
}
