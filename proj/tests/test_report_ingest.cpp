#include "nrenergy/cost_model.hpp"
#include "nrenergy/data_paths.hpp"
#include "nrenergy/errors.hpp"
#include "nrenergy/opcount.hpp"
#include "nrenergy/report_ingest.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace nrenergy;

namespace {

measured_report parse(const std::string& body, const path_filter& filter = {})
{
  std::istringstream in(std::string(measurement_header) + "\n" + body);
  return parse_measurement(in, filter, "test.csv");
}

instruction_cost_table scaled(const instruction_cost_table& base, const rational& factor)
{
  instruction_cost_table out;
  for (const auto& [key, entry] : base.entries()) {
    const auto& [kind, cls, loc] = key;
    out.insert(kind, cls, loc, {entry.micro_ops, entry.cycles * factor});
  }
  return out;
}

} // namespace

TEST(Parse, FilterDropsAuxiliaryRows)
{
  const path_filter f{.allow = {"5g/"}, .block = {"5g/aux/"}};
  const auto        r = parse("5g/nrCRCEncode,A,XOR,logical_vector,1xN,10\n"
                              "5g/nrOFDMModulate,D,ADD,double_vector,1xN,20\n"
                              "5g/aux/validate,A,CMP,logical_scalar,1x1,5\n"
                              "5g/nrPDSCH,B,LOOKUP,int_vector,1xN,30\n",
                              f);
  EXPECT_EQ(r.rows.size(), 3U);
  EXPECT_EQ(r.rejected_rows, 1U);
  EXPECT_EQ(r.rows[2].count, 30U);
  EXPECT_EQ(r.rows[2].block, block_id::B);
}

TEST(Parse, UnknownOperatorNamesTheRow)
{
  try {
    parse("a,A,XOR,logical_vector,1xN,1\nb,A,FOO,logical_vector,1xN,1\n");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_NE(std::string(e.what()).find("FOO"), std::string::npos);
  }
}

TEST(Parse, MalformedRows)
{
  EXPECT_THROW(parse("a,A,XOR,bits,1xN,1\n"), parse_error);
  EXPECT_THROW(parse("a,Z,XOR,logical_vector,1xN,1\n"), parse_error);
  EXPECT_THROW(parse("a,A,XOR,logical_vector,1xN,-1\n"), parse_error);
  EXPECT_THROW(parse("a,A,XOR,logical_vector,1\n"), parse_error);
  EXPECT_THROW(parse(",A,XOR,logical_vector,1xN,1\n"), parse_error);
  std::istringstream no_header("a,A,XOR,logical_vector,1xN,1\n");
  EXPECT_THROW(parse_measurement(no_header, {}, "x"), parse_error);
  EXPECT_THROW(parse_measurement(std::filesystem::path("/no/such.csv"), {}), io_error);
}

TEST(Parse, RoundTrip)
{
  const auto         report = synthesize_measurement(tally_pipeline(scenario{}));
  std::ostringstream out;
  write_measurement(out, report);
  std::istringstream in(out.str());
  const auto         back = parse_measurement(in, {}, "rt");
  EXPECT_EQ(back.rows, report.rows);

  const auto unlabeled = parse("x/y,,SET,int_vector,1xN,4\n");
  std::ostringstream o2;
  write_measurement(o2, unlabeled);
  std::istringstream i2(o2.str());
  EXPECT_EQ(parse_measurement(i2, {}, "rt").rows, unlabeled.rows);
}

TEST(Filter, Idempotent)
{
  const path_filter f{.allow = {"model/"}, .block = {"model/block_C"}};
  const auto        r    = synthesize_measurement(tally_pipeline(scenario{}));
  const auto        once = apply_filter(r, f);
  const auto        twice = apply_filter(once, f);
  EXPECT_EQ(once.rows, twice.rows);
  EXPECT_LT(once.rows.size(), r.rows.size());
  EXPECT_TRUE(path_filter{}.accepts("anything"));
}

TEST(Config, ParsesBundledFilter)
{
  const auto cfg = load_ingest_config(std::filesystem::path(NRENERGY_CONFIG_DIR) / "ingest_filter.json");
  EXPECT_TRUE(cfg.filter.accepts("5g/nrCRCEncode/x"));
  EXPECT_FALSE(cfg.filter.accepts("comm/private/helper"));
  EXPECT_FALSE(cfg.filter.accepts("matlab/toolbox/ops"));
  EXPECT_EQ(cfg.blocks.resolve("5g/nrPDSCHPrecode/apply"), block_id::C);
  EXPECT_EQ(cfg.blocks.resolve("5g/nrPDSCH/modulate"), block_id::B);
  EXPECT_FALSE(cfg.blocks.resolve("5g/other"));
  EXPECT_THROW(parse_ingest_config(R"({"allow":[], "deny":[]})"), config_error);
  EXPECT_THROW(parse_ingest_config(R"({"block_map":{"x":"Q"}})"), config_error);
}

TEST(MeasuredCycles, SingleRowUniform)
{
  const auto m = measured_cycles_for(parse("p,A,XOR,logical_vector,1xN,100\n"), instruction_cost_table::uniform());
  EXPECT_EQ(m.cycles[block_id::A], 100);
  EXPECT_TRUE(m.present[block_id::A]);
  EXPECT_EQ(m.cycles[block_id::B], 0);
  EXPECT_FALSE(m.present[block_id::B]);
}

TEST(MeasuredCycles, EmptyReportIsZero)
{
  const auto m = measured_cycles_for(measured_report{}, instruction_cost_table::uniform());
  for (block_id b : all_blocks) {
    EXPECT_EQ(m.cycles[b], 0);
  }
  EXPECT_EQ(m.unattributed, 0);
}

TEST(MeasuredCycles, AdditiveOverConcatenation)
{
  const auto table = load_cost_table(default_cost_table_path());
  const auto a     = parse("p,A,XOR,logical_vector,1xN,100\np,F,FLOP,double_vector,1xN,7\n");
  const auto b     = parse("p,A,XOR,logical_vector,1xN,50\np,H,LOG,double_vector,1xN,3\n");
  measured_report both = a;
  both.rows.insert(both.rows.end(), b.rows.begin(), b.rows.end());
  const auto ma = measured_cycles_for(a, table);
  const auto mb = measured_cycles_for(b, table);
  const auto mc = measured_cycles_for(both, table);
  for (block_id blk : all_blocks) {
    EXPECT_EQ(mc.cycles[blk], ma.cycles[blk] + mb.cycles[blk]);
  }
}

TEST(MeasuredCycles, PrefixAttributionAndUnattributedBucket)
{
  block_map  map{{{"5g/nr", block_id::A}, {"5g/nrOFDM", block_id::D}}};
  const auto r = parse("5g/nrOFDMModulate,,ADD,double_vector,1xN,10\n"
                       "5g/nrCRC,,ADD,double_vector,1xN,5\n"
                       "other/thing,,ADD,double_vector,1xN,2\n"
                       "other/labeled,H,ADD,double_vector,1xN,1\n");
  const auto m = measured_cycles_for(r, instruction_cost_table::uniform(), map);
  EXPECT_EQ(m.cycles[block_id::D], 10);
  EXPECT_EQ(m.cycles[block_id::A], 5);
  EXPECT_EQ(m.cycles[block_id::H], 1);
  EXPECT_EQ(m.unattributed, 2);
  EXPECT_EQ(m.unattributed_rows, 1U);
}

TEST(MeasuredCycles, UncoveredPairIsNamed)
{
  instruction_cost_table table;
  table.insert(op_kind::add, data_class::int_scalar, operand_location::reg, {1, 1});
  EXPECT_THROW(measured_cycles_for(parse("p,A,XOR,logical_vector,1xN,1\n"), table), coverage_error);
}

TEST(Compare, SynthesizedMeasurementMatchesModel)
{
  const auto tallies  = tally_pipeline(scenario{});
  const auto table    = load_cost_table(default_cost_table_path());
  const auto modeled  = build_report(tallies, table, {});
  const auto measured = measured_cycles_for(synthesize_measurement(tallies), table);
  const auto cmp      = compare(modeled, measured);
  for (block_id b : all_blocks) {
    EXPECT_EQ(cmp.blocks[b].ratio, 1.0);
    EXPECT_EQ(cmp.blocks[b].relative_error, 0.0);
    EXPECT_EQ(cmp.blocks[b].bias, estimate_bias::match);
  }
  EXPECT_EQ(cmp.total.ratio, 1.0);
}

TEST(Compare, ZeroMeasuredIsUndefinedAndBiasFollowsSign)
{
  const auto tallies = tally_pipeline(scenario{});
  const auto table   = instruction_cost_table::uniform();
  const auto modeled = build_report(tallies, table, {});
  auto       report  = synthesize_measurement(tallies);
  std::erase_if(report.rows, [](const measured_row& r) { return r.block == block_id::D; });
  for (measured_row& r : report.rows) {
    if (r.block == block_id::A) {
      r.count *= 2;
    }
  }
  const auto cmp = compare(modeled, measured_cycles_for(report, table));
  EXPECT_FALSE(cmp.blocks[block_id::D].ratio);
  EXPECT_EQ(cmp.blocks[block_id::D].bias, estimate_bias::undefined);
  EXPECT_EQ(cmp.blocks[block_id::A].bias, estimate_bias::under);
  EXPECT_DOUBLE_EQ(*cmp.blocks[block_id::A].ratio, 0.5);
  EXPECT_DOUBLE_EQ(*cmp.blocks[block_id::A].relative_error, -0.5);
}

TEST(Compare, RatiosInvariantUnderTableScaling)
{
  const auto tallies = tally_pipeline(scenario{});
  auto       report  = synthesize_measurement(tallies);
  for (measured_row& r : report.rows) {
    r.count = r.count * 3 / 2 + 1;
  }
  const auto base = load_cost_table(default_cost_table_path());
  const auto big  = scaled(base, rational(9, 4));
  const auto c1   = compare(build_report(tallies, base, {}), measured_cycles_for(report, base));
  const auto c2   = compare(build_report(tallies, big, {}), measured_cycles_for(report, big));
  for (block_id b : all_blocks) {
    EXPECT_EQ(c1.blocks[b].modeled / c1.blocks[b].measured, c2.blocks[b].modeled / c2.blocks[b].measured);
    EXPECT_EQ(c1.blocks[b].ratio, c2.blocks[b].ratio);
  }
}
