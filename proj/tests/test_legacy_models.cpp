#include "nrenergy/errors.hpp"
#include "nrenergy/legacy_models.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace nrenergy;
using namespace nrenergy::legacy;

TEST(Auer, ActiveAndSleepBranches)
{
  auer_params p{.n_trx = 2, .p0_w = 100, .delta_p = 3, .p_out_w = 20, .p_max_w = 40, .p_sleep_w = 50};
  EXPECT_DOUBLE_EQ(auer_power(p), 320.0);
  p.p_out_w = 0;
  EXPECT_DOUBLE_EQ(auer_power(p), 100.0);
  p.p_out_w = 40; // p_out = p_max still counts as active
  EXPECT_DOUBLE_EQ(auer_power(p), 2 * (100.0 + 3 * 40.0));
  p.p_out_w = 41;
  EXPECT_THROW(auer_power(p), domain_error);
}

TEST(Auer, IncreasingOnActiveBranch)
{
  auer_params p{.n_trx = 3, .p0_w = 80, .delta_p = 2.5, .p_out_w = 0.5, .p_max_w = 40, .p_sleep_w = 10};
  double      last = auer_power(p);
  for (double out = 1.0; out <= 40.0; out += 1.0) {
    p.p_out_w = out;
    EXPECT_GT(auer_power(p), last);
    last = auer_power(p);
  }
}

TEST(Desset, Sums)
{
  EXPECT_EQ(desset_power({}), 0.0);
  EXPECT_EQ(desset_power({.p_pa_w = 7}), 7.0);
  EXPECT_DOUBLE_EQ(desset_power({30, 20, 100, 15}), 165.0);
}

TEST(Yan, Sums)
{
  EXPECT_EQ(yan_energy({}), 0.0);
  EXPECT_EQ(yan_energy({.e_dc_j = 2}), 2.0);
  EXPECT_DOUBLE_EQ(yan_energy({1.5, 20, 4, 2.5}), 28.0);
}

TEST(Yu, Examples)
{
  yu_params p{.carriers = {{10, 20, 0.5}}, .p_cp_static_w = 5};
  EXPECT_DOUBLE_EQ(yu_power(p), 25.0);
  p.carriers.push_back(p.carriers.front());
  EXPECT_DOUBLE_EQ(yu_power(p), 45.0);
  p.carriers.clear();
  EXPECT_DOUBLE_EQ(yu_power(p), 5.0);
}

TEST(Yu, AdditiveOverDisjointCarrierLists)
{
  const yu_params a{.carriers = {{10, 20, 0.5}, {3, 5, 1.25}}, .p_cp_static_w = 7};
  const yu_params b{.carriers = {{4, 100, 0.1}}, .p_cp_static_w = 7};
  yu_params       both = a;
  both.carriers.insert(both.carriers.end(), b.carriers.begin(), b.carriers.end());
  EXPECT_DOUBLE_EQ(yu_power(both) - 7, (yu_power(a) - 7) + (yu_power(b) - 7));
}

TEST(Tombaz, Branches)
{
  tombaz_params p{.n_sectors     = 3,
                  .p_tx_sector_w = 21,
                  .eta_pa        = 0.3,
                  .n_rf_chains   = 64,
                  .p_c_w         = 1,
                  .p_b_w         = 10,
                  .dtx_enabled   = false,
                  .delta         = 1.0};
  EXPECT_NEAR(tombaz_power(p), 432.0, 1e-9);
  p.p_tx_sector_w = 0;
  EXPECT_DOUBLE_EQ(tombaz_power(p), 30.0);
  const double idle = tombaz_power(p);
  p.dtx_enabled     = true;
  EXPECT_DOUBLE_EQ(tombaz_power(p), idle);
  for (double delta = 0.0; delta <= 1.0; delta += 0.125) {
    p.delta = delta;
    EXPECT_LE(tombaz_power(p), idle);
  }
  p.eta_pa = 0;
  EXPECT_THROW(tombaz_power(p), domain_error);
}

TEST(Fu, Examples)
{
  fu_params p;
  p.rho = 8;
  p.bb  = {.l_beams = 4, .q_enc = 10, .q_net = 6, .q_ctrl = 4};
  p.rf  = {.m_antennas = 4, .q_mod = 2, .q_mix = 2, .q_vga = 1, .q_lna = 1, .q_adc = 2, .q_clk = 4};
  EXPECT_DOUBLE_EQ(fu_bb_power(p), 10.0);
  EXPECT_DOUBLE_EQ(fu_rf_power(p), 5.0);
  fu_params zero;
  zero.bb.l_beams    = 4;
  zero.rf.m_antennas = 4;
  EXPECT_EQ(fu_bb_power(zero), 0.0);
  EXPECT_EQ(fu_rf_power(zero), 0.0);
  p.rho = 0;
  EXPECT_THROW(fu_bb_power(p), domain_error);
}

TEST(Evaluate, ReadsParameterFiles)
{
  const std::filesystem::path dir = std::filesystem::path(NRENERGY_CONFIG_DIR) / "legacy";
  EXPECT_DOUBLE_EQ(evaluate_file("auer", dir / "auer.json").value, 320.0);
  EXPECT_DOUBLE_EQ(evaluate_file("auer", dir / "auer_sleep.json").value, 100.0);
  EXPECT_DOUBLE_EQ(evaluate_file("desset", dir / "desset.json").value, 165.0);
  EXPECT_EQ(evaluate_file("yan", dir / "yan.json").unit, "J");
  EXPECT_DOUBLE_EQ(evaluate_file("yu", dir / "yu.json").value, 25.0);
  EXPECT_NEAR(evaluate_file("tombaz", dir / "tombaz.json").value, 432.0, 1e-9);
  EXPECT_DOUBLE_EQ(evaluate_file("fu-bb", dir / "fu.json").value, 10.0);
  EXPECT_DOUBLE_EQ(evaluate_file("fu-rf", dir / "fu.json").value, 5.0);
}

TEST(Evaluate, Errors)
{
  try {
    evaluate("earth", "{}");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), error_code::usage);
    EXPECT_NE(std::string(e.what()).find("auer"), std::string::npos);
  }
  EXPECT_THROW(evaluate("desset", R"({"p_bbu_w":1,"p_rf_w":1,"p_pa_w":1,"p_oh_w":1,"p_fan_w":1})"), config_error);
  EXPECT_THROW(evaluate("fu-rf", R"({"bb":{"l_beams":1,"q_enc":1,"q_net":1,"q_ctrl":1},"rho":1})"), config_error);
  EXPECT_THROW(evaluate_file("yu", "/no/such/params.json"), io_error);
}
