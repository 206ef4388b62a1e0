#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// End-to-end RAN power models from the literature, kept for side-by-side comparison.

namespace nrenergy::legacy {

/// Load-dependent transceiver model (EARTH).
struct auer_params {
  unsigned n_trx     = 1;
  double   p0_w      = 0.0;
  double   delta_p   = 0.0;
  double   p_out_w   = 0.0;
  double   p_max_w   = 0.0;
  double   p_sleep_w = 0.0;
};

/// n_trx (p0 + delta_p p_out) when transmitting, n_trx p_sleep when p_out = 0. p_out = p_max counts as active.
/// Throws domain_error when p_out is negative or exceeds p_max.
double auer_power(const auer_params& p);

struct desset_components {
  double p_bbu_w = 0.0;
  double p_rf_w  = 0.0;
  double p_pa_w  = 0.0;
  double p_oh_w  = 0.0;
};

double desset_power(const desset_components& c);

struct yan_segments {
  double e_ue_j       = 0.0;
  double e_bs_j       = 0.0;
  double e_wireline_j = 0.0;
  double e_dc_j       = 0.0;
};

double yan_energy(const yan_segments& s);

struct component_carrier {
  double p_tx_w                = 0.0;
  double bandwidth_mhz         = 0.0;
  double p_cp_var_w_per_mhz    = 0.0;
};

/// Carrier aggregation model.
struct yu_params {
  std::vector<component_carrier> carriers;
  double                         p_cp_static_w = 0.0;
};

/// sum_j (p_tx_j + B_j p_cp_var_j) + p_cp_static.
double yu_power(const yu_params& p);

/// Massive-MIMO sector model with optional cell DTX.
struct tombaz_params {
  unsigned n_sectors    = 1;
  double   p_tx_sector_w = 0.0;
  double   eta_pa       = 1.0;
  unsigned n_rf_chains  = 0;
  double   p_c_w        = 0.0;
  double   p_b_w        = 0.0;
  bool     dtx_enabled  = false;
  double   delta        = 1.0;
};

double tombaz_power(const tombaz_params& p);

struct fu_baseband {
  unsigned l_beams = 0;
  double   q_enc   = 0.0;
  double   q_net   = 0.0;
  double   q_ctrl  = 0.0;
};

struct fu_radio {
  unsigned m_antennas = 0;
  double   q_mod      = 0.0;
  double   q_mix      = 0.0;
  double   q_vga      = 0.0;
  double   q_lna      = 0.0;
  double   q_adc      = 0.0;
  double   q_clk      = 0.0;
};

/// GOPS-based baseband and RF model; rho in GOPS per watt.
struct fu_params {
  fu_baseband bb;
  fu_radio    rf;
  double      rho = 1.0;
};

/// L (Q_enc + Q_net + Q_ctrl) / rho.
double fu_bb_power(const fu_params& p);
/// M (Q_mod + Q_mix + Q_vga + Q_lna + Q_adc) / rho + sqrt(M) Q_clk / rho.
double fu_rf_power(const fu_params& p);

/// Model names accepted by evaluate(): auer, desset, yan, yu, tombaz, fu-bb, fu-rf.
const std::vector<std::string>& model_names();

struct model_result {
  std::string model;
  double      value = 0.0;
  std::string unit; ///< "W" or "J"
};

/// Parses \p json_text as the parameter object of \p model and evaluates it. Unknown keys are rejected.
model_result evaluate(std::string_view model, std::string_view json_text, std::string_view source_name = "<params>");
model_result evaluate_file(std::string_view model, const std::filesystem::path& params_path);

} // namespace nrenergy::legacy
