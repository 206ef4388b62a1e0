#include "nrenergy/legacy_models.hpp"
#include "nrenergy/errors.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <cmath>

namespace nrenergy::legacy {

namespace {

void require_non_negative(double value, std::string_view name)
{
  if (value < 0.0) {
    throw domain_error(fmt::format("{} must be >= 0", name));
  }
}

} // namespace

double auer_power(const auer_params& p)
{
  require_non_negative(p.p0_w, "p0_w");
  require_non_negative(p.p_sleep_w, "p_sleep_w");
  require_non_negative(p.p_max_w, "p_max_w");
  require_non_negative(p.p_out_w, "p_out_w");
  if (p.p_out_w > p.p_max_w) {
    throw domain_error(fmt::format("p_out_w {} exceeds p_max_w {}", p.p_out_w, p.p_max_w));
  }
  if (p.p_out_w == 0.0) {
    return p.n_trx * p.p_sleep_w;
  }
  return p.n_trx * (p.p0_w + p.delta_p * p.p_out_w);
}

double desset_power(const desset_components& c)
{
  return c.p_bbu_w + c.p_rf_w + c.p_pa_w + c.p_oh_w;
}

double yan_energy(const yan_segments& s)
{
  return s.e_ue_j + s.e_bs_j + s.e_wireline_j + s.e_dc_j;
}

double yu_power(const yu_params& p)
{
  double sum = 0.0;
  for (const component_carrier& cc : p.carriers) {
    sum += cc.p_tx_w + cc.bandwidth_mhz * cc.p_cp_var_w_per_mhz;
  }
  return sum + p.p_cp_static_w;
}

double tombaz_power(const tombaz_params& p)
{
  if (!(p.eta_pa > 0.0) || p.eta_pa > 1.0) {
    throw domain_error("eta_pa must be in (0, 1]");
  }
  if (p.delta < 0.0 || p.delta > 1.0) {
    throw domain_error("delta must be in [0, 1]");
  }
  require_non_negative(p.p_tx_sector_w, "p_tx_sector_w");

  double per_sector = 0.0;
  if (p.p_tx_sector_w > 0.0) {
    per_sector = p.p_tx_sector_w / p.eta_pa + p.n_rf_chains * p.p_c_w + p.p_b_w;
  } else if (p.dtx_enabled) {
    per_sector = p.delta * p.p_b_w;
  } else {
    per_sector = p.p_b_w;
  }
  return p.n_sectors * per_sector;
}

double fu_bb_power(const fu_params& p)
{
  if (!(p.rho > 0.0)) {
    throw domain_error("rho must be > 0");
  }
  return p.bb.l_beams * (p.bb.q_enc + p.bb.q_net + p.bb.q_ctrl) / p.rho;
}

double fu_rf_power(const fu_params& p)
{
  if (!(p.rho > 0.0)) {
    throw domain_error("rho must be > 0");
  }
  const fu_radio& rf = p.rf;
  return rf.m_antennas * (rf.q_mod + rf.q_mix + rf.q_vga + rf.q_lna + rf.q_adc) / p.rho +
         std::sqrt(static_cast<double>(rf.m_antennas)) * rf.q_clk / p.rho;
}

const std::vector<std::string>& model_names()
{
  static const std::vector<std::string> names = {"auer", "desset", "yan", "yu", "tombaz", "fu-bb", "fu-rf"};
  return names;
}

namespace {

using detail::json;
using detail::object_reader;

void require_known_model(std::string_view model)
{
  const auto& names = model_names();
  if (std::find(names.begin(), names.end(), model) != names.end()) {
    return;
  }
  std::string valid;
  for (const std::string& name : names) {
    valid += valid.empty() ? name : ", " + name;
  }
  throw error(error_code::usage, fmt::format("unknown model '{}'; valid models: {}", model, valid));
}

auer_params read_auer(const object_reader& r)
{
  auer_params p;
  p.n_trx     = r.get_unsigned("n_trx");
  p.p0_w      = r.get_double("p0_w");
  p.delta_p   = r.get_double("delta_p");
  p.p_out_w   = r.get_double("p_out_w");
  p.p_max_w   = r.get_double("p_max_w");
  p.p_sleep_w = r.get_double("p_sleep_w");
  return p;
}

fu_params read_fu(const json& doc, const std::string& ctx, std::string_view required_section)
{
  const object_reader root(doc, ctx, {"bb", "rf", "rho"});
  root.at(required_section);
  fu_params           p;
  p.rho = root.get_double("rho");
  if (root.has("bb")) {
    const object_reader bb(root.at("bb"), root.field("bb"), {"l_beams", "q_enc", "q_net", "q_ctrl"});
    p.bb.l_beams = bb.get_unsigned("l_beams");
    p.bb.q_enc   = bb.get_double("q_enc");
    p.bb.q_net   = bb.get_double("q_net");
    p.bb.q_ctrl  = bb.get_double("q_ctrl");
  }
  if (root.has("rf")) {
    const object_reader rf(
        root.at("rf"), root.field("rf"), {"m_antennas", "q_mod", "q_mix", "q_vga", "q_lna", "q_adc", "q_clk"});
    p.rf.m_antennas = rf.get_unsigned("m_antennas");
    p.rf.q_mod      = rf.get_double("q_mod");
    p.rf.q_mix      = rf.get_double("q_mix");
    p.rf.q_vga      = rf.get_double("q_vga");
    p.rf.q_lna      = rf.get_double("q_lna");
    p.rf.q_adc      = rf.get_double("q_adc");
    p.rf.q_clk      = rf.get_double("q_clk");
  }
  return p;
}

} // namespace

model_result evaluate(std::string_view model, std::string_view json_text, std::string_view source_name)
{
  require_known_model(model);
  const json        doc = detail::parse_json(json_text, source_name);
  const std::string ctx(source_name);

  if (model == "auer") {
    const object_reader r(doc, ctx, {"n_trx", "p0_w", "delta_p", "p_out_w", "p_max_w", "p_sleep_w"});
    return {"auer", auer_power(read_auer(r)), "W"};
  }
  if (model == "desset") {
    const object_reader r(doc, ctx, {"p_bbu_w", "p_rf_w", "p_pa_w", "p_oh_w"});
    return {"desset",
            desset_power({r.get_double("p_bbu_w"), r.get_double("p_rf_w"), r.get_double("p_pa_w"), r.get_double("p_oh_w")}),
            "W"};
  }
  if (model == "yan") {
    const object_reader r(doc, ctx, {"e_ue_j", "e_bs_j", "e_wireline_j", "e_dc_j"});
    return {"yan",
            yan_energy({r.get_double("e_ue_j"), r.get_double("e_bs_j"), r.get_double("e_wireline_j"), r.get_double("e_dc_j")}),
            "J"};
  }
  if (model == "yu") {
    const object_reader r(doc, ctx, {"carriers", "p_cp_static_w"});
    yu_params           p;
    p.p_cp_static_w = r.get_double("p_cp_static_w");
    if (r.has("carriers")) {
      const json& list = r.at("carriers");
      if (!list.is_array()) {
        throw config_error(r.field("carriers") + ": must be an array");
      }
      for (std::size_t i = 0; i != list.size(); ++i) {
        const object_reader cc(list[i],
                               fmt::format("{}[{}]", r.field("carriers"), i),
                               {"p_tx_w", "bandwidth_mhz", "p_cp_var_w_per_mhz"});
        p.carriers.push_back(
            {cc.get_double("p_tx_w"), cc.get_double("bandwidth_mhz"), cc.get_double("p_cp_var_w_per_mhz")});
      }
    }
    return {"yu", yu_power(p), "W"};
  }
  if (model == "tombaz") {
    const object_reader r(
        doc,
        ctx,
        {"n_sectors", "p_tx_sector_w", "eta_pa", "n_rf_chains", "p_c_w", "p_b_w", "dtx_enabled", "delta"});
    tombaz_params p;
    p.n_sectors     = r.get_unsigned("n_sectors");
    p.p_tx_sector_w = r.get_double("p_tx_sector_w");
    p.eta_pa        = r.get_double("eta_pa");
    p.n_rf_chains   = r.get_unsigned("n_rf_chains");
    p.p_c_w         = r.get_double("p_c_w");
    p.p_b_w         = r.get_double("p_b_w");
    if (r.has("dtx_enabled")) {
      p.dtx_enabled = r.get_bool("dtx_enabled");
    }
    if (r.has("delta")) {
      p.delta = r.get_double("delta");
    }
    return {"tombaz", tombaz_power(p), "W"};
  }
  if (model == "fu-bb") {
    return {"fu-bb", fu_bb_power(read_fu(doc, ctx, "bb")), "W"};
  }
  if (model == "fu-rf") {
    return {"fu-rf", fu_rf_power(read_fu(doc, ctx, "rf")), "W"};
  }

  throw error(error_code::usage, fmt::format("unknown model '{}'", model));
}

model_result evaluate_file(std::string_view model, const std::filesystem::path& params_path)
{
  require_known_model(model);
  return evaluate(model, detail::read_text_file(params_path), params_path.string());
}

} // namespace nrenergy::legacy
