#include "cryolink/subthz.hpp"

#include <cmath>
#include <stdexcept>

namespace cryolink::subthz {

void SubThzLinkDesign::validate() const {
    if (!(responsivity > 0.0)) throw std::invalid_argument("responsivity must be positive");
    if (!(pn_dbc < 0.0)) throw std::invalid_argument("pn_dbc must be negative");
    if (coupler_loss_db < 0.0 || waveguide_loss_db < 0.0 || attenuation_below_rx_db < 0.0)
        throw std::invalid_argument("losses and attenuation must be >= 0 dB");
    if (snr_margin_db < 0.0) throw std::invalid_argument("snr_margin_db must be >= 0");
    if (!carrier_equals_sideband)
        throw std::invalid_argument("only the equal carrier/sideband mode is modeled");
}

photonic::LinkSolution solve_min_psubthz(double p_qubit_peak_dbm, const SubThzLinkDesign& design,
                                         double t_qubit, const units::PulseProfile& profile) {
    design.validate();
    profile.validate();

    const double p_avg_dbm = units::peak_to_average(p_qubit_peak_dbm, profile);
    const double snr_req = noise::required_snr(p_avg_dbm, t_qubit) + design.snr_margin_db;

    photonic::LinkSolution sol;
    sol.snr_required = snr_req;

    const double pn = units::db_to_factor(design.pn_dbc);
    const double s2 = units::db_to_factor(snr_req);
    const double denom = 1.0 - s2 * pn * pn;
    sol.feasibility_boundary_peak_dbm = 10.0 * std::log10(1.0 / (pn * pn)) -
                                        design.snr_margin_db +
                                        units::thermal_noise_floor(t_qubit) +
                                        profile.peak_to_avg_db;

    if (denom <= 0.0) {
        sol.feasible = false;
        sol.noise_breakdown.limiting_source = noise::NoiseSource::phase_noise;
        return sol;
    }

    const double i_dc = 2.0 * constants::elementary_charge * s2 / denom;
    sol.i_dc = i_dc;
    sol.i_sig = i_dc;  // equal carrier and sideband power
    sol.p_opt = i_dc / design.responsivity;
    sol.p_opt_sideband = sol.p_opt;

    sol.p_uw_rx_stage = photonic::stage_microwave_power(p_avg_dbm, design.attenuation_below_rx_db);
    sol.z_load = 2.0 * sol.p_uw_rx_stage / (sol.i_sig * sol.i_sig);
    sol.p_active =
        sol.p_opt * units::db_to_factor(design.coupler_loss_db + design.waveguide_loss_db);

    sol.noise_breakdown = noise::NoiseBreakdown::from_components(
        noise::shot_psd(i_dc), 0.0, 0.0, noise::phase_noise_psd(design.pn_dbc, i_dc));
    sol.snr_achieved = noise::link_snr(sol.i_sig, sol.noise_breakdown);
    sol.feasible = true;
    return sol;
}

double phase_noise_crossover_current(double pn_dbc) {
    const double pn = units::db_to_factor(pn_dbc);
    return 2.0 * constants::elementary_charge / (pn * pn);
}

std::vector<HeatSweepPoint> subthz_heat_sweep(std::span<const double> p_qubit_peak_grid_dbm,
                                              const SubThzLinkDesign& design,
                                              const photonic::PhotonicLinkDesign& photonic_4k,
                                              const photonic::PhotonicLinkDesign& photonic_wdm,
                                              double t_qubit, const units::PulseProfile& profile) {
    std::vector<HeatSweepPoint> out;
    out.reserve(p_qubit_peak_grid_dbm.size());
    for (double peak : p_qubit_peak_grid_dbm) {
        HeatSweepPoint p;
        p.p_qubit_peak_dbm = peak;
        p.subthz_active_w = solve_min_psubthz(peak, design, t_qubit, profile).p_active;
        p.photonic_4k_active_w =
            photonic::solve_min_popt(peak, photonic_4k, t_qubit, profile).p_active;
        p.photonic_wdm_active_w =
            photonic::solve_min_popt(peak, photonic_wdm, t_qubit, profile).p_active;
        out.push_back(p);
    }
    return out;
}

}  // namespace cryolink::subthz
