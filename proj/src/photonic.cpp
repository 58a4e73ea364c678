#include "cryolink/photonic.hpp"

#include <cmath>
#include <stdexcept>

namespace cryolink::photonic {

void PhotonicLinkDesign::validate() const {
    if (!(responsivity > 0.0) || responsivity > 1.25)
        throw std::invalid_argument("responsivity must be in (0, 1.25] A/W");
    if (!(epsilon_m > 0.0) || epsilon_m > 1.0)
        throw std::invalid_argument("epsilon_m must be in (0, 1]");
    if (attenuation_below_rx_db < 0.0 || coupling_loss_db < 0.0 || wdm_filter_loss_db < 0.0)
        throw std::invalid_argument("losses and attenuation must be >= 0 dB");
    if (wdm_filter_rejection_db < 0.0)
        throw std::invalid_argument("filter rejection must be >= 0 dB");
    if (wdm_n_qubit < 1) throw std::invalid_argument("wdm_n_qubit must be >= 1");
    if (snr_margin_db < 0.0) throw std::invalid_argument("snr_margin_db must be >= 0");
    tx_noise.validate();
}

PhotonicLinkDesign PhotonicLinkDesign::rx_30mk() { return {}; }

PhotonicLinkDesign PhotonicLinkDesign::rx_4k() {
    PhotonicLinkDesign d;
    d.attenuation_below_rx_db = 30.0;
    return d;
}

PhotonicLinkDesign PhotonicLinkDesign::rx_4k_wdm() {
    PhotonicLinkDesign d = rx_4k();
    d.wdm_filter_loss_db = constants::three_db_exact;
    d.wdm_n_qubit = 4;
    return d;
}

std::pair<double, double> photocurrents(double p_opt, double eps, double responsivity) {
    if (!(p_opt >= 0.0)) throw std::domain_error("optical power must be >= 0");
    return {responsivity * p_opt, responsivity * eps * p_opt};
}

double stage_microwave_power(double p_qubit_avg_dbm, double attenuation_db) {
    if (attenuation_db < 0.0) throw std::invalid_argument("attenuation must be >= 0 dB");
    return units::dbm_to_watts(p_qubit_avg_dbm + attenuation_db);
}

namespace {

// RIN and modulator-thermal coefficients of the quadratic noise terms:
// total PSD = 2*q*I + (a + b)*I^2.
struct QuadraticNoise {
    double a = 0.0;
    double b = 0.0;
};

QuadraticNoise quadratic_coefficients(const noise::TxNoiseConfig& tx) {
    QuadraticNoise q;
    q.a = units::db_to_factor(tx.rin_db);
    const double gain = constants::pi / tx.v_pi;
    q.b = 4.0 * constants::boltzmann * tx.t_tx * tx.z_dr * gain * gain;
    return q;
}

double boundary_peak_dbm(const PhotonicLinkDesign& d, double t_qubit,
                         const units::PulseProfile& profile) {
    const auto [a, b] = quadratic_coefficients(d.tx_noise);
    const double snr_cap_db = 10.0 * std::log10(d.epsilon_m * d.epsilon_m / (a + b));
    return snr_cap_db - d.snr_margin_db + units::thermal_noise_floor(t_qubit) +
           profile.peak_to_avg_db;
}

}  // namespace

bool filter_rejection_sufficient(const PhotonicLinkDesign& design) {
    return design.wdm_filter_rejection_db >= required_filter_rejection_db;
}

double rin_feasibility_boundary_peak_dbm(const PhotonicLinkDesign& design, double t_qubit,
                                         const units::PulseProfile& profile) {
    design.validate();
    profile.validate();
    return boundary_peak_dbm(design, t_qubit, profile);
}

LinkSolution solve_min_popt(double p_qubit_peak_dbm, const PhotonicLinkDesign& design,
                            double t_qubit, const units::PulseProfile& profile) {
    design.validate();
    profile.validate();

    const double p_avg_dbm = units::peak_to_average(p_qubit_peak_dbm, profile);
    const double snr_req = noise::required_snr(p_avg_dbm, t_qubit) + design.snr_margin_db;

    LinkSolution sol;
    sol.snr_required = snr_req;
    sol.feasibility_boundary_peak_dbm = boundary_peak_dbm(design, t_qubit, profile);

    const auto [a, b] = quadratic_coefficients(design.tx_noise);
    const double s2 = units::db_to_factor(snr_req);
    const double eps = design.epsilon_m;
    const double denom = eps * eps - s2 * (a + b);

    if (denom <= 0.0) {
        sol.feasible = false;
        sol.noise_breakdown.limiting_source = noise::NoiseSource::rin;
        return sol;
    }

    const double i_dc = 2.0 * constants::elementary_charge * s2 / denom;
    sol.i_dc = i_dc;
    sol.i_sig = eps * i_dc;
    sol.p_opt = i_dc / design.responsivity;
    sol.p_opt_sideband = eps * sol.p_opt;

    sol.p_uw_rx_stage = stage_microwave_power(p_avg_dbm, design.attenuation_below_rx_db);
    sol.z_load = 2.0 * sol.p_uw_rx_stage / (sol.i_sig * sol.i_sig);
    sol.p_active =
        sol.p_opt * units::db_to_factor(design.coupling_loss_db + design.wdm_filter_loss_db);

    sol.noise_breakdown = noise::NoiseBreakdown::from_components(
        noise::shot_psd(i_dc), noise::rin_psd(design.tx_noise.rin_db, i_dc),
        noise::eom_thermal_psd(design.tx_noise, i_dc), 0.0);
    sol.snr_achieved = noise::link_snr(sol.i_sig, sol.noise_breakdown);
    sol.feasible = true;
    return sol;
}

std::vector<std::pair<double, double>> zl_vs_attenuation(double p_qubit_peak_dbm,
                                                         std::span<const double> attenuation_grid_db,
                                                         const PhotonicLinkDesign& design,
                                                         double t_qubit,
                                                         const units::PulseProfile& profile) {
    if (attenuation_grid_db.empty())
        throw std::invalid_argument("attenuation grid must be non-empty");

    PhotonicLinkDesign at_qubit = design;
    at_qubit.attenuation_below_rx_db = 0.0;
    const LinkSolution base = solve_min_popt(p_qubit_peak_dbm, at_qubit, t_qubit, profile);
    if (!base.feasible)
        throw std::domain_error("design infeasible at peak " + std::to_string(p_qubit_peak_dbm) +
                                " dBm");

    std::vector<std::pair<double, double>> out;
    out.reserve(attenuation_grid_db.size());
    for (double a_db : attenuation_grid_db) {
        if (a_db < 0.0) throw std::invalid_argument("attenuation must be >= 0 dB");
        out.emplace_back(a_db, base.z_load * units::db_to_factor(a_db));
    }
    return out;
}

NoiseSweep noise_breakdown_sweep(std::span<const double> p_qubit_peak_grid_dbm,
                                 const PhotonicLinkDesign& design, double t_qubit,
                                 const units::PulseProfile& profile) {
    design.validate();
    profile.validate();

    NoiseSweep sweep;
    sweep.points.reserve(p_qubit_peak_grid_dbm.size());
    for (double peak : p_qubit_peak_grid_dbm)
        sweep.points.push_back({peak, solve_min_popt(peak, design, t_qubit, profile)});

    // shot = RIN at I = 2q/a; invert the closed form to the peak power that
    // solves to that current.
    const auto [a, b] = quadratic_coefficients(design.tx_noise);
    const double eps = design.epsilon_m;
    const double s2_cross = eps * eps / (2.0 * a + b);
    const double snr_cross_db = 10.0 * std::log10(s2_cross);
    sweep.shot_rin_crossover_peak_dbm = snr_cross_db - design.snr_margin_db +
                                        units::thermal_noise_floor(t_qubit) +
                                        profile.peak_to_avg_db;
    return sweep;
}

double wdm_heat_per_qubit(const LinkSolution& base, const PhotonicLinkDesign& wdm_design) {
    if (!base.feasible) throw std::invalid_argument("base solution must be feasible");
    if (wdm_design.wdm_filter_loss_db < 0.0)
        throw std::invalid_argument("filter loss must be >= 0 dB");
    return base.p_active * units::db_to_factor(wdm_design.wdm_filter_loss_db);
}

}  // namespace cryolink::photonic
