#include "cryolink/noise.hpp"

#include "cryolink/constants.hpp"
#include "cryolink/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cryolink::noise {

std::string to_string(NoiseSource source) {
    switch (source) {
        case NoiseSource::shot: return "shot";
        case NoiseSource::rin: return "rin";
        case NoiseSource::eom_thermal: return "eom_thermal";
        case NoiseSource::phase_noise: return "phase_noise";
    }
    return "unknown";
}

void TxNoiseConfig::validate() const {
    if (!(rin_db < 0.0)) throw std::invalid_argument("rin_db must be negative");
    if (!(pn_dbc < 0.0)) throw std::invalid_argument("pn_dbc must be negative");
    if (!(v_pi > 0.0)) throw std::invalid_argument("v_pi must be positive");
    if (!(z_dr > 0.0)) throw std::invalid_argument("z_dr must be positive");
    if (!(t_tx > 0.0)) throw std::invalid_argument("t_tx must be positive");
}

NoiseBreakdown NoiseBreakdown::from_components(double shot, double rin, double eom_thermal,
                                               double phase_noise) {
    NoiseBreakdown nb;
    nb.shot = shot;
    nb.rin = rin;
    nb.eom_thermal = eom_thermal;
    nb.phase_noise = phase_noise;
    nb.total = shot + rin + eom_thermal + phase_noise;
    nb.limiting_source = NoiseSource::shot;
    double top = shot;
    if (rin > top) { top = rin; nb.limiting_source = NoiseSource::rin; }
    if (eom_thermal > top) { top = eom_thermal; nb.limiting_source = NoiseSource::eom_thermal; }
    if (phase_noise > top) { top = phase_noise; nb.limiting_source = NoiseSource::phase_noise; }
    return nb;
}

static void check_current(double i_dc) {
    if (!(i_dc >= 0.0)) throw std::domain_error("photocurrent must be >= 0");
}

double shot_psd(double i_dc) {
    check_current(i_dc);
    return 2.0 * constants::elementary_charge * i_dc;
}

double rin_psd(double rin_db, double i_dc) {
    check_current(i_dc);
    return units::db_to_factor(rin_db) * i_dc * i_dc;
}

double eom_thermal_psd(const TxNoiseConfig& cfg, double i_dc) {
    check_current(i_dc);
    const double s_v = 4.0 * constants::boltzmann * cfg.t_tx * cfg.z_dr;
    const double gain = constants::pi * i_dc / cfg.v_pi;
    return s_v * gain * gain;
}

double phase_noise_psd(double pn_dbc, double i_dc) {
    check_current(i_dc);
    const double term = units::db_to_factor(pn_dbc) * i_dc;
    return term * term;
}

double required_snr(double p_avg_qubit_dbm, double t_qubit) {
    return p_avg_qubit_dbm - units::thermal_noise_floor(t_qubit);
}

double link_snr(double i_sig, const NoiseBreakdown& nb) {
    check_current(i_sig);
    if (!(nb.total >= 0.0)) throw std::domain_error("noise total must be >= 0");
    if (i_sig == 0.0) return -std::numeric_limits<double>::infinity();
    if (nb.total == 0.0) return std::numeric_limits<double>::infinity();
    return 20.0 * std::log10(i_sig / std::sqrt(nb.total));
}

}  // namespace cryolink::noise
