#include "cryolink/units.hpp"

#include "cryolink/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace cryolink::units {

void PulseProfile::validate() const {
    if (!(activity > 0.0) || activity > 1.0)
        throw std::invalid_argument("pulse activity must be in (0, 1]");
    if (!(peak_to_avg_db >= 0.0))
        throw std::invalid_argument("peak_to_avg_db must be >= 0");
}

double db_to_factor(double db) { return std::pow(10.0, db / 10.0); }

double factor_to_db(double factor) {
    if (!(factor > 0.0)) throw std::domain_error("factor_to_db requires a positive factor");
    return 10.0 * std::log10(factor);
}

double dbm_to_watts(double p_dbm) {
    if (!std::isfinite(p_dbm)) throw std::invalid_argument("dbm_to_watts requires a finite input");
    return db_to_factor(p_dbm) * 1e-3;
}

double watts_to_dbm(double p_watts) {
    if (!(p_watts > 0.0)) throw std::domain_error("watts_to_dbm requires positive power");
    return 10.0 * std::log10(p_watts * 1e3);
}

double thermal_noise_floor(double t_kelvin) {
    if (!(t_kelvin > 0.0)) throw std::domain_error("thermal_noise_floor requires T > 0");
    return 10.0 * std::log10(constants::boltzmann * t_kelvin * 1e3);
}

double peak_to_average(double p_peak_dbm, const PulseProfile& profile) {
    profile.validate();
    return p_peak_dbm - profile.peak_to_avg_db;
}

std::string to_string(PulseShape shape) {
    switch (shape) {
        case PulseShape::gaussian: return "gaussian";
        case PulseShape::raised_cosine: return "raised_cosine";
        case PulseShape::rectangular: return "rectangular";
    }
    return "unknown";
}

PulseShape pulse_shape_from_string(const std::string& name) {
    if (name == "gaussian") return PulseShape::gaussian;
    if (name == "raised_cosine") return PulseShape::raised_cosine;
    if (name == "rectangular") return PulseShape::rectangular;
    throw std::invalid_argument("unknown pulse shape: " + name);
}

}  // namespace cryolink::units
