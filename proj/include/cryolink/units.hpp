#ifndef CRYOLINK_UNITS_HPP
#define CRYOLINK_UNITS_HPP

#include <string>

namespace cryolink::units {

enum class PulseShape { gaussian, raised_cosine, rectangular };

// Envelope statistics of the microwave drive pulse train. peak_to_avg_db is
// carried as a single opaque parameter; it is not derived from shape/activity.
struct PulseProfile {
    PulseShape shape = PulseShape::gaussian;
    double activity = 0.3;         // duty fraction, in (0, 1]
    double peak_to_avg_db = 10.0;  // >= 0

    void validate() const;
    static PulseProfile gaussian_default() { return {}; }
};

// dB / linear power helpers. All internal computation elsewhere is in SI
// units; dB and dBm appear only at API boundaries.
double db_to_factor(double db);
double factor_to_db(double factor);

double dbm_to_watts(double p_dbm);
double watts_to_dbm(double p_watts);

// Thermal noise power spectral density k_B*T referenced to 1 mW, in dBm/Hz.
double thermal_noise_floor(double t_kelvin);

// Average power of a pulsed drive given its peak power.
double peak_to_average(double p_peak_dbm, const PulseProfile& profile = PulseProfile::gaussian_default());

std::string to_string(PulseShape shape);
PulseShape pulse_shape_from_string(const std::string& name);

}  // namespace cryolink::units

#endif
