#ifndef CRYOLINK_NOISE_HPP
#define CRYOLINK_NOISE_HPP

#include <string>

namespace cryolink::noise {

enum class NoiseSource { shot, rin, eom_thermal, phase_noise };

std::string to_string(NoiseSource source);

// Transmitter-side noise parameters. rin_db and pn_dbc are negative dB
// quantities; the rest are SI.
struct TxNoiseConfig {
    double rin_db = -150.0;  // laser relative intensity noise, dB/Hz
    double v_pi = 2.0;       // modulator half-wave voltage, V
    double z_dr = 50.0;      // modulator electrode impedance, ohm
    double t_tx = 300.0;     // transmitter temperature, K
    double pn_dbc = -120.0;  // oscillator phase noise, dBc/Hz (sub-THz links)

    void validate() const;
};

// Current-noise PSD budget at the detector, A^2/Hz per component.
struct NoiseBreakdown {
    double shot = 0.0;
    double rin = 0.0;
    double eom_thermal = 0.0;
    double phase_noise = 0.0;
    double total = 0.0;
    NoiseSource limiting_source = NoiseSource::shot;

    static NoiseBreakdown from_components(double shot, double rin, double eom_thermal,
                                          double phase_noise);
};

// Detector shot noise 2*q*I_dc.
double shot_psd(double i_dc);

// Laser RIN contribution 10^(rin_db/10) * I_dc^2.
double rin_psd(double rin_db, double i_dc);

// Modulator-electrode thermal noise referred to the detector current:
// 4*k_B*T*Z_dr * (pi*I_dc/V_pi)^2.
double eom_thermal_psd(const TxNoiseConfig& cfg, double i_dc);

// Oscillator phase noise term (10^(pn_dbc/10) * I_dc)^2, exactly as it
// appears under the square root of the sub-THz SNR expression. Negligible at
// default parameters; its dimensional oddity is inherited from that form.
double phase_noise_psd(double pn_dbc, double i_dc);

// SNR (dB, 1 Hz reference) that keeps the receiver noise delivered to the
// qubit at or below the thermal floor of its stage: p_avg - floor(T).
double required_snr(double p_avg_qubit_dbm, double t_qubit);

// Achieved SNR 20*log10(i_sig / sqrt(total current PSD)), dB at 1 Hz.
// i_sig = 0 yields -inf; zero total noise yields +inf (sentinels, no throw).
double link_snr(double i_sig, const NoiseBreakdown& nb);

}  // namespace cryolink::noise

#endif
