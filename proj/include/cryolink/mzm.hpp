#ifndef CRYOLINK_MZM_HPP
#define CRYOLINK_MZM_HPP

#include <string>
#include <vector>

namespace cryolink::mzm {

// Bessel function of the first kind J_n(x), |x| <= 10, absolute error
// <= 1e-12. Negative orders via the parity identity J_{-n} = (-1)^n J_n.
double bessel_j(int n, double x);

// One intermodulation tone of the two-tone expansion; the detected tone at
// n*f1 + m*f2 has coefficient J_n(eps)*J_m(eps) (signed).
struct Tone {
    int n = 0;
    int m = 0;
    double amplitude = 0.0;
    std::string label;
};

struct ToneSpectrum {
    double epsilon = 0.0;
    int max_order = 0;
    std::vector<Tone> entries;

    const Tone* find(int n, int m) const;
};

// Jacobi-Anger expansion of a quadrature-biased two-tone drive: all (n, m)
// with 1 <= |n|+|m| <= max_order. Quadrature bias retains odd-total-order
// terms only, so even totals are omitted.
ToneSpectrum two_tone_spectrum(double eps, int max_order);

struct DistortionReport {
    double epsilon_m = 0.0;
    double p_fund = 0.0;            // W
    double p_im3 = 0.0;             // W
    double p_im5 = 0.0;             // W
    double dynamic_range_db = 0.0;  // fundamental-to-IM3
    double popt_scale = 0.0;        // optical power penalty 1/eps^2
};

// Detected RF powers of the fundamental, IM3 and IM5 products:
// p_fund = (1/2) * (J1*J0*R*P)^2 * Z_L, IM3 and IM5 with the J2*J1 and
// J3*J2 coefficient pairs.
DistortionReport rf_powers(double eps, double responsivity, double p_opt, double z_load);

// Largest modulation depth whose fundamental-to-IM3 dynamic range still
// meets the target (dB). Valid targets: [20, 120] dB.
double solve_epsilon_for_dr(double target_dr_db);

// Optical power penalty for operating at reduced modulation depth: 1/eps^2.
double popt_scale_for_eps(double eps);

// Independent verification route for two_tone_spectrum: samples
// sin(eps*sin(2*pi*f1*t) + eps*sin(2*pi*f2*t)), runs a radix-2 FFT, and
// reads the tone amplitudes as |X[k]|/N. Frequencies must sit on FFT bins
// (no windowing) and n_samples must be a power of two. Computes no Bessel
// functions. Tones whose frequencies coincide share a bin.
ToneSpectrum waveform_fft_oracle(double eps, double f1_hz, double f2_hz, int n_samples,
                                 double sample_rate, int max_order = 7);

}  // namespace cryolink::mzm

#endif
