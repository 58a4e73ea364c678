#ifndef CRYOLINK_SUBTHZ_HPP
#define CRYOLINK_SUBTHZ_HPP

#include "cryolink/photonic.hpp"

#include <span>
#include <vector>

namespace cryolink::subthz {

// Sub-THz (140-220 GHz) control link with a detector at the 4 K stage.
// Noise model: detector shot noise plus transmitter phase noise. No
// frequency multiplexing; one qubit per waveguide.
struct SubThzLinkDesign {
    double responsivity = 1.0;                              // A/W
    double pn_dbc = -120.0;                                 // dBc/Hz
    double coupler_loss_db = constants::three_db_exact;     // chip-to-waveguide
    double waveguide_loss_db = constants::three_db_exact;   // at 4 K
    double attenuation_below_rx_db = 30.0;                  // RX stage to qubit
    bool carrier_equals_sideband = true;
    double snr_margin_db = 0.0;

    void validate() const;
};

// Smallest detector-input power meeting the SNR requirement. Closed form:
// I*(1 - S^2*pn^2) = 2*q*S^2 with pn the linear phase-noise factor; I_dc =
// I_sig = R*P under the equal carrier/sideband assumption.
photonic::LinkSolution solve_min_psubthz(
    double p_qubit_peak_dbm, const SubThzLinkDesign& design, double t_qubit,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

// Detector current above which phase noise would dominate shot noise
// (2*q / pn^2). Far beyond any design point at default parameters.
double phase_noise_crossover_current(double pn_dbc);

struct HeatSweepPoint {
    double p_qubit_peak_dbm = 0.0;
    double subthz_active_w = 0.0;
    double photonic_4k_active_w = 0.0;
    double photonic_wdm_active_w = 0.0;
};

// Per-qubit 4 K heat of the sub-THz link alongside the photonic links, for
// side-by-side comparison.
std::vector<HeatSweepPoint> subthz_heat_sweep(
    std::span<const double> p_qubit_peak_grid_dbm, const SubThzLinkDesign& design,
    const photonic::PhotonicLinkDesign& photonic_4k,
    const photonic::PhotonicLinkDesign& photonic_wdm, double t_qubit,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

}  // namespace cryolink::subthz

#endif
