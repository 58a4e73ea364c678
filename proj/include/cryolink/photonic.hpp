#ifndef CRYOLINK_PHOTONIC_HPP
#define CRYOLINK_PHOTONIC_HPP

#include "cryolink/constants.hpp"
#include "cryolink/noise.hpp"
#include "cryolink/units.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cryolink::photonic {

// Free parameters of a photonic control link with the receiver at a chosen
// cryostat stage. attenuation_below_rx_db is the total attenuation between
// the receiver stage and the qubit (0 when the receiver sits at the qubit
// stage). Loss defaults are exact factor-of-two "3 dB" values.
struct PhotonicLinkDesign {
    double responsivity = 0.1;                              // A/W, <= 1.25
    double epsilon_m = 1.0;                                 // modulation depth, (0, 1]
    double attenuation_below_rx_db = 0.0;                   // dB
    double coupling_loss_db = constants::three_db_exact;    // fiber-to-chip, dB
    double wdm_filter_loss_db = 0.0;                        // dB, 3 dB when WDM
    double wdm_filter_rejection_db = 60.0;                  // out-of-band rejection
    int wdm_n_qubit = 1;                                    // channels per fiber
    noise::TxNoiseConfig tx_noise{};
    double snr_margin_db = 0.0;                             // extra SNR headroom

    void validate() const;

    static PhotonicLinkDesign rx_30mk();
    static PhotonicLinkDesign rx_4k();
    static PhotonicLinkDesign rx_4k_wdm();
};

// Solved operating point. For infeasible targets feasible is false, the
// power/current fields are zero, and feasibility_boundary_peak_dbm carries
// the largest peak qubit power the design can serve.
struct LinkSolution {
    double p_opt = 0.0;           // average optical power at the detector, W
    double p_opt_sideband = 0.0;  // sideband share epsilon_m * p_opt, W
    double i_dc = 0.0;            // A
    double i_sig = 0.0;           // A
    double z_load = 0.0;          // ohm
    double p_uw_rx_stage = 0.0;   // microwave power at the receiver stage, W
    double p_active = 0.0;        // heat at the receiver stage per qubit, W
    noise::NoiseBreakdown noise_breakdown{};
    double snr_achieved = 0.0;    // dB
    double snr_required = 0.0;    // dB
    bool feasible = false;
    double feasibility_boundary_peak_dbm = 0.0;
};

// i_dc = R*p_opt, i_sig = R*eps*p_opt (linearized modulator).
std::pair<double, double> photocurrents(double p_opt, double eps, double responsivity);

// Microwave power required at a stage sitting `attenuation_db` above the
// qubit: dbm_to_watts(p_qubit_avg_dbm + attenuation_db).
double stage_microwave_power(double p_qubit_avg_dbm, double attenuation_db);

// Pass/fail check on the multiplexing filter: adjacent channels need at
// least 60 dB of out-of-band rejection to keep the SNR budget intact.
inline constexpr double required_filter_rejection_db = 60.0;
bool filter_rejection_sufficient(const PhotonicLinkDesign& design);

// Largest peak qubit power (dBm) the design can serve before the quadratic
// noise terms cap the attainable SNR.
double rin_feasibility_boundary_peak_dbm(
    const PhotonicLinkDesign& design, double t_qubit,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

// Smallest optical power meeting the SNR requirement, with the consistent
// load impedance and per-qubit heat. Closed form: the SNR constraint
// linearizes to I*(eps^2 - S^2*(a+b)) = 2*q*S^2 with S the linear SNR
// target, a the RIN coefficient and b the modulator thermal coefficient.
LinkSolution solve_min_popt(
    double p_qubit_peak_dbm, const PhotonicLinkDesign& design, double t_qubit,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

// Z_L(A) for each attenuation in the grid, from the zero-attenuation solve;
// scales as 10^(A/10).
std::vector<std::pair<double, double>> zl_vs_attenuation(
    double p_qubit_peak_dbm, std::span<const double> attenuation_grid_db,
    const PhotonicLinkDesign& design, double t_qubit,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

struct NoiseSweepPoint {
    double p_qubit_peak_dbm = 0.0;
    LinkSolution solution{};
};

struct NoiseSweep {
    std::vector<NoiseSweepPoint> points;
    // Peak qubit power at which shot and RIN contributions are equal, if the
    // crossover current is reachable by a feasible design.
    std::optional<double> shot_rin_crossover_peak_dbm;
};

NoiseSweep noise_breakdown_sweep(
    std::span<const double> p_qubit_peak_grid_dbm, const PhotonicLinkDesign& design,
    double t_qubit,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

// Per-qubit heat of a WDM channel at the same detector power as `base`:
// base heat divided by the extra filter efficiency.
double wdm_heat_per_qubit(const LinkSolution& base, const PhotonicLinkDesign& wdm_design);

}  // namespace cryolink::photonic

#endif
