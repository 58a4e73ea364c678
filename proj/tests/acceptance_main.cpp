// Acceptance suite: one line per criterion, details for every sub-check.
// Returns nonzero if any criterion fails.

#include "cryolink/materials.hpp"
#include "cryolink/mzm.hpp"
#include "cryolink/photonic.hpp"
#include "cryolink/presets.hpp"
#include "cryolink/scaling.hpp"
#include "cryolink/subthz.hpp"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cryolink;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool passed = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        passed = passed && ok;
        details.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
    }
};

std::vector<Criterion> criteria;

Criterion& criterion(int id, const std::string& name) {
    criteria.push_back({id, name});
    return criteria.back();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }
bool near_rel(double v, double target, double rel) {
    return std::abs(v - target) <= rel * std::abs(target);
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
    static int counter = 0;
    const std::string path = "/tmp/cryolink_accept_" + std::to_string(::getpid()) + "_" +
                             std::to_string(counter++) + ".csv";
    const std::string cmd = std::string(CRYOLINK_CLI_PATH) + " " + args + " --out " + path +
                            " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    std::remove(path.c_str());
    return ss.str();
}

void criterion_1_noise_floor() {
    auto& c = criterion(1, "thermal noise floor and required SNR");
    const double floor30 = units::thermal_noise_floor(0.030);
    c.check(std::abs(floor30 - (-213.8)) <= 0.5,
            "thermal_noise_floor(30 mK) = " + fmt(floor30) + " dBm/Hz, within -213.8 +/- 0.5");
    const double req = noise::required_snr(-80.0, 0.030);
    c.check(std::abs(req - 133.8) <= 0.5,
            "required_snr(-80 dBm, 30 mK) = " + fmt(req) + " dB, within 133.8 +/- 0.5");
    c.check(std::abs(req - 134.0) <= 0.5, "matches the 134 dB/Hz reference within 0.5 dB");
}

void criterion_2_heat_anchors() {
    auto& c = criterion(2, "per-stage heat loads of the reference cables");
    const auto lib = materials::MaterialLibrary::defaults();

    const double fib4 = materials::passive_heat_load(lib, materials::smf_fiber(), 4.0, 50.0);
    const double fib50 = materials::passive_heat_load(lib, materials::smf_fiber(), 50.0, 300.0);
    c.check(within(fib4, 0.5e-6, 1.5e-6), "fiber at 4 K: " + fmt(fib4) + " W in 1 uW +/- 50%");
    c.check(within(fib50, 3e-6, 9e-6), "fiber at 50 K: " + fmt(fib50) + " W in 6 uW +/- 50%");

    const double wg4 = materials::passive_heat_load(lib, materials::teflon_waveguide(), 4.0, 50.0);
    const double wg50 =
        materials::passive_heat_load(lib, materials::teflon_waveguide(), 50.0, 300.0);
    c.check(within(wg4, 4.5e-6, 13.5e-6),
            "teflon waveguide at 4 K: " + fmt(wg4) + " W in 9 uW +/- 50%");
    c.check(within(wg50, 25e-6, 75e-6),
            "teflon waveguide at 50 K: " + fmt(wg50) + " W in 50 uW +/- 50%");

    const double coax4 = materials::passive_heat_load(lib, materials::ut085_coax(), 4.0, 50.0);
    c.check(within(coax4, 0.6e-3, 1.8e-3),
            "stainless coax at 4 K: " + fmt(coax4) + " W in 1.2 mW +/- 50%");

    materials::MaterialLibrary synth;
    synth.add(materials::MaterialModel("const", {{0.5, 400.0, {std::log10(2.5)}}}));
    materials::CableGeometry g;
    g.label = "slab";
    g.area_dielectric = 3e-6;
    g.dielectric_material = "const";
    g.length = 0.5;
    const double load = materials::passive_heat_load(synth, g, 4.0, 50.0);
    const double analytic = 2.5 * 3e-6 * 46.0 / 0.5;
    c.check(near_rel(load, analytic, 1e-6),
            "constant-conductivity load matches the analytic value to 1e-6");
}

void criterion_3_photonic_30mk() {
    auto& c = criterion(3, "photonic design point with the receiver at 30 mK");
    const auto sol = photonic::solve_min_popt(-70.0, photonic::PhotonicLinkDesign::rx_30mk(), 0.030);
    c.check(sol.feasible, "design point is feasible");
    c.check(near_rel(sol.z_load, 0.2, 0.05), "Z_L = " + fmt(sol.z_load) + " ohm vs 0.2 +/- 5%");
    c.check(near_rel(sol.p_active, 2.0 * sol.p_opt_sideband, 1e-12),
            "P_active = " + fmt(sol.p_active) + " W, exactly 2x the sideband optical power");
    c.check(within(sol.p_opt_sideband, 80e-6, 135e-6),
            "P_opt,sideband = " + fmt(sol.p_opt_sideband) + " W in [80 uW, 135 uW]");
}

void criterion_4_photonic_4k() {
    auto& c = criterion(4, "photonic design point with the receiver at 4 K");
    const auto sol30 = photonic::solve_min_popt(-70.0, photonic::PhotonicLinkDesign::rx_30mk(), 0.030);
    const auto sol4k = photonic::solve_min_popt(-70.0, photonic::PhotonicLinkDesign::rx_4k(), 0.030);
    c.check(near_rel(sol4k.z_load, 200.0, 0.05),
            "Z_L = " + fmt(sol4k.z_load) + " ohm vs 200 +/- 5%");
    c.check(near_rel(sol4k.p_opt, sol30.p_opt, 1e-9),
            "P_opt matches the 30 mK solve to 1e-9 relative");
    c.check(near_rel(sol4k.z_load / sol30.z_load, 1000.0, 1e-12),
            "Z_L(30 dB) / Z_L(0 dB) = " + fmt(sol4k.z_load / sol30.z_load) + ", exactly 1000");
}

void criterion_5_rin_boundary() {
    auto& c = criterion(5, "RIN feasibility boundary");
    const auto design = photonic::PhotonicLinkDesign::rx_30mk();
    const double wall = photonic::rin_feasibility_boundary_peak_dbm(design, 0.030);
    c.check(within(wall, -57.0, -53.0),
            "feasibility wall at peak " + fmt(wall) + " dBm, within -55 +/- 2");

    const auto sweep =
        photonic::noise_breakdown_sweep(std::vector<double>{-70.0}, design, 0.030);
    const double cross = *sweep.shot_rin_crossover_peak_dbm;
    c.check(within(cross, -57.0, -53.0),
            "shot/RIN crossover at peak " + fmt(cross) + " dBm, within -55 +/- 2");

    const auto below = photonic::solve_min_popt(cross - 1.0, design, 0.030);
    c.check(below.feasible &&
                below.noise_breakdown.limiting_source == noise::NoiseSource::shot,
            "shot-limited below the crossover");
    const auto above = photonic::solve_min_popt(wall + 0.2, design, 0.030);
    c.check(!above.feasible &&
                above.noise_breakdown.limiting_source == noise::NoiseSource::rin,
            "infeasible and RIN-limited above the wall");
}

void criterion_6_wdm_heat() {
    auto& c = criterion(6, "WDM filtering doubles the per-qubit heat");
    const auto base = photonic::solve_min_popt(-70.0, photonic::PhotonicLinkDesign::rx_4k(), 0.030);
    const auto wdm =
        photonic::solve_min_popt(-70.0, photonic::PhotonicLinkDesign::rx_4k_wdm(), 0.030);
    const double ratio = wdm.p_active / base.p_active;
    c.check(near_rel(ratio, 2.0, 1e-12),
            "P_active(WDM)/P_active(non-WDM) = " + fmt(ratio) + ", exactly 2");
    // the 400 uW reference point inherits the +/-35% optical-power tolerance
    c.check(near_rel(wdm.p_active, 400e-6, 0.35),
            "WDM P_active = " + fmt(wdm.p_active) + " W vs 400 uW +/- 35%");
}

void criterion_7_nonlinearity() {
    auto& c = criterion(7, "modulator nonlinearity analysis");

    std::mt19937 rng(20260808);
    std::uniform_real_distribution<double> es(0.01, 1.0);
    bool oracle_ok = true;
    int compared = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const double eps = es(rng);
        const auto measured = mzm::waveform_fft_oracle(eps, 64.0, 65.0, 4096, 4096.0);
        const auto expected = mzm::two_tone_spectrum(eps, 7);
        for (const auto& tone : measured.entries) {
            const auto* th = expected.find(tone.n, tone.m);
            if (!th) { oracle_ok = false; continue; }
            const double want = std::abs(th->amplitude);
            if (want >= 1e-9) {
                oracle_ok = oracle_ok && std::abs(tone.amplitude - want) <= 1e-6 * want;
                ++compared;
            }
        }
    }
    c.check(oracle_ok && compared > 100,
            "Bessel spectrum matches the FFT route to 1e-6 relative at 20 random depths");

    bool decreasing = true;
    double prev = 1e300;
    for (double eps = 0.02; eps <= 1.0; eps += 0.02) {
        const double dr = mzm::rf_powers(eps, 0.1, 100e-6, 200.0).dynamic_range_db;
        decreasing = decreasing && dr < prev;
        prev = dr;
    }
    c.check(decreasing, "dynamic range strictly decreases with modulation depth");

    c.check(near_rel(mzm::popt_scale_for_eps(0.5), 4.0, 1e-12),
            "optical power penalty at eps 0.5 is exactly 4x");

    const double e60 = mzm::solve_epsilon_for_dr(60.0);
    c.check(within(e60, 0.085, 0.095),
            "60 dB dynamic range reached at eps = " + fmt(e60) + ", in [0.085, 0.095]");
    const double dr015 = mzm::rf_powers(0.15, 0.1, 100e-6, 200.0).dynamic_range_db;
    c.check(dr015 < 60.0, "flagged discrepancy: the 0.15 reference depth reaches only " +
                              fmt(dr015) + " dB, short of 60 dB");
}

void criterion_8_subthz() {
    auto& c = criterion(8, "sub-THz design point at 4 K");
    const auto sol = subthz::solve_min_psubthz(-70.0, subthz::SubThzLinkDesign{}, 0.030);
    c.check(sol.feasible, "design point is feasible");
    c.check(within(sol.p_opt, 8e-6, 13.5e-6),
            "detector power = " + fmt(sol.p_opt) + " W in [8 uW, 13.5 uW]");
    c.check(near_rel(sol.z_load, 200.0, 0.05),
            "Z_L = " + fmt(sol.z_load) + " ohm vs 200 +/- 5%");
    c.check(near_rel(sol.p_active, 4.0 * sol.p_opt, 1e-12),
            "P_active = " + fmt(sol.p_active) + " W, exactly 4x the detector power");
    c.check(near_rel(sol.p_active, 40e-6, 0.35),
            "P_active vs the 40 uW reference within +/- 35%");
}

void criterion_9_orderings() {
    auto& c = criterion(9, "heat-load and figure-of-merit orderings");
    const auto row = subthz::subthz_heat_sweep(
        std::vector<double>{-70.0}, subthz::SubThzLinkDesign{},
        photonic::PhotonicLinkDesign::rx_4k(), photonic::PhotonicLinkDesign::rx_4k_wdm(),
        0.030)[0];
    c.check(row.subthz_active_w < row.photonic_4k_active_w &&
                row.photonic_4k_active_w < row.photonic_wdm_active_w,
            "at peak -70 dBm: sub-THz " + fmt(row.subthz_active_w) + " < photonic 4 K " +
                fmt(row.photonic_4k_active_w) + " < WDM " + fmt(row.photonic_wdm_active_w));

    bool fom_ordered = true;
    for (double peak = -90.0; peak <= -60.0; peak += 1.0) {
        const auto wdm =
            photonic::solve_min_popt(peak, photonic::PhotonicLinkDesign::rx_4k_wdm(), 0.030);
        const auto ph = photonic::solve_min_popt(peak, photonic::PhotonicLinkDesign::rx_4k(), 0.030);
        const auto sub = subthz::solve_min_psubthz(peak, subthz::SubThzLinkDesign{}, 0.030);
        auto fom_of = [&](double active, double pitch, int n) {
            scaling::ScalingScenario s;
            s.label = "grid";
            s.p_active_per_qubit = active;
            s.pitch = pitch;
            s.n_qubit_per_cable = n;
            return scaling::fom(s);
        };
        const double f_wdm = fom_of(wdm.p_active, 250e-6, 4);
        const double f_ph = fom_of(ph.p_active, 250e-6, 1);
        const double f_sub = fom_of(sub.p_active, 2e-3, 1);
        fom_ordered = fom_ordered && f_wdm > f_sub && f_wdm > f_ph;
    }
    c.check(fom_ordered, "WDM FOM leads sub-THz and single-channel FOM across -90..-60 dBm");
}

void criterion_10_projections() {
    auto& c = criterion(10, "scalability projections and gate error");
    c.check(scaling::max_qubits(1.5, 200e-6) == 7500, "max_qubits(1.5 W, 200 uW) = 7500");
    c.check(scaling::max_qubits(1.5, 50e-6) == 30000, "max_qubits(1.5 W, 50 uW) = 30000");
    const double err = scaling::gate_error(100e-6, 20e-9, 1550e-9);
    c.check(err <= 1e-5, "gate_error(100 uW, 20 ns, 1550 nm) = " + fmt(err) + " <= 1e-5");
}

void criterion_11_cli_determinism() {
    auto& c = criterion(11, "CLI determinism and runtime");
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::string> presets = {
        "photonic --preset fig4", "photonic --preset fig6", "photonic --preset fig7",
        "nonlinearity --preset fig9", "subthz --preset fig10", "fom --preset fig11",
        "project --preset fig12", "passive-heat"};
    for (const auto& p : presets) {
        int code1 = -1, code2 = -1;
        const std::string a = run_cli_capture(p, code1);
        const std::string b = run_cli_capture(p, code2);
        c.check(code1 == 0 && code2 == 0 && !a.empty() && a == b,
                "byte-identical output: " + p);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.check(seconds < 60.0, "full preset suite (run twice) in " + fmt(seconds) + " s < 60 s");
}

}  // namespace

int main() {
    criterion_1_noise_floor();
    criterion_2_heat_anchors();
    criterion_3_photonic_30mk();
    criterion_4_photonic_4k();
    criterion_5_rin_boundary();
    criterion_6_wdm_heat();
    criterion_7_nonlinearity();
    criterion_8_subthz();
    criterion_9_orderings();
    criterion_10_projections();
    criterion_11_cli_determinism();

    int failed = 0;
    for (const auto& c : criteria) {
        std::cout << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << "\n";
        for (const auto& d : c.details) std::cout << d << "\n";
        if (!c.passed) ++failed;
    }
    std::cout << "\n" << (criteria.size() - failed) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
