#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cryolink/photonic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace cryolink;
using namespace cryolink::photonic;

namespace {

// Independent route: bisection on the SNR defined straight from the noise
// PSDs, no closed form involved.
double bisect_min_popt(double peak_dbm, const PhotonicLinkDesign& d, double t_qubit) {
    const double p_avg = units::peak_to_average(peak_dbm);
    const double target = noise::required_snr(p_avg, t_qubit);
    auto snr_at = [&](double p_opt) {
        const auto [i_dc, i_sig] = photocurrents(p_opt, d.epsilon_m, d.responsivity);
        const auto nb = noise::NoiseBreakdown::from_components(
            noise::shot_psd(i_dc), noise::rin_psd(d.tx_noise.rin_db, i_dc),
            noise::eom_thermal_psd(d.tx_noise, i_dc), 0.0);
        return noise::link_snr(i_sig, nb);
    };
    double lo = 1e-12, hi = 10.0;
    REQUIRE(snr_at(hi) >= target);
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        if (snr_at(mid) >= target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

TEST_CASE("photocurrents") {
    auto [idc, isig] = photocurrents(100e-6, 1.0, 0.1);
    CHECK(idc == doctest::Approx(10e-6).epsilon(1e-12));
    CHECK(isig == doctest::Approx(10e-6).epsilon(1e-12));

    auto [idc0, isig0] = photocurrents(5e-3, 0.0, 0.4);
    CHECK(idc0 == doctest::Approx(2e-3).epsilon(1e-12));
    CHECK(isig0 == 0.0);

    auto [idc2, isig2] = photocurrents(200e-6, 0.5, 0.1);
    CHECK(idc2 == doctest::Approx(20e-6).epsilon(1e-12));
    CHECK(isig2 == doctest::Approx(10e-6).epsilon(1e-12));
}

TEST_CASE("stage microwave power") {
    CHECK(stage_microwave_power(-80.0, 30.0) == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(stage_microwave_power(-80.0, 0.0) == doctest::Approx(1e-11).epsilon(1e-12));
    CHECK(stage_microwave_power(-90.0, 15.0) ==
          doctest::Approx(std::pow(10.0, -75.0 / 10.0) * 1e-3).epsilon(1e-12));
    CHECK_THROWS_AS(stage_microwave_power(-80.0, -1.0), std::invalid_argument);
}

TEST_CASE("solved design point at peak -70 dBm, receiver at the qubit stage") {
    const auto d = PhotonicLinkDesign::rx_30mk();
    const auto sol = solve_min_popt(-70.0, d, 0.030);
    REQUIRE(sol.feasible);

    // frozen from the independent closed-form evaluation
    CHECK(sol.p_opt == doctest::Approx(7.9281478e-5).epsilon(1e-7));
    CHECK(sol.p_opt_sideband == doctest::Approx(sol.p_opt).epsilon(1e-12));
    CHECK(sol.i_dc == doctest::Approx(7.9281478e-6).epsilon(1e-7));
    CHECK(sol.z_load == doctest::Approx(0.318189996).epsilon(1e-7));
    CHECK(sol.p_uw_rx_stage == doctest::Approx(1e-11).epsilon(1e-12));
    // heat doubles through the exact 3 dB coupling
    CHECK(sol.p_active == doctest::Approx(2.0 * sol.p_opt).epsilon(1e-12));
    CHECK(sol.noise_breakdown.limiting_source == noise::NoiseSource::shot);

    // cross-check against the bisection route
    CHECK(sol.p_opt == doctest::Approx(bisect_min_popt(-70.0, d, 0.030)).epsilon(1e-6));
}

TEST_CASE("solved minimum is tight") {
    const auto d = PhotonicLinkDesign::rx_30mk();
    const auto sol = solve_min_popt(-70.0, d, 0.030);
    auto snr_at = [&](double p_opt) {
        const auto [i_dc, i_sig] = photocurrents(p_opt, d.epsilon_m, d.responsivity);
        const auto nb = noise::NoiseBreakdown::from_components(
            noise::shot_psd(i_dc), noise::rin_psd(d.tx_noise.rin_db, i_dc),
            noise::eom_thermal_psd(d.tx_noise, i_dc), 0.0);
        return noise::link_snr(i_sig, nb);
    };
    CHECK(snr_at(0.99 * sol.p_opt) < sol.snr_required);
    CHECK(snr_at(1.01 * sol.p_opt) >= sol.snr_required);
    CHECK(sol.snr_achieved == doctest::Approx(sol.snr_required).epsilon(1e-9));
}

TEST_CASE("solved optical power scales as 1/R") {
    auto d = PhotonicLinkDesign::rx_30mk();
    d.responsivity = 0.1;
    const double p_base = solve_min_popt(-70.0, d, 0.030).p_opt;
    for (double r : {0.05, 0.1, 0.8}) {
        d.responsivity = r;
        CHECK(solve_min_popt(-70.0, d, 0.030).p_opt ==
              doctest::Approx(p_base * 0.1 / r).epsilon(1e-12));
    }
}

TEST_CASE("power conservation identity z*i^2 = 2*p at every solution") {
    for (double peak : {-90.0, -75.0, -60.0, -56.0}) {
        for (double att : {0.0, 30.0}) {
            auto d = PhotonicLinkDesign::rx_30mk();
            d.attenuation_below_rx_db = att;
            const auto sol = solve_min_popt(peak, d, 0.030);
            REQUIRE(sol.feasible);
            CHECK(sol.z_load * sol.i_sig * sol.i_sig ==
                  doctest::Approx(2.0 * sol.p_uw_rx_stage).epsilon(1e-12));
        }
    }
}

TEST_CASE("attenuation leaves the solved optical power unchanged") {
    const auto sol_qubit = solve_min_popt(-70.0, PhotonicLinkDesign::rx_30mk(), 0.030);
    const auto sol_4k = solve_min_popt(-70.0, PhotonicLinkDesign::rx_4k(), 0.030);
    CHECK(sol_4k.p_opt == doctest::Approx(sol_qubit.p_opt).epsilon(1e-9));
    // the load impedance scales by exactly 10^(30/10)
    CHECK(sol_4k.z_load / sol_qubit.z_load == doctest::Approx(1000.0).epsilon(1e-12));
    CHECK(sol_4k.p_uw_rx_stage == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(sol_4k.z_load == doctest::Approx(318.189996).epsilon(1e-7));
}

TEST_CASE("RIN feasibility boundary") {
    const auto d = PhotonicLinkDesign::rx_30mk();
    const double boundary = rin_feasibility_boundary_peak_dbm(d, 0.030);
    // frozen: 20*log10(1/sqrt(a+b)) + floor + peak/avg offset
    CHECK(boundary == doctest::Approx(-53.8368224).epsilon(1e-7));

    const auto below = solve_min_popt(boundary - 0.05, d, 0.030);
    CHECK(below.feasible);
    const auto above = solve_min_popt(boundary + 0.05, d, 0.030);
    CHECK_FALSE(above.feasible);
    CHECK(above.noise_breakdown.limiting_source == noise::NoiseSource::rin);
    CHECK(above.feasibility_boundary_peak_dbm == doctest::Approx(boundary).epsilon(1e-12));

    // requirement explodes near the wall: tens of mW one dB inside it
    const auto near = solve_min_popt(-54.0, d, 0.030);
    CHECK(near.feasible);
    CHECK(near.p_opt > 10e-3);
}

TEST_CASE("load impedance vs attenuation") {
    const auto d = PhotonicLinkDesign::rx_30mk();
    const std::vector<double> grid = {0.0, 10.0, 15.0, 30.0, 35.0};
    const auto rows = zl_vs_attenuation(-70.0, grid, d, 0.030);
    REQUIRE(rows.size() == grid.size());

    const double z0 = rows[0].second;
    CHECK(z0 == doctest::Approx(0.318189996).epsilon(1e-7));
    CHECK(rows[3].second / z0 == doctest::Approx(1000.0).epsilon(1e-12));
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].second > rows[i - 1].second);

    // the (peak power) x (15..35 dB) grid covers the easily matched 20-200 ohm band
    double zmin = 1e300, zmax = 0.0;
    for (double peak : {-90.0, -80.0, -70.0, -60.0}) {
        for (double a : {15.0, 20.0, 25.0, 30.0, 35.0}) {
            const double z = zl_vs_attenuation(peak, std::vector<double>{a}, d, 0.030)[0].second;
            zmin = std::min(zmin, z);
            zmax = std::max(zmax, z);
        }
    }
    CHECK(zmin < 20.0);
    CHECK(zmax > 200.0);

    CHECK_THROWS_AS(zl_vs_attenuation(-70.0, std::vector<double>{}, d, 0.030),
                    std::invalid_argument);
}

TEST_CASE("noise breakdown sweep and crossover") {
    const auto d = PhotonicLinkDesign::rx_30mk();
    const std::vector<double> grid = {-90.0, -80.0, -70.0, -60.0, -55.0};
    const auto sweep = noise_breakdown_sweep(grid, d, 0.030);
    REQUIRE(sweep.points.size() == grid.size());

    // shot >> RIN >> modulator thermal at peak -70 dBm
    const auto& nb70 = sweep.points[2].solution.noise_breakdown;
    CHECK(nb70.shot > 10.0 * nb70.rin);
    CHECK(nb70.rin > 100.0 * nb70.eom_thermal);
    CHECK(nb70.limiting_source == noise::NoiseSource::shot);

    // RIN-limited but still feasible just below the wall
    const auto& nb55 = sweep.points[4].solution.noise_breakdown;
    CHECK(sweep.points[4].solution.feasible);
    CHECK(nb55.limiting_source == noise::NoiseSource::rin);

    REQUIRE(sweep.shot_rin_crossover_peak_dbm.has_value());
    CHECK(*sweep.shot_rin_crossover_peak_dbm == doctest::Approx(-56.8426907).epsilon(1e-7));

    // the solution at the crossover peak has shot = RIN
    const auto at_cross = solve_min_popt(*sweep.shot_rin_crossover_peak_dbm, d, 0.030);
    CHECK(at_cross.noise_breakdown.shot ==
          doctest::Approx(at_cross.noise_breakdown.rin).epsilon(1e-9));
}

TEST_CASE("WDM heat per qubit") {
    const auto base = solve_min_popt(-70.0, PhotonicLinkDesign::rx_4k(), 0.030);
    REQUIRE(base.feasible);

    const auto wdm = PhotonicLinkDesign::rx_4k_wdm();
    CHECK(wdm_heat_per_qubit(base, wdm) == doctest::Approx(2.0 * base.p_active).epsilon(1e-12));

    auto no_filter = wdm;
    no_filter.wdm_filter_loss_db = 0.0;
    CHECK(wdm_heat_per_qubit(base, no_filter) == doctest::Approx(base.p_active).epsilon(1e-12));

    auto four_x = wdm;
    four_x.wdm_filter_loss_db = 10.0 * std::log10(4.0);
    CHECK(wdm_heat_per_qubit(base, four_x) == doctest::Approx(4.0 * base.p_active).epsilon(1e-12));

    auto literal_6db = wdm;
    literal_6db.wdm_filter_loss_db = 6.0;
    CHECK(wdm_heat_per_qubit(base, literal_6db) ==
          doctest::Approx(std::pow(10.0, 0.6) * base.p_active).epsilon(1e-12));

    LinkSolution infeasible;
    CHECK_THROWS_AS(wdm_heat_per_qubit(infeasible, wdm), std::invalid_argument);
}

TEST_CASE("solving with the WDM design directly matches the doubled base heat") {
    const auto base = solve_min_popt(-70.0, PhotonicLinkDesign::rx_4k(), 0.030);
    const auto wdm = solve_min_popt(-70.0, PhotonicLinkDesign::rx_4k_wdm(), 0.030);
    CHECK(wdm.p_opt == doctest::Approx(base.p_opt).epsilon(1e-12));
    CHECK(wdm.p_active == doctest::Approx(2.0 * base.p_active).epsilon(1e-12));
    CHECK(wdm.p_active == doctest::Approx(4.0 * wdm.p_opt_sideband).epsilon(1e-12));
}

TEST_CASE("reduced modulation depth raises the optical power as 1/eps^2 when shot-limited") {
    // deep in the shot-limited regime the quadratic noise terms are negligible
    auto d = PhotonicLinkDesign::rx_30mk();
    const double p1 = solve_min_popt(-110.0, d, 0.030).p_opt;
    d.epsilon_m = 0.1;
    const double p01 = solve_min_popt(-110.0, d, 0.030).p_opt;
    CHECK(p01 / p1 == doctest::Approx(100.0).epsilon(0.01));
}

TEST_CASE("filter rejection pass/fail check") {
    auto d = PhotonicLinkDesign::rx_4k_wdm();
    CHECK(filter_rejection_sufficient(d));  // default 60 dB
    d.wdm_filter_rejection_db = 45.0;
    CHECK_FALSE(filter_rejection_sufficient(d));
    d.wdm_filter_rejection_db = -1.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("design validation") {
    PhotonicLinkDesign d;
    d.responsivity = 1.5;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    d = PhotonicLinkDesign{};
    d.epsilon_m = 0.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    d = PhotonicLinkDesign{};
    d.coupling_loss_db = -1.0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
    d = PhotonicLinkDesign{};
    d.wdm_n_qubit = 0;
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}
