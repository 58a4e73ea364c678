#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cryolink/constants.hpp"
#include "cryolink/scaling.hpp"

#include <cmath>
#include <stdexcept>

using namespace cryolink;
using namespace cryolink::scaling;

TEST_CASE("figure of merit") {
    ScalingScenario wdm;
    wdm.label = "wdm";
    wdm.p_active_per_qubit = 400e-6;
    wdm.pitch = 250e-6;
    wdm.n_qubit_per_cable = 4;
    ScalingScenario sub;
    sub.label = "subthz";
    sub.p_active_per_qubit = 40e-6;
    sub.pitch = 2e-3;
    sub.n_qubit_per_cable = 1;

    CHECK(fom(wdm) == doctest::Approx(6.0e7).epsilon(1e-9));
    CHECK(fom(sub) == doctest::Approx(1.875e7).epsilon(1e-9));
    CHECK(fom(wdm) > fom(sub));

    auto doubled = wdm;
    doubled.n_qubit_per_cable = 8;
    CHECK(fom(doubled) == doctest::Approx(2.0 * fom(wdm)).epsilon(1e-12));

    // scaling heat and channel count together leaves the FOM unchanged
    auto both = wdm;
    both.p_active_per_qubit *= 3.0;
    both.n_qubit_per_cable *= 3;
    CHECK(fom(both) == doctest::Approx(fom(wdm)).epsilon(1e-12));

    ScalingScenario bad = wdm;
    bad.p_active_per_qubit = 0.0;
    CHECK_THROWS_AS(fom(bad), std::invalid_argument);
}

TEST_CASE("attainable qubit counts") {
    CHECK(max_qubits(1.5, 200e-6) == 7500);
    CHECK(max_qubits(1.5, 50e-6) == 30000);
    CHECK(max_qubits(1.5, 1.2e-3) == 1250);
    CHECK(max_qubits(1.0, 3e-1) == 3);
    CHECK_THROWS_AS(max_qubits(0.0, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(max_qubits(1.5, 0.0), std::invalid_argument);
}

TEST_CASE("qubit count bracket property") {
    for (double p : {37e-6, 200e-6, 1.2e-3, 7e-3}) {
        const long long n = max_qubits(1.5, p);
        CHECK(n * p <= 1.5 * (1.0 + 1e-9));
        CHECK((n + 1) * p > 1.5);
    }
}

TEST_CASE("shot-noise gate error") {
    const double err = gate_error(100e-6, 20e-9, 1550e-9);
    CHECK(err == doctest::Approx(1.5810834e-7).epsilon(1e-6));
    CHECK(err < 1e-5);  // > 99.999% fidelity

    CHECK(gate_error(200e-6, 20e-9, 1550e-9) == doctest::Approx(err / 2.0).epsilon(1e-12));

    // with one photon per gate the error is (pi/2)^2
    const double omega = 2.0 * constants::pi * constants::speed_of_light / 1550e-9;
    const double p_one_photon = constants::hbar * omega / 20e-9;
    CHECK(gate_error(p_one_photon, 20e-9, 1550e-9) ==
          doctest::Approx(std::pow(constants::pi / 2.0, 2)).epsilon(1e-12));

    // error * N_photons is exactly (pi/2)^2
    const double n_photons = 20e-9 * 100e-6 / (constants::hbar * omega);
    CHECK(err * n_photons == doctest::Approx(std::pow(constants::pi / 2.0, 2)).epsilon(1e-12));

    CHECK_THROWS_AS(gate_error(0.0, 20e-9, 1550e-9), std::invalid_argument);
}

TEST_CASE("projection table over the default scenarios") {
    const auto scenarios = default_scenarios();
    REQUIRE(scenarios.size() >= 6);
    const auto rows = projection_table(scenarios);
    REQUIRE(rows.size() == scenarios.size());

    auto find = [&](const std::string& label) -> const ProjectionRow& {
        for (const auto& r : rows)
            if (r.spec.label == label) return r;
        FAIL("missing scenario " << label);
        return rows.front();
    };

    const auto& wdm01 = find("photonic_wdm_r0p1");
    CHECK(wdm01.qubits >= 1000);
    CHECK(wdm01.qubits <= 10000);
    CHECK(wdm01.p_active_per_qubit == doctest::Approx(3.171259e-4).epsilon(1e-5));

    // responsivity 0.8 scales heat by 1/8 and the count by 8
    const auto& wdm08 = find("photonic_wdm_r0p8");
    CHECK(wdm08.p_active_per_qubit ==
          doctest::Approx(wdm01.p_active_per_qubit / 8.0).epsilon(1e-9));
    CHECK(wdm08.qubits >= 20000);
    CHECK(wdm08.qubits <= 60000);

    // 300 mK operation relaxes the floor by 10 dB: ~10x more qubits
    const auto& warm = find("photonic_wdm_r0p1_300mk");
    const double ratio = static_cast<double>(warm.qubits) / static_cast<double>(wdm01.qubits);
    CHECK(ratio > 9.5);
    CHECK(ratio < 10.5);

    // literal comparison rows pass straight through
    const auto& cmos = find("cryocmos_low");
    CHECK(cmos.p_active_per_qubit == doctest::Approx(2e-3).epsilon(1e-12));
    CHECK(cmos.qubits == 750);
    const auto& coax = find("coax_baseline");
    CHECK(coax.qubits == 1250);

    // WDM outscales the sub-THz link on the default pitches
    const auto& sub = find("subthz_r1");
    CHECK(wdm01.fom > sub.fom);
}

TEST_CASE("scenario parsing") {
    const auto parsed = parse_scenarios(R"(
[demo]
mode = literal
p_active_per_qubit_w = 1e-3
pitch_m = 1e-3
n_qubit_per_cable = 2
p_cooling_w = 2.0
)");
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].label == "demo");
    CHECK(parsed[0].mode == ScenarioMode::literal);
    CHECK(parsed[0].p_active_literal == doctest::Approx(1e-3));
    CHECK(parsed[0].n_qubit_per_cable == 2);

    CHECK_THROWS_AS(parse_scenarios("[x]\nmode = warp\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenarios("[x]\nbogus_key = 1\n"), std::runtime_error);

    // a literal scenario without a heat value cannot be projected
    const auto missing = parse_scenarios("[x]\nmode = literal\n");
    CHECK_THROWS_AS(projection_table(missing), std::invalid_argument);
}

TEST_CASE("scenario mode names round trip") {
    for (auto m : {ScenarioMode::literal, ScenarioMode::photonic, ScenarioMode::photonic_wdm,
                   ScenarioMode::subthz})
        CHECK(scenario_mode_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(scenario_mode_from_string("laser"), std::invalid_argument);
}
