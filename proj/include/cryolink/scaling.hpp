#ifndef CRYOLINK_SCALING_HPP
#define CRYOLINK_SCALING_HPP

#include "cryolink/photonic.hpp"
#include "cryolink/subthz.hpp"

#include <span>
#include <string>
#include <vector>

namespace cryolink::scaling {

// Inputs to the scalability figure of merit.
struct ScalingScenario {
    std::string label;
    double p_cooling = 1.5;             // W at the receiver stage
    double p_active_per_qubit = 0.0;    // W
    double pitch = 250e-6;              // cable pitch, m
    int n_qubit_per_cable = 1;
    double t_qubit = 0.030;             // K
    double responsivity = 0.1;          // A/W

    void validate() const;
};

// Cooling budget over heat-per-qubit times cable pitch per qubit:
// p_cooling / (p_active * pitch / n_qubit). Higher scales further.
double fom(const ScalingScenario& s);

// floor(p_cooling / p_active_per_qubit), with a 1e-9 guard so exact
// quotients are stable against floating-point rounding.
long long max_qubits(double p_cooling, double p_active_per_qubit);

// Shot-noise gate error of a pi pulse: (pi/2)^2 / N_photons with
// N_photons = gate_duration * p_opt / (hbar * omega_opt).
double gate_error(double p_opt, double gate_duration, double wavelength);

// How a scenario's heat per qubit is obtained.
enum class ScenarioMode { literal, photonic, photonic_wdm, subthz };

std::string to_string(ScenarioMode mode);
ScenarioMode scenario_mode_from_string(const std::string& name);

struct ScenarioSpec {
    std::string label;
    ScenarioMode mode = ScenarioMode::literal;
    double peak_dbm = -70.0;
    double responsivity = 0.1;        // A/W (photonic modes) or detector (subthz)
    double t_qubit = 0.030;           // K
    double p_active_literal = 0.0;    // W, literal mode only
    double pitch = 250e-6;            // m
    int n_qubit_per_cable = 1;
    double p_cooling = 1.5;           // W
};

struct ProjectionRow {
    ScenarioSpec spec;
    double p_active_per_qubit = 0.0;  // W
    long long qubits = 0;
    double fom = 0.0;
};

// Evaluates each scenario: literal rows pass their configured heat through;
// link rows solve the corresponding design at the scenario's responsivity
// and qubit temperature.
std::vector<ProjectionRow> projection_table(
    std::span<const ScenarioSpec> scenarios,
    const units::PulseProfile& profile = units::PulseProfile::gaussian_default());

// Scenario file parsing (one [section] per scenario) and built-in defaults.
std::vector<ScenarioSpec> parse_scenarios(const std::string& text);
std::vector<ScenarioSpec> load_scenarios_file(const std::string& path);
const std::string& default_scenarios_text();
std::vector<ScenarioSpec> default_scenarios();

}  // namespace cryolink::scaling

#endif
