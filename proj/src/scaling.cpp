#include "cryolink/scaling.hpp"

#include "cryolink/config.hpp"
#include "cryolink/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cryolink::scaling {

void ScalingScenario::validate() const {
    if (!(p_cooling > 0.0)) throw std::invalid_argument("p_cooling must be positive");
    if (!(p_active_per_qubit > 0.0))
        throw std::invalid_argument("p_active_per_qubit must be positive");
    if (!(pitch > 0.0)) throw std::invalid_argument("pitch must be positive");
    if (n_qubit_per_cable < 1) throw std::invalid_argument("n_qubit_per_cable must be >= 1");
    if (!(t_qubit > 0.0)) throw std::invalid_argument("t_qubit must be positive");
    if (!(responsivity > 0.0)) throw std::invalid_argument("responsivity must be positive");
}

double fom(const ScalingScenario& s) {
    s.validate();
    const double denom = s.p_active_per_qubit * s.pitch / s.n_qubit_per_cable;
    if (!(denom > 0.0)) throw std::domain_error("fom denominator must be positive");
    return s.p_cooling / denom;
}

long long max_qubits(double p_cooling, double p_active_per_qubit) {
    if (!(p_cooling > 0.0) || !(p_active_per_qubit > 0.0))
        throw std::invalid_argument("cooling budget and per-qubit heat must be positive");
    return static_cast<long long>(std::floor(p_cooling / p_active_per_qubit + 1e-9));
}

double gate_error(double p_opt, double gate_duration, double wavelength) {
    if (!(p_opt > 0.0) || !(gate_duration > 0.0) || !(wavelength > 0.0))
        throw std::invalid_argument("gate_error inputs must be positive");
    const double omega_opt = 2.0 * constants::pi * constants::speed_of_light / wavelength;
    const double n_photons = gate_duration * p_opt / (constants::hbar * omega_opt);
    const double half_pi = constants::pi / 2.0;
    return half_pi * half_pi / n_photons;
}

std::string to_string(ScenarioMode mode) {
    switch (mode) {
        case ScenarioMode::literal: return "literal";
        case ScenarioMode::photonic: return "photonic";
        case ScenarioMode::photonic_wdm: return "photonic_wdm";
        case ScenarioMode::subthz: return "subthz";
    }
    return "unknown";
}

ScenarioMode scenario_mode_from_string(const std::string& name) {
    if (name == "literal") return ScenarioMode::literal;
    if (name == "photonic") return ScenarioMode::photonic;
    if (name == "photonic_wdm") return ScenarioMode::photonic_wdm;
    if (name == "subthz") return ScenarioMode::subthz;
    throw std::invalid_argument("unknown scenario mode: " + name);
}

namespace {

double scenario_heat(const ScenarioSpec& s, const units::PulseProfile& profile) {
    switch (s.mode) {
        case ScenarioMode::literal:
            if (!(s.p_active_literal > 0.0))
                throw std::invalid_argument("scenario " + s.label +
                                            ": literal mode needs p_active_per_qubit_w");
            return s.p_active_literal;
        case ScenarioMode::photonic: {
            auto d = photonic::PhotonicLinkDesign::rx_4k();
            d.responsivity = s.responsivity;
            const auto sol = photonic::solve_min_popt(s.peak_dbm, d, s.t_qubit, profile);
            if (!sol.feasible)
                throw std::domain_error("scenario " + s.label + ": design infeasible");
            return sol.p_active;
        }
        case ScenarioMode::photonic_wdm: {
            auto d = photonic::PhotonicLinkDesign::rx_4k_wdm();
            d.responsivity = s.responsivity;
            const auto sol = photonic::solve_min_popt(s.peak_dbm, d, s.t_qubit, profile);
            if (!sol.feasible)
                throw std::domain_error("scenario " + s.label + ": design infeasible");
            return sol.p_active;
        }
        case ScenarioMode::subthz: {
            subthz::SubThzLinkDesign d;
            d.responsivity = s.responsivity;
            const auto sol = subthz::solve_min_psubthz(s.peak_dbm, d, s.t_qubit, profile);
            if (!sol.feasible)
                throw std::domain_error("scenario " + s.label + ": design infeasible");
            return sol.p_active;
        }
    }
    throw std::logic_error("unreachable scenario mode");
}

}  // namespace

std::vector<ProjectionRow> projection_table(std::span<const ScenarioSpec> scenarios,
                                            const units::PulseProfile& profile) {
    std::vector<ProjectionRow> rows;
    rows.reserve(scenarios.size());
    for (const auto& spec : scenarios) {
        ProjectionRow row;
        row.spec = spec;
        row.p_active_per_qubit = scenario_heat(spec, profile);
        row.qubits = max_qubits(spec.p_cooling, row.p_active_per_qubit);
        ScalingScenario s;
        s.label = spec.label;
        s.p_cooling = spec.p_cooling;
        s.p_active_per_qubit = row.p_active_per_qubit;
        s.pitch = spec.pitch;
        s.n_qubit_per_cable = spec.n_qubit_per_cable;
        s.t_qubit = spec.t_qubit;
        s.responsivity = spec.responsivity;
        row.fom = fom(s);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ScenarioSpec> parse_scenarios(const std::string& text) {
    const auto cfg = config::KeyValueConfig::parse(text);
    std::vector<ScenarioSpec> out;
    for (const auto& name : cfg.section_order()) {
        if (name.empty()) continue;
        ScenarioSpec s;
        s.label = name;
        for (const auto& e : cfg.section(name)) {
            const std::string ctx = "scenario " + name + "." + e.key;
            if (e.key == "mode") s.mode = scenario_mode_from_string(e.value);
            else if (e.key == "peak_dbm") s.peak_dbm = config::to_double(e.value, ctx);
            else if (e.key == "responsivity_a_per_w") s.responsivity = config::to_double(e.value, ctx);
            else if (e.key == "t_qubit_k") s.t_qubit = config::to_double(e.value, ctx);
            else if (e.key == "p_active_per_qubit_w") s.p_active_literal = config::to_double(e.value, ctx);
            else if (e.key == "pitch_m") s.pitch = config::to_double(e.value, ctx);
            else if (e.key == "n_qubit_per_cable") s.n_qubit_per_cable = static_cast<int>(config::to_long(e.value, ctx));
            else if (e.key == "p_cooling_w") s.p_cooling = config::to_double(e.value, ctx);
            else throw std::runtime_error("scenario " + name + ": unknown key '" + e.key + "'");
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<ScenarioSpec> load_scenarios_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_scenarios(ss.str());
}

const std::string& default_scenarios_text() {
    static const std::string text = R"(# scalability scenarios; heats either solved from the link models or literal

[photonic_wdm_r0p1]
mode = photonic_wdm
peak_dbm = -70
responsivity_a_per_w = 0.1
t_qubit_k = 0.030
pitch_m = 250e-6
n_qubit_per_cable = 4
p_cooling_w = 1.5

[photonic_wdm_r0p8]
mode = photonic_wdm
peak_dbm = -70
responsivity_a_per_w = 0.8
t_qubit_k = 0.030
pitch_m = 250e-6
n_qubit_per_cable = 4
p_cooling_w = 1.5

[photonic_wdm_r0p1_300mk]
mode = photonic_wdm
peak_dbm = -70
responsivity_a_per_w = 0.1
t_qubit_k = 0.300
pitch_m = 250e-6
n_qubit_per_cable = 4
p_cooling_w = 1.5

[subthz_r1]
mode = subthz
peak_dbm = -70
responsivity_a_per_w = 1.0
t_qubit_k = 0.030
pitch_m = 2e-3
n_qubit_per_cable = 1
p_cooling_w = 1.5

# published per-qubit dissipation of integrated pulse-modulation controllers
# at 4 K; comparison inputs, not modeled
[cryocmos_low]
mode = literal
p_active_per_qubit_w = 2e-3
pitch_m = 500e-6
n_qubit_per_cable = 1
p_cooling_w = 1.5

[cryocmos_high]
mode = literal
p_active_per_qubit_w = 4e-3
pitch_m = 500e-6
n_qubit_per_cable = 1
p_cooling_w = 1.5

# one stainless coaxial line per qubit, conducted heat at 4 K
[coax_baseline]
mode = literal
p_active_per_qubit_w = 1.2e-3
pitch_m = 2.2e-3
n_qubit_per_cable = 1
p_cooling_w = 1.5
)";
    return text;
}

std::vector<ScenarioSpec> default_scenarios() { return parse_scenarios(default_scenarios_text()); }

}  // namespace cryolink::scaling
