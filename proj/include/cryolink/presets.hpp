#ifndef CRYOLINK_PRESETS_HPP
#define CRYOLINK_PRESETS_HPP

#include "cryolink/config.hpp"
#include "cryolink/scaling.hpp"

#include <string>
#include <vector>

namespace cryolink::presets {

// Deterministic CSV: fixed column order, 9 significant digits, LF rows,
// header first. Identical inputs yield byte-identical text.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& text() const { return out_; }

    static std::string num(double v);

private:
    size_t columns_;
    std::string out_;
};

// Serialization helper for link solutions; column order is fixed:
// p_qubit_peak_dbm, p_opt_w, z_load_ohm, p_active_w, snr_db,
// limiting_source, feasible.
std::vector<std::string> link_solution_header();
std::vector<std::string> link_solution_cells(double p_qubit_peak_dbm,
                                             const photonic::LinkSolution& sol);

struct PresetResult {
    std::string csv;
    std::string summary;       // human-readable notes printed to stdout
    std::string gnuplot;       // optional plot script referencing the CSV
};

// Minimum optical power and load impedance vs peak qubit power, receivers
// at the qubit stage and at 4 K.
PresetResult fig4(const config::RunSettings& s);
// Detector current-noise components at the solved operating points.
PresetResult fig6(const config::RunSettings& s);
// Load impedance vs attenuation for several peak qubit powers.
PresetResult fig7(const config::RunSettings& s);
// Fundamental/IM3/IM5 detected RF power vs modulation depth.
PresetResult fig9(const config::RunSettings& s);
// Per-qubit 4 K heat of sub-THz and photonic links.
PresetResult fig10(const config::RunSettings& s);
// Scalability figure of merit for the three link variants.
PresetResult fig11(const config::RunSettings& s);
// Scenario projection table (heat per qubit, attainable qubit count).
PresetResult fig12(const config::RunSettings& s, const std::vector<scaling::ScenarioSpec>& scenarios);

// Conducted per-span heat of the default cables across the stage chain.
PresetResult passive_heat(const config::RunSettings& s, const materials::MaterialLibrary& lib);

// Generic one-variable sweep over photonic or sub-THz design points.
struct SweepRequest {
    std::string target = "photonic";  // photonic | subthz
    std::string variable;             // dotted settings key
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    std::string scale = "linear";     // linear | log
};
PresetResult sweep(const config::RunSettings& base, const SweepRequest& req);

const std::vector<std::string>& preset_names();

}  // namespace cryolink::presets

#endif
