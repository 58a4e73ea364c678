#include "cryolink/presets.hpp"

#include "cryolink/mzm.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cryolink::presets {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ',';
        out_ += header[i];
    }
    out_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
        throw std::logic_error("csv row width mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ += ',';
        out_ += cells[i];
    }
    out_ += '\n';
}

std::string CsvWriter::num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::vector<std::string> link_solution_header() {
    return {"p_qubit_peak_dbm", "p_opt_w", "z_load_ohm", "p_active_w",
            "snr_db", "limiting_source", "feasible"};
}

std::vector<std::string> link_solution_cells(double p_qubit_peak_dbm,
                                             const photonic::LinkSolution& sol) {
    return {CsvWriter::num(p_qubit_peak_dbm),
            CsvWriter::num(sol.p_opt),
            CsvWriter::num(sol.z_load),
            CsvWriter::num(sol.p_active),
            CsvWriter::num(sol.snr_achieved),
            noise::to_string(sol.noise_breakdown.limiting_source),
            sol.feasible ? "true" : "false"};
}

namespace {

std::vector<double> linspace(double start, double stop, int points) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i)
        out.push_back(start + (stop - start) * i / (points - 1));
    return out;
}

std::vector<double> logspace(double start, double stop, int points) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(points));
    const double l0 = std::log10(start);
    const double l1 = std::log10(stop);
    for (int i = 0; i < points; ++i)
        out.push_back(std::pow(10.0, l0 + (l1 - l0) * i / (points - 1)));
    return out;
}

std::string gnuplot_script(const std::string& title, const std::string& xlabel,
                           const std::string& ylabel,
                           const std::vector<std::pair<int, std::string>>& series,
                           bool logy = true) {
    std::ostringstream gp;
    gp << "set datafile separator ','\n";
    gp << "set key autotitle columnhead\n";
    gp << "set title '" << title << "'\n";
    gp << "set xlabel '" << xlabel << "'\n";
    gp << "set ylabel '" << ylabel << "'\n";
    if (logy) gp << "set logscale y\n";
    gp << "plot ";
    for (size_t i = 0; i < series.size(); ++i) {
        if (i) gp << ", ";
        gp << "CSV using 1:" << series[i].first << " with lines title '" << series[i].second
           << "'";
    }
    gp << "\n";
    return gp.str();
}

}  // namespace

PresetResult fig4(const config::RunSettings& s) {
    auto design_qubit_stage = s.photonic;
    design_qubit_stage.attenuation_below_rx_db = 0.0;
    design_qubit_stage.wdm_filter_loss_db = 0.0;
    auto design_4k = s.photonic;
    design_4k.attenuation_below_rx_db = 30.0;
    design_4k.wdm_filter_loss_db = 0.0;

    auto header = link_solution_header();
    header.push_back("z_load_4k_ohm");
    CsvWriter csv(header);
    for (double peak : linspace(-90.0, -55.0, 36)) {
        const auto sol = photonic::solve_min_popt(peak, design_qubit_stage, s.t_qubit, s.pulse);
        const auto sol4k = photonic::solve_min_popt(peak, design_4k, s.t_qubit, s.pulse);
        auto cells = link_solution_cells(peak, sol);
        cells.push_back(CsvWriter::num(sol4k.z_load));
        csv.row(cells);
    }

    PresetResult r;
    r.csv = csv.text();
    r.summary = "minimum optical power and load impedance vs peak qubit power";
    r.gnuplot = gnuplot_script("minimum optical power and load impedance", "peak qubit power (dBm)",
                               "P_opt (W) / Z_L (ohm)",
                               {{2, "p_opt_w"}, {3, "z_load_ohm"}, {8, "z_load_4k_ohm"}});
    return r;
}

PresetResult fig6(const config::RunSettings& s) {
    auto design = s.photonic;
    design.attenuation_below_rx_db = 0.0;
    design.wdm_filter_loss_db = 0.0;

    const auto grid = linspace(-90.0, -55.0, 36);
    const auto sweep = photonic::noise_breakdown_sweep(grid, design, s.t_qubit, s.pulse);

    CsvWriter csv({"p_qubit_peak_dbm", "i_dc_a", "shot_a2_per_hz", "rin_a2_per_hz",
                   "eom_thermal_a2_per_hz", "total_a2_per_hz", "limiting_source"});
    for (const auto& p : sweep.points) {
        const auto& nb = p.solution.noise_breakdown;
        csv.row({CsvWriter::num(p.p_qubit_peak_dbm), CsvWriter::num(p.solution.i_dc),
                 CsvWriter::num(nb.shot), CsvWriter::num(nb.rin), CsvWriter::num(nb.eom_thermal),
                 CsvWriter::num(nb.total), noise::to_string(nb.limiting_source)});
    }

    PresetResult r;
    r.csv = csv.text();
    std::ostringstream sum;
    sum << "current noise components at the solved operating points";
    if (sweep.shot_rin_crossover_peak_dbm)
        sum << "; shot/RIN crossover at peak " << CsvWriter::num(*sweep.shot_rin_crossover_peak_dbm)
            << " dBm";
    r.summary = sum.str();
    r.gnuplot = gnuplot_script("detector current noise", "peak qubit power (dBm)", "PSD (A^2/Hz)",
                               {{3, "shot"}, {4, "rin"}, {5, "eom_thermal"}});
    return r;
}

PresetResult fig7(const config::RunSettings& s) {
    auto design = s.photonic;
    design.wdm_filter_loss_db = 0.0;
    const std::vector<double> peaks = {-90.0, -80.0, -70.0, -60.0};
    const auto atten = linspace(0.0, 40.0, 41);

    CsvWriter csv({"p_qubit_peak_dbm", "attenuation_db", "z_load_ohm"});
    for (double peak : peaks) {
        const auto zs = photonic::zl_vs_attenuation(peak, atten, design, s.t_qubit, s.pulse);
        for (const auto& [a_db, z] : zs)
            csv.row({CsvWriter::num(peak), CsvWriter::num(a_db), CsvWriter::num(z)});
    }

    PresetResult r;
    r.csv = csv.text();
    r.summary = "load impedance vs attenuation below the receiver";
    r.gnuplot = gnuplot_script("load impedance vs attenuation", "attenuation (dB)", "Z_L (ohm)",
                               {{3, "z_load_ohm"}});
    return r;
}

PresetResult fig9(const config::RunSettings& s) {
    CsvWriter csv({"epsilon", "p_fund_dbm", "p_im3_dbm", "p_im5_dbm"});
    for (double eps : logspace(0.01, 1.0, 61)) {
        const auto d = mzm::rf_powers(eps, s.mzm_responsivity, s.mzm_p_opt, s.mzm_z_load);
        csv.row({CsvWriter::num(eps), CsvWriter::num(units::watts_to_dbm(d.p_fund)),
                 CsvWriter::num(units::watts_to_dbm(d.p_im3)),
                 CsvWriter::num(units::watts_to_dbm(d.p_im5))});
    }

    PresetResult r;
    r.csv = csv.text();
    r.summary = "fundamental/IM3/IM5 detected RF power vs modulation depth";
    r.gnuplot = gnuplot_script("two-tone distortion", "modulation depth", "RF power (dBm)",
                               {{2, "fundamental"}, {3, "im3"}, {4, "im5"}}, false);
    return r;
}

PresetResult fig10(const config::RunSettings& s) {
    auto ph4k = s.photonic;
    ph4k.attenuation_below_rx_db = 30.0;
    ph4k.wdm_filter_loss_db = 0.0;
    auto wdm = photonic::PhotonicLinkDesign::rx_4k_wdm();
    wdm.responsivity = s.photonic.responsivity;
    wdm.tx_noise = s.photonic.tx_noise;

    const auto grid = linspace(-90.0, -60.0, 31);
    const auto rows = subthz::subthz_heat_sweep(grid, s.subthz, ph4k, wdm, s.t_qubit, s.pulse);

    CsvWriter csv({"p_qubit_peak_dbm", "p_active_subthz_w", "p_active_photonic_4k_w",
                   "p_active_photonic_wdm_w"});
    for (const auto& p : rows)
        csv.row({CsvWriter::num(p.p_qubit_peak_dbm), CsvWriter::num(p.subthz_active_w),
                 CsvWriter::num(p.photonic_4k_active_w), CsvWriter::num(p.photonic_wdm_active_w)});

    PresetResult r;
    r.csv = csv.text();
    r.summary = "per-qubit receiver heat at 4 K for the three link variants";
    r.gnuplot = gnuplot_script("receiver heat per qubit", "peak qubit power (dBm)", "P_active (W)",
                               {{2, "subthz"}, {3, "photonic_4k"}, {4, "photonic_wdm"}});
    return r;
}

PresetResult fig11(const config::RunSettings& s) {
    auto ph4k = s.photonic;
    ph4k.attenuation_below_rx_db = 30.0;
    ph4k.wdm_filter_loss_db = 0.0;
    auto wdm = photonic::PhotonicLinkDesign::rx_4k_wdm();
    wdm.responsivity = s.photonic.responsivity;
    wdm.tx_noise = s.photonic.tx_noise;

    auto fom_of = [&](double p_active, double pitch, int n) {
        scaling::ScalingScenario sc;
        sc.label = "grid";
        sc.p_cooling = s.p_cooling;
        sc.p_active_per_qubit = p_active;
        sc.pitch = pitch;
        sc.n_qubit_per_cable = n;
        sc.t_qubit = s.t_qubit;
        sc.responsivity = s.photonic.responsivity;
        return scaling::fom(sc);
    };

    CsvWriter csv({"p_qubit_peak_dbm", "fom_photonic_wdm_per_m", "fom_photonic_4k_per_m",
                   "fom_subthz_per_m"});
    for (double peak : linspace(-90.0, -60.0, 31)) {
        const auto wdm_sol = photonic::solve_min_popt(peak, wdm, s.t_qubit, s.pulse);
        const auto ph_sol = photonic::solve_min_popt(peak, ph4k, s.t_qubit, s.pulse);
        const auto sub_sol = subthz::solve_min_psubthz(peak, s.subthz, s.t_qubit, s.pulse);
        csv.row({CsvWriter::num(peak),
                 CsvWriter::num(fom_of(wdm_sol.p_active, s.fiber_pitch, wdm.wdm_n_qubit)),
                 CsvWriter::num(fom_of(ph_sol.p_active, s.fiber_pitch, 1)),
                 CsvWriter::num(fom_of(sub_sol.p_active, s.waveguide_pitch, 1))});
    }

    PresetResult r;
    r.csv = csv.text();
    r.summary = "scalability figure of merit for the three link variants";
    r.gnuplot = gnuplot_script("figure of merit", "peak qubit power (dBm)", "FOM (1/m)",
                               {{2, "photonic_wdm"}, {3, "photonic_4k"}, {4, "subthz"}});
    return r;
}

PresetResult fig12(const config::RunSettings& s,
                   const std::vector<scaling::ScenarioSpec>& scenarios) {
    const auto rows = scaling::projection_table(scenarios, s.pulse);

    CsvWriter csv({"label", "mode", "responsivity_a_per_w", "t_qubit_k", "peak_dbm",
                   "p_active_per_qubit_w", "max_qubits", "fom_per_m"});
    for (const auto& row : rows)
        csv.row({row.spec.label, scaling::to_string(row.spec.mode),
                 CsvWriter::num(row.spec.responsivity), CsvWriter::num(row.spec.t_qubit),
                 CsvWriter::num(row.spec.peak_dbm), CsvWriter::num(row.p_active_per_qubit),
                 std::to_string(row.qubits), CsvWriter::num(row.fom)});

    PresetResult r;
    r.csv = csv.text();
    r.summary = "projected qubit counts per scenario";
    return r;
}

PresetResult passive_heat(const config::RunSettings& s, const materials::MaterialLibrary& lib) {
    const auto chain = materials::StageChain::standard();

    auto coax = materials::ut085_coax();
    coax.length = s.coax_length;
    auto fiber = materials::smf_fiber();
    fiber.length = s.fiber_length;
    auto wg = materials::teflon_waveguide();
    wg.length = s.waveguide_length;

    for (const auto& name : lib.names()) lib.get(name).reset_clamp_flag();

    CsvWriter csv({"cable", "span_hot_k", "span_cold_k", "length_m", "load_w"});
    std::ostringstream sum;
    sum << "conducted heat per stage span";
    for (const auto& cable : {coax, fiber, wg}) {
        for (size_t i = 0; i + 1 < chain.stages.size(); ++i) {
            const double hot = chain.stages[i].temperature;
            const double cold = chain.stages[i + 1].temperature;
            const double load = materials::passive_heat_load(lib, cable, cold, hot);
            csv.row({cable.label, CsvWriter::num(hot), CsvWriter::num(cold),
                     CsvWriter::num(cable.length), CsvWriter::num(load)});
            if (load > chain.stages[i + 1].cooling_budget)
                sum << "; " << cable.label << " exceeds the " << chain.stages[i + 1].name
                    << " budget";
        }
    }
    for (const auto& name : lib.names()) {
        if (lib.get(name).was_clamped())
            sum << "; warning: " << name << " evaluated below its fit range (clamped at "
                << CsvWriter::num(lib.get(name).t_min()) << " K)";
    }

    PresetResult r;
    r.csv = csv.text();
    r.summary = sum.str();
    return r;
}

PresetResult sweep(const config::RunSettings& base, const SweepRequest& req) {
    if (req.points < 2) throw std::invalid_argument("sweep needs at least 2 points");
    if (!(req.start < req.stop)) throw std::invalid_argument("sweep start must be below stop");
    if (req.target != "photonic" && req.target != "subthz")
        throw std::invalid_argument("sweep target must be photonic or subthz");
    if (req.scale != "linear" && req.scale != "log")
        throw std::invalid_argument("sweep scale must be linear or log");
    if (req.scale == "log" && !(req.start > 0.0))
        throw std::invalid_argument("log sweep needs positive bounds");

    const auto grid = req.scale == "log" ? logspace(req.start, req.stop, req.points)
                                         : linspace(req.start, req.stop, req.points);

    auto header = link_solution_header();
    header.insert(header.begin(), req.variable);
    CsvWriter csv(header);

    for (double v : grid) {
        config::RunSettings s = base;
        if (!s.apply(req.variable, CsvWriter::num(v))) throw config::UnknownKeyError(req.variable);
        const auto sol = req.target == "photonic"
                             ? photonic::solve_min_popt(s.p_qubit_peak_dbm, s.photonic, s.t_qubit,
                                                        s.pulse)
                             : subthz::solve_min_psubthz(s.p_qubit_peak_dbm, s.subthz, s.t_qubit,
                                                         s.pulse);
        auto cells = link_solution_cells(s.p_qubit_peak_dbm, sol);
        cells.insert(cells.begin(), CsvWriter::num(v));
        csv.row(cells);
    }

    PresetResult r;
    r.csv = csv.text();
    r.summary = "sweep of " + req.variable + " over [" + CsvWriter::num(req.start) + ", " +
                CsvWriter::num(req.stop) + "]";
    return r;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig4", "fig6", "fig7", "fig9",
                                                   "fig10", "fig11", "fig12"};
    return names;
}

}  // namespace cryolink::presets
