// Command-line front end: solves link design points and emits the plot-ready
// CSV presets. Same config, same bytes out.

#include "cryolink/mzm.hpp"
#include "cryolink/presets.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using cryolink::config::KeyValueConfig;
using cryolink::config::RunSettings;
using cryolink::config::UnknownKeyError;
using cryolink::presets::CsvWriter;
using cryolink::presets::PresetResult;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitUnknownVariable = 2;

struct CommonArgs {
    std::string preset;
    std::string config_path;
    std::string out_path;
    std::string materials_path;
    std::string plot_script_path;
    std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_preset = true) {
    if (with_preset) cmd->add_option("--preset", args.preset, "figure preset name");
    cmd->add_option("--config", args.config_path, "key = value config file");
    cmd->add_option("--out", args.out_path, "output CSV path (default: stdout)");
    cmd->add_option("--set", args.sets, "override, repeatable: --set section.key=value");
    cmd->add_option("--materials", args.materials_path, "material fit file overriding defaults");
    cmd->add_option("--plot-script", args.plot_script_path,
                    "write a gnuplot script referencing the CSV");
}

RunSettings build_settings(const CommonArgs& args) {
    RunSettings s;
    if (!args.config_path.empty()) s.apply_config(KeyValueConfig::load_file(args.config_path));
    for (const auto& kv : args.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw UnknownKeyError(kv + " (expected key=value)");
        const std::string key = kv.substr(0, eq);
        if (!s.apply(key, kv.substr(eq + 1))) throw UnknownKeyError(key);
    }
    return s;
}

cryolink::materials::MaterialLibrary build_materials(const CommonArgs& args) {
    if (args.materials_path.empty()) return cryolink::materials::MaterialLibrary::defaults();
    return cryolink::materials::MaterialLibrary::load_file(args.materials_path);
}

void emit(const PresetResult& result, const CommonArgs& args) {
    if (args.out_path.empty()) {
        std::cout << result.csv;
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + args.out_path);
        out << result.csv;
    }
    if (!args.plot_script_path.empty() && !result.gnuplot.empty()) {
        std::ofstream gp(args.plot_script_path, std::ios::binary);
        if (!gp) throw std::runtime_error("cannot write: " + args.plot_script_path);
        gp << "CSV = '" << (args.out_path.empty() ? "data.csv" : args.out_path) << "'\n"
           << result.gnuplot;
    }
    if (!result.summary.empty()) std::cerr << result.summary << "\n";
}

PresetResult single_photonic_row(const RunSettings& s) {
    const auto sol =
        cryolink::photonic::solve_min_popt(s.p_qubit_peak_dbm, s.photonic, s.t_qubit, s.pulse);
    CsvWriter csv(cryolink::presets::link_solution_header());
    csv.row(cryolink::presets::link_solution_cells(s.p_qubit_peak_dbm, sol));
    PresetResult r;
    r.csv = csv.text();
    r.summary = sol.feasible
                    ? "design point solved"
                    : "design infeasible; feasibility boundary at peak " +
                          CsvWriter::num(sol.feasibility_boundary_peak_dbm) + " dBm";
    if (s.photonic.wdm_n_qubit > 1 && !cryolink::photonic::filter_rejection_sufficient(s.photonic))
        r.summary += "; warning: WDM filter rejection " +
                     CsvWriter::num(s.photonic.wdm_filter_rejection_db) + " dB is below the " +
                     CsvWriter::num(cryolink::photonic::required_filter_rejection_db) +
                     " dB the SNR budget needs";
    return r;
}

PresetResult single_subthz_row(const RunSettings& s) {
    const auto sol =
        cryolink::subthz::solve_min_psubthz(s.p_qubit_peak_dbm, s.subthz, s.t_qubit, s.pulse);
    CsvWriter csv(cryolink::presets::link_solution_header());
    csv.row(cryolink::presets::link_solution_cells(s.p_qubit_peak_dbm, sol));
    PresetResult r;
    r.csv = csv.text();
    r.summary = "sub-THz design point solved";
    return r;
}

PresetResult nonlinearity_row(const RunSettings& s) {
    const auto d = cryolink::mzm::rf_powers(s.photonic.epsilon_m, s.mzm_responsivity, s.mzm_p_opt,
                                            s.mzm_z_load);
    CsvWriter csv({"epsilon", "p_fund_w", "p_im3_w", "p_im5_w", "dynamic_range_db", "popt_scale"});
    csv.row({CsvWriter::num(d.epsilon_m), CsvWriter::num(d.p_fund), CsvWriter::num(d.p_im3),
             CsvWriter::num(d.p_im5), CsvWriter::num(d.dynamic_range_db),
             CsvWriter::num(d.popt_scale)});
    PresetResult r;
    r.csv = csv.text();
    const double eps60 = cryolink::mzm::solve_epsilon_for_dr(60.0);
    const double dr015 = cryolink::mzm::rf_powers(0.15, 0.1, 100e-6, 200.0).dynamic_range_db;
    r.summary = "60 dB dynamic range needs epsilon <= " + CsvWriter::num(eps60) +
                "; the often-quoted 0.15 reaches only " + CsvWriter::num(dr015) + " dB";
    return r;
}

int dispatch(const std::string& command, const CommonArgs& args) {
    const RunSettings s = build_settings(args);

    PresetResult result;
    if (command == "passive-heat") {
        result = cryolink::presets::passive_heat(s, build_materials(args));
    } else if (command == "photonic") {
        if (args.preset.empty()) result = single_photonic_row(s);
        else if (args.preset == "fig4") result = cryolink::presets::fig4(s);
        else if (args.preset == "fig6") result = cryolink::presets::fig6(s);
        else if (args.preset == "fig7") result = cryolink::presets::fig7(s);
        else throw UnknownKeyError("preset " + args.preset + " (photonic: fig4, fig6, fig7)");
    } else if (command == "subthz") {
        if (args.preset.empty()) result = single_subthz_row(s);
        else if (args.preset == "fig10") result = cryolink::presets::fig10(s);
        else throw UnknownKeyError("preset " + args.preset + " (subthz: fig10)");
    } else if (command == "nonlinearity") {
        if (args.preset.empty()) result = nonlinearity_row(s);
        else if (args.preset == "fig9") result = cryolink::presets::fig9(s);
        else throw UnknownKeyError("preset " + args.preset + " (nonlinearity: fig9)");
    } else if (command == "fom") {
        if (args.preset.empty() || args.preset == "fig11") result = cryolink::presets::fig11(s);
        else throw UnknownKeyError("preset " + args.preset + " (fom: fig11)");
    } else {
        throw std::logic_error("unhandled command " + command);
    }
    emit(result, args);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-budget models for cryogenic qubit-control links"};
    app.require_subcommand(1);

    CommonArgs heat_args, photonic_args, subthz_args, nl_args, fom_args, project_args, sweep_args;

    auto* heat = app.add_subcommand("passive-heat", "conducted heat per stage span");
    add_common(heat, heat_args, false);

    auto* photonic = app.add_subcommand("photonic", "photonic link design points");
    add_common(photonic, photonic_args);

    auto* subthz = app.add_subcommand("subthz", "sub-THz link design points");
    add_common(subthz, subthz_args);

    auto* nl = app.add_subcommand("nonlinearity", "modulator two-tone distortion");
    add_common(nl, nl_args);

    auto* fom = app.add_subcommand("fom", "scalability figure of merit");
    add_common(fom, fom_args);

    auto* project = app.add_subcommand("project", "scenario projection table");
    add_common(project, project_args);
    std::string scenarios_path;
    project->add_option("--scenarios", scenarios_path, "scenario file (default: built-in set)");

    auto* sweep = app.add_subcommand("sweep", "one-variable design sweep");
    add_common(sweep, sweep_args, false);
    cryolink::presets::SweepRequest sweep_req;
    sweep->add_option("--target", sweep_req.target, "photonic | subthz");
    sweep->add_option("--var", sweep_req.variable, "dotted settings key to sweep")->required();
    sweep->add_option("--start", sweep_req.start)->required();
    sweep->add_option("--stop", sweep_req.stop)->required();
    sweep->add_option("--points", sweep_req.points)->required();
    sweep->add_option("--scale", sweep_req.scale, "linear | log");

    CLI11_PARSE(app, argc, argv);

    try {
        if (heat->parsed()) return dispatch("passive-heat", heat_args);
        if (photonic->parsed()) return dispatch("photonic", photonic_args);
        if (subthz->parsed()) return dispatch("subthz", subthz_args);
        if (nl->parsed()) return dispatch("nonlinearity", nl_args);
        if (fom->parsed()) return dispatch("fom", fom_args);
        if (project->parsed()) {
            const RunSettings s = build_settings(project_args);
            const auto scenarios = scenarios_path.empty()
                                       ? cryolink::scaling::default_scenarios()
                                       : cryolink::scaling::load_scenarios_file(scenarios_path);
            if (!project_args.preset.empty() && project_args.preset != "fig12")
                throw UnknownKeyError("preset " + project_args.preset + " (project: fig12)");
            emit(cryolink::presets::fig12(s, scenarios), project_args);
            return kExitOk;
        }
        if (sweep->parsed()) {
            const RunSettings s = build_settings(sweep_args);
            emit(cryolink::presets::sweep(s, sweep_req), sweep_args);
            return kExitOk;
        }
    } catch (const cryolink::config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const UnknownKeyError& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknownVariable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
