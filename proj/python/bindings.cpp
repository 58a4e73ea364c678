// Python bindings for the link-budget models.

#include "cryolink/constants.hpp"
#include "cryolink/materials.hpp"
#include "cryolink/mzm.hpp"
#include "cryolink/noise.hpp"
#include "cryolink/photonic.hpp"
#include "cryolink/scaling.hpp"
#include "cryolink/subthz.hpp"
#include "cryolink/units.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cryolink;

namespace {

void bind_constants(py::module_& m) {
    auto c = m.def_submodule("constants", "physical constants (SI)");
    c.attr("elementary_charge") = constants::elementary_charge;
    c.attr("boltzmann") = constants::boltzmann;
    c.attr("hbar") = constants::hbar;
    c.attr("speed_of_light") = constants::speed_of_light;
    c.attr("three_db_exact") = constants::three_db_exact;
}

void bind_units(py::module_& m) {
    py::enum_<units::PulseShape>(m, "PulseShape")
        .value("gaussian", units::PulseShape::gaussian)
        .value("raised_cosine", units::PulseShape::raised_cosine)
        .value("rectangular", units::PulseShape::rectangular);

    py::class_<units::PulseProfile>(m, "PulseProfile")
        .def(py::init<>())
        .def_readwrite("shape", &units::PulseProfile::shape)
        .def_readwrite("activity", &units::PulseProfile::activity)
        .def_readwrite("peak_to_avg_db", &units::PulseProfile::peak_to_avg_db)
        .def_static("gaussian_default", &units::PulseProfile::gaussian_default);

    m.def("dbm_to_watts", &units::dbm_to_watts, py::arg("p_dbm"));
    m.def("watts_to_dbm", &units::watts_to_dbm, py::arg("p_watts"));
    m.def("db_to_factor", &units::db_to_factor, py::arg("db"));
    m.def("factor_to_db", &units::factor_to_db, py::arg("factor"));
    m.def("thermal_noise_floor", &units::thermal_noise_floor, py::arg("t_kelvin"),
          "thermal noise PSD in dBm/Hz at temperature T");
    m.def("peak_to_average", &units::peak_to_average, py::arg("p_peak_dbm"),
          py::arg("profile") = units::PulseProfile::gaussian_default());
}

void bind_noise(py::module_& m) {
    py::enum_<noise::NoiseSource>(m, "NoiseSource")
        .value("shot", noise::NoiseSource::shot)
        .value("rin", noise::NoiseSource::rin)
        .value("eom_thermal", noise::NoiseSource::eom_thermal)
        .value("phase_noise", noise::NoiseSource::phase_noise);

    py::class_<noise::TxNoiseConfig>(m, "TxNoiseConfig")
        .def(py::init<>())
        .def_readwrite("rin_db", &noise::TxNoiseConfig::rin_db)
        .def_readwrite("v_pi", &noise::TxNoiseConfig::v_pi)
        .def_readwrite("z_dr", &noise::TxNoiseConfig::z_dr)
        .def_readwrite("t_tx", &noise::TxNoiseConfig::t_tx)
        .def_readwrite("pn_dbc", &noise::TxNoiseConfig::pn_dbc);

    py::class_<noise::NoiseBreakdown>(m, "NoiseBreakdown")
        .def_readonly("shot", &noise::NoiseBreakdown::shot)
        .def_readonly("rin", &noise::NoiseBreakdown::rin)
        .def_readonly("eom_thermal", &noise::NoiseBreakdown::eom_thermal)
        .def_readonly("phase_noise", &noise::NoiseBreakdown::phase_noise)
        .def_readonly("total", &noise::NoiseBreakdown::total)
        .def_readonly("limiting_source", &noise::NoiseBreakdown::limiting_source)
        .def_static("from_components", &noise::NoiseBreakdown::from_components, py::arg("shot"),
                    py::arg("rin"), py::arg("eom_thermal"), py::arg("phase_noise"));

    m.def("shot_psd", &noise::shot_psd, py::arg("i_dc"));
    m.def("rin_psd", &noise::rin_psd, py::arg("rin_db"), py::arg("i_dc"));
    m.def("eom_thermal_psd", &noise::eom_thermal_psd, py::arg("cfg"), py::arg("i_dc"));
    m.def("phase_noise_psd", &noise::phase_noise_psd, py::arg("pn_dbc"), py::arg("i_dc"));
    m.def("required_snr", &noise::required_snr, py::arg("p_avg_qubit_dbm"), py::arg("t_qubit"));
    m.def("link_snr", &noise::link_snr, py::arg("i_sig"), py::arg("breakdown"));
}

void bind_materials(py::module_& m) {
    auto mm = m.def_submodule("materials", "cable heat-load models");

    py::class_<materials::MaterialModel>(mm, "MaterialModel")
        .def_property_readonly("name", &materials::MaterialModel::name)
        .def_property_readonly("t_min", &materials::MaterialModel::t_min)
        .def_property_readonly("t_max", &materials::MaterialModel::t_max)
        .def("conductivity", &materials::MaterialModel::conductivity, py::arg("t_kelvin"));

    py::class_<materials::CableGeometry>(mm, "CableGeometry")
        .def(py::init<>())
        .def_readwrite("label", &materials::CableGeometry::label)
        .def_readwrite("area_outer", &materials::CableGeometry::area_outer)
        .def_readwrite("area_dielectric", &materials::CableGeometry::area_dielectric)
        .def_readwrite("area_center", &materials::CableGeometry::area_center)
        .def_readwrite("outer_material", &materials::CableGeometry::outer_material)
        .def_readwrite("dielectric_material", &materials::CableGeometry::dielectric_material)
        .def_readwrite("center_material", &materials::CableGeometry::center_material)
        .def_readwrite("length", &materials::CableGeometry::length);

    py::class_<materials::MaterialLibrary>(mm, "MaterialLibrary")
        .def_static("defaults", &materials::MaterialLibrary::defaults)
        .def_static("parse", &materials::MaterialLibrary::parse, py::arg("text"))
        .def_static("load_file", &materials::MaterialLibrary::load_file, py::arg("path"))
        .def("get", &materials::MaterialLibrary::get, py::arg("name"),
             py::return_value_policy::reference_internal)
        .def("contains", &materials::MaterialLibrary::contains, py::arg("name"))
        .def("names", &materials::MaterialLibrary::names);

    mm.def("conductivity_integral", &materials::conductivity_integral, py::arg("material"),
           py::arg("t_lo"), py::arg("t_hi"));
    mm.def("passive_heat_load", &materials::passive_heat_load, py::arg("library"),
           py::arg("geometry"), py::arg("t_lo"), py::arg("t_hi"));
    mm.def("ut085_coax", &materials::ut085_coax);
    mm.def("smf_fiber", &materials::smf_fiber);
    mm.def("teflon_waveguide", &materials::teflon_waveguide);
}

void bind_photonic(py::module_& m) {
    py::class_<photonic::PhotonicLinkDesign>(m, "PhotonicLinkDesign")
        .def(py::init<>())
        .def_readwrite("responsivity", &photonic::PhotonicLinkDesign::responsivity)
        .def_readwrite("epsilon_m", &photonic::PhotonicLinkDesign::epsilon_m)
        .def_readwrite("attenuation_below_rx_db",
                       &photonic::PhotonicLinkDesign::attenuation_below_rx_db)
        .def_readwrite("coupling_loss_db", &photonic::PhotonicLinkDesign::coupling_loss_db)
        .def_readwrite("wdm_filter_loss_db", &photonic::PhotonicLinkDesign::wdm_filter_loss_db)
        .def_readwrite("wdm_n_qubit", &photonic::PhotonicLinkDesign::wdm_n_qubit)
        .def_readwrite("tx_noise", &photonic::PhotonicLinkDesign::tx_noise)
        .def_readwrite("snr_margin_db", &photonic::PhotonicLinkDesign::snr_margin_db)
        .def_static("rx_30mk", &photonic::PhotonicLinkDesign::rx_30mk)
        .def_static("rx_4k", &photonic::PhotonicLinkDesign::rx_4k)
        .def_static("rx_4k_wdm", &photonic::PhotonicLinkDesign::rx_4k_wdm);

    py::class_<photonic::LinkSolution>(m, "LinkSolution")
        .def_readonly("p_opt", &photonic::LinkSolution::p_opt)
        .def_readonly("p_opt_sideband", &photonic::LinkSolution::p_opt_sideband)
        .def_readonly("i_dc", &photonic::LinkSolution::i_dc)
        .def_readonly("i_sig", &photonic::LinkSolution::i_sig)
        .def_readonly("z_load", &photonic::LinkSolution::z_load)
        .def_readonly("p_uw_rx_stage", &photonic::LinkSolution::p_uw_rx_stage)
        .def_readonly("p_active", &photonic::LinkSolution::p_active)
        .def_readonly("noise_breakdown", &photonic::LinkSolution::noise_breakdown)
        .def_readonly("snr_achieved", &photonic::LinkSolution::snr_achieved)
        .def_readonly("snr_required", &photonic::LinkSolution::snr_required)
        .def_readonly("feasible", &photonic::LinkSolution::feasible)
        .def_readonly("feasibility_boundary_peak_dbm",
                      &photonic::LinkSolution::feasibility_boundary_peak_dbm);

    m.def("photocurrents", &photonic::photocurrents, py::arg("p_opt"), py::arg("eps"),
          py::arg("responsivity"));
    m.def("stage_microwave_power", &photonic::stage_microwave_power, py::arg("p_qubit_avg_dbm"),
          py::arg("attenuation_db"));
    m.def("solve_min_popt", &photonic::solve_min_popt, py::arg("p_qubit_peak_dbm"),
          py::arg("design"), py::arg("t_qubit"),
          py::arg("profile") = units::PulseProfile::gaussian_default());
    m.def(
        "zl_vs_attenuation",
        [](double peak, const std::vector<double>& grid, const photonic::PhotonicLinkDesign& d,
           double t_qubit) { return photonic::zl_vs_attenuation(peak, grid, d, t_qubit); },
        py::arg("p_qubit_peak_dbm"), py::arg("attenuation_grid_db"), py::arg("design"),
        py::arg("t_qubit"));
    m.def("rin_feasibility_boundary_peak_dbm", &photonic::rin_feasibility_boundary_peak_dbm,
          py::arg("design"), py::arg("t_qubit"),
          py::arg("profile") = units::PulseProfile::gaussian_default());
    m.def("wdm_heat_per_qubit", &photonic::wdm_heat_per_qubit, py::arg("base"),
          py::arg("wdm_design"));
}

void bind_mzm(py::module_& m) {
    auto mz = m.def_submodule("mzm", "modulator two-tone nonlinearity");

    py::class_<mzm::Tone>(mz, "Tone")
        .def_readonly("n", &mzm::Tone::n)
        .def_readonly("m", &mzm::Tone::m)
        .def_readonly("amplitude", &mzm::Tone::amplitude)
        .def_readonly("label", &mzm::Tone::label);

    py::class_<mzm::ToneSpectrum>(mz, "ToneSpectrum")
        .def_readonly("epsilon", &mzm::ToneSpectrum::epsilon)
        .def_readonly("max_order", &mzm::ToneSpectrum::max_order)
        .def_readonly("entries", &mzm::ToneSpectrum::entries)
        .def("find", &mzm::ToneSpectrum::find, py::arg("n"), py::arg("m"),
             py::return_value_policy::reference_internal);

    py::class_<mzm::DistortionReport>(mz, "DistortionReport")
        .def_readonly("epsilon_m", &mzm::DistortionReport::epsilon_m)
        .def_readonly("p_fund", &mzm::DistortionReport::p_fund)
        .def_readonly("p_im3", &mzm::DistortionReport::p_im3)
        .def_readonly("p_im5", &mzm::DistortionReport::p_im5)
        .def_readonly("dynamic_range_db", &mzm::DistortionReport::dynamic_range_db)
        .def_readonly("popt_scale", &mzm::DistortionReport::popt_scale);

    mz.def("bessel_j", &mzm::bessel_j, py::arg("n"), py::arg("x"));
    mz.def("two_tone_spectrum", &mzm::two_tone_spectrum, py::arg("eps"), py::arg("max_order"));
    mz.def("rf_powers", &mzm::rf_powers, py::arg("eps"), py::arg("responsivity"),
           py::arg("p_opt"), py::arg("z_load"));
    mz.def("solve_epsilon_for_dr", &mzm::solve_epsilon_for_dr, py::arg("target_dr_db"));
    mz.def("popt_scale_for_eps", &mzm::popt_scale_for_eps, py::arg("eps"));
    mz.def("waveform_fft_oracle", &mzm::waveform_fft_oracle, py::arg("eps"), py::arg("f1_hz"),
           py::arg("f2_hz"), py::arg("n_samples"), py::arg("sample_rate"),
           py::arg("max_order") = 7);
}

void bind_subthz(py::module_& m) {
    py::class_<subthz::SubThzLinkDesign>(m, "SubThzLinkDesign")
        .def(py::init<>())
        .def_readwrite("responsivity", &subthz::SubThzLinkDesign::responsivity)
        .def_readwrite("pn_dbc", &subthz::SubThzLinkDesign::pn_dbc)
        .def_readwrite("coupler_loss_db", &subthz::SubThzLinkDesign::coupler_loss_db)
        .def_readwrite("waveguide_loss_db", &subthz::SubThzLinkDesign::waveguide_loss_db)
        .def_readwrite("attenuation_below_rx_db",
                       &subthz::SubThzLinkDesign::attenuation_below_rx_db)
        .def_readwrite("snr_margin_db", &subthz::SubThzLinkDesign::snr_margin_db);

    m.def("solve_min_psubthz", &subthz::solve_min_psubthz, py::arg("p_qubit_peak_dbm"),
          py::arg("design"), py::arg("t_qubit"),
          py::arg("profile") = units::PulseProfile::gaussian_default());
    m.def("phase_noise_crossover_current", &subthz::phase_noise_crossover_current,
          py::arg("pn_dbc"));
}

void bind_scaling(py::module_& m) {
    auto sc = m.def_submodule("scaling", "scalability projections");

    py::class_<scaling::ScalingScenario>(sc, "ScalingScenario")
        .def(py::init<>())
        .def_readwrite("label", &scaling::ScalingScenario::label)
        .def_readwrite("p_cooling", &scaling::ScalingScenario::p_cooling)
        .def_readwrite("p_active_per_qubit", &scaling::ScalingScenario::p_active_per_qubit)
        .def_readwrite("pitch", &scaling::ScalingScenario::pitch)
        .def_readwrite("n_qubit_per_cable", &scaling::ScalingScenario::n_qubit_per_cable)
        .def_readwrite("t_qubit", &scaling::ScalingScenario::t_qubit)
        .def_readwrite("responsivity", &scaling::ScalingScenario::responsivity);

    sc.def("fom", &scaling::fom, py::arg("scenario"));
    sc.def("max_qubits", &scaling::max_qubits, py::arg("p_cooling"),
           py::arg("p_active_per_qubit"));
    sc.def("gate_error", &scaling::gate_error, py::arg("p_opt"), py::arg("gate_duration"),
           py::arg("wavelength"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "link-budget models for cryogenic photonic and sub-THz qubit-control links";
    bind_constants(m);
    bind_units(m);
    bind_noise(m);
    bind_materials(m);
    bind_photonic(m);
    bind_mzm(m);
    bind_subthz(m);
    bind_scaling(m);
    m.attr("__version__") = "0.1.0";
}
