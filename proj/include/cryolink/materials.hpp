#ifndef CRYOLINK_MATERIALS_HPP
#define CRYOLINK_MATERIALS_HPP

#include <map>
#include <string>
#include <vector>

namespace cryolink::materials {

// One piece of a piecewise fit: log10(k) = sum_i coeffs[i] * log10(T)^i
// over [t_lo, t_hi], k in W/(m*K).
struct LogPolyPiece {
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::vector<double> coeffs;
};

// Temperature-dependent thermal conductivity of one material.
//
// Below t_min() the conductivity clamps to its value at t_min (polynomial
// fits diverge when extrapolated toward zero); evaluation above t_max() is a
// domain error. Clamped evaluations are counted so callers can surface a
// warning.
class MaterialModel {
public:
    MaterialModel() = default;
    MaterialModel(std::string name, std::vector<LogPolyPiece> pieces);

    const std::string& name() const { return name_; }
    double t_min() const;
    double t_max() const;

    double conductivity(double t_kelvin) const;
    bool was_clamped() const { return clamped_; }
    void reset_clamp_flag() const { clamped_ = false; }

    // Positivity over the valid range and <=1% jumps at piece boundaries.
    void validate() const;

private:
    const LogPolyPiece& piece_for(double t) const;

    std::string name_;
    std::vector<LogPolyPiece> pieces_;
    mutable bool clamped_ = false;
};

// integral of k(T) dT over [t_lo, t_hi] by adaptive Simpson quadrature,
// relative error <= 1e-6. t_lo > t_hi or t_hi above the fit range is a
// domain error naming the offending bound.
double conductivity_integral(const MaterialModel& m, double t_lo, double t_hi);

// Coaxial-style cable cross-section. Any area may be zero (a bare dielectric
// waveguide has only a dielectric area); at least one must be positive.
struct CableGeometry {
    std::string label;
    double area_outer = 0.0;       // m^2
    double area_dielectric = 0.0;  // m^2
    double area_center = 0.0;      // m^2
    std::string outer_material;
    std::string dielectric_material;
    std::string center_material;
    double length = 1.0;           // m

    void validate() const;
};

struct Stage {
    std::string name;
    double temperature = 0.0;            // K
    double cooling_budget = 0.0;         // W
    double attenuation_to_next_db = 0.0; // dB toward the colder stage
};

// Ordered cryostat stages, warm to cold.
struct StageChain {
    std::vector<Stage> stages;

    void validate() const;
    static StageChain standard();
};

// Named collection of material fits, loadable from a structured text file:
//
//   material <name>
//   piece <t_lo> <t_hi> <c0> <c1> ...
//   [piece ...]
//   end
class MaterialLibrary {
public:
    static MaterialLibrary defaults();
    static MaterialLibrary parse(const std::string& text);
    static MaterialLibrary load_file(const std::string& path);

    const MaterialModel& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;
    void add(MaterialModel model);

private:
    std::map<std::string, MaterialModel> models_;
};

// Text of the built-in default fits (also shipped as data/materials.cfg).
const std::string& default_materials_text();

// Conducted heat between two stages:
// (I_outer*A_o + I_dielectric*A_d + I_center*A_c) / L, watts.
double passive_heat_load(const MaterialLibrary& lib, const CableGeometry& g, double t_lo,
                         double t_hi);

// Default cable geometries.
CableGeometry ut085_coax();        // stainless outer/center, PTFE dielectric
CableGeometry smf_fiber();         // 10 um core / 127 um cladding silica fiber
CableGeometry teflon_waveguide();  // 1 mm x 1 mm PTFE dielectric waveguide

}  // namespace cryolink::materials

#endif
