#ifndef CRYOLINK_CONFIG_HPP
#define CRYOLINK_CONFIG_HPP

#include "cryolink/materials.hpp"
#include "cryolink/photonic.hpp"
#include "cryolink/subthz.hpp"
#include "cryolink/units.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cryolink::config {

// Parse failure with the 1-based line number of the offending line.
struct ConfigError : std::runtime_error {
    ConfigError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

struct ConfigEntry {
    std::string section;
    std::string key;
    std::string value;
    int line = 0;
};

// Flat "key = value" text with [section] headers and # comments. Entries
// keep file order; sections may repeat.
class KeyValueConfig {
public:
    static KeyValueConfig parse(const std::string& text);
    static KeyValueConfig load_file(const std::string& path);

    const std::vector<ConfigEntry>& entries() const { return entries_; }
    std::vector<std::string> section_order() const;
    std::vector<ConfigEntry> section(const std::string& name) const;
    std::optional<std::string> get(const std::string& section, const std::string& key) const;

private:
    std::vector<ConfigEntry> entries_;
};

double to_double(const std::string& value, const std::string& context);
long to_long(const std::string& value, const std::string& context);
bool to_bool(const std::string& value, const std::string& context);

// Everything the CLI commands can run against. Dotted keys (section.key)
// address individual fields; unknown keys are reported by name.
struct RunSettings {
    double p_qubit_peak_dbm = -70.0;
    double t_qubit = 0.030;
    units::PulseProfile pulse = units::PulseProfile::gaussian_default();

    photonic::PhotonicLinkDesign photonic = photonic::PhotonicLinkDesign::rx_4k();
    subthz::SubThzLinkDesign subthz{};

    // fig9 evaluation point
    double mzm_p_opt = 100e-6;
    double mzm_z_load = 200.0;
    double mzm_responsivity = 0.1;

    // scaling defaults
    double p_cooling = 1.5;
    double fiber_pitch = 250e-6;
    double waveguide_pitch = 2e-3;

    // passive-heat cable lengths
    double coax_length = 1.0;
    double fiber_length = 1.0;
    double waveguide_length = 1.0;

    // Applies one dotted key; false when the key names no known field.
    bool apply(const std::string& dotted_key, const std::string& value);

    // Applies a whole config file; throws ConfigError (syntax) or
    // UnknownKeyError (unrecognized field).
    void apply_config(const KeyValueConfig& cfg);

    static std::vector<std::string> known_keys();
};

struct UnknownKeyError : std::runtime_error {
    explicit UnknownKeyError(const std::string& k)
        : std::runtime_error("unknown variable: " + k), key(k) {}
    std::string key;
};

}  // namespace cryolink::config

#endif
