#include "cryolink/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cryolink::config {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ConfigError(line_no, "unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) throw ConfigError(line_no, "empty section name");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError(line_no, "expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "empty key");
        if (value.empty()) throw ConfigError(line_no, "empty value for key '" + key + "'");
        cfg.entries_.push_back({section, key, value, line_no});
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::vector<std::string> KeyValueConfig::section_order() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (std::find(out.begin(), out.end(), e.section) == out.end()) out.push_back(e.section);
    return out;
}

std::vector<ConfigEntry> KeyValueConfig::section(const std::string& name) const {
    std::vector<ConfigEntry> out;
    for (const auto& e : entries_)
        if (e.section == name) out.push_back(e);
    return out;
}

std::optional<std::string> KeyValueConfig::get(const std::string& section,
                                               const std::string& key) const {
    for (const auto& e : entries_)
        if (e.section == section && e.key == key) return e.value;
    return std::nullopt;
}

double to_double(const std::string& value, const std::string& context) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": not a number: '" + value + "'");
    }
}

long to_long(const std::string& value, const std::string& context) {
    try {
        size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(context + ": not an integer: '" + value + "'");
    }
}

bool to_bool(const std::string& value, const std::string& context) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw std::runtime_error(context + ": not a boolean: '" + value + "'");
}

namespace {

using Setter = std::function<void(RunSettings&, const std::string&)>;

const std::map<std::string, Setter>& setter_registry() {
    auto d = [](double RunSettings::* field) {
        return [field](RunSettings& s, const std::string& v) {
            s.*field = to_double(v, "setting");
        };
    };
    static const std::map<std::string, Setter> reg = {
        {"link.p_qubit_peak_dbm", d(&RunSettings::p_qubit_peak_dbm)},
        {"link.t_qubit_k", d(&RunSettings::t_qubit)},
        {"pulse.shape",
         [](RunSettings& s, const std::string& v) {
             s.pulse.shape = units::pulse_shape_from_string(v);
         }},
        {"pulse.activity",
         [](RunSettings& s, const std::string& v) { s.pulse.activity = to_double(v, "setting"); }},
        {"pulse.peak_to_avg_db",
         [](RunSettings& s, const std::string& v) {
             s.pulse.peak_to_avg_db = to_double(v, "setting");
         }},
        {"photonic.responsivity_a_per_w",
         [](RunSettings& s, const std::string& v) {
             s.photonic.responsivity = to_double(v, "setting");
         }},
        {"photonic.epsilon_m",
         [](RunSettings& s, const std::string& v) {
             s.photonic.epsilon_m = to_double(v, "setting");
         }},
        {"photonic.attenuation_below_rx_db",
         [](RunSettings& s, const std::string& v) {
             s.photonic.attenuation_below_rx_db = to_double(v, "setting");
         }},
        {"photonic.coupling_loss_db",
         [](RunSettings& s, const std::string& v) {
             s.photonic.coupling_loss_db = to_double(v, "setting");
         }},
        {"photonic.wdm_filter_loss_db",
         [](RunSettings& s, const std::string& v) {
             s.photonic.wdm_filter_loss_db = to_double(v, "setting");
         }},
        {"photonic.wdm_filter_rejection_db",
         [](RunSettings& s, const std::string& v) {
             s.photonic.wdm_filter_rejection_db = to_double(v, "setting");
         }},
        {"photonic.wdm_n_qubit",
         [](RunSettings& s, const std::string& v) {
             s.photonic.wdm_n_qubit = static_cast<int>(to_long(v, "setting"));
         }},
        {"photonic.snr_margin_db",
         [](RunSettings& s, const std::string& v) {
             s.photonic.snr_margin_db = to_double(v, "setting");
         }},
        {"noise.rin_db",
         [](RunSettings& s, const std::string& v) {
             s.photonic.tx_noise.rin_db = to_double(v, "setting");
         }},
        {"noise.v_pi_v",
         [](RunSettings& s, const std::string& v) {
             s.photonic.tx_noise.v_pi = to_double(v, "setting");
         }},
        {"noise.z_dr_ohm",
         [](RunSettings& s, const std::string& v) {
             s.photonic.tx_noise.z_dr = to_double(v, "setting");
         }},
        {"noise.t_tx_k",
         [](RunSettings& s, const std::string& v) {
             s.photonic.tx_noise.t_tx = to_double(v, "setting");
         }},
        {"noise.pn_dbc",
         [](RunSettings& s, const std::string& v) {
             s.photonic.tx_noise.pn_dbc = to_double(v, "setting");
             s.subthz.pn_dbc = s.photonic.tx_noise.pn_dbc;
         }},
        {"subthz.responsivity_a_per_w",
         [](RunSettings& s, const std::string& v) {
             s.subthz.responsivity = to_double(v, "setting");
         }},
        {"subthz.pn_dbc",
         [](RunSettings& s, const std::string& v) { s.subthz.pn_dbc = to_double(v, "setting"); }},
        {"subthz.coupler_loss_db",
         [](RunSettings& s, const std::string& v) {
             s.subthz.coupler_loss_db = to_double(v, "setting");
         }},
        {"subthz.waveguide_loss_db",
         [](RunSettings& s, const std::string& v) {
             s.subthz.waveguide_loss_db = to_double(v, "setting");
         }},
        {"subthz.attenuation_below_rx_db",
         [](RunSettings& s, const std::string& v) {
             s.subthz.attenuation_below_rx_db = to_double(v, "setting");
         }},
        {"subthz.carrier_equals_sideband",
         [](RunSettings& s, const std::string& v) {
             s.subthz.carrier_equals_sideband = to_bool(v, "setting");
         }},
        {"subthz.snr_margin_db",
         [](RunSettings& s, const std::string& v) {
             s.subthz.snr_margin_db = to_double(v, "setting");
         }},
        {"mzm.p_opt_w", d(&RunSettings::mzm_p_opt)},
        {"mzm.z_load_ohm", d(&RunSettings::mzm_z_load)},
        {"mzm.responsivity_a_per_w", d(&RunSettings::mzm_responsivity)},
        {"scaling.p_cooling_w", d(&RunSettings::p_cooling)},
        {"scaling.fiber_pitch_m", d(&RunSettings::fiber_pitch)},
        {"scaling.waveguide_pitch_m", d(&RunSettings::waveguide_pitch)},
        {"heat.coax_length_m", d(&RunSettings::coax_length)},
        {"heat.fiber_length_m", d(&RunSettings::fiber_length)},
        {"heat.waveguide_length_m", d(&RunSettings::waveguide_length)},
    };
    return reg;
}

}  // namespace

bool RunSettings::apply(const std::string& dotted_key, const std::string& value) {
    const auto& reg = setter_registry();
    const auto it = reg.find(dotted_key);
    if (it == reg.end()) return false;
    it->second(*this, value);
    return true;
}

void RunSettings::apply_config(const KeyValueConfig& cfg) {
    for (const auto& e : cfg.entries()) {
        const std::string dotted = e.section.empty() ? e.key : e.section + "." + e.key;
        if (!apply(dotted, e.value)) throw UnknownKeyError(dotted);
    }
}

std::vector<std::string> RunSettings::known_keys() {
    std::vector<std::string> out;
    for (const auto& [k, v] : setter_registry()) out.push_back(k);
    return out;
}

}  // namespace cryolink::config
