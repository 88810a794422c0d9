#include "subwave/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace subwave {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw config_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid number '" + text + "'");
    }
}

long parse_long(const std::string& text) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw config_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid integer '" + text + "'");
    }
}

std::uint64_t parse_u64(const std::string& text) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw config_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid integer '" + text + "'");
    }
}

bool parse_bool(const std::string& text) {
    if (text == "true" || text == "on" || text == "1") return true;
    if (text == "false" || text == "off" || text == "0") return false;
    throw config_error("invalid boolean '" + text + "'");
}

}  // namespace

double parse_length(const std::string& text) {
    // extended precision for the scaling so "55um" lands on the same double
    // as "5.5e-5m"
    static const std::pair<const char*, long double> suffixes[] = {
        {"nm", 1e-9L}, {"um", 1e-6L}, {"\xc2\xb5m", 1e-6L},  // µm
        {"mm", 1e-3L}, {"m", 1.0L},
    };
    const std::string t = trim(text);
    for (const auto& [suffix, scale] : suffixes) {
        const std::size_t len = std::string(suffix).size();
        if (t.size() > len && t.compare(t.size() - len, len, suffix) == 0) {
            const std::string number = trim(t.substr(0, t.size() - len));
            if (number.empty()) break;
            return static_cast<double>(
                static_cast<long double>(parse_double(number)) * scale);
        }
    }
    return parse_double(t);  // bare numbers are meters
}

DoubleSlit ExperimentConfig::slit() const {
    return DoubleSlit(slit_width, slit_separation);
}

OpticalSetup ExperimentConfig::setup() const {
    return OpticalSetup(wavelength, distance_z, amplitude);
}

GaussianSpectrum ExperimentConfig::spectrum() const {
    return GaussianSpectrum::from_normalized(normalized_bandwidth, slit());
}

QuadratureConfig ExperimentConfig::quadrature() const {
    const DoubleSlit s = slit();
    const GaussianSpectrum sp = spectrum();
    QuadratureConfig quad = QuadratureConfig::defaults_for(s, sp);
    if (quad_half_range > 0.0) quad.q_half_range = quad_half_range;
    if (quad_points > 0) quad.n_points = quad_points;
    return QuadratureConfig::make(quad.q_half_range, quad.n_points, s, sp);
}

ScanGrid ExperimentConfig::grid() const {
    return ScanGrid::uniform(grid_half_range, grid_points);
}

DetectionModel ExperimentConfig::detection() const {
    return DetectionModel{delta, eta, detector_width, detection_mode};
}

MonteCarloConfig ExperimentConfig::monte_carlo() const {
    MonteCarloConfig mc;
    mc.n_realizations = mc_realizations;
    mc.seed = mc_seed;
    mc.n_modes = mc_modes;
    mc.q_half_range = mc_half_range_factor * spectrum().bandwidth;
    mc.threads = threads;
    return mc;
}

void validate(const ExperimentConfig& config) {
    auto fail = [](const std::string& key, const std::string& what) {
        throw config_error("config key '" + key + "': " + what);
    };
    if (!(config.slit_width > 0.0)) fail("slit_width", "must be > 0");
    if (!(config.slit_separation >= config.slit_width))
        fail("slit_separation", "must be >= slit_width (slits may not overlap)");
    if (!(config.wavelength > 0.0)) fail("wavelength", "must be > 0");
    if (!(config.distance_z > 0.0)) fail("distance_z", "must be > 0");
    if (!(config.amplitude > 0.0)) fail("amplitude", "must be > 0");
    if (!(config.normalized_bandwidth > 0.0))
        fail("normalized_bandwidth", "must be > 0");
    if (!(config.grid_half_range > 0.0)) fail("grid_half_range", "must be > 0");
    if (config.grid_points < 2) fail("grid_points", "must be >= 2");
    if (!(config.delta >= 0.0)) fail("delta", "must be >= 0");
    if (!(config.eta > 0.0 && config.eta <= 1.0)) fail("eta", "must be in (0, 1]");
    if (!(config.detector_width >= 0.0)) fail("detector_width", "must be >= 0");
    if (config.mc_realizations < 2) fail("mc_realizations", "must be >= 2");
    if (config.mc_modes < 2) fail("mc_modes", "must be >= 2");
    if (!(config.mc_half_range_factor > 0.0))
        fail("mc_half_range_factor", "must be > 0");
    if (config.threads < 0) fail("threads", "must be >= 0");
    if (config.quad_half_range < 0.0) fail("quad_half_range", "must be >= 0");
    if (config.quad_points < 0) fail("quad_points", "must be >= 0");
    if (config.quad_points > 0 && config.quad_points % 2 == 0)
        fail("quad_points", "must be odd");
}

namespace {

SourceKind parse_source(const std::string& v) {
    if (v == "thermal") return SourceKind::thermal;
    if (v == "coherent") return SourceKind::coherent;
    throw config_error("expected thermal|coherent, got '" + v + "'");
}

ScanMode parse_scan_mode(const std::string& v) {
    if (v == "intensity") return ScanMode::intensity;
    if (v == "antisymmetric") return ScanMode::antisymmetric;
    if (v == "symmetric") return ScanMode::symmetric;
    if (v == "fixed_zero") return ScanMode::fixed_zero;
    throw config_error(
        "expected intensity|antisymmetric|symmetric|fixed_zero, got '" + v + "'");
}

CurveKind parse_kind(const std::string& v) {
    if (v == "G1") return CurveKind::G1;
    if (v == "G2") return CurveKind::G2;
    if (v == "g2") return CurveKind::g2;
    throw config_error("expected G1|G2|g2, got '" + v + "'");
}

DetectionMode parse_detection_mode(const std::string& v) {
    if (v == "fluctuation_scaled") return DetectionMode::fluctuation_scaled;
    if (v == "literal") return DetectionMode::literal;
    throw config_error("expected fluctuation_scaled|literal, got '" + v + "'");
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
    ExperimentConfig config;

    using Setter = std::function<void(ExperimentConfig&, const std::string&)>;
    static const std::map<std::string, Setter> setters = {
        {"slit_width", [](auto& c, auto& v) { c.slit_width = parse_length(v); }},
        {"slit_separation",
         [](auto& c, auto& v) { c.slit_separation = parse_length(v); }},
        {"wavelength", [](auto& c, auto& v) { c.wavelength = parse_length(v); }},
        {"distance_z", [](auto& c, auto& v) { c.distance_z = parse_length(v); }},
        {"amplitude", [](auto& c, auto& v) { c.amplitude = parse_double(v); }},
        {"source", [](auto& c, auto& v) { c.source = parse_source(v); }},
        {"normalized_bandwidth",
         [](auto& c, auto& v) { c.normalized_bandwidth = parse_double(v); }},
        {"scan_mode", [](auto& c, auto& v) { c.scan_mode = parse_scan_mode(v); }},
        {"curve_kind", [](auto& c, auto& v) { c.curve_kind = parse_kind(v); }},
        {"grid_half_range",
         [](auto& c, auto& v) { c.grid_half_range = parse_length(v); }},
        {"grid_points",
         [](auto& c, auto& v) { c.grid_points = static_cast<int>(parse_long(v)); }},
        {"delta", [](auto& c, auto& v) { c.delta = parse_double(v); }},
        {"eta", [](auto& c, auto& v) { c.eta = parse_double(v); }},
        {"detector_width",
         [](auto& c, auto& v) { c.detector_width = parse_length(v); }},
        {"detection_mode",
         [](auto& c, auto& v) { c.detection_mode = parse_detection_mode(v); }},
        {"apply_detection",
         [](auto& c, auto& v) { c.apply_detection = parse_bool(v); }},
        {"mc_realizations",
         [](auto& c, auto& v) {
             c.mc_realizations = parse_long(v);
             c.has_mc = true;
         }},
        {"mc_seed",
         [](auto& c, auto& v) {
             c.mc_seed = parse_u64(v);
             c.has_mc = true;
         }},
        {"mc_modes",
         [](auto& c, auto& v) {
             c.mc_modes = static_cast<int>(parse_long(v));
             c.has_mc = true;
         }},
        {"mc_half_range_factor",
         [](auto& c, auto& v) {
             c.mc_half_range_factor = parse_double(v);
             c.has_mc = true;
         }},
        {"threads",
         [](auto& c, auto& v) { c.threads = static_cast<int>(parse_long(v)); }},
        {"quad_half_range",
         [](auto& c, auto& v) { c.quad_half_range = parse_length(v); }},
        {"quad_points",
         [](auto& c, auto& v) { c.quad_points = static_cast<int>(parse_long(v)); }},
    };

    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");

        const auto it = setters.find(key);
        if (it == setters.end())
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
        if (!seen.insert(key).second)
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": duplicate key '" + key + "'");
        try {
            it->second(config, value);
        } catch (const config_error& e) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": key '" +
                               key + "': " + e.what());
        }
    }

    validate(config);
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

namespace {

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

std::vector<std::string> config_lines(const ExperimentConfig& c) {
    std::vector<std::string> lines;
    auto add = [&lines](const std::string& key, const std::string& value) {
        lines.push_back(key + " = " + value);
    };
    add("slit_width", format_value(c.slit_width));
    add("slit_separation", format_value(c.slit_separation));
    add("wavelength", format_value(c.wavelength));
    add("distance_z", format_value(c.distance_z));
    add("amplitude", format_value(c.amplitude));
    add("source", to_string(c.source));
    add("normalized_bandwidth", format_value(c.normalized_bandwidth));
    add("scan_mode", to_string(c.scan_mode));
    add("curve_kind", to_string(c.curve_kind));
    add("grid_half_range", format_value(c.grid_half_range));
    add("grid_points", std::to_string(c.grid_points));
    add("delta", format_value(c.delta));
    add("eta", format_value(c.eta));
    add("detector_width", format_value(c.detector_width));
    add("detection_mode", to_string(c.detection_mode));
    add("apply_detection", c.apply_detection ? "true" : "false");
    if (c.has_mc) {
        add("mc_realizations", std::to_string(c.mc_realizations));
        add("mc_seed", std::to_string(c.mc_seed));
        add("mc_modes", std::to_string(c.mc_modes));
        add("mc_half_range_factor", format_value(c.mc_half_range_factor));
    }
    // threads deliberately omitted: output must not depend on parallelism
    if (c.quad_half_range > 0.0) add("quad_half_range", format_value(c.quad_half_range));
    if (c.quad_points > 0) add("quad_points", std::to_string(c.quad_points));
    return lines;
}

}  // namespace subwave
