#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "subwave/detection.hpp"
#include "subwave/montecarlo.hpp"
#include "subwave/quadrature.hpp"

namespace subwave {

/// Configuration or usage problem; maps to CLI exit code 1.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full experiment description. Defaults are the reference bench:
/// He-Ne 632.8 nm, b = 55 um, d = 100 um, z = 550 mm, wb/(2*pi) = 0.52,
/// delta = 0.04, eta = 0.66.
struct ExperimentConfig {
    // geometry & optics (SI meters internally)
    double slit_width = 55e-6;
    double slit_separation = 100e-6;
    double wavelength = 632.8e-9;
    double distance_z = 0.55;
    double amplitude = 1.0;

    // source
    SourceKind source = SourceKind::thermal;
    double normalized_bandwidth = 0.52;  ///< w*b/(2*pi)

    // scan
    ScanMode scan_mode = ScanMode::antisymmetric;
    CurveKind curve_kind = CurveKind::g2;
    double grid_half_range = 5.5e-3;
    int grid_points = 221;

    // detection chain
    double delta = 0.04;
    double eta = 0.66;
    double detector_width = 0.0;
    DetectionMode detection_mode = DetectionMode::fluctuation_scaled;
    bool apply_detection = false;

    // Monte-Carlo (optional block; has_mc records whether any mc_* key was set)
    bool has_mc = false;
    long mc_realizations = 100000;
    std::uint64_t mc_seed = 987654321;
    int mc_modes = 257;
    double mc_half_range_factor = 8.0;  ///< mode-grid half range, in units of w

    int threads = 0;

    // quadrature overrides (0 = automatic rule)
    double quad_half_range = 0.0;
    int quad_points = 0;

    // builders for the domain types
    DoubleSlit slit() const;
    OpticalSetup setup() const;
    GaussianSpectrum spectrum() const;
    QuadratureConfig quadrature() const;
    ScanGrid grid() const;
    DetectionModel detection() const;
    MonteCarloConfig monte_carlo() const;
};

/// Parse and validate a flat `key = value` file ('#' comments, unit suffixes
/// nm/um/µm/mm/m on lengths). Unknown and duplicate keys are rejected by
/// name; an empty file yields the full default configuration.
ExperimentConfig load_config(const std::string& path);

/// Same, from a stream; `origin` names the source in error messages.
ExperimentConfig parse_config(std::istream& in, const std::string& origin);

/// Validate field ranges, naming the offending key.
void validate(const ExperimentConfig& config);

/// One `key = value` line per field, in file order; used for CSV headers.
std::vector<std::string> config_lines(const ExperimentConfig& config);

/// Parse a length with an optional nm/um/µm/mm/m suffix into meters.
double parse_length(const std::string& text);

}  // namespace subwave
