#pragma once

#include <string>
#include <vector>

#include "subwave/config.hpp"

namespace subwave {

/// One computed preset curve and the file stem it should be written under.
struct PresetResult {
    std::string name;
    CorrelationCurve curve;
    ExperimentConfig effective;  ///< config after the preset's overrides
};

/// Built-in scenario presets. Geometry, grid and detection parameters come
/// from the base config; each preset pins source, scan mode, curve kind,
/// whether the detection model is applied, and (for the two wide-band
/// presets) the normalized bandwidth:
///
///   fig1a/fig1b/fig1c  G2(x,-x)  thermal wide (10) / thermal / coherent
///   fig1d/fig1e/fig1f  g2(x,-x)  same three sources
///   fig3a/fig3b        intensity thermal / coherent
///   fig4a              g2(x,-x)  thermal, detection model applied
///   fig4b/fig4c        G2(x,-x)  thermal / coherent
///   fig5a              g2(x,x)   thermal, detection model applied
///   fig5b              G2(x,x)   coherent
///   fig6               g2(x,0)   thermal, detection model applied
std::vector<std::string> preset_ids();

bool is_preset(const std::string& id);

/// Compute the preset curve. Throws config_error for unknown ids.
PresetResult run_figure_preset(const ExperimentConfig& base, const std::string& id);

/// Compute a plain scan from the config (kind, mode, source, optional
/// detection model when apply_detection is set).
PresetResult run_scan(const ExperimentConfig& config);

}  // namespace subwave
