#include "subwave/presets.hpp"

#include <algorithm>

#include "subwave/detection.hpp"

namespace subwave {

namespace {

struct PresetSpec {
    const char* id;
    SourceKind source;
    CurveKind kind;
    ScanMode mode;
    bool modified;        // apply the (delta, eta) detection model
    double bandwidth;     // normalized, 0 = take from config
};

constexpr PresetSpec preset_table[] = {
    {"fig1a", SourceKind::thermal, CurveKind::G2, ScanMode::antisymmetric, false, 10.0},
    {"fig1b", SourceKind::thermal, CurveKind::G2, ScanMode::antisymmetric, false, 0.0},
    {"fig1c", SourceKind::coherent, CurveKind::G2, ScanMode::antisymmetric, false, 0.0},
    {"fig1d", SourceKind::thermal, CurveKind::g2, ScanMode::antisymmetric, false, 10.0},
    {"fig1e", SourceKind::thermal, CurveKind::g2, ScanMode::antisymmetric, false, 0.0},
    {"fig1f", SourceKind::coherent, CurveKind::g2, ScanMode::antisymmetric, false, 0.0},
    {"fig3a", SourceKind::thermal, CurveKind::G1, ScanMode::intensity, false, 0.0},
    {"fig3b", SourceKind::coherent, CurveKind::G1, ScanMode::intensity, false, 0.0},
    {"fig4a", SourceKind::thermal, CurveKind::g2, ScanMode::antisymmetric, true, 0.0},
    {"fig4b", SourceKind::thermal, CurveKind::G2, ScanMode::antisymmetric, false, 0.0},
    {"fig4c", SourceKind::coherent, CurveKind::G2, ScanMode::antisymmetric, false, 0.0},
    {"fig5a", SourceKind::thermal, CurveKind::g2, ScanMode::symmetric, true, 0.0},
    {"fig5b", SourceKind::coherent, CurveKind::G2, ScanMode::symmetric, false, 0.0},
    {"fig6", SourceKind::thermal, CurveKind::g2, ScanMode::fixed_zero, true, 0.0},
};

PresetResult compute(const ExperimentConfig& config, const std::string& name) {
    if (config.apply_detection && config.curve_kind != CurveKind::g2)
        throw config_error(
            "config key 'apply_detection': detection model requires curve_kind = g2");
    CorrelationCurve curve =
        scan(config.setup(), config.slit(), config.spectrum(), config.quadrature(),
             config.grid(), config.curve_kind, config.scan_mode, config.source);
    if (config.apply_detection) {
        curve = apply_detection_model(curve, config.detection());
        if (config.detector_width > 0.0)
            curve = finite_detector_average(curve, config.detector_width);
    }
    return PresetResult{name, std::move(curve), config};
}

}  // namespace

std::vector<std::string> preset_ids() {
    std::vector<std::string> ids;
    for (const auto& p : preset_table) ids.emplace_back(p.id);
    return ids;
}

bool is_preset(const std::string& id) {
    return std::any_of(std::begin(preset_table), std::end(preset_table),
                       [&](const PresetSpec& p) { return id == p.id; });
}

PresetResult run_figure_preset(const ExperimentConfig& base, const std::string& id) {
    const auto it = std::find_if(std::begin(preset_table), std::end(preset_table),
                                 [&](const PresetSpec& p) { return id == p.id; });
    if (it == std::end(preset_table))
        throw config_error("unknown figure preset '" + id + "'");

    ExperimentConfig config = base;
    config.source = it->source;
    config.curve_kind = it->kind;
    config.scan_mode = it->mode;
    config.apply_detection = it->modified;
    if (it->bandwidth > 0.0) config.normalized_bandwidth = it->bandwidth;
    return compute(config, id);
}

PresetResult run_scan(const ExperimentConfig& config) {
    return compute(config, "scan_" + to_string(config.curve_kind) + "_" +
                               to_string(config.scan_mode));
}

}  // namespace subwave
