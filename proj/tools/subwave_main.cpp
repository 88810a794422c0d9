#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "subwave/config.hpp"
#include "subwave/csv.hpp"
#include "subwave/detection.hpp"
#include "subwave/montecarlo.hpp"
#include "subwave/presets.hpp"

namespace fs = std::filesystem;
using namespace subwave;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    int threads = -1;  // -1 = keep config value
    bool emit_plotscript = false;
};

ExperimentConfig load_effective(const CommonArgs& args) {
    ExperimentConfig config;
    if (!args.config_path.empty()) config = load_config(args.config_path);
    if (args.threads >= 0) config.threads = args.threads;
    return config;
}

fs::path write_result(const PresetResult& result, const CommonArgs& args,
                      std::optional<std::uint64_t> seed = std::nullopt) {
    fs::create_directories(args.out_dir);
    const fs::path path = fs::path(args.out_dir) / (result.name + ".csv");
    write_curve_csv(path, result.curve, config_lines(result.effective), seed);
    std::cout << "wrote " << path.string() << "\n";
    if (args.emit_plotscript) {
        const fs::path script = fs::path(args.out_dir) / (result.name + ".gp");
        write_plot_script(script, {path});
        std::cout << "wrote " << script.string() << "\n";
    }
    return path;
}

int cmd_figure(const CommonArgs& args, const std::string& preset_id) {
    const ExperimentConfig base = load_effective(args);
    write_result(run_figure_preset(base, preset_id), args);
    return 0;
}

int cmd_scan(const CommonArgs& args) {
    const ExperimentConfig config = load_effective(args);
    write_result(run_scan(config), args);
    return 0;
}

int cmd_validate(const CommonArgs& args) {
    const ExperimentConfig config = load_effective(args);
    if (!config.has_mc)
        throw config_error(
            "validate needs a Monte-Carlo block; set mc_realizations (and "
            "optionally mc_seed) in the config");

    const auto setup = config.setup();
    const auto slit = config.slit();
    const auto spectrum = config.spectrum();
    const auto grid = config.grid();

    const EstimateCurve mc =
        estimate(setup, slit, spectrum, grid, config.curve_kind, config.scan_mode,
                 config.source, config.monte_carlo());
    const CorrelationCurve reference =
        scan(setup, slit, spectrum, config.quadrature(), grid, config.curve_kind,
             config.scan_mode, config.source);
    const ComparisonReport report = compare_with_quadrature(mc, reference);

    fs::create_directories(args.out_dir);
    const auto headers = config_lines(config);
    const fs::path est_path = fs::path(args.out_dir) / "validate_estimate.csv";
    write_curve_csv(est_path, mc.as_curve(), headers, config.mc_seed);
    const fs::path ref_path = fs::path(args.out_dir) / "validate_reference.csv";
    write_curve_csv(ref_path, reference, headers);
    CorrelationCurve zcurve{grid, report.z_scores, {}, config.curve_kind,
                            config.scan_mode};
    const fs::path z_path = fs::path(args.out_dir) / "validate_zscores.csv";
    write_curve_csv(z_path, zcurve, headers, config.mc_seed);

    std::cout << "monte carlo vs quadrature (" << to_string(config.curve_kind)
              << ", " << to_string(config.scan_mode) << ", n=" << mc.n_realizations
              << ", seed=" << config.mc_seed << ")\n"
              << "  grid points:        " << grid.size() << "\n"
              << "  max |z|:            " << report.max_abs_z << "\n"
              << "  within 3 sigma:     " << report.fraction_within_3sigma * 100.0
              << "%\n"
              << "wrote " << est_path.string() << "\n"
              << "wrote " << ref_path.string() << "\n"
              << "wrote " << z_path.string() << "\n";
    if (!report.passed()) {
        std::cout << "FAIL: fewer than 99% of points within 3 sigma\n";
        return 2;
    }
    std::cout << "PASS: at least 99% of points within 3 sigma\n";
    return 0;
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); }

bool matches_reference_bench(const ExperimentConfig& c) {
    const ExperimentConfig d;
    return near(c.slit_width, d.slit_width) &&
           near(c.slit_separation, d.slit_separation) &&
           near(c.wavelength, d.wavelength) && near(c.distance_z, d.distance_z) &&
           near(c.normalized_bandwidth, d.normalized_bandwidth) &&
           near(c.delta, d.delta) && near(c.eta, d.eta) &&
           c.detection_mode == DetectionMode::fluctuation_scaled;
}

int cmd_visibility(const CommonArgs& args) {
    const ExperimentConfig config = load_effective(args);
    const PresetResult result = run_scan(config);
    const VisibilityResult vis = visibility(result.curve);

    std::cout << "curve: " << to_string(config.curve_kind) << "("
              << to_string(config.scan_mode) << "), " << to_string(config.source)
              << (config.apply_detection ? ", detection model applied" : "") << "\n"
              << "visibility: " << format_sig9(vis.v) << "\n"
              << "maximum at x = " << format_sig9(vis.x_max) << " m\n"
              << "minimum at x = " << format_sig9(vis.x_min) << " m\n"
              << "window: [" << format_sig9(vis.window.lo) << ", "
              << format_sig9(vis.window.hi) << "] m\n";
    if (matches_reference_bench(config) && config.source == SourceKind::thermal &&
        config.curve_kind == CurveKind::g2 &&
        config.scan_mode == ScanMode::antisymmetric && config.apply_detection)
        std::cout << "reference experimental value: 0.214\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-slit correlation simulator for pseudo-thermal light"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string preset_id;

    auto add_common = [&args](CLI::App* sub, bool with_out) {
        sub->add_option("--config", args.config_path,
                        "configuration file (key = value lines)");
        if (with_out)
            sub->add_option("--out", args.out_dir, "output directory")
                ->default_str(".");
        sub->add_option("--threads", args.threads,
                        "worker threads for Monte-Carlo runs (0 = all cores)");
    };

    CLI::App* fig = app.add_subcommand("figure", "compute a preset curve and write CSV");
    fig->add_option("id", preset_id, "preset id, one of fig1a..fig1f, fig3a, fig3b, "
                                     "fig4a..fig4c, fig5a, fig5b, fig6")
        ->required();
    add_common(fig, true);
    fig->add_flag("--emit-plotscript", args.emit_plotscript,
                  "also write a gnuplot script next to the CSV");

    CLI::App* scn = app.add_subcommand("scan", "compute the configured scan and write CSV");
    add_common(scn, true);
    scn->add_flag("--emit-plotscript", args.emit_plotscript,
                  "also write a gnuplot script next to the CSV");

    CLI::App* val = app.add_subcommand(
        "validate", "cross-check the Monte-Carlo estimator against quadrature");
    add_common(val, true);

    CLI::App* vis = app.add_subcommand("visibility", "report the central-fringe visibility");
    add_common(vis, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1
    }

    try {
        if (fig->parsed()) return cmd_figure(args, preset_id);
        if (scn->parsed()) return cmd_scan(args);
        if (val->parsed()) return cmd_validate(args);
        if (vis->parsed()) return cmd_visibility(args);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
