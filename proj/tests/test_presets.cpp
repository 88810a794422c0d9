#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "subwave/detection.hpp"
#include "subwave/presets.hpp"

using namespace subwave;

namespace {

ExperimentConfig small_base() {
    ExperimentConfig config;
    config.grid_points = 121;
    config.grid_half_range = 4.5e-3;
    return config;
}

}  // namespace

TEST_CASE("every preset id computes a finite curve over the configured grid") {
    const ExperimentConfig base = small_base();
    const auto ids = preset_ids();
    REQUIRE(ids.size() == 14);
    for (const auto& id : ids) {
        const PresetResult result = run_figure_preset(base, id);
        CHECK(result.name == id);
        REQUIRE(result.curve.values.size() == 121);
        for (double v : result.curve.values) {
            CHECK(std::isfinite(v));
            CHECK(v >= 0.0);
        }
    }
    CHECK(is_preset("fig4a"));
    CHECK_FALSE(is_preset("fig2"));
    CHECK_THROWS_AS(run_figure_preset(base, "fig2"), config_error);
}

TEST_CASE("wide-band presets pin the normalized bandwidth to 10") {
    const ExperimentConfig base = small_base();
    CHECK(run_figure_preset(base, "fig1a").effective.normalized_bandwidth == 10.0);
    CHECK(run_figure_preset(base, "fig1d").effective.normalized_bandwidth == 10.0);
    CHECK(run_figure_preset(base, "fig1e").effective.normalized_bandwidth == 0.52);
}

TEST_CASE("fig1d oscillates between about 1 and 2") {
    const PresetResult r = run_figure_preset(small_base(), "fig1d");
    const auto [lo, hi] =
        std::minmax_element(r.curve.values.begin(), r.curve.values.end());
    CHECK(*lo >= 1.0);
    CHECK(*lo <= 1.001);
    CHECK(*hi == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(find_peaks(r.curve.values).size() >= 5);
}

TEST_CASE("fig5a is flat: coincident-point correlation carries no fringe") {
    const PresetResult r = run_figure_preset(small_base(), "fig5a");
    const auto [lo, hi] =
        std::minmax_element(r.curve.values.begin(), r.curve.values.end());
    CHECK(*hi - *lo < 1e-6);
    // the detection model maps the flat ideal 2 to 1 + delta + eta^2
    CHECK(*hi == doctest::Approx(1.4756).epsilon(1e-12));
}

TEST_CASE("fig6 shows the one-photon period, not the halved one") {
    const ExperimentConfig base = small_base();
    const double p_fixed = fringe_period(run_figure_preset(base, "fig6").curve);
    const double p_anti = fringe_period(run_figure_preset(base, "fig4a").curve);
    const double p_coherent = fringe_period(run_figure_preset(base, "fig3b").curve);
    CHECK(p_fixed / p_anti == doctest::Approx(2.0).epsilon(0.05));
    CHECK(p_fixed / p_coherent == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("scan results carry a descriptive name and honor apply_detection") {
    ExperimentConfig config = small_base();
    config.apply_detection = true;
    const PresetResult modified = run_scan(config);
    CHECK(modified.name == "scan_g2_antisymmetric");
    CHECK(modified.curve.values[60] == doctest::Approx(1.4756).epsilon(1e-12));

    config.curve_kind = CurveKind::G2;
    CHECK_THROWS_AS(run_scan(config), config_error);
}
