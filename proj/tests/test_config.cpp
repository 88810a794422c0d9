#include <sstream>
#include <string>

#include "doctest.h"
#include "subwave/config.hpp"

using namespace subwave;

namespace {

ExperimentConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "test");
}

}  // namespace

TEST_CASE("an empty file yields the full bench-default configuration") {
    const ExperimentConfig c = parse("");
    CHECK(c.slit_width == 55e-6);
    CHECK(c.slit_separation == 100e-6);
    CHECK(c.wavelength == 632.8e-9);
    CHECK(c.distance_z == 0.55);
    CHECK(c.normalized_bandwidth == 0.52);
    CHECK(c.delta == 0.04);
    CHECK(c.eta == 0.66);
    CHECK(c.source == SourceKind::thermal);
    CHECK(c.scan_mode == ScanMode::antisymmetric);
    CHECK(c.curve_kind == CurveKind::g2);
    CHECK(c.grid_half_range == 5.5e-3);
    CHECK(c.grid_points == 221);
    CHECK(c.detection_mode == DetectionMode::fluctuation_scaled);
    CHECK_FALSE(c.apply_detection);
    CHECK_FALSE(c.has_mc);
}

TEST_CASE("unit suffixes normalize to meters") {
    CHECK(parse_length("632.8nm") == 632.8e-9);
    CHECK(parse_length("55um") == 55e-6);
    CHECK(parse_length("55\xc2\xb5m") == 55e-6);  // µm
    CHECK(parse_length("550mm") == 0.55);
    CHECK(parse_length("0.55m") == 0.55);
    CHECK(parse_length("5.5e-5") == 5.5e-5);
    CHECK_THROWS_AS(parse_length("55xm"), config_error);
    CHECK_THROWS_AS(parse_length("m"), config_error);

    const ExperimentConfig a = parse("slit_width = 55um\n");
    const ExperimentConfig b = parse("slit_width = 5.5e-5m\n");
    CHECK(a.slit_width == b.slit_width);
}

TEST_CASE("validation failures name the offending key") {
    CHECK_THROWS_WITH_AS(parse("slit_width = 0\n"),
                         doctest::Contains("slit_width"), config_error);
    CHECK_THROWS_WITH_AS(parse("slit_separation = 10um\n"),
                         doctest::Contains("slit_separation"), config_error);
    CHECK_THROWS_WITH_AS(parse("eta = 1.5\n"), doctest::Contains("eta"), config_error);
    CHECK_THROWS_WITH_AS(parse("grid_points = 1\n"),
                         doctest::Contains("grid_points"), config_error);
    CHECK_THROWS_WITH_AS(parse("quad_points = 100\n"),
                         doctest::Contains("quad_points"), config_error);
}

TEST_CASE("unknown and duplicate keys are rejected with their name") {
    CHECK_THROWS_WITH_AS(parse("bogus_key = 1\n"),
                         doctest::Contains("unknown key 'bogus_key'"), config_error);
    CHECK_THROWS_WITH_AS(parse("eta = 0.5\neta = 0.6\n"),
                         doctest::Contains("duplicate key 'eta'"), config_error);
}

TEST_CASE("parse errors carry the line number") {
    CHECK_THROWS_WITH_AS(parse("\n\nslit_width 55um\n"), doctest::Contains(":3:"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse("delta = \n"), doctest::Contains(":1:"), config_error);
}

TEST_CASE("comments and blank lines are ignored") {
    const ExperimentConfig c = parse(
        "# full-line comment\n"
        "\n"
        "  slit_width = 60um   # trailing comment\n"
        "source = coherent\n");
    CHECK(c.slit_width == 60e-6);
    CHECK(c.source == SourceKind::coherent);
}

TEST_CASE("enumeration keys accept only their listed values") {
    CHECK(parse("scan_mode = fixed_zero\n").scan_mode == ScanMode::fixed_zero);
    CHECK(parse("curve_kind = G2\n").curve_kind == CurveKind::G2);
    CHECK(parse("detection_mode = literal\n").detection_mode == DetectionMode::literal);
    CHECK_THROWS_WITH_AS(parse("source = laser\n"), doctest::Contains("thermal"),
                         config_error);
    CHECK_THROWS_WITH_AS(parse("curve_kind = g1\n"), doctest::Contains("G1"),
                         config_error);
}

TEST_CASE("monte-carlo keys mark the block as present") {
    const ExperimentConfig c = parse("mc_realizations = 5000\nmc_seed = 42\n");
    CHECK(c.has_mc);
    CHECK(c.mc_realizations == 5000);
    CHECK(c.mc_seed == 42);
    CHECK_THROWS_WITH_AS(parse("mc_realizations = 1\n"),
                         doctest::Contains("mc_realizations"), config_error);
}

TEST_CASE("derived builders honor the config") {
    ExperimentConfig c = parse("normalized_bandwidth = 0.52\n");
    CHECK(c.spectrum().normalized(c.slit()) == doctest::Approx(0.52).epsilon(1e-14));
    const QuadratureConfig quad = c.quadrature();
    CHECK(quad.step() <= resolution_limit(c.slit(), c.spectrum()) / 2.0 * 1.000001);

    c.quad_points = 2001;
    c.quad_half_range = 9e5;
    const QuadratureConfig manual = c.quadrature();
    CHECK(manual.n_points == 2001);
    CHECK(manual.q_half_range == 9e5);

    c.quad_points = 9;  // far too coarse for the bandwidth
    CHECK_THROWS_AS(c.quadrature(), std::invalid_argument);
}

TEST_CASE("missing config files are a config error") {
    CHECK_THROWS_WITH_AS(load_config("/nonexistent/subwave.cfg"),
                         doctest::Contains("cannot open"), config_error);
}

TEST_CASE("config echo lines parse back to the same configuration") {
    ExperimentConfig c;
    c.has_mc = true;
    std::string text;
    for (const auto& line : config_lines(c)) text += line + "\n";
    const ExperimentConfig back = parse(text);
    CHECK(back.slit_width == c.slit_width);
    CHECK(back.wavelength == c.wavelength);
    CHECK(back.normalized_bandwidth == c.normalized_bandwidth);
    CHECK(back.mc_seed == c.mc_seed);
    CHECK(back.grid_points == c.grid_points);
}
