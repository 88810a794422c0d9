#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include "doctest.h"
#include "subwave/detection.hpp"

using namespace subwave;

namespace {

constexpr double pi = std::numbers::pi;

CorrelationCurve make_curve(std::vector<double> values, double half_range,
                            CurveKind kind = CurveKind::g2) {
    const int n = static_cast<int>(values.size());
    return CorrelationCurve{ScanGrid::uniform(half_range, n), std::move(values), {},
                            kind, ScanMode::antisymmetric};
}

// cos^2 fringe of the given period, maximum at x = 0, values in [lo, lo+amp]
CorrelationCurve cos2_fringe(double period, int n, double half_range,
                             double lo = 0.0, double amp = 1.0) {
    std::vector<double> values(static_cast<std::size_t>(n));
    const ScanGrid grid = ScanGrid::uniform(half_range, n);
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(pi * grid[static_cast<std::size_t>(i)] / period);
        values[static_cast<std::size_t>(i)] = lo + amp * c * c;
    }
    return CorrelationCurve{grid, std::move(values), {}, CurveKind::g2,
                            ScanMode::antisymmetric};
}

const DetectionModel bench_model{0.04, 0.66, 0.0, DetectionMode::fluctuation_scaled};

}  // namespace

TEST_CASE("detection model validates its parameters") {
    CHECK_THROWS_AS((DetectionModel{0.04, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((DetectionModel{0.04, 1.2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((DetectionModel{-0.1, 0.66}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((DetectionModel{0.04, 0.66, -1e-3}).validate(),
                    std::invalid_argument);
}

TEST_CASE("ideal parameters leave the curve untouched in fluctuation mode") {
    const auto curve = cos2_fringe(1e-3, 101, 2e-3, 1.0);
    const auto out = apply_detection_model(curve, DetectionModel{0.0, 1.0});
    CHECK(out.values == curve.values);
}

TEST_CASE("bench parameters map the chaotic peak to 1.4756") {
    auto curve = make_curve({1.0, 2.0, 1.0}, 1e-3);
    const auto fluct = apply_detection_model(curve, bench_model);
    CHECK(fluct.values[1] == doctest::Approx(1.4756).epsilon(1e-12));
    CHECK(fluct.values[0] == doctest::Approx(1.04).epsilon(1e-12));

    DetectionModel literal = bench_model;
    literal.mode = DetectionMode::literal;
    const auto lit = apply_detection_model(curve, literal);
    CHECK(lit.values[0] == doctest::Approx(1.4756).epsilon(1e-12));  // g = 1 baseline
    CHECK(lit.values[1] == doctest::Approx(1.9112).epsilon(1e-12));  // g = 2
}

TEST_CASE("detection model rejects unnormalized curves and scales errors") {
    auto g2curve = make_curve({1.0, 2.0, 1.0}, 1e-3);
    g2curve.stderrs = {0.1, 0.2, 0.1};
    const auto out = apply_detection_model(g2curve, bench_model);
    CHECK(out.stderrs[1] == doctest::Approx(0.2 * 0.66 * 0.66).epsilon(1e-12));

    const auto raw = make_curve({1.0, 2.0, 1.0}, 1e-3, CurveKind::G2);
    CHECK_THROWS_AS(apply_detection_model(raw, bench_model), std::invalid_argument);
}

TEST_CASE("detection model is affine: extremum positions survive") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> dist(1.0, 2.0);
    std::vector<double> values(81);
    for (double& v : values) v = dist(gen);
    const auto curve = make_curve(std::move(values), 4e-3);
    const auto out = apply_detection_model(curve, bench_model);
    const auto argmax = [](const std::vector<double>& v) {
        return std::distance(v.begin(), std::max_element(v.begin(), v.end()));
    };
    const auto argmin = [](const std::vector<double>& v) {
        return std::distance(v.begin(), std::min_element(v.begin(), v.end()));
    };
    CHECK(argmax(out.values) == argmax(curve.values));
    CHECK(argmin(out.values) == argmin(curve.values));
    CHECK(find_peaks(out.values) == find_peaks(curve.values));
}

TEST_CASE("zero-width averaging is the identity and constants are preserved") {
    const auto curve = cos2_fringe(1e-3, 201, 2.5e-3, 0.5);
    const auto same = finite_detector_average(curve, 0.0);
    CHECK(same.values == curve.values);

    const auto flat = make_curve(std::vector<double>(101, 1.7), 2e-3);
    const auto averaged = finite_detector_average(flat, 0.8e-3);
    for (double v : averaged.values) CHECK(v == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("half-period top-hat attenuates a cos^2 fringe by 2/pi") {
    const double period = 1e-3;
    const auto curve = cos2_fringe(period, 2001, 2.5e-3);
    const auto averaged = finite_detector_average(curve, period / 2.0);
    const double v0 = visibility(curve).v;
    const double v1 = visibility(averaged).v;
    CHECK(v0 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(v1 / v0 == doctest::Approx(2.0 / pi).epsilon(1e-3));
}

TEST_CASE("averaging never increases the fringe visibility") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> period(0.4e-3, 2e-3);
    std::uniform_real_distribution<double> offset(0.0, 1.5);
    std::uniform_real_distribution<double> widths(0.05e-3, 1.5e-3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto curve = cos2_fringe(period(gen), 1201, 3e-3, offset(gen));
        const Window win = central_fringe_window(curve);
        const auto averaged = finite_detector_average(curve, widths(gen));
        CHECK(visibility(averaged, win).v <= visibility(curve, win).v + 1e-12);
    }
}

TEST_CASE("width validation for the top-hat") {
    const auto curve = cos2_fringe(1e-3, 101, 2e-3);
    CHECK_THROWS_AS(finite_detector_average(curve, 5e-3), std::invalid_argument);
    CHECK_THROWS_AS(finite_detector_average(curve, -1e-3), std::invalid_argument);
}

TEST_CASE("detection model and top-hat averaging commute") {
    const auto curve = cos2_fringe(1.2e-3, 401, 3e-3, 1.0);
    const double width = 0.4e-3;
    const auto a = finite_detector_average(apply_detection_model(curve, bench_model), width);
    const auto b = apply_detection_model(finite_detector_average(curve, width), bench_model);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
}

TEST_CASE("visibility of a fringe touching zero is 1") {
    const auto curve = cos2_fringe(1e-3, 801, 2e-3);
    const auto vis = visibility(curve);
    CHECK(vis.v == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(vis.x_max == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(std::abs(vis.x_min) == doctest::Approx(0.5e-3).epsilon(0.02));
}

TEST_CASE("constant curves have no fringe") {
    const auto flat = make_curve(std::vector<double>(64, 2.0), 2e-3);
    CHECK_THROWS_AS(central_fringe_window(flat), std::domain_error);
    CHECK_THROWS_AS(visibility(flat), std::domain_error);
    CHECK_THROWS_AS(visibility(flat, Window{10.0, 11.0}), std::domain_error);
}

TEST_CASE("modified visibility matches the closed form in the ideal extrema") {
    const auto curve = cos2_fringe(1.4e-3, 501, 3e-3, 1.0);  // values in [1, 2]
    const Window win = central_fringe_window(curve);

    double m_max = -1e300, m_min = 1e300;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        if (!win.contains(curve.grid[i])) continue;
        m_max = std::max(m_max, curve.values[i]);
        m_min = std::min(m_min, curve.values[i]);
    }
    const double eta2 = bench_model.eta * bench_model.eta;
    const double closed = eta2 * (m_max - m_min) /
                          (2.0 * (1.0 + bench_model.delta) + eta2 * (m_max + m_min - 2.0));
    const auto modified = visibility(apply_detection_model(curve, bench_model), win);
    CHECK(modified.v == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("fringe period reads the flanking peak spacing") {
    const auto curve = cos2_fringe(1.1e-3, 1101, 2.75e-3);
    CHECK(fringe_period(curve) == doctest::Approx(1.1e-3).epsilon(0.01));
    const auto flat = make_curve(std::vector<double>(64, 2.0), 2e-3);
    CHECK_THROWS_AS(fringe_period(flat), std::domain_error);
}
