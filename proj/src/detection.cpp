#include "subwave/detection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace subwave {

std::string to_string(DetectionMode mode) {
    return mode == DetectionMode::fluctuation_scaled ? "fluctuation_scaled"
                                                     : "literal";
}

void DetectionModel::validate() const {
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("DetectionModel: eta must be in (0, 1]");
    if (!(delta >= 0.0))
        throw std::invalid_argument("DetectionModel: delta must be >= 0");
    if (!(detector_width >= 0.0))
        throw std::invalid_argument("DetectionModel: detector_width must be >= 0");
}

CorrelationCurve apply_detection_model(const CorrelationCurve& curve,
                                       const DetectionModel& model) {
    model.validate();
    if (curve.kind != CurveKind::g2)
        throw std::invalid_argument(
            "apply_detection_model: expects a normalized g2 curve");
    const double eta2 = model.eta * model.eta;
    CorrelationCurve out = curve;
    for (double& v : out.values) {
        const double g = v;
        v = model.mode == DetectionMode::fluctuation_scaled
                ? 1.0 + model.delta + eta2 * (g - 1.0)
                : 1.0 + model.delta + eta2 * g;
    }
    for (double& s : out.stderrs) s *= eta2;
    return out;
}

CorrelationCurve finite_detector_average(const CorrelationCurve& curve,
                                         double detector_width) {
    if (detector_width == 0.0) return curve;
    if (!(detector_width > 0.0))
        throw std::invalid_argument("finite_detector_average: width must be >= 0");
    if (!curve.grid.is_uniform())
        throw std::invalid_argument("finite_detector_average: grid must be uniform");
    if (!(detector_width < curve.grid.span()))
        throw std::invalid_argument(
            "finite_detector_average: width exceeds the grid span");

    const auto& xs = curve.grid.positions();
    const auto& vs = curve.values;
    const double h = curve.grid.step();
    const std::size_t n = xs.size();

    // Integral of the piecewise-linear interpolant over [a, b] (grid units,
    // clipped by the caller), divided later by the covered length.
    auto segment_integral = [&](double a, double b) {
        double acc = 0.0;
        const std::size_t first = static_cast<std::size_t>(std::floor(a));
        const std::size_t last = static_cast<std::size_t>(std::ceil(b)) - 1;
        for (std::size_t s = first; s <= last && s + 1 < n; ++s) {
            const double lo = std::max(a, static_cast<double>(s));
            const double hi = std::min(b, static_cast<double>(s + 1));
            if (hi <= lo) continue;
            const double vlo = vs[s] + (vs[s + 1] - vs[s]) * (lo - s);
            const double vhi = vs[s] + (vs[s + 1] - vs[s]) * (hi - s);
            acc += 0.5 * (vlo + vhi) * (hi - lo);
        }
        return acc;
    };

    const double half = detector_width / 2.0 / h;  // in grid units
    CorrelationCurve out = curve;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::max(0.0, static_cast<double>(i) - half);
        const double b = std::min(static_cast<double>(n - 1),
                                  static_cast<double>(i) + half);
        out.values[i] = segment_integral(a, b) / (b - a);
    }
    out.stderrs.clear();  // averaging correlates points; per-point errors no longer apply
    return out;
}

std::vector<std::size_t> find_peaks(const std::vector<double>& values) {
    std::vector<std::size_t> peaks;
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        if (values[i] > values[i - 1] && values[i] > values[i + 1]) peaks.push_back(i);
    return peaks;
}

namespace {

std::size_t center_index(const ScanGrid& grid) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (std::abs(grid[i]) < std::abs(grid[best])) best = i;
    return best;
}

}  // namespace

Window central_fringe_window(const CorrelationCurve& curve) {
    const auto& vs = curve.values;
    const std::size_t ic = center_index(curve.grid);

    std::size_t left = ic;
    while (left > 0 && vs[left - 1] < vs[left]) --left;
    std::size_t right = ic;
    while (right + 1 < vs.size() && vs[right + 1] < vs[right]) ++right;

    if (left == ic && right == ic)
        throw std::domain_error("central_fringe_window: no fringe found");
    return Window{curve.grid[left], curve.grid[right]};
}

double fringe_period(const CorrelationCurve& curve) {
    const auto peaks = find_peaks(curve.values);
    // central maximum; ties broken toward x = 0
    std::size_t imax = 0;
    for (std::size_t i = 1; i < curve.values.size(); ++i) {
        if (curve.values[i] > curve.values[imax] ||
            (curve.values[i] == curve.values[imax] &&
             std::abs(curve.grid[i]) < std::abs(curve.grid[imax])))
            imax = i;
    }

    double left = std::numeric_limits<double>::quiet_NaN();
    double right = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t p : peaks) {
        if (p < imax) left = curve.grid[p];
        if (p > imax) { right = curve.grid[p]; break; }
    }
    if (std::isnan(left) || std::isnan(right))
        throw std::domain_error("fringe_period: no peaks flank the central maximum");
    return (right - left) / 2.0;
}

VisibilityResult visibility(const CorrelationCurve& curve, const Window& window) {
    double vmax = -std::numeric_limits<double>::infinity();
    double vmin = std::numeric_limits<double>::infinity();
    double xmax = 0.0, xmin = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        const double x = curve.grid[i];
        if (!window.contains(x)) continue;
        ++count;
        if (curve.values[i] > vmax) { vmax = curve.values[i]; xmax = x; }
        if (curve.values[i] < vmin) { vmin = curve.values[i]; xmin = x; }
    }
    if (count == 0)
        throw std::domain_error("visibility: window contains no grid points");
    if (!(vmax > vmin))
        throw std::domain_error("visibility: no fringe found");
    if (!(vmin >= 0.0))
        throw std::domain_error("visibility: negative curve values");
    return VisibilityResult{(vmax - vmin) / (vmax + vmin), xmax, xmin, window};
}

VisibilityResult visibility(const CorrelationCurve& curve) {
    return visibility(curve, central_fringe_window(curve));
}

}  // namespace subwave
