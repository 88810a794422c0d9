#pragma once

#include <cstddef>
#include <vector>

#include "subwave/quadrature.hpp"

namespace subwave {

enum class DetectionMode { fluctuation_scaled, literal };

std::string to_string(DetectionMode mode);

/// Imperfect-detection parameters applied to normalized correlation curves.
///
/// fluctuation_scaled (default): g -> 1 + delta + eta^2 * (g - 1); reduces to
/// the ideal curve at delta = 0, eta = 1.
/// literal: g -> 1 + delta + eta^2 * g, the formula exactly as printed.
struct DetectionModel {
    double delta = 0.0;
    double eta = 1.0;
    double detector_width = 0.0;  ///< [m], 0 = point detector
    DetectionMode mode = DetectionMode::fluctuation_scaled;

    void validate() const;
};

/// Position interval [lo, hi] on the scan axis.
struct Window {
    double lo;
    double hi;
    bool contains(double x) const { return x >= lo && x <= hi; }
};

struct VisibilityResult {
    double v;       ///< (max - min) / (max + min)
    double x_max;   ///< position of the maximum used
    double x_min;   ///< position of the minimum used
    Window window;  ///< interval the extrema were searched in
};

/// Apply the (delta, eta) detection model to a normalized g2 curve.
/// Both modes are affine in the curve value, so extremum positions and
/// fringe periods are unchanged. Standard errors, if present, scale by eta^2.
CorrelationCurve apply_detection_model(const CorrelationCurve& curve,
                                       const DetectionModel& model);

/// Moving average of the curve with a unit-area top-hat of the given width,
/// modeling a finite detector aperture along the scan axis. The curve is
/// treated as piecewise linear; windows are clipped at the grid ends and
/// renormalized, so constants are preserved. Width 0 is the identity.
CorrelationCurve finite_detector_average(const CorrelationCurve& curve,
                                         double detector_width);

/// Indices of strict interior local maxima (greater than both neighbors,
/// no smoothing).
std::vector<std::size_t> find_peaks(const std::vector<double>& values);

/// Central fringe window: from the maximum nearest x = 0, walk outward to
/// the first local minimum on each side. Throws std::domain_error when the
/// curve has no fringe around the center.
Window central_fringe_window(const CorrelationCurve& curve);

/// Fringe period as half the distance between the two peaks flanking the
/// central maximum. Throws std::domain_error if either flanking peak is
/// missing.
double fringe_period(const CorrelationCurve& curve);

/// (max - min)/(max + min) over the grid points inside the window.
VisibilityResult visibility(const CorrelationCurve& curve, const Window& window);

/// Same, over the default central-fringe window.
VisibilityResult visibility(const CorrelationCurve& curve);

}  // namespace subwave
