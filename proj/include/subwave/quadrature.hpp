#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subwave/core.hpp"

namespace subwave {

/// Uniform composite-Simpson grid over [-q_half_range, +q_half_range].
///
/// The step must resolve both the aperture oscillation (2*pi/d) and the
/// spectrum width (w): step <= min(2*pi/d, w) / 16. Violations are rejected
/// at construction and again by the integral operations.
struct QuadratureConfig {
    double q_half_range;  ///< [rad/m]
    int n_points;         ///< odd, >= 3

    double step() const { return 2.0 * q_half_range / (n_points - 1); }

    /// Validate and build an explicit configuration.
    static QuadratureConfig make(double q_half_range, int n_points,
                                 const DoubleSlit& slit, const GaussianSpectrum& spec);

    /// Default rule: half-range max(8w, 6*pi/b + 8w), step at twice the
    /// resolution margin.
    static QuadratureConfig defaults_for(const DoubleSlit& slit,
                                         const GaussianSpectrum& spec);
};

/// Largest admissible Simpson step for a slit/spectrum pair.
double resolution_limit(const DoubleSlit& slit, const GaussianSpectrum& spec);

enum class CurveKind { G1, G2, g2 };
enum class ScanMode { intensity, antisymmetric, symmetric, fixed_zero };
enum class SourceKind { thermal, coherent };

std::string to_string(CurveKind kind);
std::string to_string(ScanMode mode);
std::string to_string(SourceKind source);

/// A sampled correlation pattern. stderrs is populated by the Monte-Carlo
/// estimator only; deterministic quadrature leaves it empty.
struct CorrelationCurve {
    ScanGrid grid;
    std::vector<double> values;
    std::vector<double> stderrs;
    CurveKind kind;
    ScanMode mode;
};

/// Map a scan position to the detector pair it addresses.
std::pair<double, double> detector_pair(ScanMode mode, double x);

/// Mean intensity of the thermal source at x:
/// G1(x,x) = A * integral T^2(kx/z - q) S(q) dq.
double g1_thermal(const OpticalSetup& setup, const DoubleSlit& slit,
                  const GaussianSpectrum& spec, const QuadratureConfig& quad,
                  double x);

/// Spectrum-weighted overlap of the two detector responses,
/// Gamma(x1,x2) = integral T(kx1/z - q) T(kx2/z - q) S(q) dq.
/// Symmetric in (x1, x2); Gamma(x,x) = G1(x)/A.
double gamma_cross(const OpticalSetup& setup, const DoubleSlit& slit,
                   const GaussianSpectrum& spec, const QuadratureConfig& quad,
                   double x1, double x2);

/// Joint-intensity correlation of the thermal source:
/// G2(x1,x2) = A^2 [ Gamma(x1,x1) Gamma(x2,x2) + Gamma(x1,x2)^2 ].
double g2_thermal(const OpticalSetup& setup, const DoubleSlit& slit,
                  const GaussianSpectrum& spec, const QuadratureConfig& quad,
                  double x1, double x2);

/// Normalized second-order correlation
/// g2(x1,x2) = G2(x1,x2) / [G1(x1,x1) G1(x2,x2)], in [1, 2] for this model.
/// Throws std::domain_error when a marginal intensity underflows.
double g2_normalized(const OpticalSetup& setup, const DoubleSlit& slit,
                     const GaussianSpectrum& spec, const QuadratureConfig& quad,
                     double x1, double x2);

/// Coherent-beam closed forms (no quadrature).
double g1_coherent(const OpticalSetup& setup, const DoubleSlit& slit, double x);
double g2_coherent(const OpticalSetup& setup, const DoubleSlit& slit,
                   double x1, double x2);

/// Broadband-limit reference, proportional to T^2(0) + T^2(k (x1-x2)/z).
/// Only meaningful through ratios; the absolute scale is arbitrary.
double broadband_g2(const OpticalSetup& setup, const DoubleSlit& slit,
                    double x1, double x2);

/// Evaluate a full curve over a grid. intensity mode requires kind G1 and
/// reports G1(x,x); the pair modes require kind G2 or g2 and evaluate the
/// detector pair (x,-x), (x,x) or (x,0) at each grid point.
CorrelationCurve scan(const OpticalSetup& setup, const DoubleSlit& slit,
                      const GaussianSpectrum& spec, const QuadratureConfig& quad,
                      const ScanGrid& grid, CurveKind kind, ScanMode mode,
                      SourceKind source);

}  // namespace subwave
