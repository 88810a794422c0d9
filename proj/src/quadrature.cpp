#include "subwave/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subwave {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_resolution(const QuadratureConfig& quad, const DoubleSlit& slit,
                      const GaussianSpectrum& spec) {
    if (!(quad.q_half_range > 0.0))
        throw std::invalid_argument("QuadratureConfig: q_half_range must be > 0");
    if (quad.n_points < 3 || quad.n_points % 2 == 0)
        throw std::invalid_argument("QuadratureConfig: n_points must be odd and >= 3");
    if (quad.step() > resolution_limit(slit, spec))
        throw std::invalid_argument(
            "QuadratureConfig: step exceeds min(2*pi/d, w)/16; integrand would be "
            "under-resolved");
}

// Composite Simpson over the quadrature grid. n_points is odd, weights
// are strictly positive, so nonnegative integrands give nonnegative sums.
template <typename F>
double simpson(const QuadratureConfig& quad, F&& f) {
    const int n = quad.n_points;
    const double h = quad.step();
    const double q0 = -quad.q_half_range;
    double acc = f(q0) + f(q0 + (n - 1) * h);
    for (int i = 1; i < n - 1; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(q0 + i * h);
    return acc * h / 3.0;
}

}  // namespace

double resolution_limit(const DoubleSlit& slit, const GaussianSpectrum& spec) {
    return std::min(two_pi / slit.separation, spec.bandwidth) / 16.0;
}

QuadratureConfig QuadratureConfig::make(double q_half_range, int n_points,
                                        const DoubleSlit& slit,
                                        const GaussianSpectrum& spec) {
    QuadratureConfig quad{q_half_range, n_points};
    check_resolution(quad, slit, spec);
    return quad;
}

QuadratureConfig QuadratureConfig::defaults_for(const DoubleSlit& slit,
                                                const GaussianSpectrum& spec) {
    const double w = spec.bandwidth;
    const double half = std::max(8.0 * w, 6.0 * std::numbers::pi / slit.width + 8.0 * w);
    const double target_step = resolution_limit(slit, spec) / 2.0;
    int n = static_cast<int>(std::ceil(2.0 * half / target_step)) + 1;
    if (n % 2 == 0) ++n;
    return QuadratureConfig{half, n};
}

std::string to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::G1: return "G1";
        case CurveKind::G2: return "G2";
        case CurveKind::g2: return "g2";
    }
    return "?";
}

std::string to_string(ScanMode mode) {
    switch (mode) {
        case ScanMode::intensity: return "intensity";
        case ScanMode::antisymmetric: return "antisymmetric";
        case ScanMode::symmetric: return "symmetric";
        case ScanMode::fixed_zero: return "fixed_zero";
    }
    return "?";
}

std::string to_string(SourceKind source) {
    return source == SourceKind::thermal ? "thermal" : "coherent";
}

std::pair<double, double> detector_pair(ScanMode mode, double x) {
    switch (mode) {
        case ScanMode::intensity: return {x, x};
        case ScanMode::antisymmetric: return {x, -x};
        case ScanMode::symmetric: return {x, x};
        case ScanMode::fixed_zero: return {x, 0.0};
    }
    throw std::invalid_argument("detector_pair: unknown scan mode");
}

double g1_thermal(const OpticalSetup& setup, const DoubleSlit& slit,
                  const GaussianSpectrum& spec, const QuadratureConfig& quad,
                  double x) {
    return setup.amplitude * gamma_cross(setup, slit, spec, quad, x, x);
}

double gamma_cross(const OpticalSetup& setup, const DoubleSlit& slit,
                   const GaussianSpectrum& spec, const QuadratureConfig& quad,
                   double x1, double x2) {
    check_resolution(quad, slit, spec);
    const double u1 = reduced_frequency(setup, x1);
    const double u2 = reduced_frequency(setup, x2);
    return simpson(quad, [&](double q) {
        return aperture_transfer(slit, u1 - q) * aperture_transfer(slit, u2 - q) *
               spectrum_value(spec, q);
    });
}

double g2_thermal(const OpticalSetup& setup, const DoubleSlit& slit,
                  const GaussianSpectrum& spec, const QuadratureConfig& quad,
                  double x1, double x2) {
    const double g11 = gamma_cross(setup, slit, spec, quad, x1, x1);
    const double g22 = gamma_cross(setup, slit, spec, quad, x2, x2);
    const double g12 = gamma_cross(setup, slit, spec, quad, x1, x2);
    const double a = setup.amplitude;
    return a * a * (g11 * g22 + g12 * g12);
}

double g2_normalized(const OpticalSetup& setup, const DoubleSlit& slit,
                     const GaussianSpectrum& spec, const QuadratureConfig& quad,
                     double x1, double x2) {
    const double g11 = gamma_cross(setup, slit, spec, quad, x1, x1);
    const double g22 = gamma_cross(setup, slit, spec, quad, x2, x2);
    const double denom = g11 * g22;
    if (!(denom > 0.0) || !std::isfinite(denom))
        throw std::domain_error(
            "g2_normalized: marginal intensity underflows (detector outside the "
            "illuminated region)");
    const double g12 = gamma_cross(setup, slit, spec, quad, x1, x2);
    return 1.0 + g12 * g12 / denom;
}

double g1_coherent(const OpticalSetup& setup, const DoubleSlit& slit, double x) {
    const double t = aperture_transfer(slit, reduced_frequency(setup, x));
    return setup.amplitude * t * t;
}

double g2_coherent(const OpticalSetup& setup, const DoubleSlit& slit,
                   double x1, double x2) {
    const double t1 = aperture_transfer(slit, reduced_frequency(setup, x1));
    const double t2 = aperture_transfer(slit, reduced_frequency(setup, x2));
    return setup.amplitude * setup.amplitude * t1 * t1 * t2 * t2;
}

double broadband_g2(const OpticalSetup& setup, const DoubleSlit& slit,
                    double x1, double x2) {
    const double t0 = aperture_transfer(slit, 0.0);
    const double td = aperture_transfer(slit, reduced_frequency(setup, x1 - x2));
    return setup.amplitude * setup.amplitude * (t0 * t0 + td * td);
}

namespace {

double coherent_pair_value(const OpticalSetup& setup, const DoubleSlit& slit,
                           CurveKind kind, double x1, double x2) {
    if (kind == CurveKind::G2) return g2_coherent(setup, slit, x1, x2);
    // normalized: identically 1 wherever both marginals are nonzero
    const double m1 = g1_coherent(setup, slit, x1);
    const double m2 = g1_coherent(setup, slit, x2);
    const double denom = m1 * m2;
    if (!(denom > 0.0))
        throw std::domain_error(
            "scan: coherent g2 undefined at a zero of the one-photon pattern");
    return g2_coherent(setup, slit, x1, x2) / denom;
}

}  // namespace

CorrelationCurve scan(const OpticalSetup& setup, const DoubleSlit& slit,
                      const GaussianSpectrum& spec, const QuadratureConfig& quad,
                      const ScanGrid& grid, CurveKind kind, ScanMode mode,
                      SourceKind source) {
    if ((mode == ScanMode::intensity) != (kind == CurveKind::G1))
        throw std::invalid_argument(
            "scan: intensity mode pairs with kind G1 and only with it");

    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        if (kind == CurveKind::G1) {
            values[i] = source == SourceKind::thermal
                            ? g1_thermal(setup, slit, spec, quad, x)
                            : g1_coherent(setup, slit, x);
            continue;
        }
        const auto [x1, x2] = detector_pair(mode, x);
        if (source == SourceKind::coherent) {
            values[i] = coherent_pair_value(setup, slit, kind, x1, x2);
        } else if (kind == CurveKind::G2) {
            values[i] = g2_thermal(setup, slit, spec, quad, x1, x2);
        } else {
            values[i] = g2_normalized(setup, slit, spec, quad, x1, x2);
        }
    }
    return CorrelationCurve{grid, std::move(values), {}, kind, mode};
}

}  // namespace subwave
