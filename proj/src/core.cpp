#include "subwave/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subwave {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double sqrt_two_pi = 2.5066282746310005024;
}  // namespace

double sinc(double u) {
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

DoubleSlit::DoubleSlit(double width_b, double separation_d)
    : width(width_b), separation(separation_d) {
    if (!(width > 0.0))
        throw std::invalid_argument("DoubleSlit: slit width must be > 0");
    if (!(separation >= width))
        throw std::invalid_argument(
            "DoubleSlit: center-to-center separation must be >= slit width");
}

GaussianSpectrum::GaussianSpectrum(double bandwidth_w) : bandwidth(bandwidth_w) {
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("GaussianSpectrum: bandwidth must be > 0");
}

GaussianSpectrum GaussianSpectrum::from_normalized(double wb_over_two_pi,
                                                   const DoubleSlit& slit) {
    if (!(wb_over_two_pi > 0.0))
        throw std::invalid_argument(
            "GaussianSpectrum: normalized bandwidth must be > 0");
    return GaussianSpectrum(two_pi * wb_over_two_pi / slit.width);
}

double GaussianSpectrum::normalized(const DoubleSlit& slit) const {
    return bandwidth * slit.width / two_pi;
}

OpticalSetup::OpticalSetup(double wavelength_, double distance_z, double amplitude_a)
    : wavelength(wavelength_), distance(distance_z), amplitude(amplitude_a) {
    if (!(wavelength > 0.0))
        throw std::invalid_argument("OpticalSetup: wavelength must be > 0");
    if (!(distance > 0.0))
        throw std::invalid_argument("OpticalSetup: distance must be > 0");
    if (!(amplitude > 0.0))
        throw std::invalid_argument("OpticalSetup: amplitude must be > 0");
}

double OpticalSetup::wavenumber() const { return two_pi / wavelength; }

ScanGrid::ScanGrid(std::vector<double> positions) : positions_(std::move(positions)) {
    if (positions_.size() < 2)
        throw std::invalid_argument("ScanGrid: need at least 2 positions");
    for (std::size_t i = 1; i < positions_.size(); ++i)
        if (!(positions_[i] > positions_[i - 1]))
            throw std::invalid_argument("ScanGrid: positions must be strictly increasing");
}

ScanGrid ScanGrid::uniform(double half_range, int n_points) {
    if (!(half_range > 0.0))
        throw std::invalid_argument("ScanGrid: half_range must be > 0");
    if (n_points < 2)
        throw std::invalid_argument("ScanGrid: need at least 2 points");
    const double step = 2.0 * half_range / (n_points - 1);
    std::vector<double> xs(static_cast<std::size_t>(n_points));
    const double center = (n_points - 1) / 2.0;
    for (int i = 0; i < n_points; ++i)
        xs[static_cast<std::size_t>(i)] = (i - center) * step;
    return ScanGrid(std::move(xs));
}

bool ScanGrid::is_uniform(double rel_tol) const {
    const double h = (positions_.back() - positions_.front()) /
                     static_cast<double>(positions_.size() - 1);
    for (std::size_t i = 1; i < positions_.size(); ++i)
        if (std::abs(positions_[i] - positions_[i - 1] - h) > rel_tol * std::abs(h))
            return false;
    return true;
}

double ScanGrid::step() const {
    if (!is_uniform())
        throw std::invalid_argument("ScanGrid: step() requires a uniform grid");
    return (positions_.back() - positions_.front()) /
           static_cast<double>(positions_.size() - 1);
}

double aperture_transfer(const DoubleSlit& slit, double q) {
    return (2.0 * slit.width / sqrt_two_pi) * sinc(q * slit.width / 2.0) *
           std::cos(q * slit.separation / 2.0);
}

double spectrum_value(const GaussianSpectrum& spec, double q) {
    const double w = spec.bandwidth;
    return std::exp(-q * q / (2.0 * w * w)) / (sqrt_two_pi * w);
}

double reduced_frequency(const OpticalSetup& setup, double x) {
    return setup.wavenumber() * x / setup.distance;
}

}  // namespace subwave
