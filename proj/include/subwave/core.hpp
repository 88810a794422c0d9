#pragma once

#include <cstddef>
#include <vector>

namespace subwave {

/// Unnormalized cardinal sine, sin(u)/u with sinc(0) = 1.
/// Below |u| < 1e-4 a series expansion avoids the 0/0 form.
double sinc(double u);

/// Double-slit aperture: two slits of width b whose centers are d apart.
struct DoubleSlit {
    double width;       ///< slit width b [m]
    double separation;  ///< center-to-center separation d [m]

    DoubleSlit(double width_b, double separation_d);
};

/// Gaussian spatial-frequency spectrum of the source,
/// S(q) = exp(-q^2 / 2w^2) / (sqrt(2*pi) * w), normalized to unit area.
struct GaussianSpectrum {
    double bandwidth;  ///< w [rad/m]

    explicit GaussianSpectrum(double bandwidth_w);

    /// Build from the dimensionless bandwidth w*b/(2*pi) commonly used to
    /// report the source width relative to the slit.
    static GaussianSpectrum from_normalized(double wb_over_two_pi,
                                            const DoubleSlit& slit);

    /// The dimensionless bandwidth w*b/(2*pi) for a given slit.
    double normalized(const DoubleSlit& slit) const;
};

/// Wavelength, propagation distance and overall amplitude scale of the bench.
struct OpticalSetup {
    double wavelength;  ///< lambda [m]
    double distance;    ///< slit-to-detector distance z [m]
    double amplitude;   ///< overall scale A, cancels in normalized quantities

    OpticalSetup(double wavelength, double distance_z, double amplitude_a = 1.0);

    double wavenumber() const;  ///< k = 2*pi/lambda [rad/m]
};

/// Strictly increasing detector positions along the scan axis.
class ScanGrid {
public:
    explicit ScanGrid(std::vector<double> positions);

    /// Uniform grid over [-half_range, +half_range]. Points are exact
    /// integer multiples of the step around the center, so mirrored
    /// positions negate bit-exactly.
    static ScanGrid uniform(double half_range, int n_points);

    const std::vector<double>& positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }
    double operator[](std::size_t i) const { return positions_[i]; }

    bool is_uniform(double rel_tol = 1e-9) const;
    double step() const;  ///< spacing of a uniform grid
    double span() const { return positions_.back() - positions_.front(); }

    bool operator==(const ScanGrid& other) const = default;

private:
    std::vector<double> positions_;
};

/// Fourier transform of the double-slit aperture,
/// T(q) = (2b/sqrt(2*pi)) * sinc(q*b/2) * cos(q*d/2). Even in q.
double aperture_transfer(const DoubleSlit& slit, double q);

/// S(q) of the Gaussian source spectrum.
double spectrum_value(const GaussianSpectrum& spec, double q);

/// The spatial frequency k*x/z a detector at x selects in the far field.
double reduced_frequency(const OpticalSetup& setup, double x);

}  // namespace subwave
