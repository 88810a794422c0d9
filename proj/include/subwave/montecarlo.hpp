#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "subwave/quadrature.hpp"

namespace subwave {

/// splitmix64 stream; one independent stream per speckle realization.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next();
    double uniform01();  ///< in [0, 1)

    /// One Box-Muller pair of independent standard normals.
    void normal_pair(double& z0, double& z1);

private:
    std::uint64_t state_;
};

/// Stream state for realization index r under a run seed. Counter-based, so
/// the draw for a realization never depends on execution order.
std::uint64_t realization_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform spatial-frequency mode grid the chaotic field is expanded on.
struct ModeGrid {
    double half_range;  ///< [rad/m]
    int n_modes;        ///< >= 2

    double step() const { return 2.0 * half_range / (n_modes - 1); }
    double q(int j) const { return -half_range + j * step(); }
};

/// One realization of the chaotic field: complex mode amplitudes E(q_j),
/// independent circular Gaussians with Var[E(q_j)] = S(q_j) * dq.
struct SpeckleField {
    ModeGrid grid;
    std::vector<std::complex<double>> amplitudes;
};

enum class StderrMethod { batch_means, jackknife };

struct MonteCarloConfig {
    long n_realizations = 100000;
    std::uint64_t seed = 1;
    int n_modes = 257;
    double q_half_range = 0.0;  ///< [rad/m]; 0 selects the default 8*w
    int n_batches = 32;
    int threads = 0;  ///< 0 = hardware concurrency
    StderrMethod stderr_method = StderrMethod::batch_means;

    ModeGrid mode_grid(const GaussianSpectrum& spec) const;
};

/// Draw one speckle realization.
SpeckleField sample_field(const GaussianSpectrum& spec, const ModeGrid& grid,
                          SplitMix64& rng);

/// Field amplitude at detector position x:
/// U(x) = sum_j T(kx/z - q_j) E(q_j); intensity is |U(x)|^2.
std::complex<double> propagate_to_plane(const SpeckleField& field,
                                        const DoubleSlit& slit,
                                        const OpticalSetup& setup, double x);

/// Monte-Carlo estimate of a correlation curve with per-point standard
/// errors and the number of realizations that produced it.
struct EstimateCurve {
    ScanGrid grid;
    std::vector<double> values;
    std::vector<double> stderrs;
    CurveKind kind;
    ScanMode mode;
    long n_realizations;

    CorrelationCurve as_curve() const {
        return CorrelationCurve{grid, values, stderrs, kind, mode};
    }
};

/// Ensemble estimate over n_realizations independent speckle draws.
/// Deterministic for a fixed config: batches are accumulated in realization
/// order and merged in batch order, whatever the worker count.
EstimateCurve estimate(const OpticalSetup& setup, const DoubleSlit& slit,
                       const GaussianSpectrum& spec, const ScanGrid& grid,
                       CurveKind kind, ScanMode mode, SourceKind source,
                       const MonteCarloConfig& mc);

/// Per-point z-scores of a Monte-Carlo estimate against a reference curve.
struct ComparisonReport {
    std::vector<double> z_scores;
    double max_abs_z;
    double fraction_within_3sigma;

    bool passed(double min_fraction = 0.99) const {
        return fraction_within_3sigma >= min_fraction;
    }
};

ComparisonReport compare_with_quadrature(const EstimateCurve& estimate,
                                         const CorrelationCurve& reference);

}  // namespace subwave
