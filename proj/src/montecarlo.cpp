#include "subwave/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace subwave {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void SplitMix64::normal_pair(double& z0, double& z1) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
}

std::uint64_t realization_stream(std::uint64_t seed, std::uint64_t index) {
    // decorrelate neighbouring indices before they become stream states
    std::uint64_t z = seed ^ (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ModeGrid MonteCarloConfig::mode_grid(const GaussianSpectrum& spec) const {
    if (n_modes < 2)
        throw std::invalid_argument("MonteCarloConfig: need at least 2 modes");
    const double half = q_half_range > 0.0 ? q_half_range : 8.0 * spec.bandwidth;
    return ModeGrid{half, n_modes};
}

SpeckleField sample_field(const GaussianSpectrum& spec, const ModeGrid& grid,
                          SplitMix64& rng) {
    const double dq = grid.step();
    SpeckleField field{grid, std::vector<std::complex<double>>(
                                 static_cast<std::size_t>(grid.n_modes))};
    for (int j = 0; j < grid.n_modes; ++j) {
        const double sigma = std::sqrt(spectrum_value(spec, grid.q(j)) * dq / 2.0);
        double z0, z1;
        rng.normal_pair(z0, z1);
        field.amplitudes[static_cast<std::size_t>(j)] = {sigma * z0, sigma * z1};
    }
    return field;
}

std::complex<double> propagate_to_plane(const SpeckleField& field,
                                        const DoubleSlit& slit,
                                        const OpticalSetup& setup, double x) {
    const double u = reduced_frequency(setup, x);
    double re = 0.0, im = 0.0;
    for (int j = 0; j < field.grid.n_modes; ++j) {
        const double t = aperture_transfer(slit, u - field.grid.q(j));
        const auto& e = field.amplitudes[static_cast<std::size_t>(j)];
        re += t * e.real();
        im += t * e.imag();
    }
    return {re, im};
}

namespace {

struct PairIndices {
    std::vector<double> positions;     // unique detector positions
    std::vector<std::size_t> first;    // per grid point, index into positions
    std::vector<std::size_t> second;
};

PairIndices build_pairs(const ScanGrid& grid, ScanMode mode) {
    PairIndices out;
    auto intern = [&out](double x) -> std::size_t {
        for (std::size_t k = 0; k < out.positions.size(); ++k)
            if (out.positions[k] == x) return k;
        out.positions.push_back(x);
        return out.positions.size() - 1;
    };
    out.first.reserve(grid.size());
    out.second.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto [x1, x2] = detector_pair(mode, grid[i]);
        out.first.push_back(intern(x1));
        out.second.push_back(intern(x2));
    }
    return out;
}

struct BatchSums {
    std::vector<double> i1;    // sum of I(x1)
    std::vector<double> i2;    // sum of I(x2)
    std::vector<double> i12;   // sum of I(x1) * I(x2)
    long count = 0;

    explicit BatchSums(std::size_t n) : i1(n, 0.0), i2(n, 0.0), i12(n, 0.0) {}
};

double ratio_of(const double s1, const double s2, const double s12, long n) {
    const double m1 = s1 / n, m2 = s2 / n;
    const double denom = m1 * m2;
    if (!(denom > 0.0))
        throw std::domain_error(
            "estimate: mean intensity underflows (detector outside the "
            "illuminated region)");
    return (s12 / n) / denom;
}

}  // namespace

EstimateCurve estimate(const OpticalSetup& setup, const DoubleSlit& slit,
                       const GaussianSpectrum& spec, const ScanGrid& grid,
                       CurveKind kind, ScanMode mode, SourceKind source,
                       const MonteCarloConfig& mc) {
    if ((mode == ScanMode::intensity) != (kind == CurveKind::G1))
        throw std::invalid_argument(
            "estimate: intensity mode pairs with kind G1 and only with it");
    if (mc.n_realizations < 2)
        throw std::invalid_argument(
            "estimate: need at least 2 realizations for a standard error");
    if (mc.n_batches < 2)
        throw std::invalid_argument("estimate: need at least 2 batches");

    const PairIndices pairs = build_pairs(grid, mode);
    const std::size_t npts = grid.size();
    const double a = setup.amplitude;

    if (source == SourceKind::coherent) {
        // Deterministic single-mode field: every realization is identical.
        std::vector<double> intensity(pairs.positions.size());
        for (std::size_t k = 0; k < pairs.positions.size(); ++k) {
            const double t =
                aperture_transfer(slit, reduced_frequency(setup, pairs.positions[k]));
            intensity[k] = t * t;
        }
        std::vector<double> values(npts), errs(npts, 0.0);
        for (std::size_t i = 0; i < npts; ++i) {
            const double i1 = intensity[pairs.first[i]];
            const double i2 = intensity[pairs.second[i]];
            switch (kind) {
                case CurveKind::G1: values[i] = a * i1; break;
                case CurveKind::G2: values[i] = a * a * i1 * i2; break;
                case CurveKind::g2:
                    if (!(i1 * i2 > 0.0))
                        throw std::domain_error(
                            "estimate: coherent g2 undefined at a zero of the "
                            "one-photon pattern");
                    values[i] = 1.0;
                    break;
            }
        }
        return EstimateCurve{grid, std::move(values), std::move(errs),
                             kind, mode, mc.n_realizations};
    }

    const ModeGrid modes = mc.mode_grid(spec);
    const int nm = modes.n_modes;
    const double dq = modes.step();

    // Precompute the aperture response matrix and per-mode sigmas.
    std::vector<double> transfer(pairs.positions.size() * static_cast<std::size_t>(nm));
    for (std::size_t k = 0; k < pairs.positions.size(); ++k) {
        const double u = reduced_frequency(setup, pairs.positions[k]);
        for (int j = 0; j < nm; ++j)
            transfer[k * static_cast<std::size_t>(nm) + static_cast<std::size_t>(j)] =
                aperture_transfer(slit, u - modes.q(j));
    }
    std::vector<double> sigma(static_cast<std::size_t>(nm));
    for (int j = 0; j < nm; ++j)
        sigma[static_cast<std::size_t>(j)] =
            std::sqrt(spectrum_value(spec, modes.q(j)) * dq / 2.0);

    const long n = mc.n_realizations;
    const int nb = static_cast<int>(std::min<long>(mc.n_batches, n));
    std::vector<BatchSums> batches(static_cast<std::size_t>(nb),
                                   BatchSums(npts));

    auto run_batch = [&](int b) {
        const long lo = n * b / nb;
        const long hi = n * (b + 1) / nb;
        BatchSums& sums = batches[static_cast<std::size_t>(b)];
        std::vector<double> ere(static_cast<std::size_t>(nm));
        std::vector<double> eim(static_cast<std::size_t>(nm));
        std::vector<double> intensity(pairs.positions.size());
        for (long r = lo; r < hi; ++r) {
            SplitMix64 rng(realization_stream(mc.seed, static_cast<std::uint64_t>(r)));
            for (int j = 0; j < nm; ++j) {
                double z0, z1;
                rng.normal_pair(z0, z1);
                const double s = sigma[static_cast<std::size_t>(j)];
                ere[static_cast<std::size_t>(j)] = s * z0;
                eim[static_cast<std::size_t>(j)] = s * z1;
            }
            for (std::size_t k = 0; k < pairs.positions.size(); ++k) {
                const double* row = &transfer[k * static_cast<std::size_t>(nm)];
                double re = 0.0, im = 0.0;
                for (int j = 0; j < nm; ++j) {
                    re += row[j] * ere[static_cast<std::size_t>(j)];
                    im += row[j] * eim[static_cast<std::size_t>(j)];
                }
                intensity[k] = re * re + im * im;
            }
            for (std::size_t i = 0; i < npts; ++i) {
                const double i1 = intensity[pairs.first[i]];
                const double i2 = intensity[pairs.second[i]];
                sums.i1[i] += i1;
                sums.i2[i] += i2;
                sums.i12[i] += i1 * i2;
            }
        }
        sums.count = hi - lo;
    };

    int nthreads = mc.threads > 0
                       ? mc.threads
                       : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, nb));
    if (nthreads == 1) {
        for (int b = 0; b < nb; ++b) run_batch(b);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (int b = t; b < nb; b += nthreads) run_batch(b);
            });
        for (auto& th : pool) th.join();
    }

    // Merge in batch order; results are independent of the thread count.
    BatchSums total(npts);
    for (const BatchSums& s : batches) {
        for (std::size_t i = 0; i < npts; ++i) {
            total.i1[i] += s.i1[i];
            total.i2[i] += s.i2[i];
            total.i12[i] += s.i12[i];
        }
        total.count += s.count;
    }
    for (std::size_t i = 0; i < npts; ++i)
        if (!std::isfinite(total.i1[i]) || !std::isfinite(total.i12[i]))
            throw std::runtime_error("estimate: non-finite accumulation");

    // Per-point statistic per batch, then spread of the batch values.
    auto batch_stat = [&](const BatchSums& s, std::size_t i) {
        switch (kind) {
            case CurveKind::G1: return a * s.i1[i] / s.count;
            case CurveKind::G2: return a * a * s.i12[i] / s.count;
            case CurveKind::g2: return ratio_of(s.i1[i], s.i2[i], s.i12[i], s.count);
        }
        return 0.0;
    };

    std::vector<double> values(npts), errs(npts);
    for (std::size_t i = 0; i < npts; ++i) {
        switch (kind) {
            case CurveKind::G1: values[i] = a * total.i1[i] / total.count; break;
            case CurveKind::G2: values[i] = a * a * total.i12[i] / total.count; break;
            case CurveKind::g2:
                values[i] = ratio_of(total.i1[i], total.i2[i], total.i12[i],
                                     total.count);
                break;
        }

        if (mc.stderr_method == StderrMethod::jackknife && kind == CurveKind::g2) {
            // leave-one-batch-out jackknife on the ratio of totals
            double mean = 0.0;
            std::vector<double> loo(static_cast<std::size_t>(nb));
            for (int b = 0; b < nb; ++b) {
                const BatchSums& s = batches[static_cast<std::size_t>(b)];
                loo[static_cast<std::size_t>(b)] =
                    ratio_of(total.i1[i] - s.i1[i], total.i2[i] - s.i2[i],
                             total.i12[i] - s.i12[i], total.count - s.count);
                mean += loo[static_cast<std::size_t>(b)];
            }
            mean /= nb;
            double ss = 0.0;
            for (double v : loo) ss += (v - mean) * (v - mean);
            errs[i] = std::sqrt(ss * (nb - 1) / nb);
        } else {
            double mean = 0.0;
            std::vector<double> bvals(static_cast<std::size_t>(nb));
            for (int b = 0; b < nb; ++b) {
                bvals[static_cast<std::size_t>(b)] =
                    batch_stat(batches[static_cast<std::size_t>(b)], i);
                mean += bvals[static_cast<std::size_t>(b)];
            }
            mean /= nb;
            double ss = 0.0;
            for (double v : bvals) ss += (v - mean) * (v - mean);
            errs[i] = std::sqrt(ss / (nb - 1) / nb);
        }
    }

    return EstimateCurve{grid, std::move(values), std::move(errs),
                         kind, mode, n};
}

ComparisonReport compare_with_quadrature(const EstimateCurve& estimate,
                                         const CorrelationCurve& reference) {
    if (estimate.mode != reference.mode || estimate.kind != reference.kind)
        throw std::invalid_argument(
            "compare_with_quadrature: kind/mode mismatch between estimate and "
            "reference");
    if (estimate.grid.positions() != reference.grid.positions())
        throw std::invalid_argument("compare_with_quadrature: grid mismatch");

    ComparisonReport report;
    report.z_scores.resize(estimate.grid.size());
    std::size_t within = 0;
    report.max_abs_z = 0.0;
    for (std::size_t i = 0; i < estimate.grid.size(); ++i) {
        const double diff = estimate.values[i] - reference.values[i];
        const double se = estimate.stderrs[i];
        double z;
        if (se > 0.0)
            z = diff / se;
        else
            z = diff == 0.0 ? 0.0
                            : std::numeric_limits<double>::infinity() *
                                  (diff > 0 ? 1.0 : -1.0);
        report.z_scores[i] = z;
        if (std::abs(z) <= 3.0) ++within;
        report.max_abs_z = std::max(report.max_abs_z, std::abs(z));
    }
    report.fraction_within_3sigma =
        static_cast<double>(within) / static_cast<double>(estimate.grid.size());
    return report;
}

}  // namespace subwave
