#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subwave/quadrature.hpp"

namespace subwave {

inline constexpr const char* tool_version = "subwave 1.0.0";

/// A double as decimal text with 9 significant digits (the CSV precision).
std::string format_sig9(double v);

/// Write a curve as CSV: '#'-prefixed header lines (tool version, the full
/// configuration echo, optional seed), a `x_m,value[,stderr]` column header,
/// then one row per grid point with LF endings. The file is written to a
/// temporary name and renamed into place.
void write_curve_csv(const std::filesystem::path& path,
                     const CorrelationCurve& curve,
                     const std::vector<std::string>& header_lines,
                     std::optional<std::uint64_t> seed = std::nullopt);

/// Write a gnuplot script that plots the given CSV files. Purely textual;
/// nothing is rendered.
void write_plot_script(const std::filesystem::path& path,
                       const std::vector<std::filesystem::path>& csv_files);

}  // namespace subwave
