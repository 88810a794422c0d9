#include "subwave/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace subwave {

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

void rename_into_place(const std::filesystem::path& tmp,
                       const std::filesystem::path& path) {
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move '" + tmp.string() + "' to '" +
                                 path.string() + "': " + ec.message());
    }
}

std::filesystem::path temp_name(const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    return tmp;
}

}  // namespace

void write_curve_csv(const std::filesystem::path& path,
                     const CorrelationCurve& curve,
                     const std::vector<std::string>& header_lines,
                     std::optional<std::uint64_t> seed) {
    const bool with_stderr = !curve.stderrs.empty();
    if (with_stderr && curve.stderrs.size() != curve.values.size())
        throw std::invalid_argument("write_curve_csv: stderr length mismatch");
    if (curve.values.size() != curve.grid.size())
        throw std::invalid_argument("write_curve_csv: value length mismatch");

    const auto tmp = temp_name(path);
    {
        std::ofstream out(tmp, std::ios::binary);  // binary keeps LF endings
        if (!out)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << "# " << tool_version << "\n";
        for (const auto& line : header_lines) out << "# " << line << "\n";
        if (seed) out << "# seed = " << *seed << "\n";
        out << "x_m,value" << (with_stderr ? ",stderr" : "") << "\n";
        for (std::size_t i = 0; i < curve.grid.size(); ++i) {
            out << format_sig9(curve.grid[i]) << ',' << format_sig9(curve.values[i]);
            if (with_stderr) out << ',' << format_sig9(curve.stderrs[i]);
            out << '\n';
        }
        if (!out) throw std::runtime_error("write failed on '" + tmp.string() + "'");
    }
    rename_into_place(tmp, path);
}

void write_plot_script(const std::filesystem::path& path,
                       const std::vector<std::filesystem::path>& csv_files) {
    const auto tmp = temp_name(path);
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out << "set datafile separator ','\n";
        out << "set datafile commentschars '#'\n";
        out << "set xlabel 'x [m]'\n";
        out << "set ylabel 'correlation'\n";
        out << "set key autotitle columnheader\n";
        out << "plot \\\n";
        for (std::size_t i = 0; i < csv_files.size(); ++i) {
            out << "  '" << csv_files[i].filename().string()
                << "' using 1:2 with lines";
            out << (i + 1 < csv_files.size() ? ", \\\n" : "\n");
        }
        if (!out) throw std::runtime_error("write failed on '" + tmp.string() + "'");
    }
    rename_into_place(tmp, path);
}

}  // namespace subwave
