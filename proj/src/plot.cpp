#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "girg/harness.hpp"
#include "girg/io.hpp"

namespace girg {

namespace {

using Series = std::map<std::string, std::vector<std::pair<double, double>>>;

std::string series_key(const ScalingRecord& r) { return r.geometry + "_d" + std::to_string(r.d); }

std::string fixed(double x, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

struct Axis {
    double lo, hi;
    bool log;
    double map(double v, double a, double b) const {
        const double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                             : (v - lo) / (hi - lo);
        return a + t * (b - a);
    }
};

Axis make_axis(const Series& s, bool use_x, bool log) {
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& [_, pts] : s)
        for (const auto& [x, y] : pts) {
            const double v = use_x ? x : y;
            if (log && !(v > 0.0)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!std::isfinite(lo)) lo = hi = log ? 1.0 : 0.0;
    if (log) {
        lo = std::pow(10.0, std::floor(std::log10(lo)));
        hi = std::pow(10.0, std::ceil(std::log10(hi)));
        if (hi <= lo) hi = lo * 10.0;
    } else {
        lo = std::min(lo, 0.0);
        hi = hi <= lo ? lo + 1.0 : hi * 1.05;
    }
    return {lo, hi, log};
}

void write_svg(const Series& series, const std::filesystem::path& path, const std::string& title,
               const std::string& ylabel, bool log_y) {
    constexpr double W = 640, H = 420, L = 70, R = 170, T = 40, B = 50;
    const Axis ax = make_axis(series, true, true);
    const Axis ay = make_axis(series, false, log_y);
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
    out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (W - R + L) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">n"
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (H - B + T) / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 "
        << (H - B + T) / 2 << ")\" text-anchor=\"middle\">" << ylabel << "</text>\n";
    for (double t = ax.lo; t <= ax.hi * 1.0001; t *= 10.0) {
        const double px = ax.map(t, L, W - R);
        out << "<text x=\"" << fixed(px, 1) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"10\">"
            << format_double(t) << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double v = ay.log ? ay.lo * std::pow(ay.hi / ay.lo, i / 4.0) : ay.lo + (ay.hi - ay.lo) * i / 4.0;
        const double py = ay.map(v, H - B, T);
        out << "<text x=\"" << L - 6 << "\" y=\"" << fixed(py + 4, 1) << "\" text-anchor=\"end\" font-size=\"10\">"
            << fixed(v, ay.log ? 1 : 3) << "</text>\n";
    }

    int idx = 0;
    for (const auto& [name, pts] : series) {
        const char* color = colors[idx % 6];
        std::map<double, std::pair<double, int>> means;
        for (const auto& [x, y] : pts) {
            if (log_y && !(y > 0.0)) continue;
            out << "<circle cx=\"" << fixed(ax.map(x, L, W - R), 2) << "\" cy=\"" << fixed(ay.map(y, H - B, T), 2)
                << "\" r=\"2.5\" fill=\"" << color << "\" fill-opacity=\"0.6\"/>\n";
            means[x].first += y;
            ++means[x].second;
        }
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        for (const auto& [x, acc] : means)
            out << fixed(ax.map(x, L, W - R), 2) << ',' << fixed(ay.map(acc.first / acc.second, H - B, T), 2) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << W - R + 12 << "\" y=\"" << T + 16 + 18 * idx << "\" font-size=\"12\" fill=\"" << color
            << "\">" << name << "</text>\n";
        ++idx;
    }
    out << "</svg>\n";
}

}  // namespace

std::vector<std::filesystem::path> emit_plot_data(const std::vector<ScalingRecord>& records,
                                                  const std::filesystem::path& dir) {
    if (records.empty()) throw std::invalid_argument("no records to plot");
    std::filesystem::create_directories(dir);

    std::vector<ScalingRecord> sorted = records;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return series_key(a) != series_key(b) ? series_key(a) < series_key(b)
                                              : (a.n != b.n ? a.n < b.n : a.seed < b.seed);
    });

    const std::pair<const char*, double ScalingRecord::*> metrics[] = {
        {"eta", &ScalingRecord::eta_achieved},
        {"cc", &ScalingRecord::mean_cc},
        {"giant_fraction", &ScalingRecord::giant_fraction},
    };
    Series cut, cc;
    std::map<std::string, std::map<std::string, std::vector<std::pair<double, double>>>> files;
    for (const auto& r : sorted) {
        const double n = static_cast<double>(r.n);
        const std::string key = series_key(r);
        cut[key].emplace_back(n, static_cast<double>(r.best_cut_cross_edges));
        cc[key].emplace_back(n, r.mean_cc);
        files["best_cut"][key].emplace_back(n, static_cast<double>(r.best_cut_cross_edges));
        for (const auto& [name, member] : metrics) files[name][key].emplace_back(n, r.*member);
    }

    std::vector<std::filesystem::path> written;
    for (const auto& [metric, by_series] : files)
        for (const auto& [key, pts] : by_series) {
            const auto path = dir / (metric + "_" + key + ".dat");
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
            out << "# n\t" << metric << '\n';
            for (const auto& [x, y] : pts) out << format_double(x) << '\t' << format_double(y) << '\n';
            written.push_back(path);
        }
    write_svg(cut, dir / "cut_scaling.svg", "best balanced cut vs n (log-log)", "cross edges", true);
    write_svg(cc, dir / "cc_vs_n.svg", "mean clustering coefficient vs n", "mean cc", false);
    written.push_back(dir / "cut_scaling.svg");
    written.push_back(dir / "cc_vs_n.svg");
    return written;
}

}  // namespace girg
