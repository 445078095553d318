#include "girg/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace girg {

ParseError::ParseError(const std::filesystem::path& file, std::size_t line, const std::string& what)
    : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " + what), line_(line) {}

std::filesystem::path vertex_file(const std::filesystem::path& prefix) {
    return prefix.string() + ".vertices.tsv";
}

std::filesystem::path edge_file(const std::filesystem::path& prefix) { return prefix.string() + ".edges.tsv"; }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, const std::filesystem::path& file, std::size_t line, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(file, line, std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

void export_graph(const GirgGraph& g, const std::filesystem::path& prefix) {
    const Positions& pos = g.positions();
    {
        std::ofstream out = open_out(vertex_file(prefix));
        out << "id\tweight";
        for (int i = 1; i <= pos.dimension; ++i) out << "\tx" << i;
        out << '\n';
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            out << v << '\t' << format_double(g.weights()[v]);
            for (int i = 0; i < pos.dimension; ++i)
                out << '\t' << (i < pos.known_dims ? format_double(pos.row(v)[i]) : std::string("-"));
            out << '\n';
        }
        if (!out) throw std::runtime_error("write failed for " + vertex_file(prefix).string());
    }
    std::ofstream out = open_out(edge_file(prefix));
    for (const auto& [u, v] : g.edges()) out << u << '\t' << v << '\n';
    if (!out) throw std::runtime_error("write failed for " + edge_file(prefix).string());
}

GirgGraph import_graph(const std::filesystem::path& prefix) {
    const auto vpath = vertex_file(prefix);
    std::ifstream vin(vpath, std::ios::binary);
    if (!vin) throw std::runtime_error("cannot open " + vpath.string());

    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(vin, line)) throw ParseError(vpath, 1, "missing header");
    const auto header = split_tabs(line);
    if (header.size() < 2 || header[0] != "id" || header[1] != "weight")
        throw ParseError(vpath, 1, "header must start with 'id<TAB>weight'");
    const int dim = static_cast<int>(header.size()) - 2;
    for (int i = 0; i < dim; ++i)
        if (header[static_cast<std::size_t>(i) + 2] != "x" + std::to_string(i + 1))
            throw ParseError(vpath, 1, "unexpected coordinate column '" + std::string(header[i + 2]) + "'");

    std::vector<double> weights, coords;
    int known = -1;
    while (std::getline(vin, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != header.size())
            throw ParseError(vpath, lineno, "expected " + std::to_string(header.size()) + " fields");
        const auto id = parse_number<std::size_t>(fields[0], vpath, lineno, "vertex id");
        if (id != weights.size()) throw ParseError(vpath, lineno, "vertex ids must be consecutive from 0");
        const double w = parse_number<double>(fields[1], vpath, lineno, "weight");
        if (!(w > 0.0)) throw ParseError(vpath, lineno, "weight must be positive");
        weights.push_back(w);
        int row_known = dim;
        for (int i = 0; i < dim; ++i) {
            const auto text = fields[static_cast<std::size_t>(i) + 2];
            if (text == "-") {
                if (row_known == dim) row_known = i;
                coords.push_back(0.0);
                continue;
            }
            if (row_known != dim) throw ParseError(vpath, lineno, "absent coordinates must be trailing");
            const double c = parse_number<double>(text, vpath, lineno, "coordinate");
            if (!(c >= 0.0 && c < 1.0)) throw ParseError(vpath, lineno, "coordinate outside [0,1)");
            coords.push_back(c);
        }
        if (known < 0) known = row_known;
        if (row_known != known) throw ParseError(vpath, lineno, "inconsistent number of known coordinates");
    }
    const std::size_t n = weights.size();

    const auto epath = edge_file(prefix);
    std::ifstream ein(epath, std::ios::binary);
    if (!ein) throw std::runtime_error("cannot open " + epath.string());
    std::vector<Edge> edges;
    std::set<Edge> seen;
    lineno = 0;
    while (std::getline(ein, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2) throw ParseError(epath, lineno, "expected 'u<TAB>v'");
        const auto u = parse_number<Vertex>(fields[0], epath, lineno, "vertex id");
        const auto v = parse_number<Vertex>(fields[1], epath, lineno, "vertex id");
        if (u >= v) throw ParseError(epath, lineno, "edge endpoints must satisfy u < v");
        if (v >= n) throw ParseError(epath, lineno, "edge endpoint " + std::to_string(v) + " out of range");
        if (!seen.emplace(u, v).second)
            throw ParseError(epath, lineno, "duplicate edge " + std::to_string(u) + "\t" + std::to_string(v));
        edges.emplace_back(u, v);
    }

    Positions pos{dim, known < 0 ? dim : known, std::move(coords)};
    return GirgGraph(n, WeightSequence::from(std::move(weights)), std::move(pos), std::move(edges));
}

}  // namespace girg
