#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "girg/graph.hpp"

namespace girg {

/// Malformed input file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::filesystem::path& file, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

std::filesystem::path vertex_file(const std::filesystem::path& prefix);
std::filesystem::path edge_file(const std::filesystem::path& prefix);

/// Writes `<prefix>.vertices.tsv` (header, then "id weight x_1 .. x_d",
/// absent coordinates as "-") and `<prefix>.edges.tsv` ("u v", u < v,
/// sorted). Doubles use 17 significant digits, so import is lossless.
void export_graph(const GirgGraph& g, const std::filesystem::path& prefix);

GirgGraph import_graph(const std::filesystem::path& prefix);

/// Shortest-round-trip text for a double ("%.17g").
std::string format_double(double x);

}  // namespace girg
