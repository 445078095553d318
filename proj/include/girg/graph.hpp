#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "girg/geometry.hpp"
#include "girg/weights.hpp"

namespace girg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Vertex positions stored row-major, n x dimension. Only the first
/// `known_dims` coordinates of each row are meaningful; the rest are absent.
struct Positions {
    int dimension = 0;
    int known_dims = 0;
    std::vector<double> coords;

    std::span<const double> row(Vertex v) const {
        return {coords.data() + static_cast<std::size_t>(v) * dimension, static_cast<std::size_t>(dimension)};
    }
    std::span<double> row(Vertex v) {
        return {coords.data() + static_cast<std::size_t>(v) * dimension, static_cast<std::size_t>(dimension)};
    }
    bool complete() const { return known_dims == dimension; }
    bool operator==(const Positions&) const = default;
};

/// Sampled graph: weights, positions and CSR adjacency with sorted,
/// duplicate-free, loop-free, symmetric neighbor lists.
class GirgGraph {
public:
    GirgGraph() = default;

    /// Edges may come in any order and orientation; duplicates and
    /// self-loops throw std::invalid_argument.
    GirgGraph(std::size_t n, WeightSequence weights, Positions positions, std::vector<Edge> edges);

    /// Graph with unit weights and no positions (dimension 0).
    static GirgGraph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    bool has_edge(Vertex u, Vertex v) const;

    const WeightSequence& weights() const { return weights_; }
    const Positions& positions() const { return positions_; }

    /// Edges {u, v} with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const GirgGraph& other) const;

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    WeightSequence weights_;
    Positions positions_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// Canonicalize (u < v), sort and dedupe an edge list.
void normalize_edges(std::vector<Edge>& edges);

}  // namespace girg
