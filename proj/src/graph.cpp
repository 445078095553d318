#include "girg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace girg {

void normalize_edges(std::vector<Edge>& edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

GirgGraph::GirgGraph(std::size_t n, WeightSequence weights, Positions positions, std::vector<Edge> edges)
    : n_(n), weights_(std::move(weights)), positions_(std::move(positions)) {
    if (weights_.size() != n) throw std::invalid_argument("weight count does not match vertex count");
    if (positions_.coords.size() != n * static_cast<std::size_t>(positions_.dimension))
        throw std::invalid_argument("position array does not match n x dimension");
    if (positions_.known_dims < 0 || positions_.known_dims > positions_.dimension)
        throw std::invalid_argument("known_dims out of range");

    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + "}");
    edge_count_ = edges.size();

    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // edges are sorted, so both passes append neighbors in increasing order
    for (const auto& [u, v] : edges) targets_[fill[v]++] = u;
    for (const auto& [u, v] : edges) targets_[fill[u]++] = v;
}

GirgGraph GirgGraph::from_edges(std::size_t n, std::vector<Edge> edges) {
    return GirgGraph(n, WeightSequence::from(std::vector<double>(n, 1.0)), Positions{}, std::move(edges));
}

bool GirgGraph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> GirgGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool GirgGraph::operator==(const GirgGraph& other) const {
    return n_ == other.n_ && weights_.weights == other.weights_.weights && positions_ == other.positions_ &&
           offsets_ == other.offsets_ && targets_ == other.targets_;
}

}  // namespace girg
