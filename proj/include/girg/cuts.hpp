#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "girg/graph.hpp"
#include "girg/random.hpp"
#include "girg/sampler.hpp"

namespace girg {

/// Two-sided split of a target vertex set. `side[i]` belongs to `vertices[i]`.
struct Bipartition {
    std::vector<Vertex> vertices;
    std::vector<std::uint8_t> side;

    std::size_t size(int s) const;
    /// Throws std::invalid_argument if a side is empty or the arrays disagree.
    void validate() const;
};

enum class CutMethod { halfspace, local_search, brute_force };

std::string to_string(CutMethod method);

/// A (delta, eta)-cut candidate. Side sizes are measured against the total
/// vertex count n, not against the size of the target set.
struct CutResult {
    Bipartition part;
    std::size_t cross_edges = 0;
    CutMethod method = CutMethod::local_search;
    std::string tag;  // method plus its settings, e.g. "halfspace[axis=1]"
    double delta = 0.0;
    std::size_t n = 0;
    double eta_achieved = 0.0;  // cross_edges / n
    bool feasible = false;

    std::size_t side_size(int s) const { return part.size(s); }
};

/// Smallest admissible side size ceil(delta n).
std::size_t min_side_size(double delta, std::size_t n);

std::size_t cross_edges(const GirgGraph& g, const Bipartition& b);

/// Best cut among all pairs of parallel hyperplanes orthogonal to `axis`.
/// On the circle such a pair cuts out an arc of the sorted coordinate order,
/// so every arc with both sides >= delta n is evaluated exactly, O(m^2).
CutResult geometric_halfspace_cut(const GirgGraph& g, std::span<const Vertex> giant, int axis, double delta);

struct LocalSearchOptions {
    int restarts = 10;
    int max_passes = 50;
    std::uint64_t seed = 1;
    /// A pass stops after this many moves without a new best; 0 runs every pass to completion.
    std::size_t stall_limit = 1000;
};

/// Fiduccia-Mattheyses passes from random balanced splits; moves the best
/// gain vertex (lowest id on ties) that keeps both sides >= delta n, locks
/// it, and keeps the best prefix of every pass.
CutResult local_search_cut(const GirgGraph& g, std::span<const Vertex> giant, double delta,
                           const LocalSearchOptions& options = {});

/// FM passes starting from an existing feasible cut; never worse than `start`.
CutResult refine_cut(const GirgGraph& g, const CutResult& start, const LocalSearchOptions& options = {});

inline constexpr std::size_t kBruteForceLimit = 20;

/// Exact minimum over all 2^{m-1} bipartitions; m <= kBruteForceLimit.
CutResult brute_force_min_cut(const GirgGraph& g, std::span<const Vertex> giant, double delta);

/// Minimum over the half-space sweeps of every axis with known coordinates,
/// their FM refinements, and local search from random splits. Feasible
/// results win over infeasible ones; ties keep the earlier candidate.
CutResult best_cut(const GirgGraph& g, std::span<const Vertex> giant, double delta,
                   const LocalSearchOptions& options, std::vector<CutResult>* all = nullptr);

struct DestroyEntry {
    std::string tag;
    std::size_t cross_g3 = 0;
    std::size_t cross_g4 = 0;
    double inflation = 1.0;  // cross_g4 / cross_g3
    bool sparse = false;     // cross_g3 <= eta n
};

struct DestroyReport {
    std::vector<Vertex> giant3;  // K^3_max
    std::vector<DestroyEntry> cuts;
    bool all_sparse_gained = true;  // every sparse cut gained >= 1 cross-edge
    std::size_t sparse_count = 0;
};

/// Finds the best cuts of K^3_max in g3 and recounts them in g4.
DestroyReport destroy_check(const PhasedTrace& trace, double delta, double eta, const LocalSearchOptions& options = {});

}  // namespace girg
