#include "girg/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "girg/graphstats.hpp"

namespace girg {

std::size_t Bipartition::size(int s) const {
    return static_cast<std::size_t>(std::count(side.begin(), side.end(), static_cast<std::uint8_t>(s)));
}

void Bipartition::validate() const {
    if (side.size() != vertices.size()) throw std::invalid_argument("bipartition arrays differ in length");
    if (size(0) == 0 || size(1) == 0) throw std::invalid_argument("bipartition has an empty side");
}

std::string to_string(CutMethod method) {
    switch (method) {
        case CutMethod::halfspace: return "halfspace";
        case CutMethod::local_search: return "local_search";
        case CutMethod::brute_force: return "brute_force";
    }
    return "unknown";
}

std::size_t min_side_size(double delta, std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(delta * static_cast<double>(n) - 1e-9)));
}

std::size_t cross_edges(const GirgGraph& g, const Bipartition& b) {
    constexpr std::uint8_t outside = 0xFF;
    std::vector<std::uint8_t> side(g.num_vertices(), outside);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) side[b.vertices[i]] = b.side[i];
    std::size_t count = 0;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        const Vertex u = b.vertices[i];
        for (Vertex v : g.neighbors(u))
            if (u < v && side[v] != outside && side[v] != side[u]) ++count;
    }
    return count;
}

namespace {

/// Target-set subgraph with local ids 0..m-1 in the order of `giant`.
struct LocalGraph {
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> targets;

    LocalGraph(const GirgGraph& g, std::span<const Vertex> giant) {
        std::vector<std::int64_t> local(g.num_vertices(), -1);
        for (std::size_t i = 0; i < giant.size(); ++i) local[giant[i]] = static_cast<std::int64_t>(i);
        for (Vertex u : giant) {
            for (Vertex v : g.neighbors(u))
                if (local[v] >= 0) targets.push_back(static_cast<std::uint32_t>(local[v]));
            offsets.push_back(targets.size());
        }
    }
    std::size_t size() const { return offsets.size() - 1; }
    std::span<const std::uint32_t> neighbors(std::size_t v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

CutResult make_result(const GirgGraph& g, std::span<const Vertex> giant, std::vector<std::uint8_t> side,
                      std::size_t cross, CutMethod method, std::string tag, double delta) {
    CutResult r;
    r.part.vertices.assign(giant.begin(), giant.end());
    r.part.side = std::move(side);
    r.cross_edges = cross;
    r.method = method;
    r.tag = std::move(tag);
    r.delta = delta;
    r.n = g.num_vertices();
    r.eta_achieved = r.n == 0 ? 0.0 : static_cast<double>(cross) / static_cast<double>(r.n);
    const std::size_t min_side = min_side_size(delta, r.n);
    r.feasible = r.part.size(0) >= min_side && r.part.size(1) >= min_side;
    return r;
}

CutResult infeasible(const GirgGraph& g, std::span<const Vertex> giant, CutMethod method, std::string tag,
                     double delta) {
    std::vector<std::uint8_t> side(giant.size(), 0);
    for (std::size_t i = giant.size() / 2; i < giant.size(); ++i) side[i] = 1;
    Bipartition b{{giant.begin(), giant.end()}, side};
    const std::size_t cross = giant.size() >= 2 ? cross_edges(g, b) : 0;
    CutResult r = make_result(g, giant, std::move(side), cross, method, std::move(tag), delta);
    r.feasible = false;
    return r;
}

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
}

}  // namespace

CutResult geometric_halfspace_cut(const GirgGraph& g, std::span<const Vertex> giant, int axis, double delta) {
    check_delta(delta);
    const Positions& pos = g.positions();
    if (axis < 0 || axis >= pos.known_dims)
        throw std::invalid_argument("axis " + std::to_string(axis) + " has no known coordinates");
    const std::string tag = "halfspace[axis=" + std::to_string(axis) + "]";
    const std::size_t m = giant.size();
    const std::size_t min_side = min_side_size(delta, g.num_vertices());
    if (m < 2 * min_side) return infeasible(g, giant, CutMethod::halfspace, tag, delta);

    // rank[i] = position of giant[i] in the coordinate order
    std::vector<std::size_t> by_coord(m);
    std::iota(by_coord.begin(), by_coord.end(), 0);
    std::sort(by_coord.begin(), by_coord.end(), [&](std::size_t a, std::size_t b) {
        const double ca = pos.row(giant[a])[axis], cb = pos.row(giant[b])[axis];
        return ca != cb ? ca < cb : giant[a] < giant[b];
    });
    std::vector<std::uint32_t> rank(m);
    for (std::size_t r = 0; r < m; ++r) rank[by_coord[r]] = static_cast<std::uint32_t>(r);

    // edges as rank pairs (a < b); boundary t separates (a, b) iff a < t <= b
    const LocalGraph local(g, giant);
    std::vector<std::vector<std::uint32_t>> starting(m);
    std::vector<std::int64_t> diff(m + 2, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t j : local.neighbors(i)) {
            const std::uint32_t a = rank[i], b = rank[j];
            if (a >= b) continue;
            starting[a].push_back(b);
            ++diff[a + 1];
            --diff[b + 1];
        }
    std::vector<std::int64_t> crossing(m + 1, 0);  // C(t), t = 0..m
    std::int64_t run = 0;
    for (std::size_t t = 0; t <= m; ++t) {
        run += diff[t];
        crossing[t] = run;
    }

    // arcs [t1, t2): cross = C(t1) + C(t2) - 2 #{edges with a < t1 and b >= t2}
    std::vector<std::int64_t> hist(m + 1, 0);  // hist[b] over edges with a < t1 <= b
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::size_t best_t1 = 0, best_t2 = 0;
    const std::size_t max_len = m - min_side;
    for (std::size_t t1 = 0; t1 + min_side <= m; ++t1) {
        if (t1 > 0) {
            hist[t1 - 1] = 0;  // edges ending at t1 - 1 are no longer separated by t1
            for (std::uint32_t b : starting[t1 - 1]) ++hist[b];
        }
        const std::size_t lo = t1 + min_side;
        const std::size_t hi = std::min(m, t1 + max_len);
        std::int64_t suffix = 0;
        for (std::size_t t2 = m; t2 > hi; --t2) suffix += hist[t2];
        for (std::size_t t2 = hi + 1; t2-- > lo;) {
            suffix += hist[t2];
            const std::int64_t cross = crossing[t1] + crossing[t2] - 2 * suffix;
            if (cross < best) {
                best = cross;
                best_t1 = t1;
                best_t2 = t2;
            }
        }
    }

    std::vector<std::uint8_t> side(m);
    for (std::size_t i = 0; i < m; ++i) side[i] = rank[i] >= best_t1 && rank[i] < best_t2 ? 1 : 0;
    return make_result(g, giant, std::move(side), static_cast<std::size_t>(best), CutMethod::halfspace, tag, delta);
}

namespace {

class FmState {
public:
    FmState(const LocalGraph& graph, std::size_t min_side, std::size_t stall_limit)
        : g_(graph), min_side_(min_side), stall_limit_(stall_limit) {}

    /// Runs passes from `side` until one fails to improve; returns the cut.
    std::int64_t optimize(std::vector<std::uint8_t>& side, int max_passes) {
        std::int64_t cut = count(side);
        for (int pass = 0; pass < max_passes; ++pass) {
            const std::int64_t improved = run_pass(side, cut);
            if (improved >= cut) break;
            cut = improved;
        }
        return cut;
    }

    std::int64_t count(const std::vector<std::uint8_t>& side) const {
        std::int64_t c = 0;
        for (std::size_t v = 0; v < g_.size(); ++v)
            for (std::uint32_t u : g_.neighbors(v))
                if (v < u && side[u] != side[v]) ++c;
        return c;
    }

private:
    using Entry = std::pair<std::int64_t, std::int64_t>;  // (gain, -id)

    std::int64_t run_pass(std::vector<std::uint8_t>& side, std::int64_t cut) {
        const std::size_t m = g_.size();
        gain_.assign(m, 0);
        locked_.assign(m, 0);
        std::size_t sizes[2] = {0, 0};
        for (std::size_t v = 0; v < m; ++v) {
            ++sizes[side[v]];
            for (std::uint32_t u : g_.neighbors(v)) gain_[v] += side[u] != side[v] ? 1 : -1;
        }
        std::priority_queue<Entry> heap[2];
        for (std::size_t v = 0; v < m; ++v) heap[side[v]].emplace(gain_[v], -static_cast<std::int64_t>(v));

        auto top = [&](int s) -> const Entry* {
            while (!heap[s].empty()) {
                const Entry& e = heap[s].top();
                const auto v = static_cast<std::size_t>(-e.second);
                if (!locked_[v] && side[v] == s && gain_[v] == e.first) return &e;
                heap[s].pop();
            }
            return nullptr;
        };

        std::vector<std::uint32_t> moves;
        std::int64_t current = cut, best = cut;
        std::size_t best_prefix = 0;
        while (true) {
            const Entry* pick[2] = {nullptr, nullptr};
            for (int s = 0; s < 2; ++s)
                if (sizes[s] > min_side_) pick[s] = top(s);
            int from;
            if (pick[0] && pick[1])
                from = *pick[0] < *pick[1] ? 1 : 0;
            else if (pick[0])
                from = 0;
            else if (pick[1])
                from = 1;
            else
                break;
            const auto v = static_cast<std::uint32_t>(-pick[from]->second);
            heap[from].pop();

            current -= gain_[v];
            side[v] = static_cast<std::uint8_t>(1 - from);
            locked_[v] = 1;
            --sizes[from];
            ++sizes[1 - from];
            moves.push_back(v);
            for (std::uint32_t u : g_.neighbors(v)) {
                if (locked_[u]) continue;
                gain_[u] += side[u] == side[v] ? -2 : 2;
                heap[side[u]].emplace(gain_[u], -static_cast<std::int64_t>(u));
            }
            if (current < best) {
                best = current;
                best_prefix = moves.size();
            } else if (stall_limit_ && moves.size() - best_prefix > stall_limit_) {
                break;
            }
        }
        for (std::size_t i = moves.size(); i-- > best_prefix;) side[moves[i]] ^= 1;
        return best;
    }

    const LocalGraph& g_;
    std::size_t min_side_;
    std::size_t stall_limit_;
    std::vector<std::int64_t> gain_;
    std::vector<std::uint8_t> locked_;
};

/// Flip so that the first vertex sits on side 0.
void canonicalize(std::vector<std::uint8_t>& side) {
    if (!side.empty() && side[0] == 1)
        for (auto& s : side) s ^= 1;
}

}  // namespace

CutResult local_search_cut(const GirgGraph& g, std::span<const Vertex> giant, double delta,
                           const LocalSearchOptions& options) {
    check_delta(delta);
    if (giant.size() < 2) throw std::invalid_argument("local search needs at least two target vertices");
    const std::string tag = "local_search[restarts=" + std::to_string(options.restarts) + "]";
    const std::size_t m = giant.size();
    const std::size_t min_side = min_side_size(delta, g.num_vertices());
    if (m < 2 * min_side) return infeasible(g, giant, CutMethod::local_search, tag, delta);

    const LocalGraph local(g, giant);
    FmState fm(local, min_side, options.stall_limit);
    std::vector<std::uint8_t> best_side;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
        Rng rng(splitmix64(options.seed ^ splitmix64(static_cast<std::uint64_t>(restart) + 0x5EED)));
        std::vector<std::uint32_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::uint8_t> side(m, 0);
        for (std::size_t i = m / 2; i < m; ++i) side[perm[i]] = 1;

        const std::int64_t cut = fm.optimize(side, options.max_passes);
        canonicalize(side);
        if (cut < best || (cut == best && side < best_side)) {
            best = cut;
            best_side = side;
        }
    }
    return make_result(g, giant, std::move(best_side), static_cast<std::size_t>(best), CutMethod::local_search, tag,
                       delta);
}

CutResult refine_cut(const GirgGraph& g, const CutResult& start, const LocalSearchOptions& options) {
    const std::span<const Vertex> giant = start.part.vertices;
    const std::string tag = start.tag + "+fm";
    const std::size_t min_side = min_side_size(start.delta, g.num_vertices());
    if (!start.feasible) return infeasible(g, giant, CutMethod::local_search, tag, start.delta);

    const LocalGraph local(g, giant);
    FmState fm(local, min_side, options.stall_limit);
    std::vector<std::uint8_t> side = start.part.side;
    const std::int64_t cut = fm.optimize(side, options.max_passes);
    canonicalize(side);
    return make_result(g, giant, std::move(side), static_cast<std::size_t>(cut), CutMethod::local_search, tag,
                       start.delta);
}

CutResult brute_force_min_cut(const GirgGraph& g, std::span<const Vertex> giant, double delta) {
    check_delta(delta);
    const std::size_t m = giant.size();
    if (m > kBruteForceLimit)
        throw std::invalid_argument("brute force supports at most " + std::to_string(kBruteForceLimit) +
                                    " target vertices, got " + std::to_string(m));
    const std::string tag = "brute_force";
    const std::size_t min_side = min_side_size(delta, g.num_vertices());
    if (m < 2 || m < 2 * min_side) return infeasible(g, giant, CutMethod::brute_force, tag, delta);

    const LocalGraph local(g, giant);
    std::vector<std::uint32_t> adj(m, 0);
    for (std::size_t v = 0; v < m; ++v)
        for (std::uint32_t u : local.neighbors(v)) adj[v] |= 1u << u;

    // vertex 0 stays on side 0; mask is the side-1 set
    const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 2; mask <= full; mask += 2) {
        const auto ones = static_cast<std::size_t>(std::popcount(mask));
        if (ones < min_side || m - ones < min_side) continue;
        std::int64_t cross = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            cross += std::popcount(adj[std::countr_zero(rest)] & ~mask & full);
        if (cross < best) {
            best = cross;
            best_mask = mask;
        }
    }
    std::vector<std::uint8_t> side(m);
    for (std::size_t v = 0; v < m; ++v) side[v] = (best_mask >> v) & 1u;
    return make_result(g, giant, std::move(side), static_cast<std::size_t>(best), CutMethod::brute_force, tag, delta);
}

CutResult best_cut(const GirgGraph& g, std::span<const Vertex> giant, double delta, const LocalSearchOptions& options,
                   std::vector<CutResult>* all) {
    std::vector<CutResult> found;
    for (int axis = 0; axis < g.positions().known_dims; ++axis) {
        found.push_back(geometric_halfspace_cut(g, giant, axis, delta));
        if (found.back().feasible) found.push_back(refine_cut(g, found.back(), options));
    }
    if (giant.size() >= 2) found.push_back(local_search_cut(g, giant, delta, options));
    if (found.empty()) throw std::invalid_argument("no cut searcher applies to this target set");

    std::size_t pick = 0;
    for (std::size_t i = 1; i < found.size(); ++i) {
        const bool better_feasibility = found[i].feasible && !found[pick].feasible;
        const bool same_feasibility = found[i].feasible == found[pick].feasible;
        if (better_feasibility || (same_feasibility && found[i].cross_edges < found[pick].cross_edges)) pick = i;
    }
    CutResult result = found[pick];
    if (all) *all = std::move(found);
    return result;
}

DestroyReport destroy_check(const PhasedTrace& trace, double delta, double eta, const LocalSearchOptions& options) {
    DestroyReport rep;
    if (trace.giant1.empty()) return rep;
    rep.giant3 = component_of(trace.g3, trace.giant1.front());
    if (rep.giant3.size() < 2) return rep;

    std::vector<CutResult> found;
    best_cut(trace.g3, rep.giant3, delta, options, &found);
    const double limit = eta * static_cast<double>(trace.g3.num_vertices());
    for (const CutResult& cut : found) {
        if (!cut.feasible) continue;
        DestroyEntry e;
        e.tag = cut.tag;
        e.cross_g3 = cross_edges(trace.g3, cut.part);
        e.cross_g4 = cross_edges(trace.g4, cut.part);
        if (e.cross_g3 == 0)
            e.inflation = e.cross_g4 == 0 ? 1.0 : INFINITY;
        else
            e.inflation = static_cast<double>(e.cross_g4) / static_cast<double>(e.cross_g3);
        e.sparse = static_cast<double>(e.cross_g3) <= limit;
        if (e.sparse) {
            ++rep.sparse_count;
            if (e.cross_g4 < e.cross_g3 + 1) rep.all_sparse_gained = false;
        }
        rep.cuts.push_back(std::move(e));
    }
    return rep;
}

}  // namespace girg
