// girg: sample, analyze and cut geometric inhomogeneous random graphs.
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "girg/acceptance.hpp"
#include "girg/cuts.hpp"
#include "girg/graphstats.hpp"
#include "girg/harness.hpp"
#include "girg/io.hpp"
#include "girg/sampler.hpp"

using namespace girg;

namespace {

/// Decimal or 0x-prefixed hexadecimal.
std::uint64_t parse_seed(const std::string& text) {
    std::string_view s = text;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s.remove_prefix(2);
        base = 16;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("invalid seed '" + text + "' (decimal or 0x-hex expected)");
    return value;
}

struct ModelFlags {
    std::string geometry = "mcd";
    std::string volume = "linearized";
    int dim = 2;
    std::size_t n = 4096;
    double alpha = 1.5;
    double beta = 2.5;
    double prefactor = 1.0;
    double w_min = 1.0;
    std::string seed = "1";

    void add(CLI::App* app, bool with_n = true) {
        app->add_option("--geometry", geometry, "mcd or euclidean_max")->capture_default_str();
        app->add_option("--volume", volume, "mcd volume: linearized or exact")->capture_default_str();
        app->add_option("--dim", dim, "torus dimension d")->capture_default_str();
        if (with_n) app->add_option("--n", n, "number of vertices")->capture_default_str();
        app->add_option("--alpha", alpha, "decay exponent alpha > 1")->capture_default_str();
        app->add_option("--beta", beta, "power-law exponent in (2,3)")->capture_default_str();
        app->add_option("--prefactor", prefactor, "edge probability prefactor c in (0,1]")->capture_default_str();
        app->add_option("--wmin", w_min, "minimum weight")->capture_default_str();
        app->add_option("--seed", seed, "model seed, decimal or 0x-hex")->capture_default_str();
    }

    GeometryKind kind() const { return parse_geometry_kind(geometry); }

    VolumeMode volume_mode() const {
        if (volume == "linearized") return VolumeMode::linearized;
        if (volume == "exact") return VolumeMode::exact;
        throw std::invalid_argument("unknown volume mode '" + volume + "'");
    }

    ModelParams model() const {
        ModelParams p;
        p.d = dim;
        p.n = n;
        p.alpha = alpha;
        p.beta = beta;
        p.prefactor_c = prefactor;
        p.geometry = kind() == GeometryKind::mcd ? GeometrySpec::mcd(dim, volume_mode()) : GeometrySpec::euclidean(dim);
        p.weight_params.beta = beta;
        p.weight_params.w_min = w_min;
        p.seed = parse_seed(seed);
        return p;
    }
};

/// Graph from --in, or freshly sampled from the model flags.
GirgGraph load_or_sample(const std::string& in, const ModelFlags& flags, std::size_t threads) {
    if (!in.empty()) return import_graph(in);
    return sample_direct(flags.model(), {threads * 4, threads});
}

void print_cut(const CutResult& c) {
    std::printf("%-28s delta=%-5g sides=%zu/%zu cross_edges=%zu eta=%.6g %s\n", c.tag.c_str(), c.delta, c.side_size(0),
                c.side_size(1), c.cross_edges, c.eta_achieved, c.feasible ? "feasible" : "infeasible");
}

int cmd_gen(const ModelFlags& flags, const std::string& out, double f, bool phased, std::size_t threads) {
    const ModelParams p = flags.model();
    if (!phased) {
        const GirgGraph g = sample_direct(p, {threads * 4, threads});
        export_graph(g, out);
        std::printf("wrote %s, %s (n=%zu, m=%zu)\n", vertex_file(out).c_str(), edge_file(out).c_str(),
                    g.num_vertices(), g.edge_count());
        return 0;
    }
    const PhasedTrace t = sample_phased(p, f);
    const GirgGraph* snaps[] = {&t.g1, &t.g2, &t.g3, &t.g4};
    for (int i = 0; i < 4; ++i) {
        const std::string prefix = out + ".g" + std::to_string(i + 1);
        export_graph(*snaps[i], prefix);
        std::printf("wrote %s (m=%zu)\n", prefix.c_str(), snaps[i]->edge_count());
    }
    std::printf("|K1|=%zu s_max=%.4f B'=%g inclusion=%.4f |F|=%zu\n", t.giant1.size(), t.s_max, t.b_prime,
                t.inclusion_prob, t.f_set.size());
    return 0;
}

int cmd_stats(const GirgGraph& g, double cutoff) {
    const auto comps = connected_components(g);
    const auto cc = clustering_coefficient(g);
    const auto deg = degree_report(g, cutoff);
    const double n = static_cast<double>(g.num_vertices());
    std::printf("vertices          %zu\n", g.num_vertices());
    std::printf("edges             %zu\n", g.edge_count());
    std::printf("components        %zu\n", comps.sizes.size());
    std::printf("giant size        %zu (%.4f of n)\n", comps.giant_size(), n > 0 ? comps.giant_size() / n : 0.0);
    std::printf("mean cc           %.6f (%zu vertices of degree < 2)\n", cc.mean, cc.low_degree);
    std::printf("mean degree       %.4f\n", deg.mean_degree);
    const auto min_deg = std::min_element(deg.degrees.begin(), deg.degrees.end());
    std::printf("degree range      %zu..%zu\n", min_deg == deg.degrees.end() ? 0 : *min_deg, deg.max_degree);
    if (deg.tail)
        std::printf("tail exponent     %.4f +- %.4f (%zu degrees >= %g)\n", deg.tail->exponent, deg.tail->half_width,
                    deg.tail->tail_size, cutoff);
    else
        std::printf("tail exponent     n/a (%s)\n", deg.tail_error.c_str());
    return 0;
}

int cmd_cut(const GirgGraph& g, const std::vector<double>& deltas, const LocalSearchOptions& search, bool oracle) {
    const auto comps = connected_components(g);
    const auto giant = comps.members(comps.giant);
    std::printf("giant: %zu of %zu vertices\n", giant.size(), g.num_vertices());
    if (giant.size() < 2) {
        std::printf("giant has fewer than two vertices; nothing to cut\n");
        return 0;
    }
    for (double delta : deltas) {
        std::vector<CutResult> all;
        const CutResult best = best_cut(g, giant, delta, search, &all);
        for (const auto& c : all) print_cut(c);
        if (oracle) print_cut(brute_force_min_cut(g, giant, delta));
        std::printf("best: %s with %zu cross edges (eta %.6g)\n\n", best.tag.c_str(), best.cross_edges,
                    best.eta_achieved);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric inhomogeneous random graphs: sampling, statistics and balanced cuts"};
    app.require_subcommand(1);
    app.fallthrough();  // --threads also works after the subcommand
    std::size_t threads = 1;
    app.add_option("--threads", threads, "worker threads for sampling")->capture_default_str();

    ModelFlags gen_flags, stats_flags, cut_flags, sweep_flags;

    auto* gen = app.add_subcommand("gen", "sample a graph and export it");
    gen_flags.add(gen);
    std::string gen_out;
    double gen_f = 0.02;
    bool gen_phased = false;
    gen->add_option("--out", gen_out, "output prefix (<out>.vertices.tsv, <out>.edges.tsv)")->required();
    gen->add_flag("--phased", gen_phased, "run the six-phase sampler and export g1..g4 (mcd, d >= 2)");
    gen->add_option("--f", gen_f, "Phase-2 parameter f for --phased")->capture_default_str();

    auto* stats = app.add_subcommand("stats", "components, clustering and degrees");
    stats_flags.add(stats);
    std::string stats_in;
    double stats_cutoff = kDegreeTailCutoff;
    stats->add_option("--in", stats_in, "graph prefix to import instead of sampling");
    stats->add_option("--cutoff", stats_cutoff, "degree tail cutoff")->capture_default_str();

    auto* cut = app.add_subcommand("cut", "run the cut searchers on the giant component");
    cut_flags.add(cut);
    std::string cut_in;
    std::vector<double> cut_deltas{0.1};
    int cut_restarts = 10;
    std::string cut_search_seed = "1";
    bool cut_oracle = false;
    cut->add_option("--in", cut_in, "graph prefix to import instead of sampling");
    cut->add_option("--delta", cut_deltas, "balance parameter(s) delta in (0, 1/2)")->capture_default_str();
    cut->add_option("--restarts", cut_restarts, "local search restarts")->capture_default_str();
    cut->add_option("--search-seed", cut_search_seed, "local search seed")->capture_default_str();
    cut->add_flag("--oracle", cut_oracle, "also run the brute-force oracle (giant <= 20 vertices)");

    auto* sweep = app.add_subcommand("sweep", "scaling experiment over n and seeds, written as CSV");
    sweep_flags.add(sweep, false);
    std::vector<std::size_t> sweep_n{4096, 8192, 16384};
    std::vector<std::string> sweep_seeds{"1", "2", "3"};
    std::vector<double> sweep_deltas{0.05, 0.1, 0.2};
    std::string sweep_out;
    int sweep_restarts = 10;
    bool sweep_persist = false, sweep_no_timing = false, sweep_plots = false;
    double sweep_f = 0.02;
    sweep->add_option("--n", sweep_n, "vertex counts")->capture_default_str();
    sweep->add_option("--seeds", sweep_seeds, "model seeds")->capture_default_str();
    sweep->add_option("--delta", sweep_deltas, "balance parameters; records use the first")->capture_default_str();
    sweep->add_option("--f", sweep_f, "Phase-2 parameter f (recorded in the config)")->capture_default_str();
    sweep->add_option("--out", sweep_out, "output directory")->required();
    sweep->add_option("--restarts", sweep_restarts, "local search restarts")->capture_default_str();
    sweep->add_flag("--persist", sweep_persist, "also export every sampled graph");
    sweep->add_flag("--no-timing", sweep_no_timing, "write runtime_ms as 0 so reruns are byte-identical");
    sweep->add_flag("--plots", sweep_plots, "emit plot data and SVG renderings under <out>/plots");

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    std::vector<int> verify_only;
    std::string verify_out;
    bool verify_verbose = false;
    verify->add_option("--only", verify_only, "criteria to run (1..10)");
    verify->add_option("--out", verify_out, "directory for sweep CSVs and plots");
    verify->add_flag("--verbose", verify_verbose, "progress messages on stderr");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return cmd_gen(gen_flags, gen_out, gen_f, gen_phased, threads);
        if (*stats) return cmd_stats(load_or_sample(stats_in, stats_flags, threads), stats_cutoff);
        if (*cut) {
            LocalSearchOptions search;
            search.restarts = cut_restarts;
            search.seed = parse_seed(cut_search_seed);
            return cmd_cut(load_or_sample(cut_in, cut_flags, threads), cut_deltas, search, cut_oracle);
        }
        if (*sweep) {
            ExperimentConfig c;
            c.geometry = sweep_flags.kind();
            c.d = sweep_flags.dim;
            c.volume_mode = sweep_flags.volume_mode();
            c.n_values = sweep_n;
            c.alpha = sweep_flags.alpha;
            c.beta = sweep_flags.beta;
            c.prefactor_c = sweep_flags.prefactor;
            c.w_min = sweep_flags.w_min;
            c.deltas = sweep_deltas;
            c.f = sweep_f;
            for (const auto& s : sweep_seeds) c.seeds.push_back(parse_seed(s));
            c.search.restarts = sweep_restarts;
            c.output_dir = sweep_out;
            c.persist_graphs = sweep_persist;
            c.record_timing = !sweep_no_timing;
            c.threads = threads;
            const SweepResult res = run_sweep(c);
            std::cout << records_csv_header() << '\n';
            for (const auto& r : res.records) std::cout << to_csv_row(r) << '\n';
            if (res.records.size() > 0) {
                try {
                    const LinearFit fit = fit_scaling_exponent(res.records);
                    std::printf("scaling exponent of the best cut: %.4f +- %.4f\n", fit.slope, fit.slope_half_width);
                } catch (const std::invalid_argument& e) {
                    std::printf("scaling exponent not fitted: %s\n", e.what());
                }
            }
            if (sweep_plots) emit_plot_data(res.records, std::filesystem::path(sweep_out) / "plots");
            return 0;
        }
        if (*verify) {
            AcceptanceOptions opt;
            opt.only = verify_only;
            opt.output_dir = verify_out;
            opt.threads = threads;
            if (verify_verbose) opt.log = [](const std::string& m) { std::cerr << "  .. " << m << std::endl; };
            int failed = 0;
            run_acceptance(opt, [&](const CriterionResult& r) {
                std::cout << format_result(r) << std::endl;
                failed += r.pass ? 0 : 1;
            });
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "girg: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
