#include "girg/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "girg/graphstats.hpp"
#include "girg/io.hpp"

namespace girg {

GeometrySpec ExperimentConfig::geometry_spec() const {
    return {geometry, d, geometry == GeometryKind::mcd ? volume_mode : VolumeMode::exact};
}

ModelParams ExperimentConfig::model(std::size_t n, std::uint64_t seed) const {
    ModelParams p;
    p.d = d;
    p.n = n;
    p.alpha = alpha;
    p.beta = beta;
    p.prefactor_c = prefactor_c;
    p.geometry = geometry_spec();
    p.weight_params.beta = beta;
    p.weight_params.w_min = w_min;
    p.seed = seed;
    return p;
}

void ExperimentConfig::validate() const {
    if (n_values.empty()) throw std::invalid_argument("sweep needs at least one n");
    for (std::size_t n : n_values)
        if (n < 16) throw std::invalid_argument("every n must be >= 16");
    if (seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
    if (deltas.empty()) throw std::invalid_argument("sweep needs at least one delta");
    for (double delta : deltas)
        if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2)");
    model(n_values.front(), seeds.front()).validate();
}

std::uint64_t cell_search_seed(std::uint64_t seed, std::size_t n) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n) + 0xC0FFEE));
}

ScalingRecord analyze_cell(const ExperimentConfig& config, const GirgGraph& g, std::size_t n, std::uint64_t seed,
                           std::vector<CutRow>* cut_rows) {
    ScalingRecord rec;
    rec.geometry = to_string(config.geometry);
    rec.d = config.d;
    rec.n = n;
    rec.seed = seed;

    const ComponentLabeling comps = connected_components(g);
    const std::vector<Vertex> giant = comps.members(comps.giant);
    rec.giant_size = giant.size();
    rec.giant_fraction = static_cast<double>(giant.size()) / static_cast<double>(n);
    rec.mean_cc = clustering_coefficient(g).mean;
    const DegreeReport deg = degree_report(g, config.degree_cutoff);
    rec.degree_tail_exponent = deg.tail ? deg.tail->exponent : std::nan("");

    LocalSearchOptions search = config.search;
    search.seed = cell_search_seed(seed, n);
    for (std::size_t i = 0; i < config.deltas.size(); ++i) {
        std::vector<CutResult> all;
        const CutResult best = giant.size() >= 2 ? best_cut(g, giant, config.deltas[i], search, &all)
                                                 : CutResult{};
        if (i == 0) {
            rec.best_cut_cross_edges = best.cross_edges;
            rec.best_cut_method = giant.size() >= 2 ? (best.feasible ? best.tag : "infeasible") : "none";
            rec.eta_achieved = static_cast<double>(best.cross_edges) / static_cast<double>(n);
        }
        if (cut_rows)
            for (CutResult& c : all) cut_rows->push_back({rec.geometry, rec.d, n, seed, std::move(c)});
    }
    return rec;
}

std::filesystem::path cell_graph_prefix(const std::filesystem::path& output_dir, const ScalingRecord& r) {
    return output_dir / "graphs" /
           (r.geometry + "_d" + std::to_string(r.d) + "_n" + std::to_string(r.n) + "_s" + std::to_string(r.seed));
}

SweepResult run_sweep(const ExperimentConfig& config) {
    config.validate();
    SweepResult out;
    if (!config.output_dir.empty()) {
        std::filesystem::create_directories(config.output_dir);
        if (config.persist_graphs) std::filesystem::create_directories(config.output_dir / "graphs");
    }
    for (std::size_t n : config.n_values) {
        for (std::uint64_t seed : config.seeds) {
            const auto start = std::chrono::steady_clock::now();
            const GirgGraph g = sample_direct(config.model(n, seed), {config.threads, config.threads});
            ScalingRecord rec = analyze_cell(config, g, n, seed, &out.cuts);
            const auto stop = std::chrono::steady_clock::now();
            rec.runtime_ms =
                config.record_timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
            if (config.persist_graphs && !config.output_dir.empty())
                export_graph(g, cell_graph_prefix(config.output_dir, rec));
            out.records.push_back(std::move(rec));
        }
    }
    if (!config.output_dir.empty()) {
        write_records_csv(out.records, config.output_dir / "records.csv");
        write_cuts_csv(out.cuts, config.output_dir / "cuts.csv");
    }
    return out;
}

std::string records_csv_header() {
    return "geometry,d,n,seed,giant_size,giant_fraction,best_cut_cross_edges,best_cut_method,eta_achieved,mean_cc,"
           "degree_tail_exponent,runtime_ms";
}

std::string to_csv_row(const ScalingRecord& r) {
    std::ostringstream s;
    s << r.geometry << ',' << r.d << ',' << r.n << ',' << r.seed << ',' << r.giant_size << ','
      << format_double(r.giant_fraction) << ',' << r.best_cut_cross_edges << ',' << r.best_cut_method << ','
      << format_double(r.eta_achieved) << ',' << format_double(r.mean_cc) << ','
      << format_double(r.degree_tail_exponent) << ',' << format_double(r.runtime_ms);
    return s.str();
}

std::string cuts_csv_header() { return "geometry,d,n,seed,method,delta,side0,side1,cross_edges,eta_achieved,feasible"; }

std::string to_csv_row(const CutRow& r) {
    std::ostringstream s;
    s << r.geometry << ',' << r.d << ',' << r.n << ',' << r.seed << ',' << r.cut.tag << ','
      << format_double(r.cut.delta) << ',' << r.cut.side_size(0) << ',' << r.cut.side_size(1) << ','
      << r.cut.cross_edges << ',' << format_double(r.cut.eta_achieved) << ',' << (r.cut.feasible ? 1 : 0);
    return s.str();
}

namespace {

template <typename Row>
void write_csv(const std::vector<Row>& rows, const std::string& header, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << header << '\n';
    for (const Row& r : rows) out << to_csv_row(r) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void write_records_csv(const std::vector<ScalingRecord>& records, const std::filesystem::path& path) {
    write_csv(records, records_csv_header(), path);
}

void write_cuts_csv(const std::vector<CutRow>& rows, const std::filesystem::path& path) {
    write_csv(rows, cuts_csv_header(), path);
}

std::vector<ScalingRecord> read_records_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    if (line != records_csv_header()) throw ParseError(path, 1, "unexpected records header");
    std::vector<ScalingRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 12) throw ParseError(path, lineno, "expected 12 fields");
        try {
            ScalingRecord r;
            r.geometry = f[0];
            r.d = std::stoi(f[1]);
            r.n = std::stoull(f[2]);
            r.seed = std::stoull(f[3]);
            r.giant_size = std::stoull(f[4]);
            r.giant_fraction = std::stod(f[5]);
            r.best_cut_cross_edges = std::stoull(f[6]);
            r.best_cut_method = f[7];
            r.eta_achieved = std::stod(f[8]);
            r.mean_cc = std::stod(f[9]);
            r.degree_tail_exponent = std::stod(f[10]);
            r.runtime_ms = std::stod(f[11]);
            out.push_back(std::move(r));
        } catch (const std::logic_error& e) {
            throw ParseError(path, lineno, std::string("bad number: ") + e.what());
        }
    }
    return out;
}

LinearFit fit_scaling_exponent(const std::vector<ScalingRecord>& records) {
    std::map<std::size_t, std::vector<double>> by_n;
    for (const auto& r : records) by_n[r.n].push_back(static_cast<double>(r.best_cut_cross_edges));
    if (by_n.size() < 4) throw std::invalid_argument("scaling fit needs at least 4 distinct n values");
    std::vector<double> x, y;
    for (const auto& [n, cuts] : by_n) {
        if (cuts.size() < 3)
            throw std::invalid_argument("scaling fit needs at least 3 seeds at n = " + std::to_string(n));
        double mean = 0.0;
        for (double c : cuts) mean += c;
        mean /= static_cast<double>(cuts.size());
        if (!(mean > 0.0)) throw std::invalid_argument("mean best cut is zero at n = " + std::to_string(n));
        x.push_back(std::log(static_cast<double>(n)));
        y.push_back(std::log(mean));
    }
    return least_squares(x, y);
}

std::vector<std::string> recheck_record(const ExperimentConfig& config, const ScalingRecord& record,
                                        const GirgGraph& g) {
    const ScalingRecord again = analyze_cell(config, g, record.n, record.seed);
    std::vector<std::string> bad;
    auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
    if (again.geometry != record.geometry || again.d != record.d) bad.emplace_back("geometry");
    if (again.giant_size != record.giant_size) bad.emplace_back("giant_size");
    if (!same(again.giant_fraction, record.giant_fraction)) bad.emplace_back("giant_fraction");
    if (again.best_cut_cross_edges != record.best_cut_cross_edges) bad.emplace_back("best_cut_cross_edges");
    if (again.best_cut_method != record.best_cut_method) bad.emplace_back("best_cut_method");
    if (!same(again.eta_achieved, record.eta_achieved)) bad.emplace_back("eta_achieved");
    if (!same(again.mean_cc, record.mean_cc)) bad.emplace_back("mean_cc");
    if (!same(again.degree_tail_exponent, record.degree_tail_exponent)) bad.emplace_back("degree_tail_exponent");
    return bad;
}

}  // namespace girg
