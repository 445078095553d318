#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "girg/cuts.hpp"
#include "girg/geometry.hpp"
#include "girg/graph.hpp"
#include "girg/sampler.hpp"
#include "girg/stats.hpp"

namespace girg {

struct ExperimentConfig {
    GeometryKind geometry = GeometryKind::mcd;
    int d = 2;
    VolumeMode volume_mode = VolumeMode::linearized;  // mcd only
    std::vector<std::size_t> n_values;
    double alpha = 1.5;
    double beta = 2.5;
    double prefactor_c = 1.0;
    double w_min = 1.0;
    std::vector<double> deltas{0.1};  // records use the first entry
    double f = 0.02;
    std::vector<std::uint64_t> seeds;
    LocalSearchOptions search{};
    std::filesystem::path output_dir;  // empty: nothing is written
    bool persist_graphs = false;
    /// Wall-clock runtime is the one nondeterministic column; when false it is written as 0.
    bool record_timing = true;
    double degree_cutoff = 8.0;
    std::size_t threads = 1;

    GeometrySpec geometry_spec() const;
    ModelParams model(std::size_t n, std::uint64_t seed) const;
    void validate() const;
};

struct ScalingRecord {
    std::string geometry;
    int d = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t giant_size = 0;
    double giant_fraction = 0.0;
    std::size_t best_cut_cross_edges = 0;
    std::string best_cut_method;
    double eta_achieved = 0.0;
    double mean_cc = 0.0;
    double degree_tail_exponent = 0.0;  // NaN when the fit was rejected
    double runtime_ms = 0.0;
};

/// One CutResult row of the per-delta cut table.
struct CutRow {
    std::string geometry;
    int d = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    CutResult cut;
};

struct SweepResult {
    std::vector<ScalingRecord> records;
    std::vector<CutRow> cuts;
};

/// Local-search seed of a sweep cell; fixed so records recompute exactly.
std::uint64_t cell_search_seed(std::uint64_t seed, std::size_t n);

/// Samples and analyzes one (n, seed) cell.
ScalingRecord analyze_cell(const ExperimentConfig& config, const GirgGraph& g, std::size_t n, std::uint64_t seed,
                           std::vector<CutRow>* cut_rows = nullptr);

/// Every (n, seed) cell in config order. Writes records.csv and cuts.csv
/// (and graphs/ when persist_graphs) below output_dir when it is set.
SweepResult run_sweep(const ExperimentConfig& config);

std::string records_csv_header();
std::string to_csv_row(const ScalingRecord& r);
std::string cuts_csv_header();
std::string to_csv_row(const CutRow& r);
void write_records_csv(const std::vector<ScalingRecord>& records, const std::filesystem::path& path);
void write_cuts_csv(const std::vector<CutRow>& rows, const std::filesystem::path& path);
std::vector<ScalingRecord> read_records_csv(const std::filesystem::path& path);

std::filesystem::path cell_graph_prefix(const std::filesystem::path& output_dir, const ScalingRecord& r);

/// Slope of log(mean best cut) against log(n). Needs >= 4 distinct n with
/// >= 3 seeds each; throws std::invalid_argument otherwise.
LinearFit fit_scaling_exponent(const std::vector<ScalingRecord>& records);

/// Recomputes a record from its graph; returns the names of mismatching fields.
std::vector<std::string> recheck_record(const ExperimentConfig& config, const ScalingRecord& record,
                                        const GirgGraph& g);

/// Per-series "n value" files and SVG renderings of cut scaling and cc vs n.
/// Returns the written paths.
std::vector<std::filesystem::path> emit_plot_data(const std::vector<ScalingRecord>& records,
                                                  const std::filesystem::path& dir);

}  // namespace girg
