#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "girg/harness.hpp"
#include "girg/io.hpp"

using namespace girg;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class HarnessTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("girg_harness_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    ExperimentConfig small_config() const {
        ExperimentConfig c;
        c.n_values = {128, 256};
        c.seeds = {1, 2, 3};
        c.record_timing = false;
        c.search.restarts = 3;
        return c;
    }

    std::filesystem::path dir_;
};

std::vector<ScalingRecord> synthetic(double exponent) {
    std::vector<ScalingRecord> out;
    for (std::size_t n : {1024, 4096, 16384, 65536, 262144})
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            ScalingRecord r;
            r.geometry = "mcd";
            r.d = 2;
            r.n = n;
            r.seed = seed;
            r.best_cut_cross_edges = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), exponent)));
            out.push_back(r);
        }
    return out;
}

}  // namespace

TEST_F(HarnessTest, SingleCellIsReproducible) {
    ExperimentConfig c = small_config();
    c.n_values = {128};
    c.seeds = {1};
    c.output_dir = dir_ / "a";
    const SweepResult first = run_sweep(c);
    ASSERT_EQ(first.records.size(), 1u);
    c.output_dir = dir_ / "b";
    run_sweep(c);
    EXPECT_EQ(slurp(dir_ / "a" / "records.csv"), slurp(dir_ / "b" / "records.csv"));
    EXPECT_EQ(slurp(dir_ / "a" / "cuts.csv"), slurp(dir_ / "b" / "cuts.csv"));

    const ScalingRecord& r = first.records[0];
    EXPECT_DOUBLE_EQ(r.giant_fraction, static_cast<double>(r.giant_size) / 128.0);
    EXPECT_DOUBLE_EQ(r.eta_achieved, static_cast<double>(r.best_cut_cross_edges) / 128.0);
    EXPECT_GT(r.giant_fraction, 0.0);
    EXPECT_LE(r.giant_fraction, 1.0);
    EXPECT_EQ(r.runtime_ms, 0.0);
}

TEST_F(HarnessTest, CsvSchemaAndReadBack) {
    ExperimentConfig c = small_config();
    c.output_dir = dir_;
    c.deltas = {0.1, 0.2};
    const SweepResult res = run_sweep(c);
    EXPECT_EQ(res.records.size(), 6u);
    const std::string text = slurp(dir_ / "records.csv");
    EXPECT_EQ(text.substr(0, text.find('\n')), records_csv_header());
    EXPECT_EQ(text.find('\r'), std::string::npos);
    const auto back = read_records_csv(dir_ / "records.csv");
    ASSERT_EQ(back.size(), res.records.size());
    for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(to_csv_row(back[i]), to_csv_row(res.records[i]));
    // records come in config order
    EXPECT_EQ(back[0].n, 128u);
    EXPECT_EQ(back[3].n, 256u);
    EXPECT_EQ(back[1].seed, 2u);
    for (const CutRow& row : res.cuts) EXPECT_TRUE(row.cut.delta == 0.1 || row.cut.delta == 0.2);
}

TEST_F(HarnessTest, RecordsRecomputeFromPersistedGraphs) {
    ExperimentConfig c = small_config();
    c.output_dir = dir_;
    c.persist_graphs = true;
    const SweepResult res = run_sweep(c);
    for (std::size_t i : {0, 1, 3, 4, 5}) {
        const ScalingRecord& r = res.records[i];
        const GirgGraph g = import_graph(cell_graph_prefix(dir_, r));
        EXPECT_TRUE(recheck_record(c, r, g).empty());
    }
    ScalingRecord tampered = res.records[2];
    tampered.mean_cc += 0.01;
    tampered.giant_size += 1;
    const auto bad = recheck_record(c, tampered, import_graph(cell_graph_prefix(dir_, tampered)));
    EXPECT_EQ(bad, (std::vector<std::string>{"giant_size", "mean_cc"}));
}

TEST_F(HarnessTest, ConfigValidation) {
    ExperimentConfig c = small_config();
    c.n_values = {8};
    EXPECT_THROW(run_sweep(c), std::invalid_argument);
    c = small_config();
    c.seeds.clear();
    EXPECT_THROW(run_sweep(c), std::invalid_argument);
    c = small_config();
    c.deltas = {0.6};
    EXPECT_THROW(run_sweep(c), std::invalid_argument);
    c = small_config();
    c.alpha = 0.5;
    EXPECT_THROW(run_sweep(c), std::invalid_argument);
}

TEST(ScalingFit, SyntheticSlopes) {
    EXPECT_NEAR(fit_scaling_exponent(synthetic(1.0)).slope, 1.0, 1e-9);
    EXPECT_NEAR(fit_scaling_exponent(synthetic(0.5)).slope, 0.5, 1e-9);
    EXPECT_NEAR(fit_scaling_exponent(synthetic(1.0)).slope_half_width, 0.0, 1e-6);
}

TEST(ScalingFit, InsufficientData) {
    auto records = synthetic(1.0);
    std::vector<ScalingRecord> three_n(records.begin(), records.begin() + 9);
    EXPECT_THROW(fit_scaling_exponent(three_n), std::invalid_argument);
    std::vector<ScalingRecord> two_seeds;
    for (const auto& r : records)
        if (r.seed < 2) two_seeds.push_back(r);
    EXPECT_THROW(fit_scaling_exponent(two_seeds), std::invalid_argument);
}

TEST(LeastSquares, KnownLine) {
    const std::vector<double> x{0, 1, 2, 3}, y{1, 3.1, 4.9, 7.0};
    const LinearFit f = least_squares(x, y);
    EXPECT_NEAR(f.slope, 1.98, 1e-12);
    EXPECT_NEAR(f.intercept, 1.03, 1e-12);
    EXPECT_GT(f.slope_half_width, 0.0);
    EXPECT_THROW(least_squares(std::vector<double>{1, 2}, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST_F(HarnessTest, PlotDataDeterministic) {
    auto records = synthetic(0.8);
    for (std::size_t i = 0; i < records.size(); i += 2) records[i].geometry = "euclidean_max";
    for (auto& r : records) r.mean_cc = 0.3 + 1e-6 * static_cast<double>(r.n);
    const auto paths = emit_plot_data(records, dir_ / "p1");
    emit_plot_data(records, dir_ / "p2");
    EXPECT_TRUE(std::filesystem::exists(dir_ / "p1" / "best_cut_mcd_d2.dat"));
    EXPECT_TRUE(std::filesystem::exists(dir_ / "p1" / "best_cut_euclidean_max_d2.dat"));
    EXPECT_TRUE(std::filesystem::exists(dir_ / "p1" / "cut_scaling.svg"));
    for (const auto& p : paths) EXPECT_EQ(slurp(p), slurp(dir_ / "p2" / p.filename())) << p;

    const auto one = emit_plot_data({records[0]}, dir_ / "one");
    const std::string dat = slurp(dir_ / "one" / "cc_euclidean_max_d2.dat");
    EXPECT_EQ(std::count(dat.begin(), dat.end(), '\n'), 2);
    EXPECT_NE(slurp(dir_ / "one" / "cc_vs_n.svg").find("</svg>"), std::string::npos);
    EXPECT_THROW(emit_plot_data({}, dir_ / "none"), std::invalid_argument);
}
