#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "girg/io.hpp"
#include "girg/sampler.hpp"

using namespace girg;

namespace {

class IoTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("girg_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    void write(const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        out << text;
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(IoTest, EmptyGraphRoundTrips) {
    const GirgGraph g = GirgGraph::from_edges(0, {});
    export_graph(g, dir_ / "empty");
    EXPECT_EQ(import_graph(dir_ / "empty"), g);

    const GirgGraph iso = GirgGraph::from_edges(4, {});
    export_graph(iso, dir_ / "iso");
    EXPECT_EQ(import_graph(dir_ / "iso"), iso);
}

TEST_F(IoTest, SampleRoundTripsBitExactly) {
    ModelParams p;
    p.n = 10000;
    p.seed = 0xDEADBEEF;
    const GirgGraph g = sample_direct(p);
    export_graph(g, dir_ / "g");
    const GirgGraph back = import_graph(dir_ / "g");
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.weights().weights, g.weights().weights);
    EXPECT_EQ(back.positions().coords, g.positions().coords);
}

TEST_F(IoTest, PartialPositionsRoundTrip) {
    ModelParams p;
    p.n = 300;
    p.d = 3;
    p.geometry = GeometrySpec::mcd(3);
    const PhasedTrace t = sample_phased(p, 0.02);
    export_graph(t.g3, dir_ / "g3");
    const GirgGraph back = import_graph(dir_ / "g3");
    EXPECT_EQ(back, t.g3);
    EXPECT_EQ(back.positions().known_dims, 2);
    std::ifstream in(vertex_file(dir_ / "g3"));
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header, "id\tweight\tx1\tx2\tx3");
    EXPECT_EQ(row.substr(row.size() - 2), "\t-");
}

TEST_F(IoTest, FormatDoubleIsLossless) {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, 123456789.123456789, 0.0})
        EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST_F(IoTest, DuplicateEdgeNamesLine) {
    export_graph(GirgGraph::from_edges(3, {{0, 1}, {1, 2}}), dir_ / "d");
    write(edge_file(dir_ / "d"), "0\t1\n1\t2\n0\t1\n");
    try {
        import_graph(dir_ / "d");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find(":3"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos) << e.what();
    }
}

TEST_F(IoTest, MalformedInputsRejected) {
    export_graph(GirgGraph::from_edges(3, {{0, 1}}), dir_ / "m");
    const std::string good_vertices = [&] {
        std::ifstream in(vertex_file(dir_ / "m"));
        return std::string(std::istreambuf_iterator<char>(in), {});
    }();

    write(edge_file(dir_ / "m"), "1\t0\n");
    EXPECT_THROW(import_graph(dir_ / "m"), ParseError);
    write(edge_file(dir_ / "m"), "0\t7\n");
    EXPECT_THROW(import_graph(dir_ / "m"), ParseError);
    write(edge_file(dir_ / "m"), "0\tx\n");
    EXPECT_THROW(import_graph(dir_ / "m"), ParseError);
    write(edge_file(dir_ / "m"), "0\t1\n");
    EXPECT_NO_THROW(import_graph(dir_ / "m"));

    write(vertex_file(dir_ / "m"), "id\tweight\n0\t1\n2\t1\n1\t1\n");
    EXPECT_THROW(import_graph(dir_ / "m"), ParseError);
    write(vertex_file(dir_ / "m"), "id\tweight\n0\t1\n1\t-1\n2\t1\n");
    EXPECT_THROW(import_graph(dir_ / "m"), ParseError);
    write(vertex_file(dir_ / "m"), "id\tweight\tx1\n0\t1\t0.5\n1\t1\t1.5\n2\t1\t0.1\n");
    EXPECT_THROW(import_graph(dir_ / "m"), ParseError);
    write(vertex_file(dir_ / "m"), good_vertices);
    EXPECT_NO_THROW(import_graph(dir_ / "m"));

    EXPECT_THROW(import_graph(dir_ / "missing"), std::runtime_error);
}
