#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "udg/cli.hpp"

using namespace udg;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("udg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const Drawing& dr) const {
        std::ofstream(path(name)) << serialize_drawing(dr);
        return path(name);
    }
    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, SpiralThenCheck) {
    const Result g = run({"gen", "spiral", "--n", "7", "-o", path("t.json")});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_NE(g.out.find("spiral,7,12,12"), std::string::npos);
    const Result c = run({"check", path("t.json"), "--k", "0"});
    EXPECT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(c.out, "n,edges,crossing_pairs,planarity_number,k,verdict\n7,12,0,0,0,pass\n");
}

TEST_F(Cli, CheckFailsWhenAnEdgeIsCrossedTwice) {
    const std::string p = write("g.json", erdos_grid(5, 5).drawing);
    EXPECT_EQ(run({"check", p, "--k", "1"}).code, 1);
    EXPECT_EQ(run({"check", p}).code, 0);
}

TEST_F(Cli, InvalidDrawingsExitTwo) {
    Drawing bad = fixtures::unit_square();
    bad.edges.push_back({0, 2});
    EXPECT_EQ(run({"check", write("bad.json", bad)}).code, 2);
    std::ofstream(path("junk.json")) << "{ not json";
    EXPECT_EQ(run({"check", path("junk.json")}).code, 2);
    EXPECT_EQ(run({"check", path("missing.json")}).code, 2);
    const Drawing touch = fixtures::make(0, {fixtures::pt(0, 0), fixtures::pt(1, 0), fixtures::pt(fixtures::q(1, 2), 0),
                                             fixtures::pt(fixtures::q(1, 2), 1)},
                                         {{0, 1}, {2, 3}});
    const Result t = run({"check", write("touch.json", touch)});
    EXPECT_EQ(t.code, 2);
    EXPECT_NE(t.err.find("vertex 2 lies inside edge 0"), std::string::npos);
}

TEST_F(Cli, UnknownFlagPrintsUsage) {
    const Result r = run({"check", "x.json", "--frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"gen", "spiral"}).code, 2);
    EXPECT_EQ(run({"gen", "directions", "--width", "5", "--r", "5", "--dirs", "1;2"}).code, 2);
    EXPECT_EQ(run({"gen", "directions", "--width", "5", "--r", "5", "--dirs", "1,1"}).code, 2);
    EXPECT_EQ(run({"gen", "erdos", "--width", "5", "--r", "4"}).code, 2);
}

TEST_F(Cli, Bounds) {
    const Result r = run({"bounds", "--from", "7", "--to", "7"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,k,u0,t1_upper,t3_upper,t5_upper,t5_lower_shape,measured");
    EXPECT_EQ(r.out.find("7,,12,"), r.out.find('\n') + 1);
    const Result s = run({"bounds", "--from", "16", "--to", "16", "--k", "2"});
    EXPECT_NE(s.out.find("16,2,34,718/15,,128,16,"), std::string::npos) << s.out;
    EXPECT_EQ(run({"bounds", "--from", "9", "--to", "3"}).code, 2);
    EXPECT_EQ(run({"bounds", "--from", "3", "--to", "4", "--c", "abc"}).code, 2);
    const Result d = run({"bounds", "--degrees"});
    EXPECT_NE(d.out.find("100,65,16"), std::string::npos);
}

TEST_F(Cli, BoundsMeasured) {
    const std::string p = write("s.json", triangular_spiral(9));
    const Result r = run({"bounds", "--from", "9", "--to", "9", "--measure", p});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(r.out.size() - 4), ",16\n");
}

TEST_F(Cli, QuasiVerdictsAndBudget) {
    const std::string p = write("three.json", fixtures::three_segment_clique());
    const Result ok = run({"quasi", p, "--max-k", "4"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("6,3,3,1,"), std::string::npos) << ok.out;
    EXPECT_EQ(run({"quasi", p, "--max-k", "3"}).code, 1);
    const std::string big = write("big.json", erdos_grid(12, 65).drawing);
    EXPECT_EQ(run({"quasi", big, "--budget", "5"}).code, 3);
}

TEST_F(Cli, StructureCommands) {
    const std::string spiral = write("s.json", fixtures::planted_spiral(40, 3, 30));
    const Result f = run({"faces", spiral});
    EXPECT_EQ(f.code, 0) << f.err;
    EXPECT_EQ(f.out.rfind("face,size,m,s,t,outer,s_le_half,weight_bound\n", 0), 0u);
    const std::string grid = write("r.json", rhombus_grid(3, 2));
    const Result c = run({"chains", grid});
    EXPECT_EQ(c.code, 0) << c.err;
    EXPECT_NE(c.err.find("chains=5"), std::string::npos);
    const std::string e = write("e.json", erdos_grid(8, 5).drawing);
    const Result b = run({"blocks", e});
    EXPECT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(b.out.rfind("block,length,vertices,edges\n", 0), 0u);
    // Axis-parallel edges are outside the block decomposition's domain.
    EXPECT_EQ(run({"blocks", write("sq.json", fixtures::unit_square())}).code, 2);
    // Faces need a 1-plane drawing.
    EXPECT_EQ(run({"faces", e}).code, 2);
}

TEST_F(Cli, GeneratorsRoundTrip) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen", "erdos", "--width", "6", "--r", "5"},
             {"gen", "directions", "--width", "6", "--r", "65", "--dirs", "1,8;4,-7"},
             {"gen", "shifted", "--rows", "2", "--cols", "3"},
             {"gen", "spiral", "--n", "20"}}) {
        const Result r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const Drawing dr = parse_drawing(r.out);
        EXPECT_TRUE(validate(dr).empty());
    }
    const Result w = run({"gen", "erdos", "--width", "4", "--r", "3"});
    EXPECT_EQ(w.code, 0);
    EXPECT_NE(w.err.find("warning"), std::string::npos);
}

TEST_F(Cli, CsvSideOutputs) {
    const std::string p = write("x.json", fixtures::single_cross());
    ASSERT_EQ(run({"check", p, "--pairs-csv", path("pairs.csv"), "--per-edge-csv", path("per.csv")}).code, 0);
    EXPECT_EQ(slurp(path("pairs.csv")), "edge_a,edge_b\n0,1\n");
    EXPECT_EQ(slurp(path("per.csv")), "edge,u,v,crossings\n0,0,1,1\n1,2,3,1\n");
}

TEST_F(Cli, Svg) {
    const std::string p = write("x.json", fixtures::single_cross());
    ASSERT_EQ(run({"svg", p, "-o", path("x.svg")}).code, 0);
    const std::string svg = slurp(path("x.svg"));
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_EQ(svg.find("-0.000000"), std::string::npos);
}

TEST_F(Cli, Deterministic) {
    const std::string p = write("g.json", erdos_grid(9, 5).drawing);
    for (const auto& args : std::vector<std::vector<std::string>>{{"check", p, "--jobs", "3"},
                                                                   {"quasi", p},
                                                                   {"blocks", p},
                                                                   {"gen", "spiral", "--n", "50"}}) {
        const Result a = run(args), b = run(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
    EXPECT_EQ(run({"check", p, "--jobs", "1"}).out, run({"check", p, "--jobs", "4", "--no-bucketing"}).out);
}
