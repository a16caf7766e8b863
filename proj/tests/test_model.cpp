#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "udg/udg.hpp"

using namespace udg;
using fixtures::pt;
using fixtures::q;

namespace {

const char* kSquare = R"({
"d": 0,
"unit_sq": {"a": [1, 1], "b": [0, 1]},
"vertices": [
  {"x": {"a": [0, 1], "b": [0, 1]}, "y": {"a": [0, 1], "b": [0, 1]}},
  {"x": {"a": [1, 1], "b": [0, 1]}, "y": {"a": [0, 1], "b": [0, 1]}},
  {"x": {"a": [1, 1], "b": [0, 1]}, "y": {"a": [1, 1], "b": [0, 1]}},
  {"x": {"a": [0, 1], "b": [0, 1]}, "y": {"a": [1, 1], "b": [0, 1]}}
],
"edges": [
  [0, 1],
  [0, 3],
  [1, 2],
  [2, 3]
]
}
)";

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST(Parse, CanonicalSquare) {
    const Drawing dr = parse_drawing(kSquare);
    EXPECT_EQ(dr.n(), 4u);
    EXPECT_EQ(dr.e(), 4u);
    EXPECT_EQ(serialize_drawing(dr), kSquare);
}

TEST(Parse, NonUnitEdgeIsValidationError) {
    Drawing dr = fixtures::unit_square();
    dr.edges.push_back({0, 2});
    EXPECT_THROW(parse_drawing(serialize_drawing(dr)), ValidationError);
    EXPECT_NO_THROW(parse_drawing(serialize_drawing(dr), ParseMode::lenient));
}

TEST(Parse, CanonicalizesInput) {
    const std::string messy = R"({"edges": [[3, 0], [1, 0], [2, 1], [3, 2]], "d": 0,
        "vertices": [{"x": {"a": [0, 5], "b": [0, 1]}, "y": {"a": [0, 1], "b": [0, 1]}},
                     {"y": {"a": [0, 1], "b": [0, 1]}, "x": {"a": [2, 2], "b": [0, 1]}},
                     {"x": {"a": [3, 3], "b": [0, 1]}, "y": {"a": ["1", 1], "b": [0, 1]}},
                     {"x": {"a": [0, 1], "b": [0, 1]}, "y": {"a": [1, 1], "b": [0, 7]}}],
        "unit_sq": {"a": [4, 4], "b": [0, 1]}})";
    const Drawing dr = parse_drawing(messy);
    EXPECT_EQ(serialize_drawing(dr), kSquare);
    // Edge order is kept as read; serialization sorts it.
    EXPECT_EQ(dr.edges[0], (Edge{0, 3}));
    Drawing sorted = dr;
    sorted.sort_edges();
    EXPECT_EQ(parse_drawing(serialize_drawing(dr)), sorted);
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse_drawing("{"), ParseError);
    EXPECT_THROW(parse_drawing("[]"), ParseError);
    EXPECT_THROW(parse_drawing(R"({"d": 0, "unit_sq": {"a": [1, 1], "b": [0, 1]}, "vertices": []})"), ParseError);
    std::string bad_d = kSquare;
    bad_d.replace(bad_d.find("\"d\": 0"), 6, "\"d\": 12");
    EXPECT_THROW(parse_drawing(bad_d), ParseError);
    std::string zero_den = kSquare;
    zero_den.replace(zero_den.find("[1, 1]"), 6, "[1, 0]");
    EXPECT_THROW(parse_drawing(zero_den), ParseError);
    std::string bad_index = kSquare;
    bad_index.replace(bad_index.find("[2, 3]"), 6, "[2, 9]");
    EXPECT_THROW(parse_drawing(bad_index), ParseError);
    std::string irrational_d0 = kSquare;
    irrational_d0.replace(irrational_d0.find("\"b\": [0, 1]"), 11, "\"b\": [1, 1]");
    EXPECT_THROW(parse_drawing(irrational_d0), ParseError);
}

TEST(Parse, DiscriminantOneNormalized) {
    std::string text = kSquare;
    text.replace(text.find("\"d\": 0"), 6, "\"d\": 1");
    // With d = 1, b parts are rational and fold into a.
    const std::string unit = R"("unit_sq": {"a": [1, 1], "b": [0, 1]})";
    text.replace(text.find(unit), unit.size(), R"("unit_sq": {"a": [1, 2], "b": [1, 2]})");
    const Drawing dr = parse_drawing(text);
    EXPECT_EQ(dr.d, 0);
    EXPECT_EQ(serialize_drawing(dr), kSquare);
}

TEST(Parse, BigIntegersRoundTrip) {
    Drawing dr = fixtures::make(0, {pt(q(1, 3), 0), pt(q(1, 3), 1)}, {{0, 1}});
    const Integer big("123456789012345678901234567890");
    dr.vertices = {pt(Rational(big), 0), pt(Rational(big), 1)};
    const std::string text = serialize_drawing(dr);
    EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
    EXPECT_EQ(parse_drawing(text), dr);
}

TEST(Serialize, EmptyDrawing) {
    Drawing dr = fixtures::make(0, {}, {});
    const std::string text = serialize_drawing(dr);
    EXPECT_EQ(parse_drawing(text), dr);
    EXPECT_EQ(serialize_drawing(parse_drawing(text)), text);
}

TEST(Serialize, RoundTripOnGenerators) {
    for (const Drawing& dr : {triangular_spiral(30), erdos_grid(6, 5).drawing, shifted_triangular(2, 3).drawing,
                              fixtures::random_unit_fixture(4)}) {
        const std::string text = serialize_drawing(dr);
        const Drawing back = parse_drawing(text);
        EXPECT_EQ(serialize_drawing(back), text);
        Drawing sorted = dr;
        sorted.sort_edges();
        EXPECT_EQ(back, sorted);
    }
}

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(fixtures::unit_square()).empty());
    Drawing diag = fixtures::unit_square();
    diag.edges.push_back({0, 2});
    const auto rep = validate(diag);
    ASSERT_EQ(rep.unit_violations.size(), 1u);
    EXPECT_EQ(rep.unit_violations[0].edge, 4u);
    EXPECT_EQ(rep.unit_violations[0].actual, QuadExt(Rational(2)));
    EXPECT_EQ(rep.count(), 1u);

    const Drawing overlap = fixtures::make(0, {pt(0, 0), pt(1, 0), pt(q(1, 2), 0), pt(q(3, 2), 0)}, {{0, 1}, {2, 3}});
    const auto r2 = validate(overlap);
    EXPECT_EQ(r2.overlapping_edges.size(), 1u);
    EXPECT_EQ(r2.vertex_in_interior.size(), 2u);
}

TEST(Validate, MutationsAreFlaggedExactly) {
    std::mt19937 rng(2);
    for (int round = 0; round < 30; ++round) {
        const Drawing base = round % 2 ? triangular_spiral(20 + round) : erdos_grid(5, 5).drawing;
        ASSERT_TRUE(validate(base).empty());
        const std::size_t e = rng() % base.e();
        {
            // Nudge one endpoint off the unit circle.
            Drawing m = base;
            const std::size_t v = m.edges[e].v;
            m.vertices[v] = m.vertices[v] + rational_point(make_rational(1, 1000003), Rational(0), m.d);
            const auto rep = validate_invariants(m);
            std::set<std::size_t> expected;
            for (std::size_t f = 0; f < m.e(); ++f)
                if (m.edges[f].u == v || m.edges[f].v == v) expected.insert(f);
            std::set<std::size_t> got;
            for (const auto& u : rep.unit_violations) got.insert(u.edge);
            EXPECT_EQ(got, expected);
        }
        {
            Drawing m = base;
            const std::size_t v = rng() % m.n();
            m.vertices.push_back(m.vertices[v]);
            const auto rep = validate(m);
            ASSERT_EQ(rep.coincident_vertices.size(), 1u);
            EXPECT_EQ(rep.coincident_vertices[0], IndexPair(v, m.n() - 1));
            EXPECT_EQ(rep.count(), 1u);
        }
        {
            Drawing m = base;
            const Point mid(
                (m.p(m.edges[e].u).x() + m.p(m.edges[e].v).x()) * QuadExt(make_rational(1, 2), m.d),
                (m.p(m.edges[e].u).y() + m.p(m.edges[e].v).y()) * QuadExt(make_rational(1, 2), m.d));
            m.vertices.push_back(mid);
            const auto rep = validate(m);
            // Brute force: in the square grid a midpoint can also be the crossing of two edges.
            std::vector<VertexOnEdge> expected;
            for (std::size_t f = 0; f < m.e(); ++f)
                if (in_segment_interior(m.p(m.edges[f].u), m.p(m.edges[f].v), mid)) expected.push_back({m.n() - 1, f});
            EXPECT_EQ(rep.vertex_in_interior, expected);
            EXPECT_NE(std::find(expected.begin(), expected.end(), VertexOnEdge{m.n() - 1, e}), expected.end());
            EXPECT_EQ(rep.count(), expected.size());
        }
    }
}

TEST(Validate, LoopsAndDuplicates) {
    Drawing m = fixtures::unit_square();
    m.edges.push_back({1, 0});
    m.edges.push_back({2, 2});
    const auto rep = validate(m);
    EXPECT_EQ(rep.duplicate_edges.size(), 1u);
    EXPECT_EQ(rep.self_loops.size(), 1u);
}

TEST(CompleteUnitGraph, MatchesBruteForce) {
    std::mt19937 rng(8);
    std::vector<Point> pts;
    for (int i = 0; i < 120; ++i) pts.push_back(pt(static_cast<long>(rng() % 12), static_cast<long>(rng() % 12)));
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return key_order(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const Drawing dr = complete_unit_graph(pts, QuadExt::from_int(5));
    std::vector<Edge> brute;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (sq_dist(pts[i], pts[j]) == QuadExt::from_int(5)) brute.push_back({i, j});
    std::vector<Edge> got = dr.edges;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute);
}

TEST(Svg, Elements) {
    const std::string sq = render_svg(fixtures::unit_square());
    EXPECT_EQ(count(sq, "<line"), 4u);
    EXPECT_EQ(count(sq, "<circle"), 4u);
    const Drawing cross = fixtures::single_cross();
    const std::string cs = render_svg(cross, crossing_report(cross));
    EXPECT_EQ(count(cs, "#d62728"), 2u);
    const std::string empty = render_svg(fixtures::make(0, {}, {}));
    EXPECT_EQ(empty.rfind("<svg", 0), 0u);
    EXPECT_NE(empty.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(empty, "<line"), 0u);
}

TEST(Csv, Rows) {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.row("a", "b");
    csv.row(1, 2.5);
    csv.row(std::vector<std::string>{"x", "y", "z"});
    EXPECT_EQ(os.str(), "a,b\n1,2.5\nx,y,z\n");
}
