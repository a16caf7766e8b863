#pragma once

// Drawings shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "udg/udg.hpp"

namespace udg::fixtures {

inline Point pt(long x, long y) { return rational_point(Rational(x), Rational(y)); }
inline Point pt(const Rational& x, const Rational& y) { return rational_point(x, y); }
inline Rational q(long n, long d) { return make_rational(n, d); }

/// Point (a + b sqrt 3, c + e sqrt 3).
inline Point pt3(const Rational& a, const Rational& b, const Rational& c, const Rational& e) {
    return {QuadExt(a, b, 3), QuadExt(c, e, 3)};
}

inline Drawing make(int d, std::vector<Point> vs, std::vector<Edge> es, long unit_sq = 1) {
    Drawing dr;
    dr.d = d;
    dr.unit_sq = QuadExt::from_int(unit_sq, d);
    dr.vertices = std::move(vs);
    dr.edges = std::move(es);
    return dr;
}

inline Drawing unit_square() { return make(0, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

inline Drawing unit_triangle() {
    return make(3, {pt3(0, 0, 0, 0), pt3(1, 0, 0, 0), pt3(q(1, 2), 0, 0, q(1, 2))}, {{0, 1}, {0, 2}, {1, 2}});
}

/// (0,0)-(1,0) crossed by (1/2,-1/2)-(1/2,1/2), shifted right by dx.
inline void add_cross(Drawing& dr, long dx) {
    const std::size_t b = dr.n();
    dr.vertices.push_back(pt(Rational(dx), 0));
    dr.vertices.push_back(pt(Rational(dx + 1), 0));
    dr.vertices.push_back(pt(Rational(dx) + q(1, 2), q(-1, 2)));
    dr.vertices.push_back(pt(Rational(dx) + q(1, 2), q(1, 2)));
    dr.edges.push_back({b, b + 1});
    dr.edges.push_back({b + 2, b + 3});
}

inline Drawing single_cross() {
    Drawing dr = make(0, {}, {});
    add_cross(dr, 0);
    return dr;
}

inline Drawing three_crosses() {
    Drawing dr = make(0, {}, {});
    for (long k = 0; k < 3; ++k) add_cross(dr, 3 * k);
    return dr;
}

/// Three pairwise crossing unit segments.
inline Drawing three_segment_clique() {
    return make(0,
                {pt(q(-1, 2), 0), pt(q(1, 2), 0), pt(q(-1, 100), q(-1, 2)), pt(q(-1, 100), q(1, 2)),
                 pt(q(-2, 5), q(-3, 10)), pt(q(2, 5), q(3, 10))},
                {{0, 1}, {2, 3}, {4, 5}});
}

/// Unit triangle uvw and the edge ux at 30 degrees crossing vw; ux has the
/// highest index so the initial plane subgraph keeps vw.
inline Drawing flip_triangle() {
    return make(3,
                {pt3(0, 0, 0, 0), pt3(1, 0, 0, 0), pt3(q(1, 2), 0, 0, q(1, 2)), pt3(0, q(1, 2), q(1, 2), 0)},
                {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

/// 60-degree rhombus u v z y with two vertical edges, from v upward across yz
/// and from y downward across uv; both removed edges leave a halfedge in the
/// rhombus.
inline Drawing rhombus_two_halfedges() {
    return make(3,
                {pt3(0, 0, 0, 0), pt3(1, 0, 0, 0), pt3(q(3, 2), 0, 0, q(1, 2)), pt3(q(1, 2), 0, 0, q(1, 2)),
                 pt3(1, 0, 1, 0), pt3(q(1, 2), 0, -1, q(1, 2))},
                {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {3, 5}});
}

// ---------------------------------------------------------------------------

/// Drops edges involved in overlaps or containing a vertex; other
/// invariants are the caller's business.
inline void remove_defective_edges(Drawing& dr) {
    for (;;) {
        const auto rep = validate(dr);
        std::set<std::size_t> bad;
        for (const auto& vi : rep.vertex_in_interior) bad.insert(vi.edge);
        for (const auto& [a, b] : rep.overlapping_edges) bad.insert(std::max(a, b));
        if (bad.empty()) return;
        std::vector<Edge> keep;
        for (std::size_t e = 0; e < dr.e(); ++e)
            if (!bad.count(e)) keep.push_back(dr.edges[e]);
        dr.edges = std::move(keep);
    }
}

/// Random walk over rational unit vectors with no axis-parallel steps; every
/// unit pair among the visited points that is not axis-parallel becomes an
/// edge.
inline Drawing random_unit_fixture(unsigned seed, int steps = 24) {
    static const long kTriples[][3] = {{3, 4, 5}, {4, 3, 5}, {5, 12, 13}, {12, 5, 13}, {8, 15, 17}, {15, 8, 17}};
    std::mt19937 rng(seed);
    std::vector<Point> pts{pt(0, 0)};
    Point cur = pts[0];
    for (int s = 0; s < steps; ++s) {
        const auto& t = kTriples[rng() % 6];
        const long sx = rng() % 2 ? 1 : -1, sy = rng() % 2 ? 1 : -1;
        if (rng() % 4 == 0) cur = pts[rng() % pts.size()];
        cur = cur + pt(q(sx * t[0], t[2]), q(sy * t[1], t[2]));
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& p) { return p == cur; })) pts.push_back(cur);
    }
    Drawing dr = complete_unit_graph(pts, QuadExt::from_int(1));
    std::vector<Edge> keep;
    for (const auto& e : dr.edges) {
        const Direction dir = direction_class(dr.p(e.u), dr.p(e.v));
        if (!dir.vertical && !dir.horizontal()) keep.push_back(e);
    }
    dr.edges = std::move(keep);
    remove_defective_edges(dr);
    return dr;
}

/// Unit vectors at 30 + 60 j degrees.
inline Point planting_vector(int j) {
    switch (j % 6) {
        case 0: return pt3(0, q(1, 2), q(1, 2), 0);
        case 1: return pt3(0, 0, 1, 0);
        case 2: return pt3(0, q(-1, 2), q(1, 2), 0);
        case 3: return pt3(0, q(-1, 2), q(-1, 2), 0);
        case 4: return pt3(0, 0, -1, 0);
        default: return pt3(0, q(1, 2), q(-1, 2), 0);
    }
}

/// Spiral with pendant edges planted from lattice vertices; each accepted
/// plant keeps the drawing valid and 1-plane. Planted edges go to random
/// positions in the edge list so both members of a crossing pair get removed
/// in different instances.
inline Drawing planted_spiral(std::size_t n, unsigned seed, int attempts) {
    std::mt19937 rng(seed);
    Drawing dr = triangular_spiral(n);
    const std::size_t lattice = dr.n();
    for (int a = 0; a < attempts; ++a) {
        Drawing next = dr;
        const std::size_t p = rng() % lattice;
        next.vertices.push_back(dr.p(p) + planting_vector(static_cast<int>(rng() % 6)));
        const Edge e = make_edge(p, next.n() - 1);
        const std::size_t at = rng() % (next.e() + 1);
        next.edges.insert(next.edges.begin() + static_cast<std::ptrdiff_t>(at), e);
        if (!validate(next).empty()) continue;
        const auto rep = crossing_report(next);
        if (!rep.defect_free() || planarity_number(rep) > 1) continue;
        dr = std::move(next);
    }
    return dr;
}

}  // namespace udg::fixtures
