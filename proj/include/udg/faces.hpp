#pragma once

// Plane subgraph of a 1-plane drawing, edge flips, faces from the rotation
// system, and the halfedge census.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "udg/crossings.hpp"
#include "udg/geom.hpp"
#include "udg/model.hpp"

namespace udg {

/// An edge removed from the plane subgraph and the plane edge it crosses.
struct RemovedEdge {
    std::size_t edge;
    std::size_t crosses;
    friend auto operator<=>(const RemovedEdge&, const RemovedEdge&) = default;
};

struct PlaneStructure {
    Drawing base;
    std::vector<bool> in_e0;
    std::vector<RemovedEdge> e1;  // sorted by edge
    std::size_t flips = 0;

    std::vector<std::size_t> e0() const {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < in_e0.size(); ++e)
            if (in_e0[e]) out.push_back(e);
        return out;
    }
    std::size_t e0_count() const { return static_cast<std::size_t>(std::count(in_e0.begin(), in_e0.end(), true)); }
};

/// Removes the higher-indexed edge of every crossing pair. In a 1-plane
/// drawing the crossing pairs form a matching, so this is a maximum plane
/// subgraph.
inline PlaneStructure planarize(const Drawing& dr, const CrossingReport& rep) {
    require_defect_free(rep);
    for (std::size_t e = 0; e < rep.edge_count; ++e)
        if (rep.per_edge[e] > 1)
            throw PreconditionError("drawing is not 1-plane: edge " + std::to_string(e) + " (" +
                                    std::to_string(dr.edges[e].u) + "-" + std::to_string(dr.edges[e].v) + ") has " +
                                    std::to_string(rep.per_edge[e]) + " crossings");
    PlaneStructure ps;
    ps.base = dr;
    ps.in_e0.assign(dr.e(), true);
    for (const auto& [e, f] : rep.crossing_pairs) {
        ps.in_e0[f] = false;
        ps.e1.push_back({f, e});
    }
    std::sort(ps.e1.begin(), ps.e1.end());
    if (ps.e0_count() != dr.e() - rep.crossing_pairs.size())
        throw Error("planarize: plane edge count does not match the crossing pairs");
    return ps;
}

// ---------------------------------------------------------------------------

inline constexpr std::size_t kNoFace = static_cast<std::size_t>(-1);

/// Dart 2e runs along edge e from u to v, dart 2e+1 from v to u.
inline std::size_t dart_tail(const Drawing& dr, std::size_t dart) {
    const Edge& e = dr.edges[dart / 2];
    return dart % 2 ? e.v : e.u;
}
inline std::size_t dart_head(const Drawing& dr, std::size_t dart) {
    const Edge& e = dr.edges[dart / 2];
    return dart % 2 ? e.u : e.v;
}

struct Halfedge {
    std::size_t edge;     // removed edge
    std::size_t vertex;   // endpoint of the removed edge inside the face
    std::size_t crossed;  // plane edge carrying the other end
    std::size_t face;
};

struct Face {
    std::vector<std::vector<std::size_t>> walks;  // dart cycles, outer boundary first for bounded faces
    std::vector<std::size_t> isolated;            // isolated vertices inside
    std::size_t size = 0;                         // boundary edges with multiplicity
    std::size_t m = 0;                            // boundary components
    bool outer = false;
    std::size_t halfedges = 0;

    std::int64_t t() const { return static_cast<std::int64_t>(size) + 3 * static_cast<std::int64_t>(m) - 6; }
    Rational s() const { return make_rational(static_cast<long>(halfedges), 2); }
};

struct FaceStructure {
    std::size_t n = 0;
    std::size_t e0 = 0;
    std::size_t e1 = 0;
    std::size_t components = 0;  // connected components of the plane subgraph, isolated vertices included
    std::vector<Face> faces;     // faces[0] is the unbounded face
    std::vector<std::size_t> dart_face;
    std::vector<Halfedge> halfedges;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Twice the signed area enclosed by a closed dart walk.
inline QuadExt walk_area2(const Drawing& dr, const std::vector<std::size_t>& walk) {
    QuadExt acc(Rational(0), dr.d);
    for (auto dt : walk) {
        const Point& a = dr.p(dart_tail(dr, dt));
        const Point& b = dr.p(dart_head(dr, dt));
        acc += a.x() * b.y() - b.x() * a.y();
    }
    return acc;
}

inline Box walk_box(const Drawing& dr, const std::vector<std::size_t>& walk) {
    Box b = Box::of(dr.p(dart_tail(dr, walk.front())));
    for (auto dt : walk) {
        const Box o = Box::of(dr.p(dart_head(dr, dt)));
        b = {std::min(b.xlo, o.xlo), std::max(b.xhi, o.xhi), std::min(b.ylo, o.ylo), std::max(b.yhi, o.yhi)};
    }
    return b;
}

/// Parity of crossings between a ray from q and the walk's segments. A ray
/// that passes through a walk vertex is discarded and the next direction in
/// the list is tried. q must not lie on the walk.
inline bool point_in_walk(const Drawing& dr, const Point& q, const std::vector<std::size_t>& walk) {
    static const std::pair<long, long> kDirs[][2] = {
        {{1, 1}, {1, 7}}, {{-1, 1}, {1, 11}}, {{1, 3}, {1, 1}}, {{-1, 5}, {-1, 1}},
        {{2, 1}, {-1, 13}}, {{-3, 1}, {-2, 17}}, {{1, 19}, {-1, 1}}, {{5, 1}, {3, 23}},
    };
    for (const auto& dir : kDirs) {
        const Point q2 = q + rational_point(make_rational(dir[0].first, dir[0].second),
                                            make_rational(dir[1].first, dir[1].second), q.d());
        bool hit_vertex = false;
        bool inside = false;
        for (auto dt : walk) {
            const Point& a = dr.p(dart_tail(dr, dt));
            const Point& b = dr.p(dart_head(dr, dt));
            const int sa = orient(q, q2, a);
            const int sb = orient(q, q2, b);
            if (sa == 0 && dot_sign(q, q2, q, a) > 0) {
                hit_vertex = true;
                break;
            }
            if (sa == 0 || sb == 0 || sa == sb) continue;
            const int side = orient(q, a, b);
            if (side == 0) throw PreconditionError("point_in_walk: point lies on the walk");
            if (side == sb) inside = !inside;
        }
        if (!hit_vertex) return inside;
    }
    throw Error("point_in_walk: every ray direction passes through a vertex");
}

}  // namespace detail

/// Faces of the plane subgraph. Each component contributes its bounded
/// walks (positive area) as faces; its outer walk (non-positive area) is
/// placed in the innermost bounded walk of another component containing it,
/// or in the unbounded face.
inline FaceStructure face_structure(const PlaneStructure& ps) {
    const Drawing& dr = ps.base;
    FaceStructure fs;
    fs.n = dr.n();
    fs.e0 = ps.e0_count();
    fs.e1 = ps.e1.size();
    fs.dart_face.assign(2 * dr.e(), kNoFace);

    std::vector<std::vector<std::size_t>> out(dr.n());
    detail::UnionFind uf(dr.n());
    for (std::size_t e = 0; e < dr.e(); ++e) {
        if (!ps.in_e0[e]) continue;
        out[dr.edges[e].u].push_back(2 * e);
        out[dr.edges[e].v].push_back(2 * e + 1);
        uf.unite(dr.edges[e].u, dr.edges[e].v);
    }
    std::vector<std::size_t> rot_pos(2 * dr.e(), 0);
    for (std::size_t v = 0; v < dr.n(); ++v) {
        auto& ds = out[v];
        std::sort(ds.begin(), ds.end(), [&](std::size_t a, std::size_t b) {
            return angular_cmp(dr.p(v), dr.p(dart_head(dr, a)), dr.p(dart_head(dr, b))) < 0;
        });
        for (std::size_t k = 0; k < ds.size(); ++k) rot_pos[ds[k]] = k;
    }
    // The face lies to the left of each dart: after u->v continue with the
    // dart preceding v->u in counter-clockwise order around v.
    auto next = [&](std::size_t dt) {
        const std::size_t v = dart_head(dr, dt);
        const auto& ds = out[v];
        return ds[(rot_pos[dt ^ 1] + ds.size() - 1) % ds.size()];
    };

    struct Walk {
        std::vector<std::size_t> darts;
        QuadExt area2;
        std::size_t comp;
    };
    std::vector<Walk> walks;
    std::vector<bool> seen(2 * dr.e(), false);
    for (std::size_t e = 0; e < dr.e(); ++e) {
        if (!ps.in_e0[e]) continue;
        for (std::size_t start : {2 * e, 2 * e + 1}) {
            if (seen[start]) continue;
            Walk w;
            for (std::size_t dt = start; !seen[dt]; dt = next(dt)) {
                seen[dt] = true;
                w.darts.push_back(dt);
            }
            w.area2 = detail::walk_area2(dr, w.darts);
            w.comp = uf.find(dart_tail(dr, start));
            walks.push_back(std::move(w));
        }
    }

    std::vector<std::size_t> comp_of(dr.n());
    std::vector<std::size_t> comp_rep;  // smallest vertex of each component
    std::vector<std::size_t> comp_index(dr.n(), kNoFace);
    for (std::size_t v = 0; v < dr.n(); ++v) {
        const std::size_t r = uf.find(v);
        if (comp_index[r] == kNoFace) {
            comp_index[r] = comp_rep.size();
            comp_rep.push_back(v);
        }
        comp_of[v] = comp_index[r];
    }
    fs.components = comp_rep.size();

    fs.faces.emplace_back();
    fs.faces[0].outer = true;
    std::vector<std::optional<std::size_t>> comp_outer_walk(fs.components);
    std::vector<std::size_t> inner_walks;
    for (std::size_t k = 0; k < walks.size(); ++k) {
        auto& w = walks[k];
        w.comp = comp_of[w.comp];
        if (qe_sign(w.area2) > 0) {
            inner_walks.push_back(k);
            Face f;
            f.walks.push_back(w.darts);
            f.size = w.darts.size();
            f.m = 1;
            for (auto dt : w.darts) fs.dart_face[dt] = fs.faces.size();
            fs.faces.push_back(std::move(f));
        } else {
            if (comp_outer_walk[w.comp]) throw Error("face_structure: component with two outer walks");
            comp_outer_walk[w.comp] = k;
        }
    }
    std::vector<Box> inner_boxes;
    for (auto k : inner_walks) inner_boxes.push_back(detail::walk_box(dr, walks[k].darts));

    for (std::size_t c = 0; c < fs.components; ++c) {
        const Point& q = dr.p(comp_rep[c]);
        const Box qb = Box::of(q);
        std::optional<std::size_t> best;  // index into inner_walks
        for (std::size_t i = 0; i < inner_walks.size(); ++i) {
            const Walk& w = walks[inner_walks[i]];
            if (w.comp == c || !inner_boxes[i].meets(qb)) continue;
            if (best && compare(w.area2, walks[inner_walks[*best]].area2) >= 0) continue;
            if (detail::point_in_walk(dr, q, w.darts)) best = i;
        }
        const std::size_t target = best ? *best + 1 : 0;
        Face& f = fs.faces[target];
        ++f.m;
        if (comp_outer_walk[c]) {
            const auto& darts = walks[*comp_outer_walk[c]].darts;
            f.walks.push_back(darts);
            f.size += darts.size();
            for (auto dt : darts) fs.dart_face[dt] = target;
        } else {
            f.isolated.push_back(comp_rep[c]);
        }
    }

    for (const auto& r : ps.e1) {
        const Edge& a = dr.edges[r.edge];
        const Edge& b = dr.edges[r.crosses];
        for (std::size_t end : {a.u, a.v}) {
            const int o = orient(dr.p(b.u), dr.p(b.v), dr.p(end));
            if (o == 0) throw Error("face_structure: removed edge does not cross its partner");
            const std::size_t face = fs.dart_face[o > 0 ? 2 * r.crosses : 2 * r.crosses + 1];
            fs.halfedges.push_back({r.edge, end, r.crosses, face});
            ++fs.faces[face].halfedges;
        }
    }
    return fs;
}

// ---------------------------------------------------------------------------

namespace detail {

inline bool triangle_free_of_isolated(const Face& f) { return f.size == 3 && f.m == 1; }

inline std::size_t triangle_count(const FaceStructure& fs) {
    return static_cast<std::size_t>(std::count_if(fs.faces.begin(), fs.faces.end(), triangle_free_of_isolated));
}

}  // namespace detail

/// Edge flips until no triangular face without isolated vertices holds a
/// halfedge. Each flip swaps the removed edge with the triangle side it
/// crosses and lowers the triangle count, so the initial count bounds the
/// number of flips.
inline PlaneStructure flip_reduce(PlaneStructure ps) {
    FaceStructure fs = face_structure(ps);
    const std::size_t limit = detail::triangle_count(fs);
    for (;;) {
        const Halfedge* hit = nullptr;
        for (const auto& h : fs.halfedges)
            if (detail::triangle_free_of_isolated(fs.faces[h.face])) {
                hit = &h;
                break;
            }
        if (!hit) return ps;
        if (ps.flips == limit) throw Error("flip_reduce: flip count exceeded the initial triangle count");
        const std::size_t alpha = hit->edge, beta = hit->crossed;
        ps.in_e0[alpha] = true;
        ps.in_e0[beta] = false;
        for (auto& r : ps.e1)
            if (r.edge == alpha) r = {beta, alpha};
        std::sort(ps.e1.begin(), ps.e1.end());
        ++ps.flips;
        fs = face_structure(ps);
    }
}

// ---------------------------------------------------------------------------

struct CensusRow {
    std::size_t face;
    std::size_t size;
    std::size_t m;
    std::size_t halfedges;
    std::int64_t t;
    bool outer;
    bool half_bound;    // s <= |face| / 2
    bool weight_bound;  // s <= t below size 5, s <= t - size/10 from size 5
};

struct Census {
    std::vector<CensusRow> rows;
    std::size_t n = 0, e0 = 0, e1 = 0, components = 0;
    std::size_t f3 = 0, f4 = 0, f_ge5 = 0;  // f_ge5 sums sizes, not faces
    std::int64_t sum_t = 0;
    std::size_t sum_halfedges = 0;
    std::vector<std::size_t> triangles_with_halfedges;

    bool triangles_clean() const { return triangles_with_halfedges.empty(); }
    bool weight_bounds_hold() const {
        return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.weight_bound; });
    }
    bool half_bounds_hold() const {
        return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.half_bound; });
    }
    bool weight_identity() const { return sum_halfedges == 2 * e1; }
    bool triangulation_identity() const {
        return static_cast<std::int64_t>(e0) + sum_t == 3 * static_cast<std::int64_t>(n) - 6;
    }
    bool euler_identity() const { return n + rows.size() == e0 + 1 + components; }
    bool connected() const { return components == 1; }
};

inline Census halfedge_census(const FaceStructure& fs) {
    Census c;
    c.n = fs.n;
    c.e0 = fs.e0;
    c.e1 = fs.e1;
    c.components = fs.components;
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        const Face& f = fs.faces[i];
        CensusRow r{i, f.size, f.m, f.halfedges, f.t(), f.outer, false, false};
        const auto h = static_cast<std::int64_t>(f.halfedges), sz = static_cast<std::int64_t>(f.size);
        r.half_bound = h <= sz;
        r.weight_bound = f.size < 5 ? h <= 2 * r.t : 5 * h <= 10 * r.t - sz;
        if (detail::triangle_free_of_isolated(f) && f.halfedges > 0) c.triangles_with_halfedges.push_back(i);
        if (f.size == 3) ++c.f3;
        if (f.size == 4) ++c.f4;
        if (f.size >= 5) c.f_ge5 += f.size;
        c.sum_t += r.t;
        c.sum_halfedges += f.halfedges;
        c.rows.push_back(r);
    }
    return c;
}

inline void write_census_csv(std::ostream& os, const Census& c) {
    CsvWriter csv(os);
    csv.row("face", "size", "m", "s", "t", "outer", "s_le_half", "weight_bound");
    for (const auto& r : c.rows)
        csv.row(r.face, r.size, r.m, make_rational(static_cast<long>(r.halfedges), 2).get_str(), r.t,
                r.outer ? 1 : 0, r.half_bound ? "pass" : "fail", r.weight_bound ? "pass" : "fail");
}

}  // namespace udg
