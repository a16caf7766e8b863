#pragma once

// Rhombus chains: sequences of quadrilateral faces glued along parallel
// sides.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "udg/faces.hpp"
#include "udg/geom.hpp"

namespace udg {

struct Rhombus {
    std::size_t face;
    std::array<std::size_t, 4> sides;  // plane edges in walk order
    std::array<Direction, 2> directions;
};

struct RhombusAdjacency {
    std::size_t a, b;  // rhombus indices, a < b
    std::size_t edge;  // shared side
    Direction weight;
};

struct Chain {
    Direction weight;
    std::vector<std::size_t> rhombi;  // in path order
    bool cycle = false;
    std::vector<std::size_t> end_edges;
    std::vector<std::size_t> end_face_sizes;
};

enum class IntersectionKind { empty, chain, violation };

struct ChainSet {
    std::vector<Rhombus> rhombi;
    std::vector<RhombusAdjacency> adjacency;
    std::vector<Chain> chains;
    std::vector<std::size_t> membership;  // chains containing each rhombus
    std::size_t nonempty_intersections = 0;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    std::vector<std::size_t> cycles;
    bool ends_leave_rhombi = true;        // every end edge borders a face that is not a rhombus
    std::optional<bool> enough_chains;    // chains^2 >= n/2, evaluated when 4 f4 >= n

    bool every_rhombus_in_two() const {
        return std::all_of(membership.begin(), membership.end(), [](std::size_t c) { return c == 2; });
    }
};

namespace detail {

inline bool is_rhombus(const Drawing& dr, const Face& f) {
    if (f.outer || f.m != 1 || f.walks.size() != 1 || f.walks[0].size() != 4) return false;
    std::set<std::size_t> vs;
    for (auto dt : f.walks[0]) vs.insert(dart_tail(dr, dt));
    return vs.size() == 4;
}

/// True when the common elements of a and b (two or more) occupy a
/// contiguous stretch of each.
inline bool contiguous_in(const std::vector<std::size_t>& seq, const std::set<std::size_t>& common) {
    std::size_t first = seq.size(), last = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (common.count(seq[i])) {
            first = std::min(first, i);
            last = i;
        }
    return last + 1 - first == common.size();
}

}  // namespace detail

inline IntersectionKind classify_intersection(const Chain& a, const Chain& b) {
    const std::set<std::size_t> sa(a.rhombi.begin(), a.rhombi.end());
    std::set<std::size_t> common;
    for (auto r : b.rhombi)
        if (sa.count(r)) common.insert(r);
    if (common.empty()) return IntersectionKind::empty;
    if (common.size() == 1) return IntersectionKind::chain;
    return detail::contiguous_in(a.rhombi, common) && detail::contiguous_in(b.rhombi, common)
               ? IntersectionKind::chain
               : IntersectionKind::violation;
}

inline ChainSet rhombus_chains(const PlaneStructure& ps, const FaceStructure& fs) {
    const Drawing& dr = ps.base;
    ChainSet cs;
    std::vector<std::size_t> rhombus_of_face(fs.faces.size(), kNoFace);
    for (std::size_t i = 0; i < fs.faces.size(); ++i) {
        const Face& f = fs.faces[i];
        if (!detail::is_rhombus(dr, f)) continue;
        Rhombus r;
        r.face = i;
        for (std::size_t k = 0; k < 4; ++k) r.sides[k] = f.walks[0][k] / 2;
        r.directions = {direction_class(dr.tail(r.sides[0]), dr.head(r.sides[0])),
                        direction_class(dr.tail(r.sides[1]), dr.head(r.sides[1]))};
        rhombus_of_face[i] = cs.rhombi.size();
        cs.rhombi.push_back(r);
    }
    cs.membership.assign(cs.rhombi.size(), 0);

    // Weighted adjacency, one list per direction.
    std::map<Direction, std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> by_weight;
    for (const auto& r : cs.rhombi)
        for (const auto& d : r.directions) by_weight.try_emplace(d, cs.rhombi.size());
    for (std::size_t e = 0; e < dr.e(); ++e) {
        if (!ps.in_e0[e]) continue;
        const std::size_t fa = fs.dart_face[2 * e], fb = fs.dart_face[2 * e + 1];
        if (fa == fb || rhombus_of_face[fa] == kNoFace || rhombus_of_face[fb] == kNoFace) continue;
        const std::size_t a = std::min(rhombus_of_face[fa], rhombus_of_face[fb]);
        const std::size_t b = std::max(rhombus_of_face[fa], rhombus_of_face[fb]);
        const Direction w = direction_class(dr.tail(e), dr.head(e));
        cs.adjacency.push_back({a, b, e, w});
        auto& adj = by_weight[w];
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }

    for (const auto& [w, adj] : by_weight) {
        std::vector<bool> done(cs.rhombi.size(), false);
        auto has_side = [&](std::size_t r) {
            return cs.rhombi[r].directions[0] == w || cs.rhombi[r].directions[1] == w;
        };
        // Paths first, from their lower-indexed end; what is left are cycles.
        std::vector<std::size_t> starts;
        for (std::size_t r = 0; r < cs.rhombi.size(); ++r)
            if (has_side(r) && adj[r].size() <= 1) starts.push_back(r);
        for (std::size_t r = 0; r < cs.rhombi.size(); ++r)
            if (has_side(r) && adj[r].size() == 2) starts.push_back(r);
        for (auto s : starts) {
            if (done[s]) continue;
            Chain ch;
            ch.weight = w;
            ch.cycle = adj[s].size() == 2;
            std::size_t prev = kNoFace, cur = s;
            std::set<std::size_t> used_edges;
            while (cur != kNoFace && !done[cur]) {
                done[cur] = true;
                ch.rhombi.push_back(cur);
                std::size_t nxt = kNoFace;
                for (const auto& [o, e] : adj[cur])
                    if (o != prev && !done[o]) {
                        nxt = o;
                        used_edges.insert(e);
                        break;
                    }
                prev = cur;
                cur = nxt;
            }
            if (!ch.cycle) {
                for (std::size_t end : {ch.rhombi.front(), ch.rhombi.back()}) {
                    for (auto side : cs.rhombi[end].sides) {
                        if (!(direction_class(dr.tail(side), dr.head(side)) == w) || used_edges.count(side)) continue;
                        if (std::find(ch.end_edges.begin(), ch.end_edges.end(), side) != ch.end_edges.end()) continue;
                        ch.end_edges.push_back(side);
                    }
                    if (ch.rhombi.size() == 1) break;
                }
                for (auto side : ch.end_edges) {
                    const std::size_t mine = cs.rhombi[ch.rhombi.front()].face;
                    const std::size_t last = cs.rhombi[ch.rhombi.back()].face;
                    std::size_t other = fs.dart_face[2 * side];
                    if (other == mine || other == last) other = fs.dart_face[2 * side + 1];
                    ch.end_face_sizes.push_back(fs.faces[other].size);
                    if (rhombus_of_face[other] != kNoFace) cs.ends_leave_rhombi = false;
                }
            } else {
                cs.cycles.push_back(cs.chains.size());
            }
            for (auto r : ch.rhombi) ++cs.membership[r];
            cs.chains.push_back(std::move(ch));
        }
    }

    for (std::size_t i = 0; i < cs.chains.size(); ++i)
        for (std::size_t j = i + 1; j < cs.chains.size(); ++j) {
            const auto kind = classify_intersection(cs.chains[i], cs.chains[j]);
            if (kind != IntersectionKind::empty) ++cs.nonempty_intersections;
            if (kind == IntersectionKind::violation) cs.violations.push_back({i, j});
        }

    std::size_t f4 = 0;
    for (const auto& f : fs.faces) f4 += f.size == 4;
    if (4 * f4 >= fs.n) cs.enough_chains = 2 * cs.chains.size() * cs.chains.size() >= fs.n;
    return cs;
}

inline void write_chains_csv(std::ostream& os, const ChainSet& cs) {
    CsvWriter csv(os);
    csv.row("chain", "weight", "length", "faces", "end_face_sizes", "cycle");
    for (std::size_t i = 0; i < cs.chains.size(); ++i) {
        const Chain& ch = cs.chains[i];
        std::string faces, ends;
        for (auto r : ch.rhombi) faces += (faces.empty() ? "" : ";") + std::to_string(cs.rhombi[r].face);
        for (auto s : ch.end_face_sizes) ends += (ends.empty() ? "" : ";") + std::to_string(s);
        csv.row(i, ch.weight.to_string(), ch.rhombi.size(), faces, ends, ch.cycle ? 1 : 0);
    }
}

}  // namespace udg
