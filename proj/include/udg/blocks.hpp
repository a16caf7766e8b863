#pragma once

// Block decomposition of the positive-slope edges: each edge is doubled into
// a left-pointing and a right-pointing copy and copies are chained by the
// continuation relation.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "udg/crossings.hpp"
#include "udg/geom.hpp"
#include "udg/model.hpp"

namespace udg {

struct DirectedEdge {
    std::size_t edge;
    bool right;  // points to the right
    std::size_t tail;
    std::size_t head;
};

struct BlockVerdicts {
    bool simple_paths = true;
    bool slopes_increase = true;
    bool nesting = true;
    bool odd_edges_cross = true;
    bool partition = true;               // lengths sum to twice the positive-slope edge count
    bool block_count = true;             // at most 2n blocks
    std::optional<bool> length_bound;    // every block has at most 2k - 2 edges
    std::size_t max_length = 0;
};

struct BlockSet {
    std::size_t n = 0;
    std::size_t total_edges = 0;
    std::vector<std::size_t> positive;  // edge indices with positive slope
    std::vector<DirectedEdge> directed; // 2i: right copy of positive[i], 2i+1: left copy
    std::vector<std::optional<std::size_t>> continuation;
    std::vector<std::vector<std::size_t>> blocks;  // directed edge ids in order
    std::optional<std::size_t> clique;              // largest pairwise crossing set used for k
    BlockVerdicts verdicts;

    double positive_fraction() const {
        return total_edges ? static_cast<double>(positive.size()) / static_cast<double>(total_edges) : 0.0;
    }
    bool all_hold() const {
        const auto& v = verdicts;
        return v.simple_paths && v.slopes_increase && v.nesting && v.odd_edges_cross && v.partition &&
               v.block_count && v.length_bound.value_or(true);
    }
};

namespace detail {

/// Checks of the nesting relations between an edge and its continuation.
inline bool nested_step(const Drawing& dr, const DirectedEdge& e, const DirectedEdge& f) {
    auto lo = [&](const DirectedEdge& g) { return dr.p(g.right ? g.tail : g.head); };
    auto hi = [&](const DirectedEdge& g) { return dr.p(g.right ? g.head : g.tail); };
    const Point el = lo(e), eh = hi(e), fl = lo(f), fh = hi(f);
    auto lt = [](const QuadExt& a, const QuadExt& b) { return compare(a, b) < 0; };
    if (e.right)
        return lt(el.x(), fl.x()) && lt(fl.x(), fh.x()) && fh.x() == eh.x() && lt(fl.y(), el.y()) &&
               lt(el.y(), eh.y()) && eh.y() == fh.y();
    return el.x() == fl.x() && lt(fl.x(), fh.x()) && lt(fh.x(), eh.x()) && fl.y() == el.y() &&
           lt(el.y(), eh.y()) && lt(eh.y(), fh.y());
}

}  // namespace detail

/// Blocks of the positive-slope edges. The continuation of a right edge
/// ending at r is the left edge leaving r with the smallest slope above its
/// own; dually for left edges at their left endpoint. The clique size, when
/// given, sets k = clique + 1 for the length bound.
inline BlockSet block_decomposition(const Drawing& dr, std::optional<std::size_t> clique = std::nullopt) {
    BlockSet bs;
    bs.n = dr.n();
    bs.total_edges = dr.e();
    bs.clique = clique;
    for (std::size_t e = 0; e < dr.e(); ++e) {
        const Direction dir = direction_class(dr.tail(e), dr.head(e));
        if (dir.vertical || dir.horizontal())
            throw PreconditionError("block_decomposition: edge " + std::to_string(e) + " is axis-parallel");
        if (dir.slope_sign() > 0) bs.positive.push_back(e);
    }
    // Per vertex: positive edges having it as right endpoint, and as left endpoint.
    std::vector<std::vector<std::size_t>> ending(dr.n()), starting(dr.n());
    for (std::size_t i = 0; i < bs.positive.size(); ++i) {
        const Edge& e = dr.edges[bs.positive[i]];
        const bool u_left = compare(dr.p(e.u).x(), dr.p(e.v).x()) < 0;
        const std::size_t l = u_left ? e.u : e.v, r = u_left ? e.v : e.u;
        bs.directed.push_back({bs.positive[i], true, l, r});
        bs.directed.push_back({bs.positive[i], false, r, l});
        ending[r].push_back(i);
        starting[l].push_back(i);
    }
    auto by_slope = [&](std::size_t a, std::size_t b) {
        const std::size_t ea = bs.positive[a], eb = bs.positive[b];
        return compare_slopes(dr.tail(ea), dr.head(ea), dr.tail(eb), dr.head(eb)) < 0;
    };
    bs.continuation.assign(bs.directed.size(), std::nullopt);
    for (std::size_t v = 0; v < dr.n(); ++v) {
        std::sort(ending[v].begin(), ending[v].end(), by_slope);
        std::sort(starting[v].begin(), starting[v].end(), by_slope);
        for (std::size_t k = 0; k + 1 < ending[v].size(); ++k)
            bs.continuation[2 * ending[v][k]] = 2 * ending[v][k + 1] + 1;
        for (std::size_t k = 0; k + 1 < starting[v].size(); ++k)
            bs.continuation[2 * starting[v][k] + 1] = 2 * starting[v][k + 1];
    }

    std::vector<bool> has_pred(bs.directed.size(), false), used(bs.directed.size(), false);
    for (const auto& c : bs.continuation)
        if (c) has_pred[*c] = true;
    auto trail = [&](std::size_t s) {
        std::vector<std::size_t> blk;
        for (std::optional<std::size_t> c = s; c && !used[*c]; c = bs.continuation[*c]) {
            used[*c] = true;
            blk.push_back(*c);
        }
        bs.blocks.push_back(std::move(blk));
    };
    for (std::size_t i = 0; i < bs.directed.size(); ++i)
        if (!has_pred[i]) trail(i);
    for (std::size_t i = 0; i < bs.directed.size(); ++i)
        if (!used[i]) {
            bs.verdicts.simple_paths = false;  // a closed trail
            trail(i);
        }

    auto& v = bs.verdicts;
    std::size_t total = 0;
    for (const auto& blk : bs.blocks) {
        total += blk.size();
        v.max_length = std::max(v.max_length, blk.size());
        std::vector<std::size_t> verts{bs.directed[blk.front()].tail};
        for (std::size_t i = 0; i < blk.size(); ++i) {
            const DirectedEdge& e = bs.directed[blk[i]];
            verts.push_back(e.head);
            if (i + 1 < blk.size()) {
                const DirectedEdge& f = bs.directed[blk[i + 1]];
                if (e.head != f.tail) v.simple_paths = false;
                if (compare_slopes(dr.tail(e.edge), dr.head(e.edge), dr.tail(f.edge), dr.head(f.edge)) >= 0)
                    v.slopes_increase = false;
                if (!detail::nested_step(dr, e, f)) v.nesting = false;
            }
        }
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) v.simple_paths = false;
        for (std::size_t i = 0; i < blk.size(); i += 2)
            for (std::size_t j = i + 2; j < blk.size(); j += 2) {
                const Edge& a = dr.edges[bs.directed[blk[i]].edge];
                const Edge& b = dr.edges[bs.directed[blk[j]].edge];
                if (segment_relation(dr.p(a.u), dr.p(a.v), dr.p(b.u), dr.p(b.v)) != SegmentRelation::proper_cross)
                    v.odd_edges_cross = false;
            }
    }
    v.partition = total == 2 * bs.positive.size() && total == bs.directed.size();
    v.block_count = bs.blocks.size() <= 2 * dr.n();
    if (clique) v.length_bound = v.max_length <= 2 * *clique;
    return bs;
}

inline void write_blocks_csv(std::ostream& os, const BlockSet& bs) {
    CsvWriter csv(os);
    csv.row("block", "length", "vertices", "edges");
    for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
        const auto& blk = bs.blocks[i];
        std::string verts = std::to_string(bs.directed[blk.front()].tail), edges;
        for (auto id : blk) {
            const DirectedEdge& e = bs.directed[id];
            verts += ";" + std::to_string(e.head);
            edges += (edges.empty() ? "" : ";") + std::to_string(e.edge) + (e.right ? "r" : "l");
        }
        csv.row(i, blk.size(), verts, edges);
    }
}

}  // namespace udg
