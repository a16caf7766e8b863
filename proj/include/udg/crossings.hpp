#pragma once

// All-pairs crossing analysis: k-planarity and the largest set of pairwise
// crossing edges.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "udg/geom.hpp"
#include "udg/model.hpp"
#include "udg/spatial.hpp"

namespace udg {

enum class DefectKind { touch, overlap, vertex_in_interior };

inline std::string_view to_string(DefectKind k) {
    switch (k) {
        case DefectKind::touch: return "touch";
        case DefectKind::overlap: return "overlap";
        case DefectKind::vertex_in_interior: return "vertex_in_interior";
    }
    return "?";
}

struct CrossingDefect {
    DefectKind kind;
    std::size_t a;  // edge, or vertex for vertex_in_interior
    std::size_t b;  // edge
    friend auto operator<=>(const CrossingDefect&, const CrossingDefect&) = default;
};

struct CrossingReport {
    std::size_t edge_count = 0;
    std::vector<IndexPair> crossing_pairs;  // (e, f), e < f, sorted
    std::vector<std::size_t> per_edge;
    std::vector<CrossingDefect> defects;

    bool defect_free() const { return defects.empty(); }
};

struct ScanOptions {
    unsigned jobs = 1;
    bool bucketing = true;
};

/// Exact relation of every edge pair whose boxes meet. Pairs are split into
/// contiguous chunks per worker and merged in order, so the output does not
/// depend on the job count.
inline CrossingReport crossing_report(const Drawing& dr, const ScanOptions& opt = {}) {
    CrossingReport rep;
    rep.edge_count = dr.e();
    rep.per_edge.assign(dr.e(), 0);
    const auto cand = overlapping_pairs(detail::edge_boxes(dr), dr.unit_length_hint(), opt.bucketing);

    std::vector<SegmentRelation> rel(cand.size(), SegmentRelation::disjoint);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const Edge& a = dr.edges[cand[k].first];
            const Edge& b = dr.edges[cand[k].second];
            rel[k] = segment_relation(dr.p(a.u), dr.p(a.v), dr.p(b.u), dr.p(b.v));
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(cand.size() / 1024 + 1)));
    if (jobs == 1) {
        work(0, cand.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cand.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            const std::size_t lo = std::min(cand.size(), t * chunk), hi = std::min(cand.size(), lo + chunk);
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (std::size_t k = 0; k < cand.size(); ++k) {
        const auto [e, f] = cand[k];
        switch (rel[k]) {
            case SegmentRelation::proper_cross:
                rep.crossing_pairs.emplace_back(e, f);
                ++rep.per_edge[e];
                ++rep.per_edge[f];
                break;
            case SegmentRelation::touch: rep.defects.push_back({DefectKind::touch, e, f}); break;
            case SegmentRelation::overlap: rep.defects.push_back({DefectKind::overlap, e, f}); break;
            default: break;
        }
    }
    for (const auto& vi : vertices_in_edge_interiors(dr, opt.bucketing))
        rep.defects.push_back({DefectKind::vertex_in_interior, vi.vertex, vi.edge});
    std::sort(rep.defects.begin(), rep.defects.end());
    return rep;
}

inline void require_defect_free(const CrossingReport& rep) {
    if (!rep.defect_free()) {
        const auto& d = rep.defects.front();
        throw PreconditionError("drawing has " + std::to_string(rep.defects.size()) + " defects, first: " +
                                std::string(to_string(d.kind)) + " " + std::to_string(d.a) + " " +
                                std::to_string(d.b));
    }
}

/// Largest number of crossings on a single edge; 0 exactly for plane drawings.
inline std::size_t planarity_number(const CrossingReport& rep) {
    require_defect_free(rep);
    std::size_t best = 0;
    for (auto c : rep.per_edge) best = std::max(best, c);
    return best;
}

// ---------------------------------------------------------------------------
// Maximum clique of the crossing graph.

struct CliqueWitness {
    std::size_t size = 0;
    std::vector<std::size_t> edges;  // sorted edge indices, pairwise crossing
};

struct CliqueResult {
    CliqueWitness witness;
    bool exact = true;  // false: the node budget ran out; witness is a lower bound
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultCliqueBudget = 10'000'000;

namespace detail {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    /// Lowest set bit, or npos.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return npos;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    void and_not(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

/// Branch and bound with greedy-colouring bounds over bitset candidate sets.
class CliqueSearch {
public:
    CliqueSearch(std::vector<Bitset> adj, std::uint64_t budget) : adj_(std::move(adj)), budget_(budget) {}

    void run(const Bitset& all) {
        Bitset p = all;
        expand(p);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    void expand(Bitset& p) {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        // Colour classes: each is an independent set, so a clique inside p
        // takes at most one vertex per class.
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        const std::size_t need = best_.size() + 1 > current_.size() ? best_.size() + 1 - current_.size() : 0;
        Bitset uncoloured = p;
        std::size_t k = 0;
        while (!uncoloured.none()) {
            ++k;
            Bitset q = uncoloured;
            for (std::size_t v = q.first(); v != Bitset::npos; v = q.first()) {
                uncoloured.reset(v);
                q.reset(v);
                q.and_not(adj_[v]);
                if (k >= need) {
                    order.push_back(v);
                    colour.push_back(k);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + colour[i] <= best_.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            Bitset next = p;
            next &= adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            if (aborted_) return;
            p.reset(v);
        }
    }

    std::vector<Bitset> adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace detail

/// Exact maximum set of pairwise properly crossing edges. Vertices are
/// searched in descending crossing degree (ties by edge index).
inline CliqueResult max_pairwise_crossing(const CrossingReport& rep, std::uint64_t budget = kDefaultCliqueBudget) {
    require_defect_free(rep);
    CliqueResult res;
    if (rep.edge_count == 0) return res;
    if (rep.crossing_pairs.empty()) {
        res.witness = {1, {0}};
        return res;
    }
    std::vector<std::size_t> verts;
    for (std::size_t e = 0; e < rep.edge_count; ++e)
        if (rep.per_edge[e] > 0) verts.push_back(e);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](std::size_t a, std::size_t b) { return rep.per_edge[a] > rep.per_edge[b]; });
    std::vector<std::size_t> pos(rep.edge_count, detail::Bitset::npos);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
    std::vector<detail::Bitset> adj(verts.size(), detail::Bitset(verts.size()));
    for (const auto& [e, f] : rep.crossing_pairs) {
        adj[pos[e]].set(pos[f]);
        adj[pos[f]].set(pos[e]);
    }
    detail::Bitset all(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) all.set(i);

    detail::CliqueSearch search(std::move(adj), budget);
    search.run(all);
    res.nodes = search.nodes();
    res.exact = !search.aborted();
    std::vector<std::size_t> w;
    for (auto i : search.best()) w.push_back(verts[i]);
    if (w.empty()) w.push_back(rep.crossing_pairs.front().first);
    std::sort(w.begin(), w.end());
    res.witness = {w.size(), std::move(w)};
    return res;
}

// ---------------------------------------------------------------------------

inline void write_crossing_pairs_csv(std::ostream& os, const CrossingReport& rep) {
    CsvWriter csv(os);
    csv.row("edge_a", "edge_b");
    for (const auto& [e, f] : rep.crossing_pairs) csv.row(e, f);
}

inline void write_per_edge_csv(std::ostream& os, const Drawing& dr, const CrossingReport& rep) {
    CsvWriter csv(os);
    csv.row("edge", "u", "v", "crossings");
    for (std::size_t e = 0; e < rep.edge_count; ++e) csv.row(e, dr.edges[e].u, dr.edges[e].v, rep.per_edge[e]);
}

}  // namespace udg
