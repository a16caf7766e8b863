#pragma once

// Candidate-pair generation for the all-pairs scans. Uniform-grid bucketing
// only prunes pairs whose bounding boxes cannot meet; every surviving pair is
// still decided by the exact predicates, so bucketing never changes a result.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "udg/geom.hpp"

namespace udg {

struct Box {
    double xlo, xhi, ylo, yhi;

    static Box of(const Point& p) { return {p.ix().lo, p.ix().hi, p.iy().lo, p.iy().hi}; }
    static Box of(const Point& p, const Point& q) {
        return {std::min(p.ix().lo, q.ix().lo), std::max(p.ix().hi, q.ix().hi), std::min(p.iy().lo, q.iy().lo),
                std::max(p.iy().hi, q.iy().hi)};
    }
    bool meets(const Box& o) const { return !(xhi < o.xlo || o.xhi < xlo || yhi < o.ylo || o.yhi < ylo); }
};

using IndexPair = std::pair<std::size_t, std::size_t>;

namespace detail {

struct CellEntry {
    std::uint64_t cell;
    std::uint32_t item;
    bool operator<(const CellEntry& o) const { return cell != o.cell ? cell < o.cell : item < o.item; }
};

class GridFrame {
public:
    GridFrame(const std::vector<Box>& boxes, double cell_hint) {
        double xlo = INFINITY, ylo = INFINITY, xhi = -INFINITY, yhi = -INFINITY;
        for (const Box& b : boxes) {
            xlo = std::min(xlo, b.xlo);
            ylo = std::min(ylo, b.ylo);
            xhi = std::max(xhi, b.xhi);
            yhi = std::max(yhi, b.yhi);
        }
        ok_ = std::isfinite(xlo) && std::isfinite(ylo) && std::isfinite(xhi) && std::isfinite(yhi);
        if (!ok_) return;
        x0_ = xlo;
        y0_ = ylo;
        const double extent = std::max(xhi - xlo, yhi - ylo);
        cell_ = std::max({cell_hint, extent / 2048.0, 1e-300});
        if (!(cell_ > 0) || !std::isfinite(cell_)) ok_ = false;
    }

    bool ok() const { return ok_; }

    template <class F>
    void for_cells(const Box& b, F&& f) const {
        const std::int64_t cx0 = index(b.xlo, x0_, -1), cx1 = index(b.xhi, x0_, 1);
        const std::int64_t cy0 = index(b.ylo, y0_, -1), cy1 = index(b.yhi, y0_, 1);
        for (std::int64_t cx = cx0; cx <= cx1; ++cx)
            for (std::int64_t cy = cy0; cy <= cy1; ++cy)
                f((static_cast<std::uint64_t>(cx) << 32) | static_cast<std::uint64_t>(cy));
    }

private:
    // Pads by a relative tolerance far above the rounding error of the division.
    std::int64_t index(double v, double origin, int dir) const {
        const double t = (v - origin) / cell_;
        const double pad = 1e-9 * (std::fabs(t) + 1.0);
        const double c = std::floor(dir < 0 ? t - pad : t + pad);
        return std::clamp<std::int64_t>(static_cast<std::int64_t>(c), 0, 4095);
    }

    bool ok_ = false;
    double x0_ = 0, y0_ = 0, cell_ = 1;
};

inline void sort_unique(std::vector<IndexPair>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// Below this many items the scans are plain all-pairs.
inline constexpr std::size_t kBucketThreshold = 48;

/// All i < j whose boxes meet, sorted.
inline std::vector<IndexPair> overlapping_pairs(const std::vector<Box>& boxes, double cell_hint, bool bucketing = true) {
    std::vector<IndexPair> out;
    const std::size_t n = boxes.size();
    detail::GridFrame frame(boxes, cell_hint);
    if (!bucketing || n < kBucketThreshold || !frame.ok()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (boxes[i].meets(boxes[j])) out.emplace_back(i, j);
        return out;
    }
    std::vector<detail::CellEntry> entries;
    entries.reserve(n * 4);
    for (std::size_t i = 0; i < n; ++i)
        frame.for_cells(boxes[i], [&](std::uint64_t c) { entries.push_back({c, static_cast<std::uint32_t>(i)}); });
    std::sort(entries.begin(), entries.end());
    for (std::size_t s = 0; s < entries.size();) {
        std::size_t e = s;
        while (e < entries.size() && entries[e].cell == entries[s].cell) ++e;
        for (std::size_t a = s; a < e; ++a)
            for (std::size_t b = a + 1; b < e; ++b) {
                const std::size_t i = entries[a].item, j = entries[b].item;
                if (boxes[i].meets(boxes[j])) out.emplace_back(i, j);
            }
        s = e;
    }
    detail::sort_unique(out);
    return out;
}

/// All (i, j) with boxes_a[i] meeting boxes_b[j], sorted.
inline std::vector<IndexPair> overlapping_cross_pairs(const std::vector<Box>& boxes_a, const std::vector<Box>& boxes_b,
                                                      double cell_hint, bool bucketing = true) {
    std::vector<IndexPair> out;
    std::vector<Box> all(boxes_a);
    all.insert(all.end(), boxes_b.begin(), boxes_b.end());
    detail::GridFrame frame(all, cell_hint);
    if (!bucketing || boxes_a.size() * boxes_b.size() < kBucketThreshold * kBucketThreshold || !frame.ok()) {
        for (std::size_t i = 0; i < boxes_a.size(); ++i)
            for (std::size_t j = 0; j < boxes_b.size(); ++j)
                if (boxes_a[i].meets(boxes_b[j])) out.emplace_back(i, j);
        return out;
    }
    const std::uint32_t offset = static_cast<std::uint32_t>(boxes_a.size());
    std::vector<detail::CellEntry> entries;
    for (std::size_t i = 0; i < all.size(); ++i)
        frame.for_cells(all[i], [&](std::uint64_t c) { entries.push_back({c, static_cast<std::uint32_t>(i)}); });
    std::sort(entries.begin(), entries.end());
    for (std::size_t s = 0; s < entries.size();) {
        std::size_t e = s;
        while (e < entries.size() && entries[e].cell == entries[s].cell) ++e;
        std::size_t split = s;
        while (split < e && entries[split].item < offset) ++split;
        for (std::size_t a = s; a < split; ++a)
            for (std::size_t b = split; b < e; ++b) {
                const std::size_t i = entries[a].item, j = entries[b].item - offset;
                if (boxes_a[i].meets(boxes_b[j])) out.emplace_back(i, j);
            }
        s = e;
    }
    detail::sort_unique(out);
    return out;
}

}  // namespace udg
