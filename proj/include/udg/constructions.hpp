#pragma once

// Generators for the extremal constructions. Each returns a Drawing plus the
// guarantees it claims; the claims are re-verified by the crossings module.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "udg/bounds.hpp"
#include "udg/geom.hpp"
#include "udg/model.hpp"
#include "udg/numtheory.hpp"

namespace udg {

struct ConstructionCertificate {
    std::string name;
    std::int64_t claimed_edges = 0;
    std::optional<std::int64_t> max_crossings_per_edge;  // claimed k-planarity
    std::optional<std::int64_t> max_pairwise_crossing;   // claimed: no (bound + 1) pairwise crossing edges
    std::optional<std::int64_t> edge_lower_bound;        // may be negative for small grids
    std::vector<std::string> warnings;
};

struct Construction {
    Drawing drawing;
    ConstructionCertificate certificate;
};

// ---------------------------------------------------------------------------
// Triangular lattice, axial coordinates (i, j) -> (i + j/2, (j/2) sqrt 3).

struct LatticeCoord {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend auto operator<=>(const LatticeCoord&, const LatticeCoord&) = default;
    LatticeCoord operator+(const LatticeCoord& o) const { return {i + o.i, j + o.j}; }
};

inline constexpr LatticeCoord kLatticeNeighbours[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

inline Point triangular_point(std::int64_t i, std::int64_t j) {
    const Rational half(1, 2);
    return {QuadExt(Rational(i) + Rational(j) * half, Rational(0), 3), QuadExt(Rational(0), Rational(j) * half, 3)};
}

inline Point triangular_point(const LatticeCoord& c) { return triangular_point(c.i, c.j); }

/// Squared Euclidean length of a lattice point: i^2 + ij + j^2.
inline std::int64_t lattice_norm(const LatticeCoord& c) { return c.i * c.i + c.i * c.j + c.j * c.j; }

/// Drawing on lattice points with every lattice-neighbour pair as an edge.
inline Drawing triangular_piece(const std::vector<LatticeCoord>& coords) {
    Drawing dr;
    dr.d = 3;
    dr.unit_sq = QuadExt::from_int(1, 3);
    std::map<LatticeCoord, std::size_t> index;
    for (const auto& c : coords) {
        if (!index.emplace(c, dr.n()).second) throw PreconditionError("duplicate lattice point");
        dr.vertices.push_back(triangular_point(c));
    }
    for (std::size_t k = 0; k < coords.size(); ++k)
        for (int t = 0; t < 3; ++t) {
            auto it = index.find(coords[k] + kLatticeNeighbours[t]);
            if (it != index.end()) dr.edges.push_back(make_edge(k, it->second));
        }
    dr.sort_edges();
    return dr;
}

struct SpiralSequence {
    std::vector<LatticeCoord> order;
    std::vector<std::int64_t> prefix_edges;  // prefix_edges[n] = edges among the first n points
};

/// Greedy growth on the triangular lattice. Each new point maximises the
/// number of unit neighbours among the chosen points; ties go to a point
/// adjacent to the most recent one, then to the point closest to the seed,
/// then to the lowest counter-clockwise angle around the seed.
inline SpiralSequence spiral_sequence(std::size_t n) {
    SpiralSequence seq;
    seq.prefix_edges.push_back(0);
    if (n == 0) return seq;

    std::set<LatticeCoord> chosen;
    std::map<LatticeCoord, int> gain;
    const Point seed = triangular_point(0, 0);
    auto place = [&](const LatticeCoord c, const int g) {
        chosen.insert(c);
        gain.erase(c);
        seq.order.push_back(c);
        seq.prefix_edges.push_back(seq.prefix_edges.back() + g);
        for (const auto& step : kLatticeNeighbours) {
            const LatticeCoord q = c + step;
            if (!chosen.count(q)) ++gain[q];
        }
    };
    place({0, 0}, 0);
    while (seq.order.size() < n) {
        const LatticeCoord last = seq.order.back();
        auto adjacent_to_last = [&](const LatticeCoord& c) {
            for (const auto& step : kLatticeNeighbours)
                if (last + step == c) return true;
            return false;
        };
        const std::pair<const LatticeCoord, int>* best = nullptr;
        bool best_adj = false;
        for (const auto& entry : gain) {
            if (!best) {
                best = &entry;
                best_adj = adjacent_to_last(entry.first);
                continue;
            }
            if (entry.second != best->second) {
                if (entry.second > best->second) best = &entry, best_adj = adjacent_to_last(entry.first);
                continue;
            }
            const bool adj = adjacent_to_last(entry.first);
            if (adj != best_adj) {
                if (adj) best = &entry, best_adj = adj;
                continue;
            }
            const auto na = lattice_norm(entry.first), nb = lattice_norm(best->first);
            if (na != nb) {
                if (na < nb) best = &entry, best_adj = adj;
                continue;
            }
            if (angular_cmp(seed, triangular_point(entry.first), triangular_point(best->first)) < 0)
                best = &entry, best_adj = adj;
        }
        const LatticeCoord next = best->first;
        place(next, best->second);
    }
    return seq;
}

/// The first n points of the greedy spiral with all unit pairs as edges.
inline Drawing triangular_spiral(std::size_t n) {
    if (n < 1) throw PreconditionError("triangular_spiral needs n >= 1");
    return triangular_piece(spiral_sequence(n).order);
}

inline Construction triangular_spiral_construction(std::size_t n) {
    Construction c{triangular_spiral(n), {}};
    c.certificate.name = "spiral";
    c.certificate.claimed_edges = harborth_u0(static_cast<std::int64_t>(n));
    c.certificate.max_crossings_per_edge = 0;
    c.certificate.max_pairwise_crossing = n >= 2 ? 1 : 0;
    return c;
}

// ---------------------------------------------------------------------------
// Integer grids with edges along sums-of-two-squares vectors.

namespace detail {

inline Construction grid_with_classes(std::int64_t w, std::int64_t r, const std::vector<LatticeVector>& classes) {
    if (w < 0) throw PreconditionError("grid width must be non-negative");
    Construction c;
    Drawing& dr = c.drawing;
    dr.d = 0;
    dr.unit_sq = QuadExt::from_int(r);
    dr.vertices.reserve(static_cast<std::size_t>(w * w));
    for (std::int64_t y = 0; y < w; ++y)
        for (std::int64_t x = 0; x < w; ++x) dr.vertices.push_back(rational_point(Rational(x), Rational(y)));
    std::int64_t claimed = 0;
    for (const auto& v : classes) {
        const std::int64_t ax = std::abs(v.dx), ay = std::abs(v.dy);
        if (ax < w && ay < w) claimed += (w - ax) * (w - ay);
    }
    for (std::int64_t y = 0; y < w; ++y)
        for (std::int64_t x = 0; x < w; ++x)
            for (const auto& v : classes) {
                const std::int64_t x2 = x + v.dx, y2 = y + v.dy;
                if (x2 < 0 || x2 >= w || y2 < 0 || y2 >= w) continue;
                dr.edges.push_back(
                    make_edge(static_cast<std::size_t>(y * w + x), static_cast<std::size_t>(y2 * w + x2)));
            }
    dr.sort_edges();
    c.certificate.claimed_edges = claimed;
    return c;
}

}  // namespace detail

/// w x w integer grid, edges between points at squared distance r.
/// Requires square-free r, so that no edge passes through a grid point.
inline Construction erdos_grid(std::int64_t w, std::int64_t r) {
    if (r < 1) throw PreconditionError("erdos_grid needs r >= 1");
    if (!is_square_free(r)) throw PreconditionError("erdos_grid needs square-free r, got " + std::to_string(r));
    const TwoSquareData tsd = two_square_vectors(r);
    Construction c = detail::grid_with_classes(w, r, tsd.classes);
    c.certificate.name = "erdos";
    c.certificate.max_crossings_per_edge = 24 * r * r;
    if (tsd.vectors.empty())
        c.certificate.warnings.push_back(std::to_string(r) + " is not a sum of two squares; the grid has no edges");
    return c;
}

/// Grid edges restricted to the chosen direction classes of r.
inline Construction direction_restricted_grid(std::int64_t w, std::int64_t r, const std::vector<LatticeVector>& dirs) {
    if (r < 1) throw PreconditionError("direction_restricted_grid needs r >= 1");
    if (!is_square_free(r)) throw PreconditionError("direction_restricted_grid needs square-free r");
    const TwoSquareData tsd = two_square_vectors(r);
    std::set<LatticeVector> chosen;
    for (const auto& v : dirs) {
        if (v.dx * v.dx + v.dy * v.dy != r)
            throw PreconditionError("direction (" + std::to_string(v.dx) + "," + std::to_string(v.dy) +
                                    ") is not a class of r = " + std::to_string(r));
        if (!chosen.insert(v.canonical()).second)
            throw PreconditionError("direction class listed twice");
    }
    Construction c = detail::grid_with_classes(w, r, {chosen.begin(), chosen.end()});
    c.certificate.name = "directions";
    const auto k_minus_1 = static_cast<std::int64_t>(chosen.size());
    c.certificate.max_pairwise_crossing = k_minus_1;
    // (k-1) (n - 2 ceil(sqrt r) sqrt n) with n = w^2.
    const std::int64_t sr = isqrt(r);
    const std::int64_t ceil_sqrt_r = sr * sr == r ? sr : sr + 1;
    c.certificate.edge_lower_bound = k_minus_1 * (w * w - 2 * ceil_sqrt_r * w);
    return c;
}

/// Grid for k-planarity at size (n, k): w = floor(sqrt n), r = pick_r(ceil(sqrt(k)/5)).
inline Construction kplanar_grid(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1) throw PreconditionError("kplanar_grid needs n, k >= 1");
    std::int64_t m = 1;
    while (25 * m * m < k) ++m;
    return erdos_grid(isqrt(n), pick_r(m));
}

// ---------------------------------------------------------------------------
// A triangular piece and its translate by the unit vector (0, 1).

inline Construction shifted_copy(const Drawing& piece) {
    if (piece.d != 3) throw PreconditionError("shifted_copy expects a d = 3 drawing");
    Construction c;
    Drawing& dr = c.drawing;
    dr.d = 3;
    dr.unit_sq = piece.unit_sq;
    const std::size_t n = piece.n();
    const Point shift(QuadExt::from_int(0, 3), QuadExt::from_int(1, 3));
    dr.vertices = piece.vertices;
    for (std::size_t i = 0; i < n; ++i) dr.vertices.push_back(piece.p(i) + shift);
    for (const Edge& e : piece.edges) {
        dr.edges.push_back(e);
        dr.edges.push_back(make_edge(e.u + n, e.v + n));
    }
    for (std::size_t i = 0; i < n; ++i) dr.edges.push_back(make_edge(i, i + n));
    dr.sort_edges();
    c.certificate.name = "shifted";
    c.certificate.claimed_edges = static_cast<std::int64_t>(2 * piece.e() + n);
    c.certificate.max_crossings_per_edge = 3;
    return c;
}

/// rows x cols parallelogram of the triangular lattice plus its shifted copy.
inline Construction shifted_triangular(std::int64_t rows, std::int64_t cols) {
    if (rows < 1 || cols < 1) throw PreconditionError("shifted_triangular needs rows, cols >= 1");
    std::vector<LatticeCoord> coords;
    for (std::int64_t j = 0; j < rows; ++j)
        for (std::int64_t i = 0; i < cols; ++i) coords.push_back({i, j});
    return shifted_copy(triangular_piece(coords));
}

/// w x h grid of 60-degree rhombi: lattice points 0 <= i <= w, 0 <= j <= h
/// joined along the two lattice axes only.
inline Drawing rhombus_grid(std::int64_t w, std::int64_t h) {
    if (w < 0 || h < 0) throw PreconditionError("rhombus_grid needs w, h >= 0");
    Drawing dr;
    dr.d = 3;
    dr.unit_sq = QuadExt::from_int(1, 3);
    auto id = [&](std::int64_t i, std::int64_t j) { return static_cast<std::size_t>(j * (w + 1) + i); };
    for (std::int64_t j = 0; j <= h; ++j)
        for (std::int64_t i = 0; i <= w; ++i) dr.vertices.push_back(triangular_point(i, j));
    for (std::int64_t j = 0; j <= h; ++j)
        for (std::int64_t i = 0; i <= w; ++i) {
            if (i < w) dr.edges.push_back(make_edge(id(i, j), id(i + 1, j)));
            if (j < h) dr.edges.push_back(make_edge(id(i, j), id(i, j + 1)));
        }
    dr.sort_edges();
    return dr;
}

}  // namespace udg
