#pragma once

// The Drawing data model: vertex points, unit edges, the JSON file format and
// exhaustive validation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "udg/exactfield.hpp"
#include "udg/geom.hpp"
#include "udg/spatial.hpp"

namespace udg {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A straight-line drawing whose edges all have squared length unit_sq.
struct Drawing {
    int d = 0;
    QuadExt unit_sq = QuadExt::from_int(1);
    std::vector<Point> vertices;
    std::vector<Edge> edges;

    std::size_t n() const { return vertices.size(); }
    std::size_t e() const { return edges.size(); }
    const Point& p(std::size_t i) const { return vertices[i]; }
    const Point& tail(std::size_t edge) const { return vertices[edges[edge].u]; }
    const Point& head(std::size_t edge) const { return vertices[edges[edge].v]; }

    /// Edge slot index is the position in `edges`; sorting renumbers them.
    void sort_edges() { std::sort(edges.begin(), edges.end()); }

    /// Approximate unit length, used only to size spatial buckets.
    double unit_length_hint() const { return std::sqrt(std::max(unit_sq.enclosure().hi, 0.0)); }

    friend bool operator==(const Drawing& a, const Drawing& b) {
        return a.d == b.d && a.unit_sq == b.unit_sq && a.vertices == b.vertices && a.edges == b.edges;
    }
};

// ---------------------------------------------------------------------------
// Validation

struct UnitViolation {
    std::size_t edge;
    QuadExt actual;
};

struct VertexOnEdge {
    std::size_t vertex;
    std::size_t edge;
    friend auto operator<=>(const VertexOnEdge&, const VertexOnEdge&) = default;
};

struct ValidationReport {
    std::vector<UnitViolation> unit_violations;
    std::vector<IndexPair> coincident_vertices;
    std::vector<VertexOnEdge> vertex_in_interior;
    std::vector<IndexPair> overlapping_edges;
    std::vector<std::size_t> self_loops;
    std::vector<IndexPair> duplicate_edges;

    bool empty() const {
        return unit_violations.empty() && coincident_vertices.empty() && vertex_in_interior.empty() &&
               overlapping_edges.empty() && self_loops.empty() && duplicate_edges.empty();
    }

    std::size_t count() const {
        return unit_violations.size() + coincident_vertices.size() + vertex_in_interior.size() +
               overlapping_edges.size() + self_loops.size() + duplicate_edges.size();
    }

    std::string summary(const Drawing& dr) const {
        std::ostringstream os;
        for (const auto& u : unit_violations)
            os << "edge " << u.edge << " (" << dr.edges[u.edge].u << "," << dr.edges[u.edge].v
               << "): squared length " << u.actual << ", expected " << dr.unit_sq << "\n";
        for (const auto& [i, j] : coincident_vertices) os << "vertices " << i << " and " << j << " coincide\n";
        for (const auto& vi : vertex_in_interior)
            os << "vertex " << vi.vertex << " lies in the interior of edge " << vi.edge << "\n";
        for (const auto& [e, f] : overlapping_edges) os << "edges " << e << " and " << f << " overlap\n";
        for (auto e : self_loops) os << "edge " << e << " is a self-loop\n";
        for (const auto& [e, f] : duplicate_edges) os << "edges " << e << " and " << f << " are duplicates\n";
        return os.str();
    }
};

namespace detail {

inline std::vector<Box> edge_boxes(const Drawing& dr) {
    std::vector<Box> boxes;
    boxes.reserve(dr.e());
    for (const Edge& e : dr.edges) boxes.push_back(Box::of(dr.p(e.u), dr.p(e.v)));
    return boxes;
}

inline std::vector<Box> vertex_boxes(const Drawing& dr) {
    std::vector<Box> boxes;
    boxes.reserve(dr.n());
    for (const Point& p : dr.vertices) boxes.push_back(Box::of(p));
    return boxes;
}

}  // namespace detail

/// Every vertex lying in the open interior of an edge, sorted.
inline std::vector<VertexOnEdge> vertices_in_edge_interiors(const Drawing& dr, bool bucketing = true) {
    std::vector<VertexOnEdge> out;
    const auto cand = overlapping_cross_pairs(detail::vertex_boxes(dr), detail::edge_boxes(dr),
                                              dr.unit_length_hint(), bucketing);
    for (const auto& [v, e] : cand) {
        const Edge& ed = dr.edges[e];
        if (v == ed.u || v == ed.v || ed.u == ed.v) continue;
        if (in_segment_interior(dr.p(ed.u), dr.p(ed.v), dr.p(v))) out.push_back({v, e});
    }
    return out;
}

/// Exact check of the Drawing invariants only: unit lengths, loops,
/// duplicate edges, coincident points.
inline ValidationReport validate_invariants(const Drawing& dr) {
    ValidationReport rep;
    for (std::size_t e = 0; e < dr.e(); ++e) {
        const Edge& ed = dr.edges[e];
        if (ed.u == ed.v) {
            rep.self_loops.push_back(e);
            continue;
        }
        QuadExt len = sq_dist(dr.p(ed.u), dr.p(ed.v));
        if (!(len == dr.unit_sq)) rep.unit_violations.push_back({e, std::move(len)});
    }
    {
        std::vector<std::size_t> order(dr.e());
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](std::size_t e) { return make_edge(dr.edges[e].u, dr.edges[e].v); };
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key(a) < key(b); });
        for (std::size_t k = 1; k < order.size(); ++k)
            if (key(order[k]) == key(order[k - 1]))
                rep.duplicate_edges.emplace_back(std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k]));
        std::sort(rep.duplicate_edges.begin(), rep.duplicate_edges.end());
    }
    {
        std::vector<std::size_t> order(dr.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return key_order(dr.p(a), dr.p(b)) < 0; });
        for (std::size_t k = 1; k < order.size(); ++k) {
            // Report each pair of a run of equal points against the run's first member.
            std::size_t first = k - 1;
            while (first > 0 && dr.p(order[first - 1]) == dr.p(order[k])) --first;
            if (dr.p(order[first]) == dr.p(order[k]))
                rep.coincident_vertices.emplace_back(std::min(order[first], order[k]), std::max(order[first], order[k]));
        }
        std::sort(rep.coincident_vertices.begin(), rep.coincident_vertices.end());
    }
    return rep;
}

/// Exhaustive exact check of the Drawing invariants plus the admissibility
/// scans (vertex inside an edge, overlapping edges).
inline ValidationReport validate(const Drawing& dr) {
    ValidationReport rep = validate_invariants(dr);
    rep.vertex_in_interior = vertices_in_edge_interiors(dr);
    const auto cand = overlapping_pairs(detail::edge_boxes(dr), dr.unit_length_hint());
    for (const auto& [e, f] : cand) {
        const Edge& a = dr.edges[e];
        const Edge& b = dr.edges[f];
        if (a.u == a.v || b.u == b.v) continue;
        if (make_edge(a.u, a.v) == make_edge(b.u, b.v)) continue;  // reported as duplicate
        if (dr.p(a.u) == dr.p(a.v) || dr.p(b.u) == dr.p(b.v)) continue;  // coincident endpoints
        if (segment_relation(dr.p(a.u), dr.p(a.v), dr.p(b.u), dr.p(b.v)) == SegmentRelation::overlap)
            rep.overlapping_edges.emplace_back(e, f);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON file format

namespace detail {

inline Integer json_integer(const nlohmann::json& j, std::string_view where) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                      [](char c) { return c >= '0' && c <= '9'; }) &&
                            s != "-";
        if (!digits) throw ParseError(std::string(where) + ": not a decimal integer: \"" + s + "\"");
        return Integer(s);
    }
    throw ParseError(std::string(where) + ": expected an integer");
}

inline Rational json_rational(const nlohmann::json& j, std::string_view where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(std::string(where) + ": expected [num, den]");
    Integer num = json_integer(j[0], where);
    Integer den = json_integer(j[1], where);
    if (den <= 0) throw ParseError(std::string(where) + ": denominator must be positive");
    return make_rational(num, den);
}

inline QuadExt json_quadext(const nlohmann::json& j, int d, const std::string& where) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw ParseError(where + ": expected {\"a\": [num, den], \"b\": [num, den]}");
    Rational a = json_rational(j.at("a"), where + ".a");
    Rational b = json_rational(j.at("b"), where + ".b");
    if (d == 0 && b != 0) throw ParseError(where + ": nonzero irrational part with d = 0");
    return QuadExt(std::move(a), std::move(b), d);
}

inline std::string json_int_text(const Integer& z) {
    static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    if (z >= lo && z <= hi) return z.get_str();
    return "\"" + z.get_str() + "\"";
}

inline std::string json_rational_text(const Rational& q) {
    return "[" + json_int_text(q.get_num()) + ", " + json_int_text(q.get_den()) + "]";
}

inline std::string json_quadext_text(const QuadExt& x) {
    return "{\"a\": " + json_rational_text(x.a()) + ", \"b\": " + json_rational_text(x.b()) + "}";
}

}  // namespace detail

/// Throws ValidationError naming the first broken Drawing invariants.
inline void check_drawing_invariants(const Drawing& dr) {
    const ValidationReport rep = validate_invariants(dr);
    if (!rep.empty()) throw ValidationError("invalid drawing:\n" + rep.summary(dr));
}

enum class ParseMode { strict, lenient };

/// Parse the JSON drawing format. Strict mode also enforces the Drawing
/// invariants (unit edges, distinct points, no duplicate edges or loops).
inline Drawing parse_drawing(std::string_view text, ParseMode mode = ParseMode::strict) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    for (const char* key : {"d", "unit_sq", "vertices", "edges"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");

    Drawing dr;
    const Integer dz = detail::json_integer(doc.at("d"), "d");
    if (dz < 0 || dz > 1000000) throw ParseError("d out of range: " + dz.get_str());
    int d = static_cast<int>(dz.get_si());
    if (d >= 2 && !is_square_free(d)) throw ParseError("d = " + std::to_string(d) + " is not square-free");
    const int file_d = d;
    if (d == 1) d = 0;
    dr.d = d;
    dr.unit_sq = detail::json_quadext(doc.at("unit_sq"), file_d, "unit_sq");
    if (qe_sign(dr.unit_sq) <= 0) throw ParseError("unit_sq must be positive");

    const auto& verts = doc.at("vertices");
    if (!verts.is_array()) throw ParseError("vertices must be an array");
    dr.vertices.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const auto& v = verts[i];
        if (!v.is_object() || !v.contains("x") || !v.contains("y")) throw ParseError(where + ": expected {x, y}");
        dr.vertices.emplace_back(detail::json_quadext(v.at("x"), file_d, where + ".x"),
                                 detail::json_quadext(v.at("y"), file_d, where + ".y"));
    }

    const auto& edges = doc.at("edges");
    if (!edges.is_array()) throw ParseError("edges must be an array");
    dr.edges.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        const auto& e = edges[k];
        if (!e.is_array() || e.size() != 2) throw ParseError(where + ": expected [i, j]");
        std::size_t ends[2];
        for (int t = 0; t < 2; ++t) {
            const Integer z = detail::json_integer(e[t], where);
            if (z < 0 || z >= Integer(std::to_string(dr.n())))
                throw ParseError(where + ": vertex index " + z.get_str() + " out of range");
            ends[t] = static_cast<std::size_t>(z.get_ui());
        }
        dr.edges.push_back(make_edge(ends[0], ends[1]));
    }
    if (mode == ParseMode::strict) check_drawing_invariants(dr);
    return dr;
}

/// Canonical text: stable field order, one vertex or edge per line, edges
/// sorted, rationals reduced, integers beyond 64 bits quoted.
inline std::string serialize_drawing(const Drawing& dr) {
    std::vector<Edge> edges;
    edges.reserve(dr.e());
    for (const Edge& e : dr.edges) edges.push_back(make_edge(e.u, e.v));
    std::sort(edges.begin(), edges.end());

    std::string out;
    out += "{\n";
    out += "\"d\": " + std::to_string(dr.d) + ",\n";
    out += "\"unit_sq\": " + detail::json_quadext_text(dr.unit_sq) + ",\n";
    if (dr.vertices.empty()) {
        out += "\"vertices\": [],\n";
    } else {
        out += "\"vertices\": [\n";
        for (std::size_t i = 0; i < dr.n(); ++i) {
            out += "  {\"x\": " + detail::json_quadext_text(dr.p(i).x()) + ", \"y\": " +
                   detail::json_quadext_text(dr.p(i).y()) + "}";
            out += i + 1 < dr.n() ? ",\n" : "\n";
        }
        out += "],\n";
    }
    if (edges.empty()) {
        out += "\"edges\": []\n";
    } else {
        out += "\"edges\": [\n";
        for (std::size_t k = 0; k < edges.size(); ++k) {
            out += "  [" + std::to_string(edges[k].u) + ", " + std::to_string(edges[k].v) + "]";
            out += k + 1 < edges.size() ? ",\n" : "\n";
        }
        out += "]\n";
    }
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Builders used by generators and tests.

/// Adds the edge (i, j) when the points are at squared distance unit_sq.
inline bool add_edge_if_unit(Drawing& dr, std::size_t i, std::size_t j) {
    if (i == j) return false;
    if (!(sq_dist(dr.p(i), dr.p(j)) == dr.unit_sq)) return false;
    dr.edges.push_back(make_edge(i, j));
    return true;
}

/// Drawing on the given points with every unit pair as an edge.
inline Drawing complete_unit_graph(std::vector<Point> points, QuadExt unit_sq) {
    Drawing dr;
    dr.d = unit_sq.d();
    dr.unit_sq = std::move(unit_sq);
    dr.vertices = std::move(points);
    const double len = dr.unit_length_hint();
    std::vector<Box> boxes;
    boxes.reserve(dr.n());
    for (const Point& p : dr.vertices) {
        // Grow each point box by half a unit so unit pairs have meeting boxes.
        const double h = len * 0.5 * (1 + 1e-9) + 1e-12;
        boxes.push_back({p.ix().lo - h, p.ix().hi + h, p.iy().lo - h, p.iy().hi + h});
    }
    for (const auto& [i, j] : overlapping_pairs(boxes, len)) add_edge_if_unit(dr, i, j);
    dr.sort_edges();
    return dr;
}

// ---------------------------------------------------------------------------
// CSV helpers: header row, comma separator, LF line endings.

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    template <class... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((os_ << (first ? "" : ",") << fields, first = false), ...);
        os_ << '\n';
    }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) os_ << (i ? "," : "") << fields[i];
        os_ << '\n';
    }

private:
    std::ostream& os_;
};

}  // namespace udg
