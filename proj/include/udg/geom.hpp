#pragma once

// Exact predicates on points of (Q[sqrt d])^2.
//
// Each predicate first evaluates an interval enclosure; the exact QuadExt
// path runs only when the enclosure straddles zero. No intersection point is
// ever constructed.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "udg/exactfield.hpp"

namespace udg {

class Point {
public:
    Point() = default;
    Point(QuadExt x, QuadExt y) : x_(std::move(x)), y_(std::move(y)) {
        if (x_.d() != y_.d()) throw DiscriminantMismatch("point coordinates use different discriminants");
        ix_ = x_.enclosure();
        iy_ = y_.enclosure();
    }

    const QuadExt& x() const { return x_; }
    const QuadExt& y() const { return y_; }
    int d() const { return x_.d(); }
    const Interval& ix() const { return ix_; }
    const Interval& iy() const { return iy_; }

    friend bool operator==(const Point& p, const Point& q) {
        if (p.ix_.hi < q.ix_.lo || q.ix_.hi < p.ix_.lo || p.iy_.hi < q.iy_.lo || q.iy_.hi < p.iy_.lo) return false;
        return p.x_ == q.x_ && p.y_ == q.y_;
    }

    /// Key order (lexicographic on canonical coordinates) for sorting and maps.
    friend std::strong_ordering key_order(const Point& p, const Point& q) {
        if (auto c = key_order(p.x_, q.x_); c != 0) return c;
        return key_order(p.y_, q.y_);
    }

    Point operator+(const Point& o) const { return {x_ + o.x_, y_ + o.y_}; }
    Point operator-(const Point& o) const { return {x_ - o.x_, y_ - o.y_}; }

private:
    QuadExt x_;
    QuadExt y_;
    Interval ix_;
    Interval iy_;
};

/// Point with rational coordinates in Q[sqrt d].
inline Point rational_point(const Rational& x, const Rational& y, int d = 0) {
    return {QuadExt(x, d), QuadExt(y, d)};
}

// ---------------------------------------------------------------------------

/// Sign of the signed area of (p, q, r); +1 is counter-clockwise.
inline int orient(const Point& p, const Point& q, const Point& r) {
    const Interval ux = q.ix() - p.ix();
    const Interval uy = q.iy() - p.iy();
    const Interval vx = r.ix() - p.ix();
    const Interval vy = r.iy() - p.iy();
    if (auto s = (ux * vy - uy * vx).sign()) return *s;
    return qe_sign((q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x()));
}

/// Sign of the dot product (q - p) . (r - s).
inline int dot_sign(const Point& p, const Point& q, const Point& s, const Point& r) {
    const Interval v = (q.ix() - p.ix()) * (r.ix() - s.ix()) + (q.iy() - p.iy()) * (r.iy() - s.iy());
    if (auto sg = v.sign()) return *sg;
    return qe_sign((q.x() - p.x()) * (r.x() - s.x()) + (q.y() - p.y()) * (r.y() - s.y()));
}

/// Sign of the cross product (q - p) x (r - s).
inline int cross_sign(const Point& p, const Point& q, const Point& s, const Point& r) {
    const Interval v = (q.ix() - p.ix()) * (r.iy() - s.iy()) - (q.iy() - p.iy()) * (r.ix() - s.ix());
    if (auto sg = v.sign()) return *sg;
    return qe_sign((q.x() - p.x()) * (r.y() - s.y()) - (q.y() - p.y()) * (r.x() - s.x()));
}

inline QuadExt sq_dist(const Point& p, const Point& q) {
    const QuadExt dx = p.x() - q.x();
    const QuadExt dy = p.y() - q.y();
    return dx * dx + dy * dy;
}

/// For r collinear with segment ab: is r strictly between a and b?
inline bool strictly_between(const Point& a, const Point& b, const Point& r) {
    return dot_sign(r, a, r, b) < 0;
}

/// For r collinear with segment ab: does r lie on the closed segment?
inline bool on_closed_segment(const Point& a, const Point& b, const Point& r) {
    return dot_sign(r, a, r, b) <= 0;
}

/// r lies in the open interior of segment ab.
inline bool in_segment_interior(const Point& a, const Point& b, const Point& r) {
    if (r == a || r == b) return false;
    return orient(a, b, r) == 0 && strictly_between(a, b, r);
}

// ---------------------------------------------------------------------------

enum class SegmentRelation { disjoint, shared_endpoint, proper_cross, touch, overlap };

inline std::string_view to_string(SegmentRelation r) {
    switch (r) {
        case SegmentRelation::disjoint: return "disjoint";
        case SegmentRelation::shared_endpoint: return "shared_endpoint";
        case SegmentRelation::proper_cross: return "proper_cross";
        case SegmentRelation::touch: return "touch";
        case SegmentRelation::overlap: return "overlap";
    }
    return "?";
}

namespace detail {

inline bool boxes_disjoint(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const double pxl = std::min(p1.ix().lo, p2.ix().lo), pxh = std::max(p1.ix().hi, p2.ix().hi);
    const double pyl = std::min(p1.iy().lo, p2.iy().lo), pyh = std::max(p1.iy().hi, p2.iy().hi);
    const double qxl = std::min(q1.ix().lo, q2.ix().lo), qxh = std::max(q1.ix().hi, q2.ix().hi);
    const double qyl = std::min(q1.iy().lo, q2.iy().lo), qyh = std::max(q1.iy().hi, q2.iy().hi);
    return pxh < qxl || qxh < pxl || pyh < qyl || qyh < pyl;
}

}  // namespace detail

/// Classify the closed segments p1p2 and q1q2 from orientation signs only.
inline SegmentRelation segment_relation(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    if (p1 == p2 || q1 == q2) throw PreconditionError("degenerate segment");
    if (detail::boxes_disjoint(p1, p2, q1, q2)) return SegmentRelation::disjoint;

    const bool same_set = (p1 == q1 && p2 == q2) || (p1 == q2 && p2 == q1);
    if (same_set) return SegmentRelation::overlap;

    // Shared endpoint: s is common, a and b are the far ends.
    auto shared = [](const Point& s, const Point& a, const Point& b) {
        if (orient(s, a, b) == 0 && dot_sign(s, a, s, b) > 0) return SegmentRelation::overlap;
        return SegmentRelation::shared_endpoint;
    };
    if (p1 == q1) return shared(p1, p2, q2);
    if (p1 == q2) return shared(p1, p2, q1);
    if (p2 == q1) return shared(p2, p1, q2);
    if (p2 == q2) return shared(p2, p1, q1);

    const int o1 = orient(p1, p2, q1);
    const int o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1);
    const int o4 = orient(q1, q2, p2);

    if (o1 == 0 && o2 == 0) {
        // Collinear: positive-length overlap iff some endpoint is strictly inside the other.
        if (strictly_between(p1, p2, q1) || strictly_between(p1, p2, q2) || strictly_between(q1, q2, p1) ||
            strictly_between(q1, q2, p2))
            return SegmentRelation::overlap;
        return SegmentRelation::disjoint;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::proper_cross;

    if ((o1 == 0 && on_closed_segment(p1, p2, q1)) || (o2 == 0 && on_closed_segment(p1, p2, q2)) ||
        (o3 == 0 && on_closed_segment(q1, q2, p1)) || (o4 == 0 && on_closed_segment(q1, q2, p2)))
        return SegmentRelation::touch;
    return SegmentRelation::disjoint;
}

// ---------------------------------------------------------------------------

/// Undirected direction of a segment: parallel segments compare equal.
struct Direction {
    bool vertical = false;
    QuadExt slope;  // dy/dx; zero when vertical

    bool horizontal() const { return !vertical && slope.is_zero(); }
    /// -1, 0 or +1; vertical directions report 0.
    int slope_sign() const { return vertical ? 0 : qe_sign(slope); }

    friend bool operator==(const Direction& a, const Direction& b) {
        return a.vertical == b.vertical && a.slope == b.slope;
    }
    friend bool operator<(const Direction& a, const Direction& b) {
        if (a.vertical != b.vertical) return !a.vertical;
        return key_order(a.slope, b.slope) < 0;
    }

    std::string to_string() const { return vertical ? std::string("vertical") : slope.to_string(); }
};

inline Direction direction_class(const Point& p, const Point& q) {
    if (p == q) throw PreconditionError("direction of a degenerate segment");
    const QuadExt dx = q.x() - p.x();
    const QuadExt dy = q.y() - p.y();
    if (dx.is_zero()) return {true, QuadExt(Rational(0), p.d())};
    return {false, dy / dx};
}

/// Strict order of the slopes of two non-vertical segments; each segment is
/// given by its endpoints in any order. Returns the sign of slope(a) - slope(b).
inline int compare_slopes(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    // slope(a) - slope(b) = (dya*dxb - dyb*dxa) / (dxa*dxb); make dxa, dxb > 0.
    const int sa = qe_sign(a2.x() - a1.x());
    const int sb = qe_sign(b2.x() - b1.x());
    if (sa == 0 || sb == 0) throw PreconditionError("slope of a vertical segment");
    const Point& al = sa > 0 ? a1 : a2;
    const Point& ar = sa > 0 ? a2 : a1;
    const Point& bl = sb > 0 ? b1 : b2;
    const Point& br = sb > 0 ? b2 : b1;
    // sign(dya*dxb - dyb*dxa) = -cross(a, b) with cross(a,b) = dxa*dyb - dya*dxb.
    return -cross_sign(al, ar, bl, br);
}

/// Counter-clockwise angular order of the rays center->p and center->q,
/// starting at the positive x-axis. Equal means the same ray.
inline std::strong_ordering angular_cmp(const Point& center, const Point& p, const Point& q) {
    if (p == center || q == center) throw PreconditionError("angular_cmp with a point at the center");
    // Upper half: angle in [0, pi).
    auto upper = [&](const Point& r) {
        const Interval iy = r.iy() - center.iy();
        int y;
        if (auto s = iy.sign()) y = *s;
        else y = qe_sign(r.y() - center.y());
        if (y != 0) return y > 0;
        const Interval ix = r.ix() - center.ix();
        int x;
        if (auto s = ix.sign()) x = *s;
        else x = qe_sign(r.x() - center.x());
        return x > 0;
    };
    const bool up = upper(p);
    const bool uq = upper(q);
    if (up != uq) return up ? std::strong_ordering::less : std::strong_ordering::greater;
    const int o = orient(center, p, q);
    if (o > 0) return std::strong_ordering::less;
    if (o < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace udg
