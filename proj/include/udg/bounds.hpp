#pragma once

// Closed-form edge bounds for unit distance graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "udg/exactfield.hpp"
#include "udg/numtheory.hpp"

namespace udg {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

/// floor(3n - sqrt(12n - 3)), the maximum edge count of a matchstick graph.
/// Integer arithmetic only: with s = isqrt(12n - 3) the floor is 3n - s when
/// 12n - 3 is a perfect square and 3n - s - 1 otherwise.
inline std::int64_t harborth_u0(std::int64_t n) {
    if (n < 1) throw PreconditionError("harborth_u0 needs n >= 1");
    const std::int64_t x = 12 * n - 3;
    const std::int64_t s = isqrt(x);
    return 3 * n - s - (s * s == x ? 0 : 1);
}

/// A real bound: exact rational when it is one, otherwise a 50-digit decimal.
struct BoundValue {
    std::optional<Rational> exact;
    Decimal50 approx;

    std::string to_string() const {
        if (exact) return exact->get_str();
        return approx.str(50);
    }
};

/// Integer fourth root if v is a perfect fourth power.
inline std::optional<std::int64_t> exact_fourth_root(std::int64_t v) {
    const std::int64_t s = isqrt(v);
    if (s * s != v) return std::nullopt;
    const std::int64_t t = isqrt(s);
    if (t * t != s) return std::nullopt;
    return t;
}

/// 3n - n^(1/4) / 15, the upper bound on 1-planar unit distance graphs.
inline BoundValue one_planar_upper(std::int64_t n) {
    BoundValue b;
    if (auto t = exact_fourth_root(n)) {
        b.exact = Rational(3 * n) - make_rational(*t, 15);
        b.approx = Decimal50(3 * n) - Decimal50(*t) / 15;
        return b;
    }
    b.approx = Decimal50(3 * n) - boost::multiprecision::pow(Decimal50(n), Decimal50(1) / 4) / 15;
    return b;
}

/// u0(n) <= 3n - n^(1/4)/15, decided exactly as (15 (3n - u0))^4 >= n.
inline bool u0_below_one_planar_upper(std::int64_t n) {
    const Integer gap = Integer(std::to_string(15 * (3 * n - harborth_u0(n))));
    if (gap < 0) return false;
    Integer p4 = gap * gap;
    p4 *= p4;
    return p4 >= Integer(std::to_string(n));
}

/// c * k^(1/4) * n for a caller-supplied constant c.
inline Decimal50 kplanar_upper(const Decimal50& c, std::int64_t k, std::int64_t n) {
    return c * boost::multiprecision::pow(Decimal50(k), Decimal50(1) / 4) * Decimal50(n);
}

inline std::int64_t quasiplanar_upper(std::int64_t k, std::int64_t n) { return 4 * k * n; }
inline std::int64_t quasiplanar_lower_shape(std::int64_t k, std::int64_t n) { return (k - 1) * n; }

struct BoundRow {
    std::int64_t n = 0;
    std::optional<std::int64_t> k;
    std::int64_t u0 = 0;
    BoundValue t1_upper;
    std::optional<Decimal50> t3_upper;
    std::optional<std::int64_t> t5_upper;
    std::optional<std::int64_t> t5_lower_shape;
    std::optional<std::int64_t> measured;
};

inline std::vector<BoundRow> bound_table(std::int64_t n_from, std::int64_t n_to, std::optional<std::int64_t> k = {},
                                         std::optional<Decimal50> c = {}) {
    if (n_from < 1) throw PreconditionError("bound_table needs n >= 1");
    std::vector<BoundRow> rows;
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        BoundRow row;
        row.n = n;
        row.k = k;
        row.u0 = harborth_u0(n);
        row.t1_upper = one_planar_upper(n);
        if (k) {
            if (c) row.t3_upper = kplanar_upper(*c, *k, n);
            row.t5_upper = quasiplanar_upper(*k, n);
            row.t5_lower_shape = quasiplanar_lower_shape(*k, n);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string decimal_text(const Decimal50& v) { return v.str(50); }

}  // namespace udg
