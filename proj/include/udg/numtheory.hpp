#pragma once

// Sums of two squares: the lattice vectors of squared length r that give the
// edge directions of the grid constructions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "udg/error.hpp"

namespace udg {

struct LatticeVector {
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    LatticeVector operator-() const { return {-dx, -dy}; }
    /// Representative of the undirected class: dx > 0, or dx == 0 and dy > 0.
    LatticeVector canonical() const { return (dx > 0 || (dx == 0 && dy > 0)) ? *this : -*this; }
};

struct TwoSquareData {
    std::int64_t r = 0;
    std::vector<LatticeVector> vectors;  // all (dx, dy) with dx^2 + dy^2 = r, sorted
    std::vector<LatticeVector> classes;  // canonical representatives, sorted
    bool all_primitive = true;           // gcd(|dx|, |dy|) == 1 for every vector
};

/// Floor of the square root, exact for all non-negative 64-bit inputs.
inline std::int64_t isqrt(std::int64_t v) {
    if (v < 0) throw PreconditionError("isqrt of a negative number");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && static_cast<__int128>(s) * s > v) --s;
    while (static_cast<__int128>(s + 1) * (s + 1) <= v) ++s;
    return s;
}

/// Exhaustive enumeration over 0 <= a <= sqrt(r).
inline TwoSquareData two_square_vectors(std::int64_t r) {
    if (r < 1) throw PreconditionError("two_square_vectors needs r >= 1");
    TwoSquareData out;
    out.r = r;
    std::set<LatticeVector> vs;
    const std::int64_t top = isqrt(r);
    for (std::int64_t a = 0; a <= top; ++a) {
        const std::int64_t rest = r - a * a;
        const std::int64_t b = isqrt(rest);
        if (b * b != rest) continue;
        for (std::int64_t sa : {a, -a})
            for (std::int64_t sb : {b, -b}) {
                vs.insert({sa, sb});
                vs.insert({sb, sa});
            }
    }
    out.vectors.assign(vs.begin(), vs.end());
    std::set<LatticeVector> cls;
    for (const auto& v : out.vectors) {
        cls.insert(v.canonical());
        if (std::gcd(v.dx, v.dy) != 1) out.all_primitive = false;
    }
    out.classes.assign(cls.begin(), cls.end());
    return out;
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Product of the first l primes congruent to 1 mod 4, l maximal with r < m.
/// l = 0 gives the empty product 1.
inline std::int64_t pick_r(std::int64_t m) {
    if (m < 1) throw PreconditionError("pick_r needs m >= 1");
    std::int64_t r = 1;
    for (std::int64_t p = 5;; p += 4) {
        if (!is_prime(p)) continue;
        if (static_cast<__int128>(r) * p >= m) return r;
        r *= p;
    }
}

}  // namespace udg
