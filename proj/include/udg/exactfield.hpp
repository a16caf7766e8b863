#pragma once

// Exact arithmetic in Q[sqrt d] for small square-free d.
//
// Every coordinate and squared length of a drawing is a QuadExt. Values are
// canonical after every operation (reduced rationals, b == 0 when d == 0), so
// equality of real numbers is equality of representations.

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "udg/error.hpp"

namespace udg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_square_free(std::int64_t d) {
    if (d < 1) return false;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Interval enclosures used as a floating-point filter in front of the exact
// predicates. A degenerate interval (lo == hi) is exact; operations keep it
// degenerate only when an error-free transformation proves the double result
// has no rounding error.

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval point(double v) { return {v, v}; }
    static Interval whole() {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }

    bool is_point() const { return lo == hi; }

    /// Sign of every real in the interval, or nullopt when it straddles 0.
    std::optional<int> sign() const {
        if (lo > 0.0) return 1;
        if (hi < 0.0) return -1;
        if (lo == 0.0 && hi == 0.0) return 0;
        return std::nullopt;
    }

    double mid() const { return lo == hi ? lo : lo * 0.5 + hi * 0.5; }
};

namespace detail {

inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

// Results this small may have lost bits to gradual underflow, so the
// error-free checks below are not trusted there.
constexpr double kTinyMagnitude = 1e-290;

inline Interval widen(double v) {
    if (!std::isfinite(v)) return Interval::whole();
    return {down(v), up(v)};
}

}  // namespace detail

inline Interval operator-(const Interval& x) { return {-x.hi, -x.lo}; }

inline Interval operator+(const Interval& x, const Interval& y) {
    if (x.is_point() && y.is_point()) {
        const double s = x.lo + y.lo;
        if (!std::isfinite(s)) return Interval::whole();
        const double bb = s - x.lo;
        const double err = (x.lo - (s - bb)) + (y.lo - bb);
        if (err == 0.0 && (s == 0.0 || std::fabs(s) > detail::kTinyMagnitude)) return Interval::point(s);
        return detail::widen(s);
    }
    const double lo = x.lo + y.lo;
    const double hi = x.hi + y.hi;
    if (std::isnan(lo) || std::isnan(hi)) return Interval::whole();
    return {detail::down(lo), detail::up(hi)};
}

inline Interval operator-(const Interval& x, const Interval& y) { return x + (-y); }

inline Interval operator*(const Interval& x, const Interval& y) {
    if (x.is_point() && y.is_point()) {
        const double p = x.lo * y.lo;
        if (!std::isfinite(p)) return Interval::whole();
        if (x.lo == 0.0 || y.lo == 0.0) return Interval::point(0.0);
        const double err = std::fma(x.lo, y.lo, -p);
        if (err == 0.0 && std::fabs(p) > detail::kTinyMagnitude) return Interval::point(p);
        if (p == 0.0) {
            constexpr double tiny = std::numeric_limits<double>::denorm_min();
            return {-tiny, tiny};
        }
        return detail::widen(p);
    }
    const double a = x.lo * y.lo;
    const double b = x.lo * y.hi;
    const double c = x.hi * y.lo;
    const double d = x.hi * y.hi;
    if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d)) return Interval::whole();
    const double lo = std::min(std::min(a, b), std::min(c, d));
    const double hi = std::max(std::max(a, b), std::max(c, d));
    constexpr double tiny = std::numeric_limits<double>::denorm_min();
    return {detail::down(lo) - tiny, detail::up(hi) + tiny};
}

inline Interval enclose(const Rational& q) {
    const double v = q.get_d();
    if (!std::isfinite(v)) return Interval::whole();
    if (v == 0.0) {
        if (q == 0) return Interval::point(0.0);
        constexpr double tiny = std::numeric_limits<double>::min();
        return {-tiny, tiny};
    }
    if (std::fabs(v) > detail::kTinyMagnitude && Rational(v) == q) return Interval::point(v);
    // mpq_get_d truncates, so the true value is within one ulp of v.
    return detail::widen(v);
}

inline Interval enclose_sqrt(std::int64_t d) {
    const double s = std::sqrt(static_cast<double>(d));
    if (std::fma(s, s, -static_cast<double>(d)) == 0.0 && static_cast<std::int64_t>(s) * static_cast<std::int64_t>(s) == d)
        return Interval::point(s);
    return detail::widen(s);
}

// ---------------------------------------------------------------------------

/// a + b*sqrt(d) with rational a, b. d is 0 (plain rationals) or square-free >= 2.
class QuadExt {
public:
    QuadExt() = default;

    /// Rational constant living in Q[sqrt d].
    explicit QuadExt(Rational a, int d = 0) : a_(std::move(a)), d_(d) { check_d(d); }

    QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d < 0) throw PreconditionError("negative discriminant " + std::to_string(d));
        if (d == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
        check_d(d_);
        if (d_ == 0 && b_ != 0) throw PreconditionError("irrational part given with d = 0");
    }

    static QuadExt from_int(long v, int d = 0) { return QuadExt(Rational(v), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Unchecked{}); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        const int d = common_d(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d, Unchecked{});
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        const int d = common_d(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d, Unchecked{});
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        const int d = common_d(x, y);
        if (x.b_ == 0 && y.b_ == 0) return QuadExt(Rational(x.a_ * y.a_), Rational(0), d, Unchecked{});
        Rational a = x.a_ * y.a_ + x.b_ * y.b_ * d;
        Rational b = x.a_ * y.b_ + x.b_ * y.a_;
        return QuadExt(std::move(a), std::move(b), d, Unchecked{});
    }
    /// Division by a nonzero value, via the conjugate.
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        const int d = common_d(x, y);
        if (y.is_zero()) throw PreconditionError("QuadExt division by zero");
        const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        const QuadExt conj(y.a_ / norm, -y.b_ / norm, d, Unchecked{});
        return x * conj;
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    /// Representation equality; canonical forms make it real-number equality.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Lexicographic order on (d, a, b). A key order for containers, not the
    /// order of the reals; use compare() for that.
    friend std::strong_ordering key_order(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_) return x.d_ <=> y.d_;
        if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Interval enclosure() const {
        const Interval ia = enclose(a_);
        if (b_ == 0) return ia;
        return ia + enclose(b_) * enclose_sqrt(d_);
    }

    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_)); }

    std::string to_string() const {
        if (b_ == 0) return a_.get_str();
        return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + Rational(abs(b_)).get_str() + "*sqrt(" +
               std::to_string(d_) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

private:
    struct Unchecked {};
    QuadExt(Rational a, Rational b, int d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d_ == 0) b_ = 0;
    }

    static void check_d(int d) {
        if (d < 0) throw PreconditionError("negative discriminant " + std::to_string(d));
        if (d >= 2 && !is_square_free(d))
            throw PreconditionError("discriminant " + std::to_string(d) + " is not square-free");
    }

    static int common_d(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_)
            throw DiscriminantMismatch("QuadExt discriminants differ: " + std::to_string(x.d_) + " vs " +
                                       std::to_string(y.d_));
        return x.d_;
    }

    Rational a_;
    Rational b_;
    int d_ = 0;
};

/// Exact sign of a + b*sqrt(d), by comparing a^2 with b^2*d.
inline int qe_sign(const QuadExt& x) {
    const int sa = sgn(x.a());
    const int sb = sgn(x.b());
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rational lhs = x.a() * x.a();
    const Rational rhs = x.b() * x.b() * x.d();
    const int c = cmp(lhs, rhs);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

/// Sign of x - y as a real number.
inline int compare(const QuadExt& x, const QuadExt& y) { return qe_sign(x - y); }

enum class ArithOp { add, sub, mul, neg };

inline QuadExt qe_arith(ArithOp op, const QuadExt& x, const QuadExt& y) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::neg:
            if (x.d() != y.d()) throw DiscriminantMismatch("QuadExt discriminants differ");
            return -x;
    }
    throw PreconditionError("unknown arithmetic op");
}

}  // namespace udg
