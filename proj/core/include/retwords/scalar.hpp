#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "retwords/errors.hpp"

namespace retwords {

/**
 * Scalar: an exact element a + b*sqrt(d) of a real quadratic field.
 *
 * a and b are arbitrary-precision rationals, d a square-free nonnegative
 * integer. Every interval endpoint, orbit point and comparison in the
 * library is computed in this type; no decision ever goes through floating
 * point. Canonical form invariants:
 *   - a, b reduced, denominators positive (mpq canonical form)
 *   - d == 0 exactly when b == 0 (pure rationals carry no radicand)
 *   - d square-free, d >= 2 when nonzero
 *
 * Two scalars interoperate when they share d or either is pure rational.
 * Mixing distinct radicands throws Errc::radicand_mismatch.
 *
 * Scalars are immutable values; safe to share between threads.
 */
class Scalar {
public:
    Scalar() : a_(0), b_(0), d_(0) {}
    Scalar(long n) : a_(n), b_(0), d_(0) {}  // NOLINT: implicit by design
    explicit Scalar(const mpq_class& a) : a_(a), b_(0), d_(0) {}
    Scalar(mpq_class a, mpq_class b, unsigned long d);

    static Scalar rational(long num, long den);
    static Scalar sqrt_of(unsigned long d) { return Scalar(mpq_class(0), mpq_class(1), d); }

    // Parses the text form emitted by str(): "a", "b sqrt(d)", "a + b sqrt(d)",
    // "a - b sqrt(d)"; rationals as "n" or "n/m".
    static Scalar parse(std::string_view text);

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_part() const { return b_; }
    unsigned long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    /// Exact sign in {-1, 0, +1}, decided without floating point.
    int sign() const;

    /// Greatest integer m with m <= value.
    mpz_class floor_int() const;

    /// Fractional part, in [0, 1): value - floor(value).
    Scalar mod1() const;

    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }
    std::strong_ordering operator<=>(const Scalar& o) const {
        int s = (*this - o).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;
    double approx() const;  // display only, never used for decisions

private:
    void canonicalize();
    static unsigned long merged_radicand(const Scalar& x, const Scalar& y);

    mpq_class a_;
    mpq_class b_;
    unsigned long d_;
};

inline Scalar midpoint(const Scalar& x, const Scalar& y) {
    return (x + y) * Scalar::rational(1, 2);
}

}  // namespace retwords
