#pragma once

#include "edmcp/rational.hpp"

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace edmcp {

/// Raised when two values from different quadratic fields meet in one operation.
class RadicandMismatch : public std::logic_error {
public:
    RadicandMismatch(long a, long b);
};

/*
 * Element rat + coef * sqrt(rad) of the field Q(sqrt(rad)).
 *
 * rad is square-free; rad in {0, 1} means the value is rational and coef is
 * folded into rat. A value remembers the radicand of the context it was
 * computed in even when coef happens to be zero, so that accidentally
 * mixing Q(sqrt 15) and Q(sqrt 35) is reported instead of silently accepted.
 *
 * Signs are decided exactly: for a + b*sqrt(s) with a, b of opposite signs
 * the answer follows from comparing a^2 with b^2 * s.
 */
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
    QuadSurd(Rational v) : rat_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    /// rat + coef*sqrt(rad). Non-square-free rad is normalised (sqrt(12) -> 2 sqrt(3)).
    static QuadSurd surd(Rational rat, Rational coef, long rad);

    /// Exact square root of a nonnegative rational, e.g. sqrt(7/5) = (1/5) sqrt(35).
    static QuadSurd sqrt(const Rational& value);

    const Rational& rat() const { return rat_; }
    const Rational& coef() const { return coef_; }
    long radicand() const { return rad_; }
    bool is_rational() const { return sgn(coef_) == 0; }

    /// Throws std::domain_error when the value is irrational.
    const Rational& as_rational() const;

    int sign() const;
    bool is_zero() const { return sgn(rat_) == 0 && sgn(coef_) == 0; }
    double to_double() const;

    QuadSurd conjugate() const;

    QuadSurd operator-() const;
    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    QuadSurd& operator/=(const QuadSurd& o);

    friend QuadSurd operator+(QuadSurd a, const QuadSurd& b) { return a += b; }
    friend QuadSurd operator-(QuadSurd a, const QuadSurd& b) { return a -= b; }
    friend QuadSurd operator*(QuadSurd a, const QuadSurd& b) { return a *= b; }
    friend QuadSurd operator/(QuadSurd a, const QuadSurd& b) { return a /= b; }

    friend bool operator==(const QuadSurd& a, const QuadSurd& b);
    friend std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b);

private:
    static long merged_radicand(const QuadSurd& a, const QuadSurd& b);

    Rational rat_{0};
    Rational coef_{0};
    long rad_ = 0;
};

using Scalar = QuadSurd;

/// Sign of an arbitrary a + b sqrt(s) without building a QuadSurd.
int surd_sign(const Rational& a, const Rational& b, long s);

std::string to_string(const QuadSurd& x);
std::ostream& operator<<(std::ostream& os, const QuadSurd& x);

}  // namespace edmcp
