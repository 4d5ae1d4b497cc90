#include "edmcp/scalar.hpp"

#include <cmath>
#include <ostream>

namespace edmcp {

RadicandMismatch::RadicandMismatch(long a, long b)
    : std::logic_error("cannot mix sqrt(" + std::to_string(a) + ") and sqrt(" + std::to_string(b) +
                       ") in one computation") {}

QuadSurd QuadSurd::surd(Rational rat, Rational coef, long rad) {
    if (rad < 0) throw std::invalid_argument("negative radicand");
    QuadSurd x;
    auto [root, free] = square_free_split(Integer(rad));
    x.rat_ = std::move(rat);
    if (free == 0 || free == 1) {
        x.rat_ += coef * Rational(root);
        x.rad_ = 0;
        return x;
    }
    if (!free.fits_slong_p()) throw std::invalid_argument("radicand too large");
    x.coef_ = coef * Rational(root);
    x.rad_ = free.get_si();
    return x;
}

QuadSurd QuadSurd::sqrt(const Rational& value) {
    if (sgn(value) < 0) throw std::domain_error("square root of a negative rational");
    // sqrt(p/q) = sqrt(p*q) / q
    Integer pq = value.get_num() * value.get_den();
    auto [root, free] = square_free_split(pq);
    if (!free.fits_slong_p()) throw std::invalid_argument("radicand too large");
    Rational coef(root, value.get_den());
    coef.canonicalize();
    return surd(0, coef, free.get_si());
}

const Rational& QuadSurd::as_rational() const {
    if (!is_rational()) throw std::domain_error("value " + to_string(*this) + " is irrational");
    return rat_;
}

int surd_sign(const Rational& a, const Rational& b, long s) {
    int sa = sgn(a);
    int sb = sgn(b);
    if (sb == 0 || s == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b| sqrt(s)
    int cmp = ::cmp(Rational(a * a), Rational(b * b * s));
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

int QuadSurd::sign() const { return surd_sign(rat_, coef_, rad_); }

double QuadSurd::to_double() const {
    double v = rat_.get_d();
    if (!is_rational()) v += coef_.get_d() * std::sqrt(static_cast<double>(rad_));
    return v;
}

QuadSurd QuadSurd::conjugate() const {
    QuadSurd x = *this;
    x.coef_ = -x.coef_;
    return x;
}

long QuadSurd::merged_radicand(const QuadSurd& a, const QuadSurd& b) {
    if (a.rad_ > 1 && b.rad_ > 1 && a.rad_ != b.rad_) throw RadicandMismatch(a.rad_, b.rad_);
    return a.rad_ > 1 ? a.rad_ : b.rad_;
}

QuadSurd QuadSurd::operator-() const {
    QuadSurd x = *this;
    x.rat_ = -x.rat_;
    x.coef_ = -x.coef_;
    return x;
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
    rad_ = merged_radicand(*this, o);
    rat_ += o.rat_;
    if (sgn(o.coef_) != 0) coef_ += o.coef_;
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
    rad_ = merged_radicand(*this, o);
    rat_ -= o.rat_;
    if (sgn(o.coef_) != 0) coef_ -= o.coef_;
    return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
    long s = merged_radicand(*this, o);
    if (is_rational() && o.is_rational()) {
        rat_ *= o.rat_;
    } else {
        Rational r = rat_ * o.rat_ + coef_ * o.coef_ * s;
        Rational c = rat_ * o.coef_ + coef_ * o.rat_;
        rat_ = std::move(r);
        coef_ = std::move(c);
    }
    rad_ = s;
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    long s = merged_radicand(*this, o);
    if (o.is_rational()) {
        rat_ /= o.rat_;
        if (sgn(coef_) != 0) coef_ /= o.rat_;
        rad_ = s;
        return *this;
    }
    // x / (c + d sqrt s) = x (c - d sqrt s) / (c^2 - d^2 s)
    Rational norm = o.rat_ * o.rat_ - o.coef_ * o.coef_ * s;
    *this *= o.conjugate();
    rat_ /= norm;
    coef_ /= norm;
    return *this;
}

bool operator==(const QuadSurd& a, const QuadSurd& b) {
    if (a.rat_ != b.rat_ || a.coef_ != b.coef_) return false;
    return sgn(a.coef_) == 0 || a.rad_ == b.rad_;
}

std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string to_string(const QuadSurd& x) {
    if (x.is_rational()) return to_string(x.rat());
    return to_string(x.rat()) + " + " + to_string(x.coef()) + "*sqrt(" + std::to_string(x.radicand()) +
           ")";
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << to_string(x); }

}  // namespace edmcp
