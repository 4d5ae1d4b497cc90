#include "edmcp/edm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace edmcp {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

PointSet::PointSet(std::vector<Rational> points) : points_(std::move(points)) {
    std::vector<Rational> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("point set contains duplicate points");
}

SymMatrix build_An(int n) {
    require(n >= 2, "A_n requires n >= 2");
    return SymMatrix::from_function(static_cast<std::size_t>(n), [](std::size_t i, std::size_t j) {
        long d = static_cast<long>(j) - static_cast<long>(i);
        return Scalar(d * d);
    });
}

SymMatrix build_edm(const PointSet& points) {
    const auto& p = points.points();
    return SymMatrix::from_function(p.size(), [&](std::size_t i, std::size_t j) {
        Rational d = p[j] - p[i];
        return Scalar(Rational(d * d));
    });
}

SpectrumTriple spectrum(int n) {
    require(n >= 3, "closed-form spectrum requires n >= 3");
    const Rational nn(n);
    const Rational n2 = nn * nn;
    const Rational center = nn * (n2 - 1) / 12;
    const Rational disc = n2 * (n2 - 1) * (3 * n2 - 7) / 240;
    const Scalar root = Scalar::sqrt(disc);
    SpectrumTriple s;
    s.lambda1 = Scalar(center) + root;
    s.lambda2 = Scalar(center) - root;
    s.lambda3 = -nn * (n2 - 1) / 6;
    s.nullity = static_cast<std::size_t>(n - 3);
    return s;
}

Vector w_vector(int n) {
    require(n >= 1, "w(n) requires n >= 1");
    Vector w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = Scalar(long(n + 1 - 2 * i));
    return w;
}

std::vector<Vector> null_basis(int n) {
    std::vector<Vector> out;
    for (int j = 0; j + 3 < n; ++j) {
        Vector v(static_cast<std::size_t>(n));
        auto at = [&](int k) -> Scalar& { return v[static_cast<std::size_t>(k)]; };
        at(j) = 1;
        at(j + 1) = -3;
        at(j + 2) = 3;
        at(j + 3) = -1;
        out.push_back(std::move(v));
    }
    return out;
}

SymMatrix reversal(int n) {
    require(n >= 1, "K_n requires n >= 1");
    SymMatrix k(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < k.dim(); ++i) k.set(i, k.dim() - 1 - i, 1);
    return k;
}

Vector reversed(const Vector& v) { return Vector(v.rbegin(), v.rend()); }

Rational f_min(int n) {
    Rational nn(n);
    return nn * (nn * nn - 1) / 6;
}

Rational g_diag(int n) {
    Rational nn(n);
    return nn * (nn - 1) * (2 * nn - 1) / 6;
}

std::int64_t jordan_totient2_int(std::int64_t k) {
    require(k >= 1, "J_2(k) requires k >= 1");
    std::int64_t result = k * k;
    std::int64_t rest = k;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result = result / (p * p) * (p * p - 1);
    }
    if (rest > 1) result = result / (rest * rest) * (rest * rest - 1);
    return result;
}

Rational jordan_totient2(std::int64_t k) { return Rational(static_cast<long>(jordan_totient2_int(k))); }

Rational g_jordan(int n) {
    require(n >= 1, "g_J(n) requires n >= 1");
    Integer sum = 0;
    for (int k = 1; k < n; ++k) sum += static_cast<long>(jordan_totient2_int(k));
    return Rational(sum);
}

SymMatrix build_Bn(int n) { return build_An(n).plus_identity(Scalar(f_min(n))); }

}  // namespace edmcp
