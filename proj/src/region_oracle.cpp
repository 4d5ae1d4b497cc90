#include "edmcp/region_oracle.hpp"

#include "edmcp/constructors.hpp"

#include <algorithm>
#include <stdexcept>

namespace edmcp {

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

long floor_half(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

Rational sq(const Rational& r) { return r * r; }

}  // namespace

SContributions even_s_terms(int m_, int x_, int y_) {
    const long m = m_, x = x_, y = y_;
    SContributions s;
    const Rational lead = q(2, 2 * y - 1);
    if (x >= 1 && m + 3 - 2 * y <= x && x <= m + 1 - y)
        s.s1 = lead * sq(q(x + 2 * y - m - 2)) * q(3 * m - 3 * x - 2 * y + 3);
    if (x >= 1 && m + 2 - 2 * y <= x && x <= m - y)
        s.s2 = lead * sq(q(x + 2 * y - m - 1)) * q(3 * m - 3 * x - 2 * y + 2);
    if (std::max(m + 3 - 2 * y, 2 * y - m) <= x && x <= m) {
        const long fl = floor_half(m + x);
        s.s3 = lead * sq(q(x - fl + y - 1)) * q(2 * m - fl + y - x);
    }
    if (m + 3 - 2 * y <= x && x <= m) {
        const Rational h = q(m + x - 1, 2);
        s.s3_hat = lead * sq(Rational(q(x + y - 1) - h)) * Rational(q(2 * m + y - x) - h);
    }
    return s;
}

SContributions odd_s_terms(int m_, int x_, int y_) {
    const long m = m_, x = x_, y = y_;
    SContributions s;
    const Rational lead = q(1, y);
    if (m + 2 - 2 * y <= x && x <= m - y && x <= m - 2)
        s.s1 = lead * sq(q(x + 2 * y - m - 1)) * q(3 * m - 3 * x - 2 * y + 3);
    if (m + 1 - 2 * y <= x && x <= m - y && y >= 2 && x <= m - 2)
        s.s2 = lead * sq(q(x + 2 * y - m)) * q(3 * m - 3 * x - 2 * y + 2);
    const bool excluded = x == m && y == 1;
    if (std::max(m + 2 - 2 * y, 2 * y - m + 1) <= x && x <= m && !excluded) {
        const long fl = floor_half(m + x + 1);
        s.s3 = lead * sq(q(x - fl + y)) * q(2 * m - fl + y - x + 2);
    }
    if (m + 2 - 2 * y <= x && x <= m && !excluded) {
        const Rational h = q(m + x, 2);
        s.s3_hat = lead * sq(Rational(q(x + y) - h)) * Rational(q(2 * m + y - x + 2) - h);
    }
    return s;
}

BoundValue even_region_bound(int region, long u, long v) {
    switch (region) {
        case 1:
            return {q(3 + 55 * u + 129 * u * u + 81 * u * u * u + 2 * v + 52 * u * v + 66 * u * u * v + 12 * u * v * v),
                    q(4 * (3 + 4 * u + 2 * v))};
        case 2:
            return {q(320 + 1184 * u + 1558 * u * u + 855 * u * u * u + 162 * u * u * u * u),
                    q(4 * (3 + 2 * u) * (5 + 4 * u))};
        case 3: {
            const long p = 1261 + 1487 * u + 601 * u * u + 122 * u * u * u + 12 * u * u * u * u + 3629 * v +
                           3306 * u * v + 849 * u * u * v + 72 * u * u * u * v + 3565 * v * v + 2351 * u * v * v +
                           312 * u * u * v * v + 1371 * v * v * v + 516 * u * v * v * v + 162 * v * v * v * v;
            return {q(p), q(4 * (5 + 2 * u + 2 * v) * (7 + 2 * u + 4 * v))};
        }
        case 4:
            return {q(6 + 16 * u + 12 * u * u + 3 * u * u * u), q(2 * (3 + 2 * u))};
        default:
            throw std::invalid_argument("region must be 1..4");
    }
}

BoundValue odd_region_bound(int region, long u, long v) {
    switch (region) {
        case 1:
            return {q(24 + 220 * u + 258 * u * u + 81 * u * u * u + 8 * v + 104 * u * v + 66 * u * u * v + 12 * u * v * v),
                    q(8 * (3 + 2 * u + v))};
        case 2:
            return {q(305 + 691 * u + 435 * u * u + 81 * u * u * u), q(16 * (2 + u))};
        case 3: {
            const long p = -122 - 71 * u + 25 * u * u + 30 * u * u * u + 6 * u * u * u * u + 361 * v + 568 * u * v +
                           241 * u * u * v + 36 * u * u * u * v + 909 * v * v + 825 * u * v * v + 156 * u * u * v * v +
                           531 * v * v * v + 258 * u * v * v * v + 81 * v * v * v * v;
            return {q(p), q(8 * (2 + u + v) * (3 + u + 2 * v))};
        }
        case 4:
            return {q(68 + 116 * u + 52 * u * u + 7 * u * u * u), q(4 * (3 + u))};
        default:
            throw std::invalid_argument("region must be 1..4");
    }
}

RegionReport region_oracle(int m, Parity parity) {
    const bool odd = parity == Parity::odd;
    if (odd ? m < 2 : m < 1) throw std::invalid_argument("region oracle: m out of range");

    RegionReport report;
    report.m = m;
    report.parity = parity;
    auto fail = [&](int x, int y, std::string what) { report.failures.push_back({x, y, std::move(what)}); };

    const OptimalPieces pieces = odd ? optimal_odd(m) : optimal_even(m);
    const auto cblock = pieces.c_block();
    auto C = [&](int x, int y) -> Rational { return cblock[x - 1][y - 1].as_rational(); };
    auto terms = [&](int x, int y) { return odd ? odd_s_terms(m, x, y) : even_s_terms(m, x, y); };
    // Mirror image across the counter-diagonal: S'_{xy} = S_{m+1-y, m+1-x}.
    auto hat_mirror = [&](int x, int y) { return terms(m + 1 - y, m + 1 - x).s3_hat; };

    // S from the atoms of V alone.
    const std::size_t col0 = static_cast<std::size_t>(odd ? m + 1 : m);
    std::vector<std::vector<Rational>> s(m, std::vector<Rational>(m));
    for (const auto& atom : pieces.atoms_v)
        for (int x = 1; x <= m; ++x) {
            const Scalar& cx = atom.support[x - 1];
            if (cx.is_zero()) continue;
            for (int y = 1; y <= m; ++y) {
                const Scalar& cy = atom.support[col0 + y - 1];
                if (!cy.is_zero()) s[x - 1][y - 1] += (atom.weight * cx * cy).as_rational();
            }
        }

    for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y) {
            ++report.cells;
            const SContributions t = terms(x, y);
            if (s[x - 1][y - 1] != t.s1 + t.s2 + t.s3)
                fail(x, y, "S = " + to_string(s[x - 1][y - 1]) + " but S_I + S_II + S_III = " +
                               to_string(Rational(t.s1 + t.s2 + t.s3)));
            if (t.s3 > t.s3_hat) fail(x, y, "S_III exceeds its majorant");
            if (sgn(C(x, y)) < 0) fail(x, y, "C is negative: " + to_string(C(x, y)));
            if (C(x, y) != C(m + 1 - y, m + 1 - x)) fail(x, y, "C is not symmetric about the counter-diagonal");
        }

    for (int x = 1; x <= m; ++x)
        for (int y = 1; y + x <= m + 1; ++y) {
            const SContributions t = terms(x, y);
            const Rational h = odd ? q((m + 1 + y - x) * (m + 1 + y - x)) : q((m + y - x) * (m + y - x));
            int region = 0;
            long u = 0, v = 0;
            Rational estimate;
            if (!odd) {
                if (x <= m + 1 - 2 * y) {
                    region = 1, u = y - 1, v = m + 1 - x - 2 * y;
                    estimate = h - hat_mirror(x, y);
                } else if (x == m + 2 - 2 * y && y >= 2) {
                    region = 2, u = y - 2;
                    estimate = h - t.s2 - hat_mirror(x, y);
                } else if (m + 3 - 2 * y <= x && x <= m - y) {
                    region = 3, u = x + 2 * y - m - 3, v = m - x - y;
                    estimate = h - t.s1 - t.s2 - t.s3_hat - hat_mirror(x, y);
                } else if (x == m + 1 - y && y >= 2) {
                    region = 4, u = y - 2;
                    estimate = h - 2 * t.s1 - 2 * t.s3_hat;
                }
            } else {
                if (x <= m - 2 * y) {
                    region = 1, u = y - 1, v = m - x - 2 * y;
                    estimate = h - hat_mirror(x, y);
                } else if (x == m + 1 - 2 * y && y >= 2) {
                    region = 2, u = y - 2;
                    estimate = h - t.s2 - hat_mirror(x, y);
                } else if (m + 2 - 2 * y <= x && x <= m - y) {
                    region = 3, u = x + 2 * y - m - 2, v = m - x - y;
                    estimate = h - t.s1 - t.s2 - t.s3_hat - hat_mirror(x, y);
                } else if (x == m + 1 - y && y >= 3) {
                    region = 4, u = y - 3;
                    estimate = h - q(y * y) - 2 * t.s3_hat;
                }
            }
            ++report.region_cells[static_cast<std::size_t>(region)];
            if (region == 0) continue;

            const BoundValue bound = odd ? odd_region_bound(region, u, v) : even_region_bound(region, u, v);
            const bool exceptional = odd && region == 3 && v == 0 && (u == 0 || u == 1);
            if (!exceptional && sgn(bound.numerator) <= 0)
                fail(x, y, "bound polynomial not positive in region " + std::to_string(region));
            if (sgn(bound.denominator) <= 0) fail(x, y, "bound denominator not positive");
            if (estimate < bound.value())
                fail(x, y, "region " + std::to_string(region) + " estimate " + to_string(estimate) +
                               " is below the closed-form bound " + to_string(bound.value()));
            if (C(x, y) < estimate)
                fail(x, y, "C = " + to_string(C(x, y)) + " is below the region estimate " + to_string(estimate));
        }

    if (!odd) {
        // S and S' both vanish at (m, 1), leaving H_{m,1} = 1
        if (C(m, 1) != q(1)) fail(m, 1, "C_{m,1} should equal 1, got " + to_string(C(m, 1)));
    } else {
        auto expect = [&](int x, int y, const Rational& value) {
            if (x < 1 || y < 1 || x > m || y > m) return;
            if (C(x, y) != value) fail(x, y, "expected " + to_string(value) + ", got " + to_string(C(x, y)));
        };
        if (m == 2) {
            expect(1, 1, q(8));
            expect(1, 2, q(11));
            expect(2, 1, q(2));
            expect(2, 2, q(8));
        } else {
            expect(m - 1, 1, q(0));
            expect(m - 1, 2, q(6));
            expect(m, 1, q(2));
            expect(m, 2, q(0));
        }
        // The generic values need every neighbouring column of V to exist.
        if (m >= 4) expect(m - 2, 2, q(3));
        if (m >= 6) expect(m - 3, 3, q(11, 4));
    }
    return report;
}

}  // namespace edmcp
