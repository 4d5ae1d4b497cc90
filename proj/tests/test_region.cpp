#include "edmcp/constructors.hpp"
#include "edmcp/region_oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace edmcp;
using test::Q;

TEST_CASE("even decomposition at m = 4") {
    const RegionReport r = region_oracle(4, Parity::even);
    CHECK(r.passed());
    CHECK(r.cells == 16);
    std::size_t classified = 0;
    for (std::size_t k = 1; k <= 4; ++k) classified += r.region_cells[k];
    CHECK(classified > 0);
}

TEST_CASE("even region 2 bound at u = 0") {
    const BoundValue b = even_region_bound(2, 0, 0);
    CHECK(b.value() == Q(16, 3));
    CHECK(b.numerator == Q(320));
    CHECK(b.denominator == Q(60));
}

TEST_CASE("bound polynomials are positive on their domains") {
    for (long u = 0; u <= 30; ++u)
        for (long v = 0; v <= 30; ++v)
            for (int region = 1; region <= 4; ++region) {
                CHECK(sgn(even_region_bound(region, u, v).numerator) > 0);
                const bool exempt = region == 3 && v == 0 && u <= 1;
                if (!exempt) CHECK(sgn(odd_region_bound(region, u, v).numerator) > 0);
            }
    // the two cells the odd case evaluates directly instead
    CHECK(sgn(odd_region_bound(3, 0, 0).numerator) < 0);
    CHECK_THROWS_AS(even_region_bound(5, 0, 0), std::invalid_argument);
}

TEST_CASE("odd exceptional cells") {
    for (int m = 4; m <= 9; ++m) {
        const auto c = optimal_odd(m).c_block();
        CHECK(c[m - 3][1] == Scalar(3));
        if (m >= 6) CHECK(c[m - 4][2] == Scalar(Q(11, 4)));
    }
}

TEST_CASE("oracle sweep") {
    for (int m = 1; m <= 10; ++m) CHECK_MESSAGE(region_oracle(m, Parity::even).passed(), "even m = " << m);
    for (int m = 2; m <= 10; ++m) CHECK_MESSAGE(region_oracle(m, Parity::odd).passed(), "odd m = " << m);
}

TEST_CASE("S contributions vanish outside their index ranges") {
    const SContributions s = even_s_terms(6, 1, 1);
    CHECK(sgn(s.s1) == 0);
    CHECK(sgn(s.s2) == 0);
    CHECK(sgn(s.s3) == 0);
    CHECK_THROWS_AS(region_oracle(1, Parity::odd), std::invalid_argument);
}
