#include "edmcp/scalar.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace edmcp;
using test::Q;

TEST_CASE("rational text form is canonical") {
    CHECK(to_string(Q(6, -4)) == "-3/2");
    CHECK(to_string(Q(35)) == "35/1");
    CHECK(parse_rational("10/4") == Q(5, 2));
    CHECK(parse_rational("-7") == Q(-7));
    CHECK(parse_rational("3/9") == Q(1, 3));
    CHECK_THROWS_AS(parse_rational(" 3/9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("sums of squares") {
    for (std::uint64_t a = 0; a <= 2000; ++a) {
        const auto parts = sum_of_squares(a);
        CHECK(parts.size() <= 4);
        std::uint64_t total = 0;
        for (auto s : parts) {
            CHECK(s > 0);
            total += s * s;
        }
        CHECK(total == a);
    }
    CHECK(sum_of_squares(3) == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(sum_of_squares(8) == std::vector<std::uint64_t>{2, 2});
    CHECK(sum_of_squares(7).size() == 4);
}

TEST_CASE("square-free split") {
    auto [root, free] = square_free_split(Integer(72));
    CHECK(root == 6);
    CHECK(free == 2);
    std::tie(root, free) = square_free_split(Integer(35));
    CHECK(root == 1);
    CHECK(free == 35);
}

TEST_CASE("surd_sign examples") {
    // s = 1 folds into the rational part: 1/2 + 1/2 = 1
    const Scalar folded = Scalar::surd(Q(1, 2), Q(1, 2), 1);
    CHECK(folded.is_rational());
    CHECK(folded.sign() == 1);
    CHECK(folded == Scalar(1));

    CHECK(Scalar::surd(0, 0, 35).sign() == 0);
    CHECK(Scalar::surd(0, 0, 35).is_zero());

    // -7 + 2 sqrt(13): 4 * 13 = 52 > 49
    CHECK(surd_sign(Q(-7), Q(2), 13) == 1);
    CHECK(Scalar::surd(Q(-7), Q(2), 13).sign() == 1);
    CHECK(surd_sign(Q(-8), Q(2), 13) == -1);
    CHECK(surd_sign(Q(7), Q(-2), 13) == -1);
    CHECK(surd_sign(Q(3), Q(-1), 9) == 0);
}

TEST_CASE("square roots of rationals normalise the radicand") {
    const Scalar q = Scalar::sqrt(Q(7, 5));
    CHECK(q.radicand() == 35);
    CHECK(q.coef() == Q(1, 5));
    CHECK(q * q == Scalar(Q(7, 5)));

    const Scalar r = Scalar::sqrt(Q(12));
    CHECK(r.radicand() == 3);
    CHECK(r.coef() == Q(2));

    CHECK(Scalar::sqrt(Q(9, 4)) == Scalar(Q(3, 2)));
    CHECK_THROWS(Scalar::sqrt(Q(-1)));

    const Scalar t = Scalar(2) * Scalar::sqrt(Q(3, 5));
    CHECK(t.radicand() == 15);
    CHECK(t * t == Scalar(Q(12, 5)));
}

TEST_CASE("field arithmetic") {
    const Scalar a = Scalar::surd(Q(1, 3), Q(2), 35);
    const Scalar b = Scalar::surd(Q(-5), Q(1, 7), 35);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.conjugate() == Scalar(Q(1, 9) - Q(4) * 35));
    CHECK((a / a) == Scalar(1));
    CHECK_THROWS(a / Scalar(0));
    CHECK(a.to_double() == doctest::Approx(1.0 / 3 + 2 * std::sqrt(35.0)));
}

TEST_CASE("ordering is exact") {
    const Scalar s = Scalar::sqrt(Q(2));
    CHECK(s > Scalar(Q(141421, 100000)));
    CHECK(s < Scalar(Q(141422, 100000)));
    CHECK(-s < Scalar(0));
    CHECK(Scalar::sqrt(Q(7, 5)) > Scalar(1));
}

TEST_CASE("mixing radicands is rejected") {
    const Scalar a = Scalar::sqrt(Q(2));
    const Scalar b = Scalar::sqrt(Q(3));
    CHECK_THROWS_AS(a + b, RadicandMismatch);
    CHECK_THROWS_AS(a * b, RadicandMismatch);
    CHECK_NOTHROW(a + Scalar(Q(1, 2)));
    CHECK_THROWS_AS(a.as_rational(), std::domain_error);
}

TEST_CASE("text form of surds") {
    CHECK(to_string(Scalar(Q(3, 4))) == "3/4");
    CHECK(to_string(Scalar::sqrt(Q(7, 5))).find("35") != std::string::npos);
}
