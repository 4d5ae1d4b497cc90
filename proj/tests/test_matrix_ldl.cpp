#include "edmcp/edm.hpp"
#include "edmcp/ldl.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace edmcp;
using test::mat;
using test::Q;
using test::vec;

TEST_CASE("symmetric storage") {
    CHECK_THROWS_AS(SymMatrix::from_entries(2, {Scalar(0), Scalar(1), Scalar(2), Scalar(0)}), std::invalid_argument);
    SymMatrix a(3);
    a.set(0, 2, Scalar(5));
    CHECK(a(2, 0) == Scalar(5));
    a.add_rank_one(Scalar(2), vec({1, 0, 1}));
    CHECK(a(0, 2) == Scalar(7));
    CHECK(a(1, 1) == Scalar(0));
}

TEST_CASE("mat_equal examples") {
    const SymMatrix a3 = build_An(3);
    CHECK(mat_equal(a3, a3));
    CHECK_FALSE(mat_equal(a3, a3.plus_identity(Scalar(1))));
    const SymMatrix k4 = reversal(4);
    CHECK(mat_equal(build_An(4).congruence(k4), build_An(4)));
    CHECK_THROWS_AS(mat_equal(build_An(3), build_An(4)), DimensionMismatch);
}

TEST_CASE("ldl on the all-ones 2x2") {
    const PsdCertificate c = ldl_certify(mat({{1, 1}, {1, 1}}));
    REQUIRE(c.psd);
    CHECK(c.rank == 1);
    REQUIRE(c.pivots.size() == 2);
    CHECK(c.pivots[0] == Scalar(1));
    CHECK(c.pivots[1] == Scalar(0));
    CHECK(mat_equal(c.reconstruct(2), mat({{1, 1}, {1, 1}})));
    REQUIRE(c.kernel.size() == 1);
    CHECK(is_zero(mat({{1, 1}, {1, 1}}) * c.kernel[0]));
}

TEST_CASE("ldl rejects A_2 with the (1,-1) witness") {
    const SymMatrix a2 = mat({{0, 1}, {1, 0}});
    const PsdCertificate c = ldl_certify(a2);
    CHECK_FALSE(c.psd);
    REQUIRE(c.witness.size() == 2);
    CHECK(c.witness[0] == -c.witness[1]);
    CHECK(quadratic_form(a2, c.witness) < Scalar(0));
    CHECK(quadratic_form(a2, vec({1, -1})) == Scalar(-2));
}

TEST_CASE("ldl certifies B_6 with rank 5 and kernel w(6)") {
    const SymMatrix b6 = build_Bn(6);
    const PsdCertificate c = ldl_certify(b6);
    REQUIRE(c.psd);
    CHECK(c.rank == 5);
    REQUIRE(c.kernel.size() == 1);
    CHECK(is_zero(b6 * w_vector(6)));
    // kernel vector is a multiple of w(6)
    const Vector& k = c.kernel[0];
    const Scalar ratio = k[0] / Scalar(5);
    CHECK(k == scaled(w_vector(6), ratio));
    CHECK(mat_equal(c.reconstruct(6), b6));
}

TEST_CASE("negative diagonal witness") {
    const SymMatrix a = mat({{2, 1, 0}, {1, -1, 0}, {0, 0, 3}});
    const PsdCertificate c = ldl_certify(a);
    CHECK_FALSE(c.psd);
    CHECK(quadratic_form(a, c.witness) < Scalar(0));
}

TEST_CASE("surd matrices") {
    const Scalar s = Scalar::sqrt(Q(7, 5));
    const SymMatrix a = build_An(5).plus_identity(s * Scalar(f_min(5)));
    const PsdCertificate c = ldl_certify(a);
    CHECK(c.psd);
    CHECK(c.rank == 5);
    CHECK(mat_equal(c.reconstruct(5), a));
}

TEST_CASE("exact rank") {
    CHECK(exact_rank(build_An(7)) == 3);
    CHECK(exact_rank(build_An(2)) == 2);
    CHECK(exact_rank(SymMatrix(4)) == 0);
}
