#include "edmcp/edm.hpp"
#include "edmcp/integer_cp.hpp"
#include "edmcp/ldl.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace edmcp;
using test::mat;
using test::Q;
using test::vec;

TEST_CASE("E_i patterns") {
    CHECK(mat_equal(build_Ei(3, 1), mat({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})));
    const SymMatrix e52 = build_Ei(5, 2);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b) CHECK(e52(a, b) == Scalar((a + b) % 2 == 0 ? 1 : 0));
    CHECK(mat_equal(build_Ei(4, 3), mat({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}})));
    CHECK_THROWS_AS(build_Ei(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_Ei(4, 0), std::invalid_argument);
}

TEST_CASE("E_i factors") {
    const CpFactorization f = ei_factor(5, 2);
    REQUIRE(f.atoms.size() == 2);
    CHECK(f.atoms[0].support == vec({1, 0, 1, 0, 1}));
    CHECK(f.atoms[1].support == vec({0, 1, 0, 1, 0}));
    CHECK(ei_factor(3, 1).atoms.size() == 1);
    for (int n = 2; n <= 30; ++n)
        for (int i = 1; i < n; ++i) CHECK(mat_equal(gram(ei_factor(n, i)), build_Ei(n, i)));
}

TEST_CASE("Jordan sum") {
    const CpFactorization f3 = jordan_sum_factorize(3);
    CHECK(mat_equal(gram(f3), mat({{4, 1, 4}, {1, 4, 1}, {4, 1, 4}})));
    CHECK(mat_equal(gram(f3), build_Bn(3)));
    const CpFactorization f6 = jordan_sum_factorize(6);
    CHECK(gram(f6)(0, 0) == Scalar(48));
    for (const auto& a : f6.atoms) CHECK(a.weight == Scalar(1));
    CHECK(verify(build_An(6).plus_identity(Scalar(48)), f6, {}).passed());

    const CpFactorization rep = jordan_sum_factorize(6, WeightExpansion::repetition);
    CHECK(mat_equal(gram(rep), gram(f6)));
    CHECK(rep.atoms.size() > f6.atoms.size());
}

TEST_CASE("divisor identity entrywise") {
    for (int n = 2; n <= 30; ++n) {
        // sum_i J_2(i) E_i, entry (a, b): sum over i dividing |a - b|
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                long total = 0;
                for (int i = 1; i < n; ++i)
                    if ((b - a) % i == 0) total += jordan_totient2_int(i);
                CHECK(total == long(b - a) * (b - a));
            }
    }
}

TEST_CASE("tau sum") {
    const TauSum t3 = tau_sum_example(3);
    CHECK(mat_equal(t3.matrix, mat({{2, 1, 2}, {1, 2, 1}, {2, 1, 2}})));
    for (int n = 2; n <= 12; ++n) {
        const TauSum t = tau_sum_example(n);
        CHECK(mat_equal(gram(t.factorization), t.matrix));
        for (int i = 0; i < n; ++i) CHECK(t.matrix(i, i) == Scalar(n - 1));
        for (int i = 1; i < n; ++i) {
            long tau = 0;
            for (int d = 1; d <= i; ++d) tau += i % d == 0;
            CHECK(t.matrix(0, i) == Scalar(tau));
            CHECK(divisor_count(i) == tau);
        }
    }
}

TEST_CASE("small-n certificates") {
    for (int n = 2; n <= 6; ++n) {
        const SmallnCertificate c = smalln_certificate(n);
        CHECK(verify(c.matrix, c.weighted, {}).passed());
        CHECK(verify(c.matrix, c.integral, {}).passed());
        CHECK(c.integral.integral);
        for (const auto& a : c.integral.atoms) CHECK(a.weight == Scalar(1));
    }
    const SmallnCertificate c4 = smalln_certificate(4);
    bool eight = false;
    for (const auto& a : c4.weighted.atoms) eight |= a.weight == Scalar(8) && a.support == vec({1, 0, 0, 1});
    CHECK(eight);
    CHECK(smalln_certificate(5).matrix(0, 0) == Scalar(20));
    CHECK(smalln_certificate(6).matrix(0, 0) == Scalar(36));
    CHECK_THROWS_AS(smalln_certificate(7), std::invalid_argument);
    CHECK_THROWS_AS(smalln_certificate(1), std::invalid_argument);
}

TEST_CASE("integer kernel scaling") {
    const auto k = integer_kernel({Vector{Scalar(Q(1, 2)), Scalar(Q(-3, 4)), Scalar(0)}});
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<std::int64_t>{2, -3, 0});
}

namespace {

SearchConfig with_kernel(const SymMatrix& a) {
    SearchConfig cfg;
    cfg.kernel = integer_kernel(ldl_certify(a).kernel);
    return cfg;
}

}  // namespace

TEST_CASE("search reproduces the small-n results") {
    const SearchOutcome b5 = integer_cp_search(build_Bn(5), with_kernel(build_Bn(5)));
    CHECK(b5.status == SearchOutcome::Status::found);
    REQUIRE(b5.certificate);
    CHECK(verify(build_Bn(5), *b5.certificate, {w_vector(5)}).passed());

    SearchConfig cfg6;
    cfg6.kernel = {{5, 3, 1, -1, -3, -5}};
    const SearchOutcome b6 = integer_cp_search(build_Bn(6), cfg6);
    CHECK(b6.status == SearchOutcome::Status::exhausted);
    CHECK_FALSE(b6.certificate);

    const SymMatrix b6i = build_An(6).plus_identity(Scalar(36));
    const SearchOutcome found = integer_cp_search(b6i, SearchConfig{});
    CHECK(found.status == SearchOutcome::Status::found);
    REQUIRE(found.certificate);
    CHECK(verify(b6i, *found.certificate, {}).passed());

    // without the kernel hint the search still proves B_6 has no integer certificate
    CHECK(integer_cp_search(build_Bn(6), SearchConfig{}).status == SearchOutcome::Status::exhausted);
}

TEST_CASE("search status does not depend on the number of jobs") {
    for (unsigned jobs : {1u, 2u, 4u}) {
        SearchConfig cfg;
        cfg.jobs = jobs;
        const SearchOutcome a = integer_cp_search(build_An(6).plus_identity(Scalar(36)), cfg);
        CHECK(a.status == SearchOutcome::Status::found);
        cfg.kernel = {{5, 3, 1, -1, -3, -5}};
        CHECK(integer_cp_search(build_Bn(6), cfg).status == SearchOutcome::Status::exhausted);
    }
}

TEST_CASE("reproducible mode returns the same certificate for every job count") {
    SearchConfig one;
    const SymMatrix a = build_An(7).plus_identity(Scalar(f_min(7) + Q(3)));
    const SearchOutcome ref = integer_cp_search(a, one);
    REQUIRE(ref.certificate);
    SearchConfig four;
    four.jobs = 4;
    const SearchOutcome par = integer_cp_search(a, four);
    REQUIRE(par.certificate);
    REQUIRE(par.certificate->atoms.size() == ref.certificate->atoms.size());
    for (std::size_t k = 0; k < ref.certificate->atoms.size(); ++k)
        CHECK(par.certificate->atoms[k].support == ref.certificate->atoms[k].support);
}

TEST_CASE("node limit") {
    SearchConfig cfg;
    cfg.node_limit = 3;
    const SearchOutcome o = integer_cp_search(build_An(6).plus_identity(Scalar(36)), cfg);
    CHECK(o.status == SearchOutcome::Status::limit);
    CHECK_FALSE(o.certificate);
    cfg.node_limit = 0;
    CHECK_THROWS_AS(integer_cp_search(build_Bn(3), cfg), std::invalid_argument);
}

TEST_CASE("search input validation") {
    CHECK_THROWS_AS(integer_cp_search(build_Bn(3).scaled(Scalar(Q(1, 2))), SearchConfig{}), std::invalid_argument);
    CHECK_THROWS_AS(integer_cp_search(build_An(3).plus_identity(Scalar::sqrt(Q(2))), SearchConfig{}),
                    std::invalid_argument);
}

TEST_CASE("search finds random integer Gram matrices") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> entry(0, 3), dim(2, 4), cols(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = static_cast<std::size_t>(dim(rng));
        CpFactorization f{n, {}, true};
        const int k = cols(rng);
        for (int c = 0; c < k; ++c) {
            Vector v(n);
            for (auto& x : v) x = Scalar(entry(rng));
            f.add(Scalar(1), std::move(v));
        }
        const SymMatrix a = gram(f);
        const SearchOutcome o = integer_cp_search(a, with_kernel(a));
        CHECK_MESSAGE(o.status == SearchOutcome::Status::found, "trial " << trial);
        if (o.certificate) CHECK(verify(a, *o.certificate, {}).passed());
    }
}

TEST_CASE("weighted atoms expand into weight-one atoms") {
    CpFactorization f{2, {}, false};
    f.add(Scalar(7), vec({1, 2}));
    const CpFactorization e = expand_to_integral(f);
    CHECK(e.atoms.size() == 4);
    CHECK(mat_equal(gram(e), gram(f)));
    CpFactorization bad{1, {}, false};
    bad.add(Scalar(Q(1, 2)), vec({1}));
    CHECK_THROWS_AS(expand_to_integral(bad), std::invalid_argument);
}

TEST_CASE("beyond n = 6 the shift f(n) can work again") {
    const SearchOutcome b7 = integer_cp_search(build_Bn(7), with_kernel(build_Bn(7)));
    CHECK(b7.status == SearchOutcome::Status::found);
    REQUIRE(b7.certificate);
    CHECK(verify(build_Bn(7), *b7.certificate, {w_vector(7)}).passed());
    CHECK(integer_cp_search(build_Bn(8), with_kernel(build_Bn(8))).status == SearchOutcome::Status::exhausted);
}
