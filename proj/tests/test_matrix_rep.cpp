#include <doctest.h>

#include "nlkg/cubic_system.hpp"
#include "nlkg/errors.hpp"
#include "nlkg/matrix_rep.hpp"
#include "test_support.hpp"

using namespace nlkg;
using namespace nlkg::testing;

namespace {

StructureMatrix mat(std::array<double, 9> m) { return StructureMatrix::from_doubles(Mat3<double>{m}); }

}  // namespace

TEST_CASE("coefficient-to-matrix map on known systems") {
    SUBCASE("decoupled") {
        const double l1 = 1.5, l8 = -0.5;
        const auto a = coeffs_to_matrix(Coefficients::from_doubles({l1, 0, 0, 0, 0, 0, 0, l8}));
        const Mat3<double> expect{{0, -3 * l1, 0, 0, 0, 0, 0, 3 * l8, 0}};
        CHECK(max_rel_err(a.mat(), expect) == 0.0);
    }
    SUBCASE("worked family") {
        const double av = 0.75;
        const auto a = coeffs_to_matrix(Coefficients::from_doubles(
            {av, 3 * av, 3, 1, av * av, 3 * av, 3 * av, 1}));
        const Mat3<double> expect{{3 * av, 0, -3 * av * av, 3, 0, -3 * av, 3, 0, -3 * av}};
        CHECK(max_rel_err(a.mat(), expect) == 0.0);
    }
    SUBCASE("zero") {
        const auto a = coeffs_to_matrix(Coefficients::from_doubles({0, 0, 0, 0, 0, 0, 0, 0}));
        for (double x : a.mat().m) CHECK(x == 0.0);
    }
}

TEST_CASE("matrix-to-coefficients inversion") {
    const auto c = matrix_to_coeffs(mat({0, 0, -3, 0, 0, 0, 0, 0, 0}));
    const Vec8<double> sunagawa{0, 0, 0, 0, 1, 0, 0, 0};
    for (std::size_t i = 0; i < 8; ++i) CHECK(c[i] == doctest::Approx(sunagawa[i]));

    const auto zero = matrix_to_coeffs(mat({0, 0, 0, 0, 0, 0, 0, 0, 0}));
    for (std::size_t i = 0; i < 8; ++i) CHECK(zero[i] == 0.0);

    auto rng = make_rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = StructureMatrix::from_doubles(random_traceless(rng));
        const auto round = coeffs_to_matrix(matrix_to_coeffs(a));
        CHECK(max_rel_err(a.mat(), round.mat()) <= 1e-12);
    }

    CHECK_THROWS_AS(mat({1, 0, 0, 0, 1, 0, 0, 0, 1}), not_in_z);
}

TEST_CASE("induced 3x3 representation") {
    SUBCASE("row addition") {
        const auto d = d_of_m(GL2Transform{1, 1, 0, 1});
        const Mat3<double> expect{{1, 0, 0, -1, 1, 0, 1, -2, 1}};
        CHECK(max_rel_err(d.d, expect) == 0.0);
    }
    SUBCASE("identity") {
        const auto d = d_of_m(GL2Transform::identity());
        const Mat3<double> expect{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
        CHECK(max_rel_err(d.d, expect) == 0.0);
    }
    SUBCASE("swap") {
        const auto d = d_of_m(GL2Transform::swap_vars());
        const Mat3<double> expect{{0, 0, -1, 0, -1, 0, -1, 0, 0}};
        CHECK(max_rel_err(d.d, expect) == 0.0);
    }
    SUBCASE("unit determinant") {
        auto rng = make_rng(22);
        for (int trial = 0; trial < 100; ++trial) {
            const auto d = d_of_m(random_gl2(rng));
            CHECK(d.d.det() == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("closed-form inverse of the representation") {
    const auto di = d_inverse(GL2Transform{1, 1, 0, 1});
    const Mat3<double> expect{{1, 0, 0, 1, 1, 0, 1, 2, 1}};
    CHECK(max_rel_err(di.d, expect) == 0.0);

    auto rng = make_rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const GL2Transform m = random_gl2(rng);
        const Mat3<double> prod = d_inverse(m).d * d_of_m(m).d;
        const Mat3<double> eye{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
        CHECK(max_rel_err(prod, eye) <= 1e-9);
    }
}

TEST_CASE("representation is a homomorphism") {
    auto rng = make_rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const GL2Transform m1 = random_gl2(rng);
        const GL2Transform m2 = random_gl2(rng);
        const Mat3<double> lhs = d_of_m(m1 * m2).d;
        const Mat3<double> rhs = d_of_m(m1).d * d_of_m(m2).d;
        CHECK(max_rel_err(lhs, rhs) <= 1e-9);
        const Mat3<double> inv_as_arg = d_of_m(m1.inverse()).d;
        CHECK(max_rel_err(inv_as_arg, d_inverse(m1).d) <= 1e-9);
    }
}

TEST_CASE("conjugation") {
    SUBCASE("identity fixes everything") {
        auto rng = make_rng(25);
        const auto a = StructureMatrix::from_doubles(random_traceless(rng));
        const auto out = conjugate(a, GL2Transform::identity());
        CHECK(max_rel_err(a.mat(), out.mat()) <= 1e-12);
    }
    SUBCASE("swap exchanges the decoupled roles") {
        const auto a = coeffs_to_matrix(Coefficients::from_doubles({1, 0, 0, 0, 0, 0, 0, -1}));
        const auto swapped = conjugate(a, GL2Transform::swap_vars());
        const auto expect = coeffs_to_matrix(Coefficients::from_doubles({-1, 0, 0, 0, 0, 0, 0, 1}));
        CHECK(max_rel_err(swapped.mat(), expect.mat()) <= 1e-12);
    }
    SUBCASE("matches the substitution oracle") {
        auto rng = make_rng(26);
        for (int trial = 0; trial < 200; ++trial) {
            const Coefficients c = random_coeffs(rng);
            const GL2Transform m = random_gl2(rng, 0.1, 10.0);
            const Coefficients via_matrix = matrix_to_coeffs(conjugate(coeffs_to_matrix(c), m));
            const Coefficients direct = transform_by_substitution(c, m);
            CHECK(max_rel_err(via_matrix, direct) <= 1e-9);
        }
    }
    SUBCASE("composition") {
        auto rng = make_rng(27);
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = StructureMatrix::from_doubles(random_traceless(rng));
            const GL2Transform m1 = random_gl2(rng, 0.5, 2.0);
            const GL2Transform m2 = random_gl2(rng, 0.5, 2.0);
            const auto two = conjugate(conjugate(a, m1), m2);
            const auto one = conjugate(a, m2 * m1);
            CHECK(max_rel_err(two.mat(), one.mat()) <= 1e-8);
        }
    }
}

TEST_CASE("rank computation") {
    CHECK(rank_of(mat({0, 0, 0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(rank_of(coeffs_to_matrix(model_catalog(ModelSystemId::sunagawa()))) == 1);
    CHECK(rank_of(coeffs_to_matrix(model_catalog(ModelSystemId::complex_gauge(1)))) == 2);

    // Exact path agrees on integer matrices.
    CHECK(rank_of(coeffs_to_matrix(Coefficients::from_doubles({0, 0, 0, 0, 1, 0, 0, 0}))) == 1);

    auto rng = make_rng(28);
    SUBCASE("rank is invariant under conjugation") {
        std::vector<StructureMatrix> reps;
        reps.push_back(mat({0, 0, 0, 0, 0, 0, 0, 0, 0}));
        reps.push_back(StructureMatrix::from_doubles(random_rank1(rng)));
        reps.push_back(coeffs_to_matrix(model_catalog(ModelSystemId::complex_gauge(1))));
        reps.push_back(StructureMatrix::from_doubles(random_traceless(rng)));
        REQUIRE(rank_of(reps[3]) == 3);
        for (int r = 0; r < 4; ++r)
            for (int trial = 0; trial < 100; ++trial) {
                const GL2Transform m = random_gl2(rng);
                CHECK(rank_of(conjugate(reps[static_cast<std::size_t>(r)], m)) == r);
            }
    }
}
