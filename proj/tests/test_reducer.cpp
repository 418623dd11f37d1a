#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nlkg/cubic_system.hpp"
#include "nlkg/errors.hpp"
#include "nlkg/reducer.hpp"
#include "test_support.hpp"

using namespace nlkg;
using namespace nlkg::testing;

namespace {

Coefficients example_family(double a) {
    return Coefficients::from_doubles({a, 3 * a, 3, 1, a * a, 3 * a, 3 * a, 1});
}

}  // namespace

TEST_CASE("worked family, a = 1: decoupling with cubic pair (2, 0)") {
    const auto r = reduce(example_family(1.0));
    CHECK(r.model.family == ModelFamily::Decoupled);
    CHECK(r.model.p1 == 1);
    CHECK(r.model.p2 == 0);
    CHECK(r.residual <= 1e-8);

    // First chain step is v = (u1 + u2, u1 - u2) up to row signs.
    const auto& m = r.chain.front();
    CHECK(std::abs(m.a()) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(m.b()) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.a() * m.b() > 0);       // first row aligned
    CHECK(m.c() * m.d() < 0);       // second row anti-aligned

    CHECK(r.params.at("c1") == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.params.at("c2") == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("worked family, a > 0: cubic pair matches the closed form") {
    for (double a : {2.0, 0.5}) {
        const auto r = reduce_z1_plus(example_family(a));
        const double hi = (a + 1) / 2 * (1 + std::sqrt(a));
        const double lo = (a + 1) / 2 * (1 - std::sqrt(a));
        double c1 = r.params.at("c1"), c2 = r.params.at("c2");
        if (c1 < c2) std::swap(c1, c2);
        CHECK(c1 == doctest::Approx(hi).epsilon(1e-9));
        CHECK(c2 == doctest::Approx(lo).epsilon(1e-9));
        CHECK(r.residual <= 1e-8);
    }
}

TEST_CASE("worked family, a = 0: tangency data and the rank-one model") {
    const auto r = reduce_z1_zero(example_family(0.0));
    CHECK(r.model.family == ModelFamily::NewA);
    CHECK(r.model.p1 == 1);
    CHECK(r.params.at("k") == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(r.params.at("ell") == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(r.params.at("sigma") == 1.0);
    CHECK(r.params.at("theta") == doctest::Approx(3 * 3.14159265358979 / 2).epsilon(1e-9));
    CHECK(r.residual <= 1e-8);

    // v1 = sqrt(2) u2, v2 = sqrt(2)(3/2 u1 + 3/4 u2).
    const auto& m = r.chain.front();
    CHECK(m.a() == doctest::Approx(0.0));
    CHECK(m.b() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(m.c() == doctest::Approx(std::sqrt(2.0) * 1.5).epsilon(1e-12));
    CHECK(m.d() == doctest::Approx(std::sqrt(2.0) * 0.75).epsilon(1e-12));
}

TEST_CASE("worked family, a = -1: the paper's closed-form unknowns") {
    const auto r = reduce_z1_minus(example_family(-1.0));
    CHECK(r.model.family == ModelFamily::New2);
    CHECK(r.residual <= 1e-8);

    const double s2 = std::sqrt(2.0);
    const double row1[2] = {std::sqrt(s2 - 1) / s2, -std::sqrt(s2 + 1) / s2};
    const double row2[2] = {std::sqrt(s2 + 1) / s2, std::sqrt(s2 - 1) / s2};
    const auto& t = r.total;
    CHECK(t.a() == doctest::Approx(row1[0]).epsilon(1e-9));
    CHECK(t.b() == doctest::Approx(row1[1]).epsilon(1e-9));
    CHECK(t.c() == doctest::Approx(row2[0]).epsilon(1e-9));
    CHECK(t.d() == doctest::Approx(row2[1]).epsilon(1e-9));

    CHECK(r.params.at("r") == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-9));
    CHECK(r.params.at("theta") == doctest::Approx(3 * 3.14159265358979 / 4).epsilon(1e-9));
}

TEST_CASE("rank-two reductions") {
    SUBCASE("already the gauge-invariant model") {
        const auto r = reduce_z2(Coefficients::from_doubles({1, 0, 1, 0, 0, 1, 0, 1}));
        CHECK(r.model.family == ModelFamily::ComplexGauge);
        CHECK(r.model.p1 == 1);
        CHECK(r.chain.size() == 1);
        CHECK(r.total.a() == doctest::Approx(1.0));
        CHECK(r.total.b() == doctest::Approx(0.0));
        CHECK(r.residual <= 1e-12);
    }
    SUBCASE("degenerate quadratic form") {
        const auto r = reduce_z2(Coefficients::from_doubles({1, 2, 1, 0, 0, 1, 2, 1}));
        CHECK(r.model.family == ModelFamily::NewB);
        CHECK(r.model.p1 == 1);
        const auto& m = r.chain.front();
        CHECK(m.a() == doctest::Approx(1.0));
        CHECK(m.b() == doctest::Approx(1.0));
        CHECK(m.c() == doctest::Approx(1.0));
        CHECK(m.d() == doctest::Approx(0.0));
        CHECK(r.residual <= 1e-10);
    }
    SUBCASE("indefinite form with vanishing leading coefficient") {
        const auto r = reduce_z2(Coefficients::from_doubles({0, 2, 3, 0, 0, 0, 2, 3}));
        CHECK(r.model.family == ModelFamily::New3);
        CHECK(r.residual <= 1e-9);
    }
    SUBCASE("negative-definite goes to the negative gauge model") {
        const auto r = reduce_z2(Coefficients::from_doubles({-1, 0, -2, 0, 0, -1, 0, -2}));
        CHECK(r.model.family == ModelFamily::ComplexGauge);
        CHECK(r.model.p1 == -1);
        CHECK(r.residual <= 1e-9);
    }
    SUBCASE("negative leading coefficient with indefinite form appends the swap") {
        const auto r = reduce_z2(Coefficients::from_doubles({-1, 0, 1, 0, 0, -1, 0, 1}));
        CHECK(r.model.family == ModelFamily::New3);
        CHECK(r.residual <= 1e-9);
    }
}

TEST_CASE("models are fixed points of the reduction") {
    for (const auto& id : all_signed_models()) {
        const auto r = reduce(model_catalog(id));
        CHECK(r.model == id);
        CHECK(r.residual <= 1e-10);
    }
}

TEST_CASE("random pullbacks return to their model") {
    auto rng = make_rng(41);
    for (const auto& id : all_signed_models()) {
        const Coefficients base = model_catalog(id);
        for (int trial = 0; trial < 10; ++trial) {
            const GL2Transform m = random_gl2(rng, 0.2, 5.0);
            const Coefficients pulled = transform_by_substitution(base, m);
            const auto r = reduce(pulled);
            CHECK(r.model == id);
            CHECK(r.residual <= 1e-8 * std::max(1.0, pulled.max_abs()));
        }
    }
}

TEST_CASE("reduction certifies against the substitution oracle") {
    auto rng = make_rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const GL2Transform m = random_gl2(rng, 0.3, 3.0);
        const Coefficients pulled =
            transform_by_substitution(model_catalog(ModelSystemId::new2()), m);
        const auto r = reduce(pulled);
        const Coefficients reached = transform_by_substitution(pulled, r.total);
        CHECK(max_rel_err(reached, r.model_coeffs) <= 1e-8);
    }
}

TEST_CASE("unsupported classes are rejected") {
    CHECK_THROWS_AS(reduce(Coefficients::from_doubles({0, 0, 0, 0, 0, 0, 0, 0})),
                    unsupported_class);

    auto rng = make_rng(43);
    const auto rank3 = matrix_to_coeffs(StructureMatrix::from_doubles(random_traceless(rng)));
    CHECK_THROWS_AS(reduce(rank3), unsupported_class);

    const auto rank2 = matrix_to_coeffs(
        StructureMatrix::from_doubles(Mat3<double>{{1, 0, 0, 0, -1, 0, 0, 0, 0}}));
    CHECK_THROWS_AS(reduce(rank2), unsupported_class);
}

TEST_CASE("wrong-family preconditions") {
    CHECK_THROWS_AS(reduce_z1_plus(example_family(-1.0)), precondition_error);
    CHECK_THROWS_AS(reduce_z1_minus(example_family(1.0)), precondition_error);
    CHECK_THROWS_AS(reduce_z2(model_catalog(ModelSystemId::sunagawa())), precondition_error);
}

TEST_CASE("reduction model is equivariant") {
    auto rng = make_rng(44);
    const Coefficients c = example_family(0.5);
    const auto base = reduce(c);
    for (int trial = 0; trial < 20; ++trial) {
        const GL2Transform m = random_gl2(rng, 0.3, 3.0);
        const auto moved = reduce(transform_by_substitution(c, m));
        CHECK(moved.model == base.model);
    }
}

TEST_CASE("signed models cover exactly the classification roster") {
    // The 9 + 5 display matrices, frozen from the classification lists.
    const std::array<Mat3<double>, 9> z1 = {
        Mat3<double>{{0, -3, 0, 0, 0, 0, 0, 3, 0}},  Mat3<double>{{0, 3, 0, 0, 0, 0, 0, -3, 0}},
        Mat3<double>{{0, -3, 0, 0, 0, 0, 0, -3, 0}}, Mat3<double>{{0, -3, 0, 0, 0, 0, 0, 0, 0}},
        Mat3<double>{{0, 3, 0, 0, 0, 0, 0, 0, 0}},   Mat3<double>{{0, 0, 0, 0, 0, -3, 0, 0, 0}},
        Mat3<double>{{0, 0, 0, 0, 0, 3, 0, 0, 0}},   Mat3<double>{{0, 0, -3, 0, 0, 0, 0, 0, 0}},
        Mat3<double>{{0, 0, 0, -3, 0, -3, 0, 0, 0}}};
    const std::array<Mat3<double>, 5> z2 = {
        Mat3<double>{{0, -2, 0, 1, 0, -1, 0, 2, 0}}, Mat3<double>{{0, 2, 0, -1, 0, 1, 0, -2, 0}},
        Mat3<double>{{0, -2, 0, 0, 0, -1, 0, 0, 0}}, Mat3<double>{{0, 2, 0, 0, 0, 1, 0, 0, 0}},
        Mat3<double>{{0, -2, 0, -1, 0, -1, 0, -2, 0}}};

    for (const auto& id : all_signed_models()) {
        const auto a = coeffs_to_matrix(model_catalog(id));
        const int idx = roster_index(id);
        const bool z1_family = id.family == ModelFamily::Decoupled ||
                               id.family == ModelFamily::NewA ||
                               id.family == ModelFamily::Sunagawa ||
                               id.family == ModelFamily::New2;
        const Mat3<double>& expect =
            z1_family ? z1[static_cast<std::size_t>(idx - 1)] : z2[static_cast<std::size_t>(idx - 1)];
        CHECK(max_rel_err(a.mat(), expect) == 0.0);
    }
}
