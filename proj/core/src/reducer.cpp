#include "nlkg/reducer.hpp"

#include <cmath>

#include "nlkg/cubic_system.hpp"
#include "nlkg/errors.hpp"
#include "nlkg/tolerances.hpp"
#include "rank1_analysis.hpp"

namespace nlkg {

namespace {

Family family_of(const Coefficients& c) { return classify(c).family; }

void require_family(const Coefficients& c, Family want, const char* who) {
    const Family got = family_of(c);
    if (got != want)
        throw precondition_error(std::string(who) + " requires family " + family_name(want) +
                                 ", got " + family_name(got));
}

GL2Transform rows_to_transform(const std::array<double, 2>& r1, const std::array<double, 2>& r2) {
    return {r1[0], r1[1], r2[0], r2[1]};
}

void certify(const Coefficients& input, ReductionResult& r) {
    const Coefficients reached = transform_by_substitution(input, r.total);
    const Coefficients target = r.model_coeffs;
    double res = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        res = std::max(res, std::abs(reached[i] - target[i]));
    r.residual = res;
    if (res > tol::kResidual * std::max(1.0, input.max_abs()))
        throw inconsistent_extraction("reduction residual " + std::to_string(res) +
                                      " exceeds certification bound");
}

GL2Transform chain_total(const std::vector<GL2Transform>& chain) {
    GL2Transform total = GL2Transform::identity();
    for (const auto& m : chain) total = m * total;
    return total;
}

}  // namespace

ReductionResult reduce_z1_plus(const Coefficients& c) {
    require_family(c, Family::Z1_plus, "reduce_z1_plus");
    const StructureMatrix a = coeffs_to_matrix(c);
    const KernelDirection nu = kernel_direction(a);
    const auto thetas = curve_intersections(nu);
    if (thetas.size() != 2 || std::abs(thetas[1] - thetas[0]) < 1e-8)
        throw degenerate_tangency("curve intersections collapse; borderline Z1_zero input");

    const auto data = detail::analyze_z1_plus(a, thetas[0], thetas[1]);

    ReductionResult r;
    r.chain.push_back(rows_to_transform(detail::curve_row(data.theta1),
                                        detail::curve_row(data.theta2)));

    // Cubic coefficients below noise level stay zero rather than being
    // normalized to +-1.
    const double cscale = std::max(std::abs(data.c1), std::abs(data.c2));
    auto csign = [&](double x) {
        return std::abs(x) <= tol::kRel * cscale ? 0 : (x > 0 ? 1 : -1);
    };
    int l1 = csign(data.c1), l8 = csign(data.c2);

    const double p = l1 == 0 ? 1.0 : std::sqrt(std::abs(data.c1));
    const double q = l8 == 0 ? 1.0 : std::sqrt(std::abs(data.c2));
    r.chain.push_back(GL2Transform::scaling(p, q));

    if ((l1 == -1 && l8 == 1) || (l1 == 0 && l8 != 0)) {
        r.chain.push_back(GL2Transform::swap_vars());
        std::swap(l1, l8);
    }
    r.model = ModelSystemId::decoupled(l1, l8);
    r.model_coeffs = model_catalog(r.model);
    r.total = chain_total(r.chain);
    r.params = {{"theta1", data.theta1}, {"theta2", data.theta2},
                {"k1", data.k1},         {"k2", data.k2},
                {"c1", data.c1},         {"c2", data.c2}};
    certify(c, r);
    return r;
}

ReductionResult reduce_z1_zero(const Coefficients& c) {
    require_family(c, Family::Z1_zero, "reduce_z1_zero");
    const StructureMatrix a = coeffs_to_matrix(c);
    const KernelDirection nu = kernel_direction(a);
    const auto data = detail::analyze_z1_zero_impl<double>(a.mat(), nu.nu);

    const double s = data.sin_theta, co = data.cos_theta;
    const double theta = detail::wrap_2pi(std::atan2(s, co));
    const bool at_3pi2 = std::abs(co) < 1e-9 && s < 0;
    const double sgn = co > 0 ? 1.0 : (co < 0 ? -1.0 : 0.0);
    const double k = data.k;

    // ell below the certification scale is the Sunagawa case.
    const double scale = std::max(1.0, a.max_abs());
    const double ell = std::abs(data.ell) <= tol::kRel * scale ? 0.0 : data.ell;

    std::array<double, 2> v1{}, v2{};
    if (at_3pi2) {
        v1 = {0.0, std::sqrt(2.0)};
        v2 = ell != 0.0 ? std::array<double, 2>{std::sqrt(2.0) * ell, std::sqrt(2.0) * k}
                        : std::array<double, 2>{3.0 / (std::sqrt(2.0) * k), 0.0};
    } else {
        const double rp = std::sqrt(1 + s), rm = std::sqrt(std::max(0.0, 1 - s));
        v1 = {rp, sgn * rm};
        v2 = ell != 0.0
                 ? std::array<double, 2>{k * rp + ell * sgn * rm, k * sgn * rm - ell * rp}
                 : std::array<double, 2>{0.0, -3.0 / (k * rp)};
    }

    ReductionResult r;
    r.chain.push_back(rows_to_transform(v1, v2));
    if (ell != 0.0) {
        const double p = std::sqrt(std::abs(ell) / 3.0);
        r.chain.push_back(GL2Transform::scaling(p, p));
        r.model = ModelSystemId::new_a(ell > 0 ? 1 : -1);
    } else {
        r.model = ModelSystemId::sunagawa();
    }
    r.model_coeffs = model_catalog(r.model);
    r.total = chain_total(r.chain);
    r.params = {{"theta", theta},
                {"sigma", static_cast<double>(data.sigma)},
                {"k", k},
                {"ell", ell}};
    certify(c, r);
    return r;
}

ReductionResult reduce_z1_minus(const Coefficients& c) {
    require_family(c, Family::Z1_minus, "reduce_z1_minus");
    const StructureMatrix a = coeffs_to_matrix(c);
    const KernelDirection nu = kernel_direction(a);
    const auto st = detail::z1_minus_step1(nu);

    ReductionResult r;
    const GL2Transform m1{st.m1.m[0], st.m1.m[1], st.m1.m[2], st.m1.m[3]};
    r.chain.push_back(m1);

    // The transformed system must match the rotation normal form
    //   l~ = (r cos, -3 r sin, -3 r cos, r sin | r sin, 3 r cos, -3 r sin, -r cos).
    const Coefficients w = transform_by_substitution(c, m1);
    const double xs[4] = {w[0], -w[2] / 3.0, w[5] / 3.0, -w[7]};
    const double ys[4] = {-w[1] / 3.0, w[3], w[4], -w[6] / 3.0};
    double x = 0.0, y = 0.0;
    for (int i = 0; i < 4; ++i) {
        x += xs[i] / 4.0;
        y += ys[i] / 4.0;
    }
    const double scale = std::max(1.0, c.max_abs());
    for (int i = 0; i < 4; ++i)
        if (std::abs(xs[i] - x) > 1e-7 * scale || std::abs(ys[i] - y) > 1e-7 * scale)
            throw inconsistent_extraction(
                "coefficients do not match the rotation normal form");

    const double radius = std::hypot(x, y);
    if (!(radius > 0))
        throw inconsistent_extraction("vanishing modulus in the rotation normal form");
    const double theta = detail::wrap_2pi(std::atan2(y, x));

    const double rr = std::sqrt(radius);
    const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
    r.chain.emplace_back(rr * ch, -rr * sh, rr * sh, rr * ch);

    r.model = ModelSystemId::new2();
    r.model_coeffs = model_catalog(r.model);
    r.total = chain_total(r.chain);
    r.params = {{"a0", st.a0}, {"b0", st.b0}, {"c0", st.c0}, {"r", radius}, {"theta", theta}};
    certify(c, r);
    return r;
}

ReductionResult reduce_z2(const Coefficients& c) {
    if (!z2_condition(c))
        throw precondition_error("reduce_z2 requires the rank-two structural condition");
    const double l1 = c[0], l2 = c[1], l3 = c[2];
    const double scale = std::max(1.0, c.max_abs());
    const double disc = l2 * l2 - 4 * l1 * l3;

    ReductionResult r;
    r.params = {{"l1", l1}, {"l2", l2}, {"l3", l3}, {"disc", disc}};

    const double eps = tol::kRel * scale * scale;
    if (disc < -eps) {
        const double root = std::sqrt(std::abs(l1));
        r.chain.emplace_back(root, (l1 > 0 ? 1.0 : -1.0) * l2 / (2 * root), 0.0,
                             std::sqrt(4 * l1 * l3 - l2 * l2) / (2 * root));
        r.model = ModelSystemId::complex_gauge(l1 > 0 ? 1 : -1);
    } else if (disc <= eps) {
        std::array<double, 2> v1{}, v2{};
        if (std::abs(l1) > tol::kAbsFloor * scale) {
            const double s12 = l1 * l2 > 0 ? 1.0 : (l1 * l2 < 0 ? -1.0 : 0.0);
            v1 = {std::sqrt(std::abs(l1)), s12 * std::sqrt(std::abs(l3))};
            // v2 = u1 works unless v1 is itself a multiple of u1.
            v2 = std::abs(v1[1]) > tol::kAbsFloor ? std::array<double, 2>{1.0, 0.0}
                                                  : std::array<double, 2>{0.0, 1.0};
            r.model = ModelSystemId::new_b(l1 > 0 ? 1 : -1);
        } else {
            v1 = {0.0, std::sqrt(std::abs(l3))};
            v2 = {1.0, 0.0};
            r.model = ModelSystemId::new_b(l3 > 0 ? 1 : -1);
        }
        r.chain.push_back(rows_to_transform(v1, v2));
    } else {
        bool negate = false;
        if (std::abs(l1) > tol::kAbsFloor * scale) {
            const double root = std::sqrt(std::abs(l1));
            r.chain.emplace_back(root, (l1 > 0 ? 1.0 : -1.0) * l2 / (2 * root), 0.0,
                                 std::sqrt(disc) / (2 * root));
            negate = l1 < 0;
        } else {
            // Quadratic-form splitting for l1 = 0 (l2 != 0 here):
            // v1,2 = u1 + (4 l3 +- l2^2)/(4 l2) u2 gives v1^2 - v2^2 = V exactly.
            r.chain.emplace_back(1.0, (4 * l3 + l2 * l2) / (4 * l2), 1.0,
                                 (4 * l3 - l2 * l2) / (4 * l2));
        }
        if (negate) r.chain.push_back(GL2Transform::swap_vars());
        r.model = ModelSystemId::new3();
    }

    r.model_coeffs = model_catalog(r.model);
    r.total = chain_total(r.chain);
    certify(c, r);
    return r;
}

ReductionResult reduce(const Coefficients& c) {
    switch (family_of(c)) {
        case Family::Z1_plus: return reduce_z1_plus(c);
        case Family::Z1_zero: return reduce_z1_zero(c);
        case Family::Z1_minus: return reduce_z1_minus(c);
        case Family::Z2: return reduce_z2(c);
        case Family::Rank0:
            throw unsupported_class("the zero system has no model representative");
        case Family::Rank2_nonZ2:
            throw unsupported_class(
                "rank-two systems violating the structural condition are not classified");
        case Family::Rank3:
            throw unsupported_class("rank-three systems are not classified");
    }
    throw unsupported_class("unreachable");
}

}  // namespace nlkg
