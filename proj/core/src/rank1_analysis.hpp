#pragma once

// Shared internals for the rank-one reduction theorems, used by both the
// classifier (model determination) and the reducer (transform construction).

#include <array>
#include <cmath>

#include "nlkg/classifier.hpp"
#include "nlkg/linalg.hpp"
#include "nlkg/matrix_rep.hpp"

namespace nlkg::detail {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double wrap_2pi(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

// Column direction D of a rank-one A = D w^T, fitted against a known row
// vector w: D = A w / (w.w).
inline Vec3<double> column_direction(const Mat3<double>& a, const Vec3<double>& w) {
    const double ww = dot3(w, w);
    Vec3<double> aw = a * w;
    return {aw[0] / ww, aw[1] / ww, aw[2] / ww};
}

// ---- nu in S1: two curve points, A = (k1 p1 + k2 p2) q^T -------------------

struct Z1PlusData {
    double theta1 = 0.0, theta2 = 0.0;
    double k1 = 0.0, k2 = 0.0;
    // Cubic coefficients of the decoupled system before sign normalization:
    // (box+1)v1 = c1 v1^3, (box+1)v2 = c2 v2^3.
    double c1 = 0.0, c2 = 0.0;
    double solve_residual = 0.0;
};

// p and q here are the unnormalized combinations entering the coefficient
// identities; theta1 != theta2 assumed (caller decides how to handle
// tangency).
inline Z1PlusData analyze_z1_plus(const StructureMatrix& a, double theta1, double theta2) {
    const double s1 = std::sin(theta1), c1 = std::cos(theta1);
    const double s2 = std::sin(theta2), c2 = std::cos(theta2);
    const Vec3<double> q{c1 * (1 - s2) - c2 * (1 - s1), -2 * (s1 - s2),
                         -c1 * (1 + s2) + c2 * (1 + s1)};
    const Vec3<double> p1{1 + s1, c1, 1 - s1};
    const Vec3<double> p2{1 + s2, c2, 1 - s2};
    const Vec3<double> d = column_direction(a.mat(), q);

    Z1PlusData out;
    out.theta1 = theta1;
    out.theta2 = theta2;
    auto kk = lstsq_3x2(p1, p2, d, &out.solve_residual);
    out.k1 = kk[0];
    out.k2 = kk[1];
    const double gain = 1.0 - std::cos(theta1 - theta2);
    out.c1 = 2.0 * out.k1 / 3.0 * gain;
    out.c2 = -2.0 * out.k2 / 3.0 * gain;
    return out;
}

// Change-of-unknown row for a curve angle: v = sqrt(1+sin t) u1
// + sign(cos t) sqrt(1-sin t) u2, degenerating to sqrt(2) u2 at t = 3pi/2.
inline std::array<double, 2> curve_row(double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    if (std::abs(c) < 1e-9 && s < 0) return {0.0, std::sqrt(2.0)};
    const double sgn = c > 0 ? 1.0 : (c < 0 ? -1.0 : 0.0);
    return {std::sqrt(std::max(0.0, 1 + s)), sgn * std::sqrt(std::max(0.0, 1 - s))};
}

// ---- nu on the critical curves: A = (k p + l q) w^T ------------------------

template <class S>
struct Z1ZeroDataT {
    S sin_theta{}, cos_theta{};
    int sigma = 1;
    S k{}, ell{};
};

// nu_raw is any nonzero multiple of nu(A); sin/cos of the curve parameter are
// scale-invariant in it. Exact over rationals when the inputs are exact.
template <class S>
Z1ZeroDataT<S> analyze_z1_zero_impl(const Mat3<S>& a, const Vec3<S>& nu_raw) {
    Z1ZeroDataT<S> out;
    S denom = nu_raw[0] + nu_raw[2];
    out.sigma = sign_of(denom) >= 0 ? 1 : -1;
    Vec3<S> nu{nu_raw[0], nu_raw[1], nu_raw[2]};
    if (out.sigma < 0)
        for (auto& x : nu) x = -x;
    denom = nu[0] + nu[2];
    const S s = (nu[2] - nu[0]) / denom;
    const S c = -nu[1] / denom;
    out.sin_theta = s;
    out.cos_theta = c;

    const Vec3<S> w{S(1) - s, S(-2) * c, S(1) + s};
    const Vec3<S> p{S(1) + s, c, S(1) - s};
    const Vec3<S> q{c, -s, -c};

    // D = A w / (w.w), then the normal equations of [p q] x = D. The Gram
    // determinant is 6 - 2 s^2 >= 4, so the solve is always well posed.
    const S ww = dot3(w, w);
    const Vec3<S> aw = a * w;
    const Vec3<S> d{aw[0] / ww, aw[1] / ww, aw[2] / ww};
    const S pp = dot3(p, p), pq = dot3(p, q), qq = dot3(q, q);
    const S pd = dot3(p, d), qd = dot3(q, d);
    const S det = pp * qq - pq * pq;
    out.k = (qq * pd - pq * qd) / det;
    out.ell = (pp * qd - pq * pd) / det;
    return out;
}

// ---- nu in S2 u (-S2): hyperbolic normal form ------------------------------

struct Z1MinusStep1 {
    double a0 = 0.0, b0 = 0.0, c0 = 0.0;  // sign-flipped nu, a0 > 0, c0 > 0
    Mat2<double> m1{};
};

inline Z1MinusStep1 z1_minus_step1(const KernelDirection& nu) {
    Z1MinusStep1 st;
    const double flip = nu.nu[0] < 0 ? -1.0 : 1.0;
    st.a0 = flip * nu.nu[0];
    st.b0 = flip * nu.nu[1];
    st.c0 = flip * nu.nu[2];
    const double root = std::sqrt(4 * st.a0 * st.c0 - st.b0 * st.b0);
    st.m1 = Mat2<double>{{2 * st.c0, -st.b0, 0.0, root}};
    return st;
}

}  // namespace nlkg::detail
