#pragma once

#include "nlkg/coefficients.hpp"
#include "nlkg/errors.hpp"
#include "nlkg/linalg.hpp"

namespace nlkg {

namespace detail {

// Cubic monomial basis (x^3, x^2 y, x y^2, y^3) of (x,y) = n11 u1 + n12 u2 etc.
// Expands each monomial of the source variables in the target variables and
// accumulates; pure polynomial algebra, valid over any field.
template <class S>
Vec8<S> substitute_cubic(const Vec8<S>& lam, const Mat2<S>& m) {
    const Mat2<S> n = m.inverse();  // u = N v
    // powers[k][j]: coefficient of v1^(3-j) v2^j in (row_k . v)^3 parts; build
    // the four monomials M_t(u1,u2) expressed in v.
    const S n11 = n.m[0], n12 = n.m[1], n21 = n.m[2], n22 = n.m[3];

    // mono[t][j]: coefficient of v1^(3-j) v2^j in u1^(3-t) u2^t.
    std::array<std::array<S, 4>, 4> mono{};
    // u1^a u2^b with a+b=3: product of binomial expansions.
    for (int t = 0; t < 4; ++t) {
        const int a = 3 - t;
        // (n11 v1 + n12 v2)^a coefficients
        std::array<S, 4> pa{S(0), S(0), S(0), S(0)};
        std::array<S, 4> pb{S(0), S(0), S(0), S(0)};
        static const int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
        for (int i = 0; i <= a; ++i) {
            S c = S(binom[a][i]);
            for (int r = 0; r < a - i; ++r) c *= n11;
            for (int r = 0; r < i; ++r) c *= n12;
            pa[static_cast<std::size_t>(i)] = c;
        }
        for (int i = 0; i <= t; ++i) {
            S c = S(binom[t][i]);
            for (int r = 0; r < t - i; ++r) c *= n21;
            for (int r = 0; r < i; ++r) c *= n22;
            pb[static_cast<std::size_t>(i)] = c;
        }
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= t; ++j)
                mono[static_cast<std::size_t>(t)][static_cast<std::size_t>(i + j)] +=
                    pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)];
    }

    // F'_i(v) = sum_k m_ik F_k(u(v)).
    Vec8<S> out{};
    for (int i = 0; i < 2; ++i) {
        std::array<S, 4> acc{S(0), S(0), S(0), S(0)};
        for (int k = 0; k < 2; ++k) {
            const S w = m.m[static_cast<std::size_t>(2 * i + k)];
            for (int t = 0; t < 4; ++t) {
                const S lt = lam[static_cast<std::size_t>(4 * k + t)];
                if (lt == S(0)) continue;
                for (int j = 0; j < 4; ++j)
                    acc[static_cast<std::size_t>(j)] +=
                        w * lt * mono[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            }
        }
        for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(4 * i + j)] = acc[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace detail

/// Coefficients of the system satisfied by (v1,v2) = M (u1,u2), computed by
/// direct polynomial substitution u = M^-1 v and collection of monomials.
/// This is the ground-truth action; the matrix-representation route is checked
/// against it.
Coefficients transform_by_substitution(const Coefficients& c, const GL2Transform& m);

}  // namespace nlkg
