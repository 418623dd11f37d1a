#include "nlkg/matrix_rep.hpp"

#include <algorithm>
#include <cmath>

#include "nlkg/errors.hpp"
#include "nlkg/tolerances.hpp"

namespace nlkg {

Svd3 svd3(const Mat3<double>& a) {
    // Symmetric Jacobi on B = A^T A; eigenvectors accumulate into V.
    Mat3<double> at = a.transposed();
    Mat3<double> b = at * a;
    Mat3<double> v{{1, 0, 0, 0, 1, 0, 0, 0, 1}};

    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = std::abs(b(0, 1)) + std::abs(b(0, 2)) + std::abs(b(1, 2));
        double diag = std::abs(b(0, 0)) + std::abs(b(1, 1)) + std::abs(b(2, 2));
        if (off <= 1e-30 * std::max(1.0, diag)) break;
        for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = p + 1; q < 3; ++q) {
                if (b(p, q) == 0.0) continue;
                const double theta = (b(q, q) - b(p, p)) / (2.0 * b(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (std::size_t k = 0; k < 3; ++k) {
                    const double bkp = b(k, p), bkq = b(k, q);
                    b(k, p) = cs * bkp - sn * bkq;
                    b(k, q) = sn * bkp + cs * bkq;
                }
                for (std::size_t k = 0; k < 3; ++k) {
                    const double bpk = b(p, k), bqk = b(q, k);
                    b(p, k) = cs * bpk - sn * bqk;
                    b(q, k) = sn * bpk + cs * bqk;
                }
                for (std::size_t k = 0; k < 3; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = cs * vkp - sn * vkq;
                    v(k, q) = sn * vkp + cs * vkq;
                }
            }
    }

    std::array<std::size_t, 3> order{0, 1, 2};
    std::array<double, 3> eig{b(0, 0), b(1, 1), b(2, 2)};
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return eig[i] > eig[j];
    });

    Svd3 out;
    Mat3<double> vs;
    for (std::size_t j = 0; j < 3; ++j) {
        out.sigma[j] = std::sqrt(std::max(0.0, eig[order[j]]));
        for (std::size_t i = 0; i < 3; ++i) vs(i, j) = v(i, order[j]);
    }
    out.v = vs;
    return out;
}

std::array<double, 2> lstsq_3x2(const Vec3<double>& p, const Vec3<double>& q,
                                const Vec3<double>& d, double* residual_out) {
    const double pp = dot3(p, p), pq = dot3(p, q), qq = dot3(q, q);
    const double pd = dot3(p, d), qd = dot3(q, d);
    const double det = pp * qq - pq * pq;
    double k = 0.0, l = 0.0;
    if (std::abs(det) > 1e-300) {
        k = (qq * pd - pq * qd) / det;
        l = (pp * qd - pq * pd) / det;
    } else if (pp > 0) {
        k = pd / pp;
    }
    if (residual_out) {
        double r = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            r = std::max(r, std::abs(d[i] - k * p[i] - l * q[i]));
        *residual_out = r;
    }
    return {k, l};
}

StructureMatrix StructureMatrix::from_doubles(const Mat3<double>& a) {
    double norm = 0.0;
    for (double x : a.m) {
        if (!std::isfinite(x)) throw invalid_input("matrix entries must be finite");
        norm = std::max(norm, std::abs(x));
    }
    if (std::abs(a.trace()) > tol::kAbsFloor * std::max(1.0, norm))
        throw not_in_z("matrix has nonzero trace");
    StructureMatrix s;
    s.a_ = a;
    return s;
}

StructureMatrix StructureMatrix::from_rationals(const Mat3<Rational>& a) {
    if (a.trace() != 0) throw not_in_z("matrix has nonzero trace");
    StructureMatrix s;
    for (std::size_t i = 0; i < 9; ++i) s.a_.m[i] = to_double(a.m[i]);
    s.exact_ = a;
    return s;
}

double StructureMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_.m) m = std::max(m, std::abs(x));
    return m;
}

StructureMatrix coeffs_to_matrix(const Coefficients& c) {
    if (c.is_exact())
        return StructureMatrix::from_rationals(
            detail::coeffs_to_matrix_impl<Rational>(c.exact_values()));
    // The formula is traceless identically; bypass the runtime trace check
    // by construction.
    StructureMatrix out = StructureMatrix();
    Mat3<double> a = detail::coeffs_to_matrix_impl<double>(c.values());
    out = StructureMatrix::from_doubles(a);
    return out;
}

Coefficients matrix_to_coeffs(const StructureMatrix& a) {
    if (a.is_exact())
        return Coefficients::from_rationals(
            detail::matrix_to_coeffs_impl<Rational>(a.exact_mat()));
    return Coefficients::from_doubles(detail::matrix_to_coeffs_impl<double>(a.mat()));
}

D3Transform d_of_m(const GL2Transform& m) {
    return {detail::d_of_m_impl<double>(m.mat()), m.mat()};
}

D3Transform d_inverse(const GL2Transform& m) {
    return {detail::d_inverse_impl<double>(m.mat()), m.mat()};
}

StructureMatrix conjugate(const StructureMatrix& a, const GL2Transform& m) {
    if (a.is_exact() && m.is_exact())
        return StructureMatrix::from_rationals(
            detail::conjugate_impl<Rational>(a.exact_mat(), m.exact_mat()));
    Mat3<double> r = detail::conjugate_impl<double>(a.mat(), m.mat());
    // Re-symmetrize the trace against roundoff before the invariant check.
    const double t = r.trace() / 3.0;
    r(0, 0) -= t;
    r(1, 1) -= t;
    r(2, 2) -= t;
    return StructureMatrix::from_doubles(r);
}

int rank_of(const StructureMatrix& a) {
    if (a.is_exact()) return exact_rank(a.exact_mat());
    const Svd3 s = svd3(a.mat());
    if (s.sigma[0] < tol::kRankZero) return 0;
    int r = 0;
    for (double sv : s.sigma)
        if (sv > tol::kRankRel * s.sigma[0]) ++r;
    return r;
}

bool rank_is_borderline(const StructureMatrix& a) {
    if (a.is_exact()) return false;
    const Svd3 s = svd3(a.mat());
    if (s.sigma[0] < tol::kRankZero) return false;
    for (double sv : s.sigma) {
        const double ratio = sv / s.sigma[0];
        if (ratio >= tol::kRankRel / tol::kBorderline && ratio <= tol::kRankRel * tol::kBorderline)
            return true;
    }
    return false;
}

}  // namespace nlkg
