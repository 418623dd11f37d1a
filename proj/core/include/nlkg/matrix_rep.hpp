#pragma once

#include <optional>

#include "nlkg/coefficients.hpp"
#include "nlkg/linalg.hpp"

namespace nlkg {

namespace detail {

template <class S>
Mat3<S> coeffs_to_matrix_impl(const Vec8<S>& l) {
    return Mat3<S>{{l[1], l[5] - S(3) * l[0], S(-3) * l[4],
                    l[2], l[6] - l[1], -l[5],
                    S(3) * l[3], S(3) * l[7] - l[2], -l[6]}};
}

template <class S>
Vec8<S> matrix_to_coeffs_impl(const Mat3<S>& a) {
    Vec8<S> l{};
    l[1] = a(0, 0);
    l[2] = a(1, 0);
    l[3] = a(2, 0) / S(3);
    l[4] = a(0, 2) / S(-3);
    l[5] = -a(1, 2);
    l[6] = -a(2, 2);
    l[0] = (l[5] - a(0, 1)) / S(3);
    l[7] = (a(2, 1) + l[2]) / S(3);
    return l;
}

// D(M) = (1/det) [[d^2,-2dc,c^2],[-bd,ad+bc,-ac],[b^2,-2ab,a^2]], det D = 1.
template <class S>
Mat3<S> d_of_m_impl(const Mat2<S>& m) {
    const S a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const S dt = m.det();
    return Mat3<S>{{d * d / dt, S(-2) * d * c / dt, c * c / dt,
                    -b * d / dt, (a * d + b * c) / dt, -a * c / dt,
                    b * b / dt, S(-2) * a * b / dt, a * a / dt}};
}

// Closed form of D(M)^-1 = D(M^-1).
template <class S>
Mat3<S> d_inverse_impl(const Mat2<S>& m) {
    const S a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const S dt = m.det();
    return Mat3<S>{{a * a / dt, S(2) * a * c / dt, c * c / dt,
                    a * b / dt, (a * d + b * c) / dt, c * d / dt,
                    b * b / dt, S(2) * b * d / dt, d * d / dt}};
}

template <class S>
Mat3<S> conjugate_impl(const Mat3<S>& a, const Mat2<S>& m) {
    const S dt = m.det();
    Mat3<S> r = d_of_m_impl(m) * a * d_inverse_impl(m);
    for (auto& x : r.m) x /= dt;
    return r;
}

}  // namespace detail

/// Traceless 3x3 structure matrix of a cubic system.
class StructureMatrix {
  public:
    StructureMatrix() = default;

    /// Throws not_in_z if the trace exceeds 1e-12 * ||A|| (exact zero on the
    /// rational path).
    static StructureMatrix from_doubles(const Mat3<double>& a);
    static StructureMatrix from_rationals(const Mat3<Rational>& a);

    const Mat3<double>& mat() const { return a_; }
    double operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

    bool is_exact() const { return exact_.has_value(); }
    const Mat3<Rational>& exact_mat() const { return *exact_; }

    double max_abs() const;

  private:
    Mat3<double> a_{};
    std::optional<Mat3<Rational>> exact_;
};

/// Induced 3x3 representation D(M) acting on quadratic monomials; det D = 1.
struct D3Transform {
    Mat3<double> d;
    Mat2<double> source;
};

StructureMatrix coeffs_to_matrix(const Coefficients& c);
Coefficients matrix_to_coeffs(const StructureMatrix& a);

D3Transform d_of_m(const GL2Transform& m);
D3Transform d_inverse(const GL2Transform& m);

/// A' = (det M)^-1 D(M) A D(M)^-1; trace and rank are preserved.
StructureMatrix conjugate(const StructureMatrix& a, const GL2Transform& m);

/// Exact Gaussian elimination rank on the rational path; SVD rank with the
/// relative 1e-9 threshold on the floating path.
int rank_of(const StructureMatrix& a);

/// True when the decisive singular-value ratio of the floating rank falls in
/// the declared uncertainty band [1e-10, 1e-8].
bool rank_is_borderline(const StructureMatrix& a);

}  // namespace nlkg
