#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace nlkg {

template <class S>
using Vec3 = std::array<S, 3>;

template <class S>
using Vec8 = std::array<S, 8>;

// Row-major 2x2 matrix [[a,b],[c,d]].
template <class S>
struct Mat2 {
    std::array<S, 4> m{};

    S a() const { return m[0]; }
    S b() const { return m[1]; }
    S c() const { return m[2]; }
    S d() const { return m[3]; }

    S det() const { return m[0] * m[3] - m[1] * m[2]; }

    Mat2 inverse() const {
        S dt = det();
        return Mat2{{m[3] / dt, -m[1] / dt, -m[2] / dt, m[0] / dt}};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                     x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
    }
};

// Row-major 3x3 matrix.
template <class S>
struct Mat3 {
    std::array<S, 9> m{};

    S& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }

    S trace() const { return m[0] + m[4] + m[8]; }

    Mat3 transposed() const {
        return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    S det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    friend Mat3 operator*(const Mat3& x, const Mat3& y) {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                S acc = x(i, 0) * y(0, j);
                acc += x(i, 1) * y(1, j);
                acc += x(i, 2) * y(2, j);
                r(i, j) = acc;
            }
        return r;
    }

    Vec3<S> operator*(const Vec3<S>& v) const {
        return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2],
                m[3] * v[0] + m[4] * v[1] + m[5] * v[2],
                m[6] * v[0] + m[7] * v[1] + m[8] * v[2]};
    }

    friend Mat3 operator-(const Mat3& x, const Mat3& y) {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r.m[i] = x.m[i] - y.m[i];
        return r;
    }
};

template <class S>
S dot3(const Vec3<S>& x, const Vec3<S>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline double norm3(const Vec3<double>& x) { return std::sqrt(dot3(x, x)); }

// Exact rank by fraction-free Gaussian elimination; S must have exact division
// and exact zero tests (rationals).
template <class S>
int exact_rank(Mat3<S> a) {
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < 3 && row < 3; ++col) {
        std::size_t piv = row;
        while (piv < 3 && a(piv, col) == 0) ++piv;
        if (piv == 3) continue;
        if (piv != row)
            for (std::size_t j = 0; j < 3; ++j) std::swap(a(row, j), a(piv, j));
        for (std::size_t i = row + 1; i < 3; ++i) {
            if (a(i, col) == 0) continue;
            S f = a(i, col) / a(row, col);
            for (std::size_t j = col; j < 3; ++j) a(i, j) -= f * a(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Exact null-space basis via reduced row echelon form.
template <class S>
std::array<Vec3<S>, 3> exact_kernel_basis(Mat3<S> a, int* dim_out) {
    std::array<int, 3> pivot_col{-1, -1, -1};
    std::size_t row = 0;
    for (std::size_t col = 0; col < 3 && row < 3; ++col) {
        std::size_t piv = row;
        while (piv < 3 && a(piv, col) == 0) ++piv;
        if (piv == 3) continue;
        if (piv != row)
            for (std::size_t j = 0; j < 3; ++j) std::swap(a(row, j), a(piv, j));
        S p = a(row, col);
        for (std::size_t j = 0; j < 3; ++j) a(row, j) /= p;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == row || a(i, col) == 0) continue;
            S f = a(i, col);
            for (std::size_t j = 0; j < 3; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    std::array<Vec3<S>, 3> basis{};
    int dim = 0;
    for (int col = 0; col < 3; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < 3; ++r) is_pivot = is_pivot || pivot_col[r] == col;
        if (is_pivot) continue;
        Vec3<S> v{S(0), S(0), S(0)};
        v[static_cast<std::size_t>(col)] = S(1);
        for (std::size_t r = 0; r < 3; ++r) {
            if (pivot_col[r] < 0) continue;
            v[static_cast<std::size_t>(pivot_col[r])] = -a(r, static_cast<std::size_t>(col));
        }
        basis[static_cast<std::size_t>(dim++)] = v;
    }
    if (dim_out) *dim_out = dim;
    return basis;
}

struct Svd3 {
    std::array<double, 3> sigma;   // descending
    Mat3<double> v;                // right singular vectors in columns
};

// Singular values and right singular vectors of a 3x3 via cyclic Jacobi on A^T A.
Svd3 svd3(const Mat3<double>& a);

// Least-squares solve of the 3x2 system [p q] x = d via the 2x2 normal equations.
// Returns {k, l} and, if residual_out is given, the max-abs residual of the fit.
std::array<double, 2> lstsq_3x2(const Vec3<double>& p, const Vec3<double>& q,
                                const Vec3<double>& d, double* residual_out = nullptr);

}  // namespace nlkg
