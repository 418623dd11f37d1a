#pragma once

#include <cmath>
#include <random>

#include "nlkg/classifier.hpp"
#include "nlkg/coefficients.hpp"
#include "nlkg/cubic_system.hpp"
#include "nlkg/matrix_rep.hpp"

namespace nlkg::testing {

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Invertible M with |det| in [det_lo, det_hi]; entries O(1).
inline GL2Transform random_gl2(std::mt19937_64& rng, double det_lo = 0.1, double det_hi = 10.0) {
    for (;;) {
        const double a = uniform(rng, -2, 2), b = uniform(rng, -2, 2);
        const double c = uniform(rng, -2, 2), d = uniform(rng, -2, 2);
        const double det = a * d - b * c;
        if (std::abs(det) < det_lo || std::abs(det) > det_hi) continue;
        return {a, b, c, d};
    }
}

inline Coefficients random_coeffs(std::mt19937_64& rng, double scale = 2.0) {
    Vec8<double> v{};
    for (auto& x : v) x = uniform(rng, -scale, scale);
    return Coefficients::from_doubles(v);
}

inline Mat3<double> random_traceless(std::mt19937_64& rng, double scale = 2.0) {
    Mat3<double> a;
    for (auto& x : a.m) x = uniform(rng, -scale, scale);
    a(2, 2) = -a(0, 0) - a(1, 1);
    return a;
}

inline Vec3<double> random_unit3(std::mt19937_64& rng) {
    for (;;) {
        Vec3<double> v{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
        const double n = norm3(v);
        if (n < 0.1 || n > 1.0) continue;
        return {v[0] / n, v[1] / n, v[2] / n};
    }
}

// Rank-one traceless A = d nu^T with d in nu^perp.
inline Mat3<double> random_rank1(std::mt19937_64& rng, Vec3<double>* nu_out = nullptr) {
    for (;;) {
        const Vec3<double> nu = random_unit3(rng);
        Vec3<double> d{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)};
        const double proj = dot3(d, nu);
        for (std::size_t i = 0; i < 3; ++i) d[i] -= proj * nu[i];
        if (norm3(d) < 0.2) continue;
        Mat3<double> a;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = d[i] * nu[j];
        if (nu_out) *nu_out = nu;
        return a;
    }
}

inline double rel_err(double x, double y) {
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) / scale;
}

inline double max_rel_err(const Coefficients& x, const Coefficients& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < 8; ++i) m = std::max(m, rel_err(x[i], y[i]));
    return m;
}

inline double max_rel_err(const Mat3<double>& x, const Mat3<double>& y) {
    double m = 0.0;
    for (std::size_t i = 0; i < 9; ++i) m = std::max(m, rel_err(x.m[i], y.m[i]));
    return m;
}

inline const std::vector<ModelSystemId>& all_signed_models() {
    static const std::vector<ModelSystemId> models = {
        ModelSystemId::decoupled(1, 1),    ModelSystemId::decoupled(-1, -1),
        ModelSystemId::decoupled(1, -1),   ModelSystemId::decoupled(1, 0),
        ModelSystemId::decoupled(-1, 0),   ModelSystemId::new_a(1),
        ModelSystemId::new_a(-1),          ModelSystemId::sunagawa(),
        ModelSystemId::new2(),             ModelSystemId::complex_gauge(1),
        ModelSystemId::complex_gauge(-1),  ModelSystemId::new_b(1),
        ModelSystemId::new_b(-1),          ModelSystemId::new3(),
    };
    return models;
}

}  // namespace nlkg::testing
