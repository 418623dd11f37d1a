#include "nlkg/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "nlkg/errors.hpp"
#include "nlkg/tolerances.hpp"
#include "rank1_analysis.hpp"

namespace nlkg {

namespace {

constexpr double kPi = 3.14159265358979323846;

int sign_with_tol(double x, double threshold, bool* borderline) {
    if (borderline && std::abs(x) >= threshold / tol::kBorderline &&
        std::abs(x) <= threshold * tol::kBorderline)
        *borderline = true;
    if (std::abs(x) <= threshold) return 0;
    return x > 0 ? 1 : -1;
}

// Discriminant of the (unnormalized) kernel direction; scale-invariant sign.
template <class S>
S disc_of(const Vec3<S>& v) {
    return v[1] * v[1] - S(4) * v[0] * v[2];
}

// ell = 0 iff the column direction d of A = d nu^T satisfies d2^2 = d1 d3
// (the decomposition identity d2^2 - d1 d3 = ell^2 up to positive scale).
template <class S>
S ell_square_proxy(const Mat3<S>& a, const Vec3<S>& nu_raw) {
    const S ww = dot3(nu_raw, nu_raw);
    const Vec3<S> aw = a * nu_raw;
    const Vec3<S> d{aw[0] / ww, aw[1] / ww, aw[2] / ww};
    return d[1] * d[1] - d[0] * d[2];
}

struct RankOneView {
    KernelDirection nu;
    int disc = 0;
    bool borderline = false;
};

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Rank0: return "Rank0";
        case Family::Z1_plus: return "Z1_plus";
        case Family::Z1_zero: return "Z1_zero";
        case Family::Z1_minus: return "Z1_minus";
        case Family::Z2: return "Z2";
        case Family::Rank2_nonZ2: return "Rank2_nonZ2";
        case Family::Rank3: return "Rank3";
    }
    return "?";
}

KernelDirection kernel_direction(const StructureMatrix& a) {
    if (rank_of(a) != 1) throw not_rank_one("kernel direction requires rank-one input");

    KernelDirection out;
    if (a.is_exact()) {
        const auto& e = a.exact_mat();
        Vec3<Rational> best{};
        bool found = false;
        for (std::size_t i = 0; i < 3 && !found; ++i) {
            Vec3<Rational> row{e(i, 0), e(i, 1), e(i, 2)};
            if (row[0] != 0 || row[1] != 0 || row[2] != 0) {
                best = row;
                found = true;
            }
        }
        for (std::size_t i = 0; i < 3; ++i) {
            if (best[i] == 0) continue;
            out.pivot = static_cast<int>(i);
            if (best[i] < 0)
                for (auto& x : best) x = -x;
            break;
        }
        out.exact_raw = best;
        Vec3<double> v{to_double(best[0]), to_double(best[1]), to_double(best[2])};
        const double n = norm3(v);
        out.nu = {v[0] / n, v[1] / n, v[2] / n};
        return out;
    }

    const auto& m = a.mat();
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec3<double> row{m(i, 0), m(i, 1), m(i, 2)};
        const double n = norm3(row);
        if (n > best_norm) {
            best_norm = n;
            best = i;
        }
    }
    Vec3<double> v{m(best, 0) / best_norm, m(best, 1) / best_norm, m(best, 2) / best_norm};
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(v[i]) <= tol::kRel) continue;
        out.pivot = static_cast<int>(i);
        if (v[i] < 0)
            for (auto& x : v) x = -x;
        break;
    }
    out.nu = v;
    return out;
}

int discriminant_sign(const KernelDirection& nu) {
    if (nu.exact_raw) return sign_of(disc_of<Rational>(*nu.exact_raw));
    return sign_with_tol(disc_of<double>(nu.nu), tol::kRel, nullptr);
}

std::vector<double> curve_intersections(const KernelDirection& nu) {
    const int disc = discriminant_sign(nu);
    if (disc < 0) return {};

    const double a = nu.nu[0], b = nu.nu[1], c = nu.nu[2];
    const double amp = std::hypot(a - c, b);
    const double phi = std::atan2(b, a - c);

    if (disc == 0) {
        // Tangency: sin(theta + phi) = -(a+c)/amp = +-1 up to roundoff.
        const double h = amp > 0 ? -(a + c) / amp : -1.0;
        const double t = h >= 0 ? kPi / 2 : -kPi / 2;
        return {detail::wrap_2pi(t - phi)};
    }

    const double h = -(a + c) / amp;  // |h| < 1 when disc > 0
    const double clamped = std::clamp(h, -1.0, 1.0);
    const double base = std::asin(clamped);
    double t1 = detail::wrap_2pi(base - phi);
    double t2 = detail::wrap_2pi(kPi - base - phi);
    if (t1 > t2) std::swap(t1, t2);
    return {t1, t2};
}

bool z2_condition(const Coefficients& c) {
    if (c.is_exact()) {
        const auto& l = c.exact_values();
        return (l[0] != 0 || l[1] != 0 || l[2] != 0) && l[3] == 0 && l[4] == 0 &&
               l[5] == l[0] && l[6] == l[1] && l[7] == l[2];
    }
    const auto& l = c.values();
    const double eps = std::max(tol::kAbsFloor, tol::kRel * c.max_abs());
    auto eq = [&](double x, double y) { return std::abs(x - y) <= eps; };
    const bool head_nonzero =
        std::abs(l[0]) > eps || std::abs(l[1]) > eps || std::abs(l[2]) > eps;
    return head_nonzero && eq(l[3], 0) && eq(l[4], 0) && eq(l[5], l[0]) && eq(l[6], l[1]) &&
           eq(l[7], l[2]);
}

ClassLabel classify(const Coefficients& c) {
    ClassLabel label;
    label.exact = c.is_exact();

    const StructureMatrix a = coeffs_to_matrix(c);
    const int rank = rank_of(a);
    label.borderline = rank_is_borderline(a);

    if (rank == 0) {
        label.family = Family::Rank0;
        return label;
    }
    if (rank == 3) {
        label.family = Family::Rank3;
        return label;
    }

    if (rank == 2) {
        if (!z2_condition(c)) {
            label.family = Family::Rank2_nonZ2;
            return label;
        }
        label.family = Family::Z2;
        const auto& l = c.values();
        int s2;
        if (c.is_exact()) {
            const auto& e = c.exact_values();
            s2 = sign_of(e[1] * e[1] - Rational(4) * e[0] * e[2]);
        } else {
            const double scale = std::max(1.0, c.max_abs());
            s2 = sign_with_tol(l[1] * l[1] - 4 * l[0] * l[2], tol::kRel * scale * scale,
                               &label.borderline);
        }
        if (s2 < 0) {
            label.model = ModelSystemId::complex_gauge(l[0] > 0 ? 1 : -1);
        } else if (s2 == 0) {
            int lam;
            if (c.is_exact())
                lam = c.exact_values()[0] != 0 ? sign_of(c.exact_values()[0])
                                               : sign_of(c.exact_values()[2]);
            else
                lam = std::abs(l[0]) > tol::kAbsFloor ? (l[0] > 0 ? 1 : -1)
                                                      : (l[2] > 0 ? 1 : -1);
            label.model = ModelSystemId::new_b(lam);
        } else {
            label.model = ModelSystemId::new3();
        }
        label.roster = roster_index(*label.model);
        return label;
    }

    // rank 1
    const KernelDirection nu = kernel_direction(a);
    int disc;
    if (nu.exact_raw) {
        disc = sign_of(disc_of<Rational>(*nu.exact_raw));
    } else {
        disc = sign_with_tol(disc_of<double>(nu.nu), tol::kRel, &label.borderline);
    }

    if (disc > 0) {
        label.family = Family::Z1_plus;
        const auto thetas = curve_intersections(nu);
        const auto data = detail::analyze_z1_plus(a, thetas[0], thetas[1]);
        if (std::abs(thetas[0] - thetas[1]) < 1e-7) label.borderline = true;
        const double cscale = std::max(std::abs(data.c1), std::abs(data.c2));
        int l1 = sign_with_tol(data.c1, tol::kRel * cscale, &label.borderline);
        int l8 = sign_with_tol(data.c2, tol::kRel * cscale, &label.borderline);
        if ((l1 == -1 && l8 == 1) || (l1 == 0 && l8 != 0)) std::swap(l1, l8);
        label.model = ModelSystemId::decoupled(l1, l8);
    } else if (disc == 0) {
        label.family = Family::Z1_zero;
        int ell_sign;
        if (a.is_exact() && nu.exact_raw) {
            const Rational proxy = ell_square_proxy<Rational>(a.exact_mat(), *nu.exact_raw);
            if (proxy == 0) {
                ell_sign = 0;
            } else {
                const auto data =
                    detail::analyze_z1_zero_impl<Rational>(a.exact_mat(), *nu.exact_raw);
                ell_sign = sign_of(data.ell);
            }
        } else {
            const double proxy = ell_square_proxy<double>(a.mat(), nu.nu);
            const double scale = std::max(tol::kAbsFloor, a.max_abs());
            const int zero =
                sign_with_tol(proxy, tol::kRel * scale * scale, &label.borderline);
            if (zero == 0) {
                ell_sign = 0;
            } else {
                const auto data = detail::analyze_z1_zero_impl<double>(a.mat(), nu.nu);
                ell_sign = sign_of(data.ell);
            }
        }
        label.model =
            ell_sign == 0 ? ModelSystemId::sunagawa() : ModelSystemId::new_a(ell_sign);
    } else {
        label.family = Family::Z1_minus;
        label.model = ModelSystemId::new2();
    }
    label.roster = roster_index(*label.model);
    return label;
}

}  // namespace nlkg
