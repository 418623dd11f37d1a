#include "nlkg/limit_ode.hpp"

#include <cmath>
#include <cstdio>

#include "nlkg/errors.hpp"
#include "nlkg/matrix_rep.hpp"
#include "nlkg/tolerances.hpp"

namespace nlkg {

namespace {

const Complex kHalfI{0.0, 0.5};

// The cubic bracket of equation j (j = 0,1) with weights l[4j..4j+3]:
// 3 l0 |a1|^2 a1 + l1 (2|a1|^2 a2 + a1^2 conj a2)
// + l2 (2 a1 |a2|^2 + conj a1 a2^2) + 3 l3 |a2|^2 a2.
Complex resonant_bracket(const double* l, Complex a1, Complex a2) {
    const double n1 = std::norm(a1), n2 = std::norm(a2);
    return 3.0 * l[0] * n1 * a1 + l[1] * (2.0 * n1 * a2 + a1 * a1 * std::conj(a2)) +
           l[2] * (2.0 * a1 * n2 + std::conj(a1) * a2 * a2) + 3.0 * l[3] * n2 * a2;
}

bool state_ok(const Complex& a1, const Complex& a2) {
    return std::isfinite(a1.real()) && std::isfinite(a1.imag()) && std::isfinite(a2.real()) &&
           std::isfinite(a2.imag()) && std::abs(a1) < tol::kBlowUp && std::abs(a2) < tol::kBlowUp;
}

}  // namespace

double ConservedQuantity::value_at(const OdeState& st) const {
    if (kind == Kind::ImagPairing) return 2.0 * std::imag(std::conj(st.alpha1) * st.alpha2);
    return abc[0] * std::norm(st.alpha1) +
           2.0 * abc[1] * std::real(std::conj(st.alpha1) * st.alpha2) +
           abc[2] * std::norm(st.alpha2);
}

std::string ConservedQuantity::label() const {
    if (kind == Kind::ImagPairing) return "2Im(conj(a1)a2)";
    auto fmt = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", x);
        return std::string(buf);
    };
    return "Q(" + fmt(abc[0]) + "," + fmt(abc[1]) + "," + fmt(abc[2]) + ")";
}

std::pair<Complex, Complex> ode_rhs(const OdeState& st, const Coefficients& c) {
    const auto& l = c.values();
    return {-kHalfI * resonant_bracket(&l[0], st.alpha1, st.alpha2),
            -kHalfI * resonant_bracket(&l[4], st.alpha1, st.alpha2)};
}

std::vector<OdeState> integrate(const Coefficients& c, const OdeState& initial, double s_end,
                                double dt) {
    if (!(dt > 0)) throw invalid_input("ode step must be positive");
    if (!(s_end >= 0)) throw invalid_input("ode horizon must be nonnegative");

    const auto n = static_cast<std::size_t>(std::llround(s_end / dt));
    std::vector<OdeState> out;
    out.reserve(n + 1);
    OdeState st = initial;
    st.s = initial.s;
    out.push_back(st);

    auto f = [&](const OdeState& x) { return ode_rhs(x, c); };
    for (std::size_t i = 0; i < n; ++i) {
        const auto k1 = f(st);
        OdeState mid1{st.alpha1 + 0.5 * dt * k1.first, st.alpha2 + 0.5 * dt * k1.second, st.s};
        const auto k2 = f(mid1);
        OdeState mid2{st.alpha1 + 0.5 * dt * k2.first, st.alpha2 + 0.5 * dt * k2.second, st.s};
        const auto k3 = f(mid2);
        OdeState end{st.alpha1 + dt * k3.first, st.alpha2 + dt * k3.second, st.s};
        const auto k4 = f(end);
        st.alpha1 += dt / 6.0 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
        st.alpha2 += dt / 6.0 * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
        st.s += dt;
        if (!state_ok(st.alpha1, st.alpha2))
            throw blow_up("ode state exceeded the blow-up threshold", out.back().s);
        out.push_back(st);
    }
    return out;
}

std::vector<ConservedQuantity> conserved_quantities(const Coefficients& c) {
    std::vector<ConservedQuantity> out;
    const StructureMatrix a = coeffs_to_matrix(c);

    if (a.is_exact()) {
        int dim = 0;
        auto basis = exact_kernel_basis(a.exact_mat(), &dim);
        for (int i = 0; i < dim; ++i) {
            ConservedQuantity q;
            q.kind = ConservedQuantity::Kind::Quadratic;
            for (std::size_t j = 0; j < 3; ++j)
                q.abc[j] = to_double(basis[static_cast<std::size_t>(i)][j]);
            out.push_back(q);
        }
    } else {
        const Svd3 s = svd3(a.mat());
        for (std::size_t j = 0; j < 3; ++j) {
            const bool null_dir = s.sigma[0] < tol::kRankZero ||
                                  s.sigma[j] <= tol::kRankRel * s.sigma[0];
            if (!null_dir) continue;
            ConservedQuantity q;
            q.kind = ConservedQuantity::Kind::Quadratic;
            for (std::size_t i = 0; i < 3; ++i) q.abc[i] = s.v(i, j);
            out.push_back(q);
        }
    }

    // The pairing needs only the equality part of the structural condition;
    // the zero system carries it too.
    bool pairing;
    if (c.is_exact()) {
        const auto& l = c.exact_values();
        pairing = l[3] == 0 && l[4] == 0 && l[5] == l[0] && l[6] == l[1] && l[7] == l[2];
    } else {
        const auto& l = c.values();
        const double eps = std::max(tol::kAbsFloor, tol::kRel * c.max_abs());
        pairing = std::abs(l[3]) <= eps && std::abs(l[4]) <= eps &&
                  std::abs(l[5] - l[0]) <= eps && std::abs(l[6] - l[1]) <= eps &&
                  std::abs(l[7] - l[2]) <= eps;
    }
    if (pairing) out.push_back({ConservedQuantity::Kind::ImagPairing, {}});
    return out;
}

OdeState closed_form_new1(const OdeState& initial, double s) {
    const Complex i{0.0, 1.0};
    const Complex cp = (initial.alpha1 + i * initial.alpha2) / 2.0;
    const Complex cm = (initial.alpha1 - i * initial.alpha2) / 2.0;
    const Complex ep = std::exp(-6.0 * i * cp * std::conj(cm) * s);
    const Complex em = std::exp(-6.0 * i * std::conj(cp) * cm * s);
    return {cp * ep + cm * em, -i * cp * ep + i * cm * em, initial.s + s};
}

OdeState closed_form_new2(const OdeState& initial, double s) {
    const Complex cp = (initial.alpha1 + initial.alpha2) / 2.0;
    const Complex cm = (initial.alpha1 - initial.alpha2) / 2.0;
    // Exponents via the invariants b1 = |a1|^2-|a2|^2 and b2 = 2 Im(conj(a1)a2):
    // a1 = c+ e^{-(3i b1 + b2)s/2} + c- e^{-(3i b1 - b2)s/2}, a2 the difference.
    const double b1 = std::norm(initial.alpha1) - std::norm(initial.alpha2);
    const double b2 = 2.0 * std::imag(std::conj(initial.alpha1) * initial.alpha2);
    const Complex i{0.0, 1.0};
    const Complex ep = std::exp(-(3.0 * i * b1 + b2) * (s / 2.0));
    const Complex em = std::exp(-(3.0 * i * b1 - b2) * (s / 2.0));
    return {cp * ep + cm * em, cp * ep - cm * em, initial.s + s};
}

std::pair<Complex, Complex> rhs_with_nonresonant(double tau, const OdeState& st, double z,
                                                 const Coefficients& c, double kappa) {
    if (!(tau >= 1.0)) throw invalid_input("tau must be >= 1");
    const auto& l = c.values();
    const double ch = std::cosh(kappa * z);
    const double w = 1.0 / (ch * ch);
    const Complex i{0.0, 1.0};
    const Complex e2 = std::exp(2.0 * i * tau);
    const Complex e2c = std::conj(e2);
    const Complex e4c = e2c * e2c;

    const Complex a1 = st.alpha1, a2 = st.alpha2;
    const Complex a1c = std::conj(a1), a2c = std::conj(a2);

    std::pair<Complex, Complex> out;
    for (int j = 0; j < 2; ++j) {
        const double* lj = &l[static_cast<std::size_t>(4 * j)];
        const Complex res = resonant_bracket(lj, a1, a2);
        const Complex plus2 =
            lj[0] * a1 * a1 * a1 + lj[1] * a1 * a1 * a2 + lj[2] * a1 * a2 * a2 +
            lj[3] * a2 * a2 * a2;
        const Complex minus2 = 3.0 * lj[0] * std::norm(a1) * a1c + lj[1] * a1c * a1c * a2 +
                               lj[2] * a1 * a2c * a2c + 3.0 * lj[3] * std::norm(a2) * a2c;
        const Complex minus4 =
            lj[0] * a1c * a1c * a1c + lj[1] * a1c * a1c * a2c + lj[2] * a1c * a2c * a2c +
            lj[3] * a2c * a2c * a2c;
        const Complex nr = w * (plus2 * e2 + minus2 * e2c + minus4 * e4c);
        const Complex total = -kHalfI * (w * res + nr) / tau;
        (j == 0 ? out.first : out.second) = total;
    }
    return out;
}

}  // namespace nlkg
