#include "nlkg/coefficients.hpp"

#include <cmath>

#include "nlkg/errors.hpp"
#include "nlkg/tolerances.hpp"

namespace nlkg {

namespace {

void require_finite(const Vec8<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) throw invalid_input("coefficients must be finite");
}

}  // namespace

Coefficients Coefficients::from_doubles(const Vec8<double>& v) {
    require_finite(v);
    Coefficients c;
    c.lam_ = v;
    return c;
}

Coefficients Coefficients::from_rationals(const Vec8<Rational>& v) {
    Coefficients c;
    for (std::size_t i = 0; i < 8; ++i) c.lam_[i] = to_double(v[i]);
    c.exact_ = v;
    return c;
}

double Coefficients::max_abs() const {
    double m = 0.0;
    for (double x : lam_) m = std::max(m, std::abs(x));
    return m;
}

GL2Transform::GL2Transform(double a, double b, double c, double d) : m_{{a, b, c, d}} {
    for (double x : m_.m)
        if (!std::isfinite(x)) throw invalid_transform("transform entries must be finite");
    const double frob2 = a * a + b * b + c * c + d * d;
    if (std::abs(m_.det()) <= tol::kAbsFloor * std::max(1.0, frob2))
        throw invalid_transform("singular change of unknowns");
}

GL2Transform::GL2Transform(const Mat2<Rational>& exact) {
    if (exact.det() == 0) throw invalid_transform("singular change of unknowns");
    for (std::size_t i = 0; i < 4; ++i) m_.m[i] = to_double(exact.m[i]);
    exact_ = exact;
}

GL2Transform GL2Transform::inverse() const {
    if (exact_) return GL2Transform(exact_->inverse());
    Mat2<double> inv = m_.inverse();
    return {inv.m[0], inv.m[1], inv.m[2], inv.m[3]};
}

GL2Transform operator*(const GL2Transform& x, const GL2Transform& y) {
    if (x.exact_ && y.exact_) return GL2Transform(*x.exact_ * *y.exact_);
    Mat2<double> p = x.m_ * y.m_;
    return {p.m[0], p.m[1], p.m[2], p.m[3]};
}

Coefficients model_catalog(const ModelSystemId& id) {
    auto row = [](int l1, int l2, int l3, int l4, int l5, int l6, int l7, int l8) {
        return Coefficients::from_rationals({Rational(l1), Rational(l2), Rational(l3),
                                             Rational(l4), Rational(l5), Rational(l6),
                                             Rational(l7), Rational(l8)});
    };
    switch (id.family) {
        case ModelFamily::Decoupled:
            return row(id.p1, 0, 0, 0, 0, 0, 0, id.p2);
        case ModelFamily::ComplexGauge:
            return row(id.p1, 0, id.p1, 0, 0, id.p1, 0, id.p1);
        case ModelFamily::Sunagawa:
            return row(0, 0, 0, 0, 1, 0, 0, 0);
        case ModelFamily::NewA:
            return row(id.p1, 0, 0, 0, 0, 3 * id.p1, 0, 0);
        case ModelFamily::NewB:
            return row(id.p1, 0, 0, 0, 0, id.p1, 0, 0);
        case ModelFamily::New2:
            return row(1, 0, -3, 0, 0, 3, 0, -1);
        case ModelFamily::New3:
            return row(1, 0, -1, 0, 0, 1, 0, -1);
    }
    throw invalid_input("unknown model id");
}

std::string model_name(const ModelSystemId& id) {
    switch (id.family) {
        case ModelFamily::Decoupled: return "Decoupled";
        case ModelFamily::ComplexGauge: return "ComplexGauge";
        case ModelFamily::Sunagawa: return "Sunagawa";
        case ModelFamily::NewA: return "NewA";
        case ModelFamily::NewB: return "NewB";
        case ModelFamily::New2: return "New2";
        case ModelFamily::New3: return "New3";
    }
    return "?";
}

int roster_index(const ModelSystemId& id) {
    switch (id.family) {
        case ModelFamily::Decoupled: {
            const int l1 = id.p1, l8 = id.p2;
            if (l1 == 1 && l8 == 1) return 1;
            if (l1 == -1 && l8 == -1) return 2;
            if (l1 == 1 && l8 == -1) return 3;
            if (l1 == 1 && l8 == 0) return 4;
            if (l1 == -1 && l8 == 0) return 5;
            throw invalid_input("non-canonical decoupled parameters");
        }
        case ModelFamily::NewA: return id.p1 > 0 ? 6 : 7;
        case ModelFamily::Sunagawa: return 8;
        case ModelFamily::New2: return 9;
        case ModelFamily::ComplexGauge: return id.p1 > 0 ? 1 : 2;
        case ModelFamily::NewB: return id.p1 > 0 ? 3 : 4;
        case ModelFamily::New3: return 5;
    }
    throw invalid_input("unknown model id");
}

}  // namespace nlkg
