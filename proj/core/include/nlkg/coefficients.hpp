#pragma once

#include <array>
#include <optional>
#include <string>

#include "nlkg/linalg.hpp"
#include "nlkg/rational.hpp"

namespace nlkg {

/// Coefficient vector (l1..l8) of a cubic Klein-Gordon pair, in the fixed
/// monomial order u1^3, u1^2 u2, u1 u2^2, u2^3 per equation.
///
/// Values live in double precision; when the inputs are exact rationals the
/// value additionally carries the exact vector and downstream sign/rank
/// decisions use it.
class Coefficients {
  public:
    Coefficients() = default;

    static Coefficients from_doubles(const Vec8<double>& v);
    static Coefficients from_rationals(const Vec8<Rational>& v);

    const Vec8<double>& values() const { return lam_; }
    double operator[](std::size_t i) const { return lam_[i]; }

    bool is_exact() const { return exact_.has_value(); }
    const Vec8<Rational>& exact_values() const { return *exact_; }

    double max_abs() const;

  private:
    Vec8<double> lam_{};
    std::optional<Vec8<Rational>> exact_;
};

/// Invertible 2x2 change of unknowns (v1,v2) = M (u1,u2).
class GL2Transform {
  public:
    /// Throws invalid_transform unless |det| > 1e-12 * max(1, ||M||_F^2)
    /// (exact nonzero determinant on the rational path).
    GL2Transform(double a, double b, double c, double d);
    explicit GL2Transform(const Mat2<Rational>& exact);

    static GL2Transform identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static GL2Transform swap_vars() { return {0.0, 1.0, 1.0, 0.0}; }
    static GL2Transform scaling(double p, double q) { return {p, 0.0, 0.0, q}; }

    double a() const { return m_.a(); }
    double b() const { return m_.b(); }
    double c() const { return m_.c(); }
    double d() const { return m_.d(); }
    const Mat2<double>& mat() const { return m_; }
    double det() const { return m_.det(); }

    bool is_exact() const { return exact_.has_value(); }
    const Mat2<Rational>& exact_mat() const { return *exact_; }

    GL2Transform inverse() const;
    friend GL2Transform operator*(const GL2Transform& x, const GL2Transform& y);

  private:
    Mat2<double> m_{};
    std::optional<Mat2<Rational>> exact_;
};

/// Canonical model systems (the representatives of the classification).
enum class ModelFamily { Decoupled, ComplexGauge, Sunagawa, NewA, NewB, New2, New3 };

struct ModelSystemId {
    ModelFamily family;
    // Decoupled uses (p1, p2) = (l1, l8) in {-1,0,1}, not both zero.
    // ComplexGauge / NewA / NewB use p1 in {-1,1}. Sunagawa / New2 / New3 take none.
    int p1 = 0;
    int p2 = 0;

    static ModelSystemId decoupled(int l1, int l8) { return {ModelFamily::Decoupled, l1, l8}; }
    static ModelSystemId complex_gauge(int l) { return {ModelFamily::ComplexGauge, l, 0}; }
    static ModelSystemId sunagawa() { return {ModelFamily::Sunagawa, 0, 0}; }
    static ModelSystemId new_a(int l) { return {ModelFamily::NewA, l, 0}; }
    static ModelSystemId new_b(int l) { return {ModelFamily::NewB, l, 0}; }
    static ModelSystemId new2() { return {ModelFamily::New2, 0, 0}; }
    static ModelSystemId new3() { return {ModelFamily::New3, 0, 0}; }

    bool operator==(const ModelSystemId& o) const = default;
};

/// Canonical coefficient vector of a model system (exact integer entries).
Coefficients model_catalog(const ModelSystemId& id);

std::string model_name(const ModelSystemId& id);

/// Roster position in the display order of the classification lists:
/// Z1 entries 1..9, Z2 entries 1..5.
int roster_index(const ModelSystemId& id);

}  // namespace nlkg
