#pragma once

#include <complex>
#include <vector>

#include "nlkg/coefficients.hpp"

namespace nlkg {

using Complex = std::complex<double>;

/// State of the resonant profile ODE: complex pair (alpha1, alpha2) at
/// evolution parameter s.
struct OdeState {
    Complex alpha1{};
    Complex alpha2{};
    double s = 0.0;
};

/// Quadratic invariant a|a1|^2 + 2b Re(conj(a1) a2) + c|a2|^2, or the pairing
/// 2 Im(conj(a1) a2) preserved under the structural condition.
struct ConservedQuantity {
    enum class Kind { Quadratic, ImagPairing };
    Kind kind = Kind::Quadratic;
    Vec3<double> abc{};  // meaningful for Quadratic

    double value_at(const OdeState& st) const;
    std::string label() const;
};

/// Right-hand side d(alpha_j)/ds of the limit ODE system.
std::pair<Complex, Complex> ode_rhs(const OdeState& st, const Coefficients& c);

/// Fixed-step RK4 trajectory from `initial` to s_end, sampled every step
/// (initial state included). Throws blow_up when a component modulus exceeds
/// 1e12 or turns non-finite; the exception carries the last valid s.
std::vector<OdeState> integrate(const Coefficients& c, const OdeState& initial, double s_end,
                                double dt);

/// One Quadratic per kernel vector of the structure matrix (exact basis on the
/// rational path, SVD null space otherwise), plus ImagPairing when
/// l4=l5=0, l6=l1, l7=l2, l8=l3 hold.
std::vector<ConservedQuantity> conserved_quantities(const Coefficients& c);

/// Closed-form flow of the limit ODE with the rank-one model coefficients
/// (1,0,-3,0,0,3,0,-1): exponentials driven by c+- = (a1(0) +- i a2(0))/2.
OdeState closed_form_new1(const OdeState& initial, double s);

/// Closed-form flow of the limit ODE with (1,0,-1,0,0,1,0,-1), driven by
/// c'+- = (a1(0) +- a2(0))/2.
OdeState closed_form_new2(const OdeState& initial, double s);

/// Full tau-equation right-hand side: resonant bracket scaled by
/// 1/(tau cosh^2(kappa z)) plus the oscillatory e^{2i tau}, e^{-2i tau},
/// e^{-4i tau} terms; the 1/tau^2 differential-operator remainder is omitted.
std::pair<Complex, Complex> rhs_with_nonresonant(double tau, const OdeState& st, double z,
                                                 const Coefficients& c, double kappa);

}  // namespace nlkg
