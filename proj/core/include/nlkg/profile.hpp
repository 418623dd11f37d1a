#pragma once

#include <complex>
#include <vector>

#include "nlkg/sim.hpp"

namespace nlkg {

/// Profile data along one hyperbola t + 2B = tau cosh z.
/// alpha_j = (U_j - i d_tau U_j) e^{-i tau} / 2 with U_j = tau^(1/2) cosh(kappa z) u_j.
/// Points that fall outside the recorded time range or the grid are
/// zero-filled and flagged invalid.
struct ProfileDiagnostics {
    double tau = 0.0;
    std::vector<double> z;
    std::vector<std::complex<double>> alpha1, alpha2;
    std::vector<double> envelope1, envelope2;  // sqrt(t) * |u_j| envelope at the crossing
    std::vector<bool> valid;
};

/// Time at which the hyperbola (tau, z) crosses the simulation clock.
double hyperbola_crossing_time(double tau, double z, double support_radius);

/// Capture times covering all requested (tau, z) crossings, for SimConfig.
std::vector<double> plan_capture_times(const std::vector<double>& taus,
                                       const std::vector<double>& zgrid,
                                       double support_radius);

/// Interpolates u_j, d_t u_j, d_x u_j from the snapshot series at each
/// requested crossing (cubic in t over 4 bracketing snapshots, cubic in x)
/// and assembles the alpha profiles. Throws precondition_error when a tau
/// has no 4 bracketing snapshots within a usable spacing.
std::vector<ProfileDiagnostics> extract_profiles(const std::vector<SimState>& series,
                                                 const SimConfig& cfg);

}  // namespace nlkg
