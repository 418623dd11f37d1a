#pragma once

#include <vector>

#include "nlkg/profile.hpp"

namespace nlkg {

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r2 = 0.0;
    double stderr_slope = 0.0;
};

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Competition between |alpha2|(tau) ~ a + b log(tau) and ~ C tau^p at a fixed
/// z; both models are scored by R^2 in amplitude space.
struct FitReport {
    int n_samples = 0;
    double tau_min = 0.0, tau_max = 0.0;
    double z = 0.0;

    double a = 0.0, b = 0.0;      // log model
    double stderr_b = 0.0;
    double r2_log = 0.0;

    double pow_c = 0.0, pow_p = 0.0;  // power model (invalid if any sample <= 0)
    double r2_power = 0.0;
    bool power_valid = false;

    bool log_preferred = false;

    double phase_slope = 0.0;  // d arg(alpha1) / d log tau, the phase-correction estimate
    double phase_r2 = 0.0;
};

/// Requires >= 5 samples whose taus span a factor >= 5 (precondition_error
/// otherwise). The z value must be one of the grid points of the diagnostics.
FitReport fit_log_growth(const std::vector<ProfileDiagnostics>& diags, double z);

}  // namespace nlkg
