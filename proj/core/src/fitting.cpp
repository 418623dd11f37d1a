#include "nlkg/fitting.hpp"

#include <algorithm>
#include <cmath>

#include "nlkg/errors.hpp"

namespace nlkg {

namespace {

double r_squared(const std::vector<double>& y, const std::vector<double>& yhat) {
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        ss_tot += (y[i] - mean) * (y[i] - mean);
        ss_res += (y[i] - yhat[i]) * (y[i] - yhat[i]);
    }
    if (ss_tot <= 1e-300) return 0.0;
    return 1.0 - ss_res / ss_tot;
}

}  // namespace

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw invalid_input("linear fit needs >= 2 points");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) throw invalid_input("degenerate abscissae in linear fit");

    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;

    std::vector<double> yhat(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) yhat[i] = fit.intercept + fit.slope * x[i];
    fit.r2 = r_squared(y, yhat);

    if (x.size() > 2) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            ss_res += (y[i] - yhat[i]) * (y[i] - yhat[i]);
        const double var = ss_res / (n - 2.0);
        fit.stderr_slope = std::sqrt(var * n / denom);
    }
    return fit;
}

FitReport fit_log_growth(const std::vector<ProfileDiagnostics>& diags, double z) {
    std::vector<double> taus, amp, phase;
    for (const auto& d : diags) {
        auto it = std::min_element(d.z.begin(), d.z.end(), [&](double a, double b) {
            return std::abs(a - z) < std::abs(b - z);
        });
        if (it == d.z.end()) continue;
        const auto j = static_cast<std::size_t>(it - d.z.begin());
        if (std::abs(d.z[j] - z) > 1e-9 || !d.valid[j]) continue;
        taus.push_back(d.tau);
        amp.push_back(std::abs(d.alpha2[j]));
        phase.push_back(std::arg(d.alpha1[j]));
    }

    if (taus.size() < 5) throw precondition_error("log-growth fit needs >= 5 tau samples");
    const auto [mn, mx] = std::minmax_element(taus.begin(), taus.end());
    if (*mx < 5.0 * *mn)
        throw precondition_error("log-growth fit needs taus spanning a factor >= 5");

    FitReport rep;
    rep.n_samples = static_cast<int>(taus.size());
    rep.tau_min = *mn;
    rep.tau_max = *mx;
    rep.z = z;

    std::vector<double> logt(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) logt[i] = std::log(taus[i]);

    const LinearFit logfit = linear_fit(logt, amp);
    rep.a = logfit.intercept;
    rep.b = logfit.slope;
    rep.stderr_b = logfit.stderr_slope;
    rep.r2_log = logfit.r2;

    rep.power_valid = std::all_of(amp.begin(), amp.end(), [](double v) { return v > 0; });
    if (rep.power_valid) {
        std::vector<double> logy(amp.size());
        for (std::size_t i = 0; i < amp.size(); ++i) logy[i] = std::log(amp[i]);
        const LinearFit powfit = linear_fit(logt, logy);
        rep.pow_c = std::exp(powfit.intercept);
        rep.pow_p = powfit.slope;
        // Score the power law in amplitude space for a fair comparison.
        std::vector<double> yhat(amp.size());
        for (std::size_t i = 0; i < amp.size(); ++i)
            yhat[i] = rep.pow_c * std::pow(taus[i], rep.pow_p);
        rep.r2_power = r_squared(amp, yhat);
    }
    rep.log_preferred = !rep.power_valid || rep.r2_log >= rep.r2_power;

    // Phase-correction estimate from the unwrapped alpha1 phase.
    std::vector<double> unwrapped(phase.size());
    double offset = 0.0;
    for (std::size_t i = 0; i < phase.size(); ++i) {
        if (i > 0) {
            double d = phase[i] - phase[i - 1];
            while (d > 3.14159265358979323846) {
                offset -= 2 * 3.14159265358979323846;
                d -= 2 * 3.14159265358979323846;
            }
            while (d < -3.14159265358979323846) {
                offset += 2 * 3.14159265358979323846;
                d += 2 * 3.14159265358979323846;
            }
        }
        unwrapped[i] = phase[i] + offset;
    }
    const LinearFit pf = linear_fit(logt, unwrapped);
    rep.phase_slope = pf.slope;
    rep.phase_r2 = pf.r2;
    return rep;
}

}  // namespace nlkg
