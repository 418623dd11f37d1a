#include "nlkg/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "nlkg/errors.hpp"
#include "nlkg/fourier.hpp"

namespace nlkg {

namespace {

// 4-point Lagrange interpolation at x, nodes xs (distinct), values ys.
double lagrange4(const std::array<double, 4>& xs, const std::array<double, 4>& ys, double x) {
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        double w = ys[static_cast<std::size_t>(i)];
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            w *= (x - xs[static_cast<std::size_t>(j)]) /
                 (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)]);
        }
        acc += w;
    }
    return acc;
}

// Cubic interpolation of a grid field at x in [-X, X).
double sample_grid(const std::vector<double>& f, double half_width, double x) {
    const auto n = f.size();
    const double dx = 2.0 * half_width / static_cast<double>(n);
    const double pos = (x + half_width) / dx;
    auto i1 = static_cast<long long>(std::floor(pos));
    const long long lo = i1 - 1;
    if (lo < 0 || static_cast<std::size_t>(lo + 3) >= n) return 0.0;  // off the padded domain
    std::array<double, 4> xs{}, ys{};
    for (int j = 0; j < 4; ++j) {
        const auto idx = static_cast<std::size_t>(lo + j);
        xs[static_cast<std::size_t>(j)] = -half_width + static_cast<double>(idx) * dx;
        ys[static_cast<std::size_t>(j)] = f[idx];
    }
    return lagrange4(xs, ys, x);
}

struct FieldSamples {
    double u1, u2, du1_t, du2_t, du1_x, du2_x;
    bool valid;
};

// Spatial-derivative cache per snapshot index.
struct DerivCache {
    const std::vector<SimState>* series;
    double half_width;
    RealFft fft;
    std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> dx;

    DerivCache(const std::vector<SimState>& s, double hw, std::size_t n)
        : series(&s), half_width(hw), fft(n) {}

    const std::pair<std::vector<double>, std::vector<double>>& get(std::size_t i) {
        auto it = dx.find(i);
        if (it != dx.end()) return it->second;
        std::pair<std::vector<double>, std::vector<double>> d;
        fft.derivative((*series)[i].u1, d.first, 2.0 * half_width);
        fft.derivative((*series)[i].u2, d.second, 2.0 * half_width);
        return dx.emplace(i, std::move(d)).first->second;
    }
};

}  // namespace

double hyperbola_crossing_time(double tau, double z, double support_radius) {
    return tau * std::cosh(z) - 2.0 * support_radius;
}

std::vector<double> plan_capture_times(const std::vector<double>& taus,
                                       const std::vector<double>& zgrid,
                                       double support_radius) {
    std::vector<double> out;
    for (double tau : taus)
        for (double z : zgrid) out.push_back(hyperbola_crossing_time(tau, z, support_radius));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProfileDiagnostics> extract_profiles(const std::vector<SimState>& series,
                                                 const SimConfig& cfg) {
    if (series.size() < 4)
        throw precondition_error("profile extraction needs at least 4 snapshots");
    if (cfg.diag_taus.empty())
        throw precondition_error("no diagnostic taus requested");

    std::vector<double> times(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) times[i] = series[i].t;

    DerivCache cache(series, cfg.half_width, cfg.grid_size);

    auto sample_at = [&](double t, double x) -> FieldSamples {
        // 4 bracketing snapshots with t in the middle interval.
        const auto hi =
            static_cast<std::size_t>(std::upper_bound(times.begin(), times.end(), t) -
                                     times.begin());
        if (hi < 2 || hi + 2 > series.size()) return {0, 0, 0, 0, 0, 0, false};
        const std::size_t lo = hi - 2;
        // Reject stencils with gaps too wide for cubic accuracy.
        const double span = times[lo + 3] - times[lo];
        if (span > 80.0 * cfg.dt) return {0, 0, 0, 0, 0, 0, false};

        std::array<double, 4> ts{}, su1{}, su2{}, sv1{}, sv2{}, sx1{}, sx2{};
        for (int j = 0; j < 4; ++j) {
            const std::size_t idx = lo + static_cast<std::size_t>(j);
            const auto& d = cache.get(idx);
            ts[static_cast<std::size_t>(j)] = times[idx];
            su1[static_cast<std::size_t>(j)] = sample_grid(series[idx].u1, cfg.half_width, x);
            su2[static_cast<std::size_t>(j)] = sample_grid(series[idx].u2, cfg.half_width, x);
            sv1[static_cast<std::size_t>(j)] = sample_grid(series[idx].v1, cfg.half_width, x);
            sv2[static_cast<std::size_t>(j)] = sample_grid(series[idx].v2, cfg.half_width, x);
            sx1[static_cast<std::size_t>(j)] = sample_grid(d.first, cfg.half_width, x);
            sx2[static_cast<std::size_t>(j)] = sample_grid(d.second, cfg.half_width, x);
        }
        return {lagrange4(ts, su1, t), lagrange4(ts, su2, t), lagrange4(ts, sv1, t),
                lagrange4(ts, sv2, t), lagrange4(ts, sx1, t), lagrange4(ts, sx2, t), true};
    };

    std::vector<ProfileDiagnostics> out;
    const double t_lo = times.front(), t_hi = times.back();
    for (double tau : cfg.diag_taus) {
        if (tau < cfg.tau0)
            throw precondition_error("requested tau below tau0");
        const double t_center = hyperbola_crossing_time(tau, 0.0, cfg.support_radius);
        if (t_center < t_lo || t_center > t_hi)
            throw precondition_error("requested tau outside the simulated range");

        ProfileDiagnostics diag;
        diag.tau = tau;
        for (double z : cfg.diag_z) {
            const double t = hyperbola_crossing_time(tau, z, cfg.support_radius);
            const double x = tau * std::sinh(z);
            diag.z.push_back(z);

            FieldSamples s{0, 0, 0, 0, 0, 0, false};
            if (t >= t_lo && t <= t_hi && std::abs(x) < cfg.half_width) s = sample_at(t, x);
            if (!s.valid) {
                diag.alpha1.emplace_back(0.0);
                diag.alpha2.emplace_back(0.0);
                diag.envelope1.push_back(0.0);
                diag.envelope2.push_back(0.0);
                diag.valid.push_back(false);
                continue;
            }

            // d_tau = cosh(z) d_t + sinh(z) d_x on functions of (t, x).
            const double chz = std::cosh(z), shz = std::sinh(z);
            const double chk = std::cosh(cfg.kappa * z);
            const double rt = std::sqrt(tau);
            const double time_phys = t;

            auto alpha = [&](double u, double ut, double ux) {
                const double U = rt * chk * u;
                const double dU = 0.5 / rt * chk * u + rt * chk * (chz * ut + shz * ux);
                const std::complex<double> i{0.0, 1.0};
                return 0.5 * (U - i * dU) * std::exp(-i * tau);
            };
            const auto a1 = alpha(s.u1, s.du1_t, s.du1_x);
            const auto a2 = alpha(s.u2, s.du2_t, s.du2_x);
            diag.alpha1.push_back(a1);
            diag.alpha2.push_back(a2);
            const double env_scale = 2.0 * std::sqrt(std::max(0.0, time_phys)) / (rt * chk);
            diag.envelope1.push_back(env_scale * std::abs(a1));
            diag.envelope2.push_back(env_scale * std::abs(a2));
            diag.valid.push_back(true);
        }
        out.push_back(std::move(diag));
    }
    return out;
}

}  // namespace nlkg
