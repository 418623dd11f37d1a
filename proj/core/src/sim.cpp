#include "nlkg/sim.hpp"

#include <algorithm>
#include <cmath>

#include "nlkg/errors.hpp"
#include "nlkg/tolerances.hpp"

namespace nlkg {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Profile gaussian_profile(double amplitude, double width, double center) {
    return [=](double x) {
        const double u = (x - center) / width;
        return amplitude * std::exp(-u * u);
    };
}

Profile zero_profile() {
    return [](double) { return 0.0; };
}

void SimConfig::validate() const {
    if (grid_size == 0 || (grid_size & (grid_size - 1)) != 0)
        throw invalid_input("grid size must be a power of two");
    if (!(dt > 0)) throw invalid_input("time step must be positive");
    if (!(t_end >= 0)) throw invalid_input("end time must be nonnegative");
    if (!(half_width > 0)) throw invalid_input("domain half-width must be positive");
    if (!(support_radius > 0)) throw invalid_input("support radius must be positive");
    if (!(kappa > 3.5)) throw invalid_input("kappa must exceed 7/2");
    if (!(tau0 > std::max(1.0, 2.0 * support_radius)))
        throw invalid_input("tau0 must exceed max(1, 2B)");
    if (half_width < t_end + support_radius + 1.0)
        throw invalid_input("domain too small: need X >= T + B + margin");
    const double kmax = kPi / dx();
    if (dt * std::sqrt(1.0 + kmax * kmax) >= 1.0)
        throw invalid_input("time step too large for the grid's top frequency");
}

double SimState::max_abs() const {
    double m = 0.0;
    for (const auto* f : {&u1, &u2, &v1, &v2})
        for (double x : *f) m = std::max(m, std::abs(x));
    return m;
}

Simulator::Simulator(const SimConfig& cfg)
    : cfg_(cfg), fft_(cfg.grid_size), omega_(cfg.grid_size / 2 + 1),
      spec_u_(cfg.grid_size / 2 + 1), spec_v_(cfg.grid_size / 2 + 1) {
    cfg_.validate();
    const std::size_t n = cfg_.grid_size;
    const double dk = kPi / cfg_.half_width;  // 2*pi / (2X)
    for (std::size_t i = 0; i < omega_.size(); ++i) {
        const double k = dk * static_cast<double>(i);
        omega_[i] = std::sqrt(1.0 + k * k);
    }
    state_.t = 0.0;
    state_.u1.resize(n);
    state_.u2.resize(n);
    state_.v1.resize(n);
    state_.v2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = -cfg_.half_width + static_cast<double>(i) * cfg_.dx();
        state_.u1[i] = cfg_.epsilon * cfg_.u10(x);
        state_.v1[i] = cfg_.epsilon * cfg_.u11(x);
        state_.u2[i] = cfg_.epsilon * cfg_.u20(x);
        state_.v2[i] = cfg_.epsilon * cfg_.u21(x);
    }
}

// Exact propagation of u_tt = u_xx - u over time h, mode by mode:
// (u, v) -> (cos(wh) u + sin(wh)/w v, -w sin(wh) u + cos(wh) v).
void Simulator::half_kg(double h) {
    for (auto [u, v] : {std::pair{&state_.u1, &state_.v1}, std::pair{&state_.u2, &state_.v2}}) {
        fft_.forward(u->data(), spec_u_.data());
        fft_.forward(v->data(), spec_v_.data());
        for (std::size_t i = 0; i < omega_.size(); ++i) {
            const double w = omega_[i];
            const double cs = std::cos(w * h), sn = std::sin(w * h);
            const auto su = spec_u_[i], sv = spec_v_[i];
            spec_u_[i] = cs * su + sn / w * sv;
            spec_v_[i] = -w * sn * su + cs * sv;
        }
        fft_.inverse(spec_u_.data(), u->data());
        fft_.inverse(spec_v_.data(), v->data());
    }
}

void Simulator::step() {
    const double dt = cfg_.dt;
    half_kg(dt / 2);

    const auto& l = cfg_.coefficients.values();
    const std::size_t n = cfg_.grid_size;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = state_.u1[i], b = state_.u2[i];
        const double a2 = a * a, b2 = b * b;
        const double f1 = l[0] * a2 * a + l[1] * a2 * b + l[2] * a * b2 + l[3] * b2 * b;
        const double f2 = l[4] * a2 * a + l[5] * a2 * b + l[6] * a * b2 + l[7] * b2 * b;
        state_.v1[i] += dt * f1;
        state_.v2[i] += dt * f2;
    }

    half_kg(dt / 2);
    state_.t += dt;

    const double m = state_.max_abs();
    if (!std::isfinite(m) || m > tol::kBlowUp)
        throw blow_up("field exceeded the blow-up threshold", state_.t - dt);
}

void Simulator::set_state(const SimState& s) {
    if (s.u1.size() != cfg_.grid_size || s.u2.size() != cfg_.grid_size ||
        s.v1.size() != cfg_.grid_size || s.v2.size() != cfg_.grid_size)
        throw invalid_input("state arrays do not match the configured grid");
    state_ = s;
}

SimState step(const SimState& state, const SimConfig& cfg) {
    Simulator sim(cfg);
    sim.set_state(state);
    sim.step();
    return sim.state();
}

std::vector<SimState> run(const SimConfig& cfg, const std::function<void(const SimState&)>& observer,
                          std::vector<SimState>* partial) {
    Simulator sim(cfg);
    std::vector<SimState> series;

    // Steps at which fine capture bundles start.
    std::vector<std::size_t> capture_steps;
    for (double tc : cfg.capture_times) {
        if (tc < 0 || tc > cfg.t_end) continue;
        const auto center = static_cast<long long>(std::floor(tc / cfg.dt));
        const long long first = center - static_cast<long long>(cfg.capture_count / 2) + 1;
        for (std::size_t j = 0; j < cfg.capture_count; ++j) {
            const long long s = first + static_cast<long long>(j);
            if (s >= 0) capture_steps.push_back(static_cast<std::size_t>(s));
        }
    }
    std::sort(capture_steps.begin(), capture_steps.end());
    capture_steps.erase(std::unique(capture_steps.begin(), capture_steps.end()),
                        capture_steps.end());

    auto want_snapshot = [&](std::size_t step_index) {
        if (cfg.snapshot_stride && step_index % cfg.snapshot_stride == 0) return true;
        return std::binary_search(capture_steps.begin(), capture_steps.end(), step_index);
    };

    const auto n_steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    if (want_snapshot(0)) series.push_back(sim.state());
    if (observer) observer(sim.state());

    for (std::size_t i = 1; i <= n_steps; ++i) {
        try {
            sim.step();
        } catch (const blow_up&) {
            if (partial) *partial = std::move(series);
            throw;
        }
        if (cfg.check_support) {
            const double leak = support_leak_ratio(sim.state(), cfg);
            if (leak > 1e-6)
                throw inconsistent_extraction("support confinement violated: leak ratio " +
                                              std::to_string(leak));
        }
        if (want_snapshot(i)) series.push_back(sim.state());
        if (observer) observer(sim.state());
    }
    return series;
}

double free_field_energy(const SimState& state, const SimConfig& cfg) {
    RealFft fft(cfg.grid_size);
    const double dx = cfg.dx();
    std::vector<double> du;
    double e = 0.0;
    for (const auto& [u, v] : {std::pair{&state.u1, &state.v1}, std::pair{&state.u2, &state.v2}}) {
        fft.derivative(*u, du, 2.0 * cfg.half_width);
        for (std::size_t i = 0; i < cfg.grid_size; ++i)
            e += 0.5 * ((*v)[i] * (*v)[i] + du[i] * du[i] + (*u)[i] * (*u)[i]) * dx;
    }
    return e;
}

double support_leak_ratio(const SimState& state, const SimConfig& cfg) {
    const double bound = state.t + cfg.support_radius + 2.0 * cfg.dx();
    double inside = 0.0, outside = 0.0;
    for (const auto* f : {&state.u1, &state.u2}) {
        for (std::size_t i = 0; i < f->size(); ++i) {
            const double x = -cfg.half_width + static_cast<double>(i) * cfg.dx();
            const double a = std::abs((*f)[i]);
            if (std::abs(x) <= bound)
                inside = std::max(inside, a);
            else
                outside = std::max(outside, a);
        }
    }
    return inside > 0 ? outside / inside : 0.0;
}

}  // namespace nlkg
