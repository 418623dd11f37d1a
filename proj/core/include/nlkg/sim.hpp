#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "nlkg/coefficients.hpp"
#include "nlkg/fourier.hpp"

namespace nlkg {

/// Real-space profile; evaluated on the grid at setup.
using Profile = std::function<double(double)>;

Profile gaussian_profile(double amplitude, double width, double center = 0.0);
Profile zero_profile();

/// Configuration of a 1D periodic Klein-Gordon run on [-X, X).
struct SimConfig {
    Coefficients coefficients;       // nonlinearity l1..l8
    double epsilon = 0.05;           // amplitude scale applied to all profiles

    Profile u10 = zero_profile();    // u1(0)/epsilon
    Profile u11 = zero_profile();    // d_t u1(0)/epsilon
    Profile u20 = zero_profile();
    Profile u21 = zero_profile();

    double support_radius = 8.0;     // B: data supported in |x| <= B
    double half_width = 256.0;       // X
    std::size_t grid_size = 4096;    // N, power of two
    double dt = 0.05;
    double t_end = 200.0;

    double kappa = 701.0 / 200.0;    // profile weight, > 7/2
    double tau0 = 20.0;              // first hyperbola

    // Recording: a uniform snapshot every `snapshot_stride` steps (0 = none),
    // plus fine bundles of `capture_count` consecutive steps starting just
    // before each time in `capture_times` (for interpolation at hyperbola
    // crossings without storing the whole run).
    std::size_t snapshot_stride = 0;
    std::vector<double> capture_times;
    std::size_t capture_count = 6;

    // Diagnostics request consumed by extract_profiles.
    std::vector<double> diag_taus;
    std::vector<double> diag_z{0.0};

    bool check_support = true;

    double dx() const { return 2.0 * half_width / static_cast<double>(grid_size); }

    /// Throws invalid_input when the grid, time step, or domain margin is bad.
    void validate() const;
};

/// Field state on the spatial grid: u_j and v_j = d_t u_j.
struct SimState {
    double t = 0.0;
    std::vector<double> u1, u2, v1, v2;

    double max_abs() const;
};

/// Strang-split pseudo-spectral integrator: exact linear Klein-Gordon
/// propagation in Fourier space for dt/2, pointwise cubic kick for dt,
/// linear dt/2. Owns its FFT plans; one instance = one logical thread.
class Simulator {
  public:
    explicit Simulator(const SimConfig& cfg);

    const SimConfig& config() const { return cfg_; }
    const SimState& state() const { return state_; }

    /// Replaces the current state (sizes must match the grid).
    void set_state(const SimState& s);

    /// Advances one step. Throws blow_up (with the last finite t) when a
    /// field exceeds 1e12 or turns non-finite.
    void step();

  private:
    void half_kg(double h);

    SimConfig cfg_;
    SimState state_;
    RealFft fft_;
    std::vector<double> omega_;
    std::vector<std::complex<double>> spec_u_, spec_v_;
};

/// Single-step convenience wrapper around Simulator.
SimState step(const SimState& state, const SimConfig& cfg);

/// Runs to t_end, recording snapshots per the config. `observer`, when given,
/// sees every state after each step. On blow-up the partial series collected
/// so far is stored into *partial (if non-null) before the error propagates.
std::vector<SimState> run(const SimConfig& cfg,
                          const std::function<void(const SimState&)>& observer = {},
                          std::vector<SimState>* partial = nullptr);

/// Total Klein-Gordon energy  sum_j  int (v_j^2 + (d_x u_j)^2 + u_j^2)/2 dx,
/// conserved exactly by the free flow (all lambda = 0).
double free_field_energy(const SimState& state, const SimConfig& cfg);

/// Ratio of the largest |u_j| outside |x| <= t + B + 2 dx to the largest
/// inside; 0 for identically zero fields.
double support_leak_ratio(const SimState& state, const SimConfig& cfg);

}  // namespace nlkg
