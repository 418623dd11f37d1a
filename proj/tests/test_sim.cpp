#include <doctest.h>

#include <cmath>

#include "nlkg/errors.hpp"
#include "nlkg/fitting.hpp"
#include "nlkg/sim.hpp"
#include "test_support.hpp"

using namespace nlkg;

namespace {

SimConfig base_config() {
    SimConfig cfg;
    cfg.coefficients = Coefficients::from_doubles({0, 0, 0, 0, 0, 0, 0, 0});
    cfg.epsilon = 1.0;
    cfg.support_radius = 6.0;
    cfg.half_width = 32.0;
    cfg.grid_size = 512;
    cfg.dt = 0.01;
    cfg.t_end = 10.0;
    cfg.tau0 = 13.0;
    return cfg;
}

}  // namespace

TEST_CASE("configuration validation") {
    SimConfig cfg = base_config();
    CHECK_NOTHROW(cfg.validate());

    SimConfig bad = cfg;
    bad.grid_size = 1000;  // not a power of two
    CHECK_THROWS_AS(bad.validate(), invalid_input);

    bad = cfg;
    bad.dt = 0.5;  // violates dt * max frequency < 1
    CHECK_THROWS_AS(bad.validate(), invalid_input);

    bad = cfg;
    bad.t_end = 100.0;  // domain too small for the light cone
    CHECK_THROWS_AS(bad.validate(), invalid_input);

    bad = cfg;
    bad.kappa = 2.0;
    CHECK_THROWS_AS(bad.validate(), invalid_input);

    bad = cfg;
    bad.tau0 = 5.0;  // below 2B
    CHECK_THROWS_AS(bad.validate(), invalid_input);
}

TEST_CASE("zero data stays zero") {
    SimConfig cfg = base_config();
    cfg.snapshot_stride = 100;
    const auto series = run(cfg);
    for (const auto& st : series) CHECK(st.max_abs() == 0.0);
}

TEST_CASE("free-field energy is conserved by the splitting") {
    SimConfig cfg = base_config();
    cfg.check_support = false;  // periodic single-mode data
    cfg.t_end = 10.0;           // 1000 steps at dt = 0.01
    Simulator sim(cfg);

    SimState st = sim.state();
    const double k = 2.0 * 3.14159265358979 * 8.0 / (2.0 * cfg.half_width);
    for (std::size_t i = 0; i < cfg.grid_size; ++i) {
        const double x = -cfg.half_width + static_cast<double>(i) * cfg.dx();
        st.u1[i] = 0.7 * std::cos(k * x);
        st.v1[i] = 0.2 * std::sin(k * x);
    }
    sim.set_state(st);

    const double e0 = free_field_energy(sim.state(), cfg);
    for (int i = 0; i < 1000; ++i) sim.step();
    const double e1 = free_field_energy(sim.state(), cfg);
    CHECK(std::abs(e1 - e0) <= 1e-8 * e0);
}

TEST_CASE("localized free pulse decays like t^(-1/2)") {
    SimConfig cfg;
    cfg.coefficients = Coefficients::from_doubles({0, 0, 0, 0, 0, 0, 0, 0});
    cfg.epsilon = 1.0;
    cfg.u10 = gaussian_profile(1.0, 1.5);
    cfg.support_radius = 10.0;
    cfg.half_width = 128.0;
    cfg.grid_size = 2048;
    cfg.dt = 0.05;
    cfg.t_end = 115.0;
    cfg.tau0 = 21.0;

    std::vector<double> ts, sups;
    run(cfg, [&](const SimState& st) {
        if (st.t < 20.0) return;
        double sup = 0.0;
        for (double x : st.u1) sup = std::max(sup, std::abs(x));
        ts.push_back(std::log(st.t));
        sups.push_back(std::log(sup));
    });
    const LinearFit fit = linear_fit(ts, sups);
    CHECK(fit.slope == doctest::Approx(-0.5).epsilon(0.25));
    CHECK(fit.slope < -0.35);
    CHECK(fit.slope > -0.65);
}

TEST_CASE("support stays inside the light cone") {
    SimConfig cfg = base_config();
    cfg.coefficients = model_catalog(ModelSystemId::sunagawa());
    cfg.epsilon = 0.1;
    cfg.u10 = gaussian_profile(1.0, 1.0);
    cfg.u20 = gaussian_profile(0.5, 1.0);
    cfg.t_end = 20.0;
    cfg.half_width = 32.0;
    cfg.snapshot_stride = 500;
    const auto series = run(cfg);  // run() itself asserts confinement
    CHECK(support_leak_ratio(series.back(), cfg) <= 1e-6);
}

TEST_CASE("strong focusing data aborts with partial results") {
    SimConfig cfg = base_config();
    cfg.coefficients = Coefficients::from_doubles({1, 0, 0, 0, 0, 0, 0, 0});
    cfg.epsilon = 1.0;
    cfg.u10 = gaussian_profile(5.0, 2.0);
    cfg.t_end = 20.0;
    cfg.half_width = 32.0;
    cfg.grid_size = 512;
    cfg.dt = 0.005;
    cfg.snapshot_stride = 100;
    cfg.check_support = false;  // fields become rough near the singular time

    std::vector<SimState> partial;
    bool blew_up = false;
    try {
        run(cfg, {}, &partial);
    } catch (const blow_up& e) {
        blew_up = true;
        CHECK(e.last_valid_time >= 0.0);
        CHECK(e.last_valid_time < cfg.t_end);
    }
    CHECK(blew_up);
    CHECK(!partial.empty());
}

TEST_CASE("splitting converges at second order") {
    auto make = [&](double dt) {
        SimConfig cfg = base_config();
        cfg.coefficients = model_catalog(ModelSystemId::complex_gauge(1));
        cfg.epsilon = 0.5;
        cfg.u10 = gaussian_profile(1.0, 1.0);
        cfg.u20 = gaussian_profile(0.6, 1.2);
        cfg.t_end = 2.0;
        cfg.dt = dt;
        cfg.snapshot_stride = 0;
        cfg.check_support = false;
        Simulator sim(cfg);
        const auto n = static_cast<std::size_t>(std::llround(cfg.t_end / dt));
        for (std::size_t i = 0; i < n; ++i) sim.step();
        return sim.state();
    };

    const SimState ref = make(0.00125);
    auto err = [&](const SimState& st) {
        double m = 0.0;
        for (std::size_t i = 0; i < st.u1.size(); ++i)
            m = std::max(m, std::abs(st.u1[i] - ref.u1[i]));
        return m;
    };
    const double e1 = err(make(0.01));
    const double e2 = err(make(0.005));
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.5));
}
