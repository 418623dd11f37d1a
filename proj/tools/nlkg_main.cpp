// Command-line front end: classify / reduce / ode / pde / catalog
// subcommands with JSON and CSV output for scripting.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nlkg/classifier.hpp"
#include "nlkg/cubic_system.hpp"
#include "nlkg/errors.hpp"
#include "nlkg/fitting.hpp"
#include "nlkg/json_io.hpp"
#include "nlkg/limit_ode.hpp"
#include "nlkg/profile.hpp"
#include "nlkg/reducer.hpp"
#include "nlkg/sim.hpp"

using nlohmann::json;

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string read_input(const std::string& inline_text, const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw nlkg::invalid_input("give exactly one input source");
    if (!inline_text.empty()) return inline_text;
    if (!file.empty()) {
        if (file == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream in(file);
        if (!in) throw nlkg::invalid_input("cannot open input file: " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    throw nlkg::invalid_input("missing input: use --lambda/--matrix/--config or a file");
}

nlkg::Coefficients coefficients_input(const std::string& lambda, const std::string& matrix,
                                      const std::string& file) {
    if (!matrix.empty()) {
        if (!lambda.empty()) throw nlkg::invalid_input("give exactly one input source");
        return nlkg::matrix_to_coeffs(nlkg::io::structure_matrix_from_json(matrix));
    }
    return nlkg::io::coefficients_from_json(read_input(lambda, file));
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw nlkg::invalid_input("cannot open output file: " + path);
    return file;
}

nlkg::ModelSystemId model_by_name(const std::string& name, int lam, int lam2) {
    using nlkg::ModelSystemId;
    if (name == "Decoupled") return ModelSystemId::decoupled(lam, lam2);
    if (name == "ComplexGauge") return ModelSystemId::complex_gauge(lam);
    if (name == "Sunagawa") return ModelSystemId::sunagawa();
    if (name == "NewA") return ModelSystemId::new_a(lam);
    if (name == "NewB") return ModelSystemId::new_b(lam);
    if (name == "New2") return ModelSystemId::new2();
    if (name == "New3") return ModelSystemId::new3();
    throw nlkg::invalid_input("unknown model system: " + name);
}

int run_classify(const std::string& lambda, const std::string& matrix, const std::string& file,
                 std::ostream& out) {
    const auto c = coefficients_input(lambda, matrix, file);
    out << nlkg::io::to_json(nlkg::classify(c), c) << "\n";
    return 0;
}

int run_reduce(const std::string& lambda, const std::string& matrix, const std::string& file,
               std::ostream& out) {
    const auto c = coefficients_input(lambda, matrix, file);
    out << nlkg::io::to_json(nlkg::reduce(c)) << "\n";
    return 0;
}

int run_catalog(std::ostream& out) {
    json entries = json::array();
    for (const auto& id : {
             nlkg::ModelSystemId::decoupled(1, 1), nlkg::ModelSystemId::decoupled(-1, -1),
             nlkg::ModelSystemId::decoupled(1, -1), nlkg::ModelSystemId::decoupled(1, 0),
             nlkg::ModelSystemId::decoupled(-1, 0), nlkg::ModelSystemId::new_a(1),
             nlkg::ModelSystemId::new_a(-1), nlkg::ModelSystemId::sunagawa(),
             nlkg::ModelSystemId::new2(), nlkg::ModelSystemId::complex_gauge(1),
             nlkg::ModelSystemId::complex_gauge(-1), nlkg::ModelSystemId::new_b(1),
             nlkg::ModelSystemId::new_b(-1), nlkg::ModelSystemId::new3()}) {
        const auto c = nlkg::model_catalog(id);
        json e;
        e["model"] = nlkg::model_name(id);
        e["subset"] = (id.family == nlkg::ModelFamily::ComplexGauge ||
                       id.family == nlkg::ModelFamily::NewB ||
                       id.family == nlkg::ModelFamily::New3)
                          ? "Z2"
                          : "Z1";
        e["roster_index"] = nlkg::roster_index(id);
        if (id.family == nlkg::ModelFamily::Decoupled)
            e["lambda_model"] = json::array({id.p1, id.p2});
        else if (id.family == nlkg::ModelFamily::Sunagawa ||
                 id.family == nlkg::ModelFamily::New2 || id.family == nlkg::ModelFamily::New3)
            e["lambda_model"] = nullptr;
        else
            e["lambda_model"] = id.p1;
        e["lambda"] = c.values();
        entries.push_back(e);
    }
    out << json{{"models", entries}}.dump() << "\n";
    return 0;
}

struct OdeArgs {
    std::string system;
    int lambda_model = 1;
    int lambda_model2 = 0;
    std::string lambda;
    std::vector<double> alpha0{1, 0, 0, 0};
    double s_end = 10.0;
    double dt = 1e-3;
    std::size_t stride = 10;
    bool nonresonant = false;
    double z = 0.0;
    double kappa = 701.0 / 200.0;
    double tau0 = 10.0;
    std::string output;
};

int run_ode(const OdeArgs& args, std::ostream& out) {
    nlkg::Coefficients c;
    if (!args.lambda.empty())
        c = nlkg::io::coefficients_from_json(args.lambda);
    else if (!args.system.empty())
        c = nlkg::model_catalog(model_by_name(args.system, args.lambda_model, args.lambda_model2));
    else
        throw nlkg::invalid_input("ode needs --system or --lambda");
    if (args.alpha0.size() != 4)
        throw nlkg::invalid_input("--alpha0 needs 4 reals (Re a1, Im a1, Re a2, Im a2)");

    const nlkg::OdeState init{{args.alpha0[0], args.alpha0[1]},
                              {args.alpha0[2], args.alpha0[3]},
                              0.0};
    const auto quantities = nlkg::conserved_quantities(c);

    std::vector<nlkg::OdeState> traj;
    if (args.nonresonant) {
        // RK4 in tau on the full oscillatory equation; the s column reports
        // sech^2(kappa z) log(tau/tau0).
        const double sech2 = 1.0 / std::pow(std::cosh(args.kappa * args.z), 2);
        nlkg::OdeState cur = init;
        double tau = args.tau0;
        const double tau_end = args.tau0 * std::exp(args.s_end / sech2);
        traj.push_back({cur.alpha1, cur.alpha2, 0.0});
        auto f = [&](double t, const nlkg::OdeState& x) {
            return nlkg::rhs_with_nonresonant(t, x, args.z, c, args.kappa);
        };
        while (tau < tau_end) {
            const double h = args.dt;
            const auto k1 = f(tau, cur);
            nlkg::OdeState m1{cur.alpha1 + 0.5 * h * k1.first, cur.alpha2 + 0.5 * h * k1.second, 0};
            const auto k2 = f(tau + h / 2, m1);
            nlkg::OdeState m2{cur.alpha1 + 0.5 * h * k2.first, cur.alpha2 + 0.5 * h * k2.second, 0};
            const auto k3 = f(tau + h / 2, m2);
            nlkg::OdeState e{cur.alpha1 + h * k3.first, cur.alpha2 + h * k3.second, 0};
            const auto k4 = f(tau + h, e);
            cur.alpha1 += h / 6.0 * (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first);
            cur.alpha2 += h / 6.0 * (k1.second + 2.0 * k2.second + 2.0 * k3.second + k4.second);
            tau += h;
            if (std::abs(cur.alpha1) > 1e12 || std::abs(cur.alpha2) > 1e12)
                throw nlkg::blow_up("tau-equation state exceeded the blow-up threshold", tau);
            cur.s = sech2 * std::log(tau / args.tau0);
            traj.push_back(cur);
        }
    } else {
        traj = nlkg::integrate(c, init, args.s_end, args.dt);
    }

    out << "s,re_alpha1,im_alpha1,re_alpha2,im_alpha2";
    for (const auto& q : quantities) out << "," << q.label();
    out << "\n";
    for (std::size_t i = 0; i < traj.size(); i += std::max<std::size_t>(1, args.stride)) {
        const auto& p = traj[i];
        out << fmt17(p.s) << "," << fmt17(p.alpha1.real()) << "," << fmt17(p.alpha1.imag())
            << "," << fmt17(p.alpha2.real()) << "," << fmt17(p.alpha2.imag());
        for (const auto& q : quantities) out << "," << fmt17(q.value_at(p));
        out << "\n";
    }
    return 0;
}

struct PdeArgs {
    std::string config;
    std::string config_file;
    std::string snapshots_out;
    std::string diagnostics_out;
    std::string fit_out;
    bool experimental = false;
};

int run_pde(const PdeArgs& args, std::ostream& out) {
    const auto cfg = nlkg::io::sim_config_from_json(read_input(args.config, args.config_file));

    nlkg::SimConfig run_cfg = cfg;
    if (!cfg.diag_taus.empty()) {
        auto captures = nlkg::plan_capture_times(cfg.diag_taus, cfg.diag_z, cfg.support_radius);
        run_cfg.capture_times.insert(run_cfg.capture_times.end(), captures.begin(),
                                     captures.end());
    }

    auto write_snapshots = [&](const std::vector<nlkg::SimState>& series, std::size_t stride_x) {
        if (args.snapshots_out.empty()) return;
        std::ofstream file;
        std::ostream& snap = open_output(file, args.snapshots_out);
        snap << "t,x,u1,v1,u2,v2\n";
        for (const auto& st : series)
            for (std::size_t i = 0; i < st.u1.size(); i += stride_x) {
                const double x = -run_cfg.half_width + static_cast<double>(i) * run_cfg.dx();
                snap << fmt17(st.t) << "," << fmt17(x) << "," << fmt17(st.u1[i]) << ","
                     << fmt17(st.v1[i]) << "," << fmt17(st.u2[i]) << "," << fmt17(st.v2[i])
                     << "\n";
            }
    };

    std::vector<nlkg::SimState> partial;
    std::vector<nlkg::SimState> series;
    try {
        series = nlkg::run(run_cfg, {}, &partial);
    } catch (const nlkg::blow_up&) {
        // Surface the partial series, then let the exit code propagate.
        write_snapshots(partial, 16);
        throw;
    }

    write_snapshots(series, 1);

    json report;
    report["n_snapshots"] = series.size();
    if (!cfg.diag_taus.empty()) {
        const auto diags = nlkg::extract_profiles(series, run_cfg);
        if (!args.diagnostics_out.empty()) {
            std::ofstream file;
            std::ostream& dout = open_output(file, args.diagnostics_out);
            dout << "tau,z,re_alpha1,im_alpha1,re_alpha2,im_alpha2,envelope1,envelope2,valid\n";
            for (const auto& d : diags)
                for (std::size_t i = 0; i < d.z.size(); ++i)
                    dout << fmt17(d.tau) << "," << fmt17(d.z[i]) << ","
                         << fmt17(d.alpha1[i].real()) << "," << fmt17(d.alpha1[i].imag()) << ","
                         << fmt17(d.alpha2[i].real()) << "," << fmt17(d.alpha2[i].imag()) << ","
                         << fmt17(d.envelope1[i]) << "," << fmt17(d.envelope2[i]) << ","
                         << (d.valid[i] ? 1 : 0) << "\n";
        }
        if (diags.size() >= 5) {
            const auto fit = nlkg::fit_log_growth(diags, cfg.diag_z.front());
            report["fit"] = json::parse(nlkg::io::to_json(fit));
            if (args.experimental) {
                // Conjectured polynomial-correction view of the same data:
                // surface the power-law exponent as the primary quantity.
                report["experimental"] = {{"power_exponent", fit.pow_p},
                                          {"power_r2", fit.r2_power}};
            }
        }
    }
    if (!args.fit_out.empty()) {
        std::ofstream file;
        std::ostream& fout = open_output(file, args.fit_out);
        fout << report.dump() << "\n";
    } else {
        out << report.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic Klein-Gordon system classification and simulation"};
    app.require_subcommand(1);

    std::string lambda, matrix, file, output;

    auto* classify_cmd = app.add_subcommand("classify", "equivalence class of a system");
    classify_cmd->add_option("--lambda", lambda, "inline JSON coefficients");
    classify_cmd->add_option("--matrix", matrix, "inline JSON structure matrix");
    classify_cmd->add_option("--file", file, "JSON file ('-' for stdin)");
    classify_cmd->add_option("--output", output, "output path (default stdout)");

    auto* reduce_cmd = app.add_subcommand("reduce", "transform chain to the model system");
    reduce_cmd->add_option("--lambda", lambda, "inline JSON coefficients");
    reduce_cmd->add_option("--matrix", matrix, "inline JSON structure matrix");
    reduce_cmd->add_option("--file", file, "JSON file ('-' for stdin)");
    reduce_cmd->add_option("--output", output, "output path (default stdout)");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the model systems");
    catalog_cmd->add_option("--output", output, "output path (default stdout)");

    OdeArgs ode;
    auto* ode_cmd = app.add_subcommand("ode", "integrate the limit profile system");
    ode_cmd->add_option("--system", ode.system, "model system name");
    ode_cmd->add_option("--lambda-model", ode.lambda_model, "model parameter (+1/-1)");
    ode_cmd->add_option("--lambda-model2", ode.lambda_model2, "second decoupled parameter");
    ode_cmd->add_option("--lambda", ode.lambda, "raw JSON coefficients");
    ode_cmd->add_option("--alpha0", ode.alpha0, "initial state: Re a1, Im a1, Re a2, Im a2")
        ->expected(4);
    ode_cmd->add_option("--s-end", ode.s_end, "integration horizon");
    ode_cmd->add_option("--dt", ode.dt, "step size");
    ode_cmd->add_option("--stride", ode.stride, "output every n-th sample");
    ode_cmd->add_flag("--nonresonant", ode.nonresonant, "keep the oscillatory terms (tau form)");
    ode_cmd->add_option("--z", ode.z, "hyperbolic z (tau form)");
    ode_cmd->add_option("--kappa", ode.kappa, "profile weight (tau form)");
    ode_cmd->add_option("--tau0", ode.tau0, "initial tau (tau form)");
    ode_cmd->add_option("--output", ode.output, "output path (default stdout)");

    PdeArgs pde;
    auto* pde_cmd = app.add_subcommand("pde", "run the 1D field simulation");
    pde_cmd->add_option("--config", pde.config, "inline JSON configuration");
    pde_cmd->add_option("--config-file", pde.config_file, "JSON configuration file");
    pde_cmd->add_option("--snapshots", pde.snapshots_out, "CSV output for field snapshots");
    pde_cmd->add_option("--diagnostics", pde.diagnostics_out, "CSV output for alpha profiles");
    pde_cmd->add_option("--fit", pde.fit_out, "JSON output for the growth-fit report");
    pde_cmd->add_flag("--experimental", pde.experimental,
                      "include the conjectured polynomial-correction diagnostics");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream out_file;
        if (classify_cmd->parsed())
            return run_classify(lambda, matrix, file, open_output(out_file, output));
        if (reduce_cmd->parsed())
            return run_reduce(lambda, matrix, file, open_output(out_file, output));
        if (catalog_cmd->parsed()) return run_catalog(open_output(out_file, output));
        if (ode_cmd->parsed()) return run_ode(ode, open_output(out_file, ode.output));
        if (pde_cmd->parsed()) return run_pde(pde, std::cout);
    } catch (const nlkg::error& e) {
        std::cerr << nlkg::io::error_to_json(e) << "\n";
        switch (e.category()) {
            case nlkg::error::kind::invalid_input: return 2;
            case nlkg::error::kind::unsupported_class: return 3;
            case nlkg::error::kind::numerical: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":{\"code\":\"internal\",\"message\":\"" << e.what()
                  << "\",\"exit\":4}}\n";
        return 4;
    }
    return 0;
}
