#include "nlkg/json_io.hpp"

#include <json.hpp>

#include "nlkg/errors.hpp"

namespace nlkg::io {

using nlohmann::json;

namespace {

// Integer literals and "p/q" strings are taken exactly; anything else lands
// on the floating path.
struct ParsedNumber {
    double value = 0.0;
    std::optional<Rational> exact;
};

ParsedNumber parse_number(const json& j, const char* what) {
    ParsedNumber out;
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        out.value = static_cast<double>(v);
        out.exact = Rational(v);
        return out;
    }
    if (j.is_number()) {
        out.value = j.get<double>();
        return out;
    }
    if (j.is_string()) {
        auto r = rational_from_string(j.get<std::string>());
        if (!r) throw invalid_input(std::string("malformed rational in ") + what);
        out.value = to_double(*r);
        out.exact = *r;
        return out;
    }
    throw invalid_input(std::string("expected a number in ") + what);
}

json rational_array(const Vec8<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_fraction_string(x));
    return arr;
}

json model_to_json(const ModelSystemId& id) {
    json j;
    j["name"] = model_name(id);
    switch (id.family) {
        case ModelFamily::Decoupled:
            j["lambda_model"] = json::array({id.p1, id.p2});
            break;
        case ModelFamily::ComplexGauge:
        case ModelFamily::NewA:
        case ModelFamily::NewB:
            j["lambda_model"] = id.p1;
            break;
        default:
            j["lambda_model"] = nullptr;
    }
    return j;
}

json gl2_to_json_obj(const GL2Transform& m) {
    return json{{"m", {{m.a(), m.b()}, {m.c(), m.d()}}}};
}

}  // namespace

std::string to_json(const Coefficients& c) {
    json j;
    j["lambda"] = c.values();
    if (c.is_exact()) j["lambda_exact"] = rational_array(c.exact_values());
    return j.dump();
}

Coefficients coefficients_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("bad JSON: ") + e.what());
    }
    const json& arr = j.is_array() ? j : j.at("lambda");
    if (!arr.is_array() || arr.size() != 8)
        throw invalid_input("coefficients need exactly 8 entries");

    Vec8<double> vals{};
    Vec8<Rational> exact{};
    bool all_exact = true;
    for (std::size_t i = 0; i < 8; ++i) {
        const auto p = parse_number(arr[i], "lambda");
        vals[i] = p.value;
        if (p.exact)
            exact[i] = *p.exact;
        else
            all_exact = false;
    }
    return all_exact ? Coefficients::from_rationals(exact) : Coefficients::from_doubles(vals);
}

std::string to_json(const GL2Transform& m) { return gl2_to_json_obj(m).dump(); }

GL2Transform gl2_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("bad JSON: ") + e.what());
    }
    const json& rows = j.is_array() ? j : j.at("m");
    if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || rows[0].size() != 2 ||
        !rows[1].is_array() || rows[1].size() != 2)
        throw invalid_input("transform needs a 2x2 matrix");

    std::array<ParsedNumber, 4> p{parse_number(rows[0][0], "m"), parse_number(rows[0][1], "m"),
                                  parse_number(rows[1][0], "m"), parse_number(rows[1][1], "m")};
    if (p[0].exact && p[1].exact && p[2].exact && p[3].exact)
        return GL2Transform(Mat2<Rational>{{*p[0].exact, *p[1].exact, *p[2].exact, *p[3].exact}});
    return {p[0].value, p[1].value, p[2].value, p[3].value};
}

std::string to_json(const StructureMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i)
        rows.push_back(json::array({a(i, 0), a(i, 1), a(i, 2)}));
    return json{{"A", rows}}.dump();
}

StructureMatrix structure_matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("bad JSON: ") + e.what());
    }
    const json& rows = j.is_array() ? j : j.at("A");
    if (!rows.is_array() || rows.size() != 3)
        throw invalid_input("structure matrix needs 3 rows");

    Mat3<double> vals;
    Mat3<Rational> exact;
    bool all_exact = true;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 3)
            throw invalid_input("structure matrix rows need 3 entries");
        for (std::size_t k = 0; k < 3; ++k) {
            const auto p = parse_number(rows[i][k], "A");
            vals(i, k) = p.value;
            if (p.exact)
                exact(i, k) = *p.exact;
            else
                all_exact = false;
        }
    }
    return all_exact ? StructureMatrix::from_rationals(exact)
                     : StructureMatrix::from_doubles(vals);
}

std::string to_json(const ClassLabel& label, const Coefficients& input) {
    json j;
    j["family"] = family_name(label.family);
    if (label.model) {
        const json m = model_to_json(*label.model);
        j["model"] = m["name"];
        j["lambda_model"] = m["lambda_model"];
    } else {
        j["model"] = nullptr;
        j["lambda_model"] = nullptr;
    }
    j["roster_index"] = label.roster ? json(*label.roster) : json(nullptr);
    j["borderline"] = label.borderline;
    j["exact"] = label.exact;
    j["lambda"] = input.values();
    if (input.is_exact()) j["lambda_exact"] = rational_array(input.exact_values());
    return j.dump();
}

std::string to_json(const ReductionResult& r) {
    json j;
    json chain = json::array();
    for (const auto& m : r.chain) chain.push_back(gl2_to_json_obj(m));
    j["chain"] = chain;
    j["total"] = gl2_to_json_obj(r.total);
    const json m = model_to_json(r.model);
    j["model"] = m["name"];
    j["lambda_model"] = m["lambda_model"];
    j["roster_index"] = roster_index(r.model);
    j["model_coeffs"] = r.model_coeffs.values();
    j["residual"] = r.residual;
    j["params"] = r.params;
    return j.dump();
}

std::string to_json(const FitReport& r) {
    json j;
    j["n_samples"] = r.n_samples;
    j["tau_min"] = r.tau_min;
    j["tau_max"] = r.tau_max;
    j["z"] = r.z;
    j["log_model"] = {{"a", r.a}, {"b", r.b}, {"stderr_b", r.stderr_b}, {"r2", r.r2_log}};
    if (r.power_valid)
        j["power_model"] = {{"c", r.pow_c}, {"p", r.pow_p}, {"r2", r.r2_power}};
    else
        j["power_model"] = nullptr;
    j["log_preferred"] = r.log_preferred;
    j["phase"] = {{"slope", r.phase_slope}, {"r2", r.phase_r2}};
    return j.dump();
}

std::string error_to_json(const error& e) {
    int exit_code = 2;
    if (e.category() == error::kind::unsupported_class) exit_code = 3;
    if (e.category() == error::kind::numerical) exit_code = 4;
    json j;
    j["error"] = {{"code", e.code()}, {"message", e.what()}, {"exit", exit_code}};
    return j.dump();
}

SimConfig sim_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_input(std::string("bad JSON: ") + e.what());
    }

    SimConfig cfg;
    if (j.contains("system")) {
        const auto& sys = j["system"];
        if (sys.is_string()) {
            const std::string name = sys.get<std::string>();
            int lam = j.value("lambda_model", 1);
            if (name == "Decoupled") {
                const int l8 = j.value("lambda_model2", 0);
                cfg.coefficients = model_catalog(ModelSystemId::decoupled(lam, l8));
            } else if (name == "ComplexGauge") {
                cfg.coefficients = model_catalog(ModelSystemId::complex_gauge(lam));
            } else if (name == "Sunagawa") {
                cfg.coefficients = model_catalog(ModelSystemId::sunagawa());
            } else if (name == "NewA") {
                cfg.coefficients = model_catalog(ModelSystemId::new_a(lam));
            } else if (name == "NewB") {
                cfg.coefficients = model_catalog(ModelSystemId::new_b(lam));
            } else if (name == "New2") {
                cfg.coefficients = model_catalog(ModelSystemId::new2());
            } else if (name == "New3") {
                cfg.coefficients = model_catalog(ModelSystemId::new3());
            } else {
                throw invalid_input("unknown model system: " + name);
            }
        } else {
            cfg.coefficients = coefficients_from_json(sys.dump());
        }
    }

    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    if (j.contains("data")) {
        auto read = [&](const char* key, Profile& u, Profile& ut) {
            if (!j["data"].contains(key)) return;
            const auto& d = j["data"][key];
            const double amp = d.value("amplitude", 0.0);
            const double width = d.value("width", 1.0);
            const double center = d.value("center", 0.0);
            const double vamp = d.value("velocity_amplitude", 0.0);
            u = gaussian_profile(amp, width, center);
            ut = gaussian_profile(vamp, width, center);
        };
        read("u1", cfg.u10, cfg.u11);
        read("u2", cfg.u20, cfg.u21);
    }

    if (j.contains("grid")) {
        const auto& g = j["grid"];
        cfg.half_width = g.value("half_width", cfg.half_width);
        cfg.grid_size = g.value("n", cfg.grid_size);
        cfg.dt = g.value("dt", cfg.dt);
        cfg.t_end = g.value("t_end", cfg.t_end);
    }
    cfg.support_radius = j.value("support_radius", cfg.support_radius);
    cfg.kappa = j.value("kappa", cfg.kappa);
    cfg.tau0 = j.value("tau0", cfg.tau0);
    cfg.snapshot_stride = j.value("snapshot_stride", cfg.snapshot_stride);
    if (j.contains("diag")) {
        const auto& d = j["diag"];
        if (d.contains("taus")) cfg.diag_taus = d["taus"].get<std::vector<double>>();
        if (d.contains("z")) cfg.diag_z = d["z"].get<std::vector<double>>();
    }
    cfg.check_support = j.value("check_support", cfg.check_support);
    cfg.validate();
    return cfg;
}

}  // namespace nlkg::io
