#include "tauber/problem.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "tauber/errors.hpp"

namespace tauber {

namespace {

using nlohmann::json;

void check_fields(const json& j, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ParseError(where + ": unknown field \"" + key + "\"");
    }
}

Rational get_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return rat(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(where + ": expected an integer or a rational string like \"3/4\"");
}

long get_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<long>();
}

Series<Rational> get_series(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a non-empty array of coefficients");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(get_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return Series<Rational>(std::move(c));
}

std::vector<Rational> get_rational_list(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ParseError(where + ": expected a non-empty array");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(get_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return c;
}

Envelope parse_envelope(const json& j) {
    check_fields(j, "envelope", {"R", "d", "r"});
    Envelope env;
    if (j.contains("R")) env.R = get_rational(j["R"], "envelope.R");
    if (j.contains("d")) env.d = static_cast<int>(get_integer(j["d"], "envelope.d"));
    if (j.contains("r")) env.r = static_cast<int>(get_integer(j["r"], "envelope.r"));
    return env;
}

VerifyOptions parse_options(const json& j) {
    check_fields(j, "options",
                 {"K", "nmax", "precision", "numeric_check", "numeric_nmax", "numeric_points",
                  "numeric_rho", "numeric_precision", "slope_margin", "ratio_margin",
                  "constant_rel_tol", "numeric_rel_tol", "slope_nmin", "sample_count"});
    VerifyOptions opt;
    if (j.contains("K")) opt.K = static_cast<int>(get_integer(j["K"], "options.K"));
    if (j.contains("nmax")) opt.nmax = get_integer(j["nmax"], "options.nmax");
    if (j.contains("precision"))
        opt.precision = static_cast<mpfr_prec_t>(get_integer(j["precision"], "options.precision"));
    if (j.contains("numeric_check")) {
        if (!j["numeric_check"].is_boolean())
            throw ParseError("options.numeric_check: expected a boolean");
        opt.numeric_check = j["numeric_check"].get<bool>();
    }
    if (j.contains("numeric_nmax"))
        opt.numeric_nmax = get_integer(j["numeric_nmax"], "options.numeric_nmax");
    if (j.contains("numeric_points"))
        opt.numeric_points = get_integer(j["numeric_points"], "options.numeric_points");
    if (j.contains("numeric_rho"))
        opt.numeric_rho = get_rational(j["numeric_rho"], "options.numeric_rho");
    if (j.contains("numeric_precision"))
        opt.numeric_precision =
            static_cast<mpfr_prec_t>(get_integer(j["numeric_precision"], "options.numeric_precision"));
    auto get_double = [](const json& v, const std::string& where) {
        if (!v.is_number()) throw ParseError(where + ": expected a number");
        return v.get<double>();
    };
    if (j.contains("slope_margin")) opt.slope_margin = get_double(j["slope_margin"], "options.slope_margin");
    if (j.contains("ratio_margin")) opt.ratio_margin = get_double(j["ratio_margin"], "options.ratio_margin");
    if (j.contains("constant_rel_tol"))
        opt.constant_rel_tol = get_double(j["constant_rel_tol"], "options.constant_rel_tol");
    if (j.contains("numeric_rel_tol"))
        opt.numeric_rel_tol = get_double(j["numeric_rel_tol"], "options.numeric_rel_tol");
    if (j.contains("slope_nmin")) opt.slope_nmin = get_integer(j["slope_nmin"], "options.slope_nmin");
    if (j.contains("sample_count"))
        opt.sample_count = static_cast<int>(get_integer(j["sample_count"], "options.sample_count"));
    return opt;
}

}  // namespace

Problem parse_problem_json(const json& j) {
    check_fields(j, "problem",
                 {"id", "description", "envelope", "alpha", "kind", "h", "principal", "lambda",
                  "g", "pole_order", "R_prime", "M", "partial_fractions", "R_check", "tail",
                  "options"});
    Problem p;
    if (j.contains("id")) {
        if (!j["id"].is_string()) throw ParseError("id: expected a string");
        p.model.id = j["id"].get<std::string>();
    } else {
        p.model.id = "problem";
    }
    if (j.contains("description")) {
        if (!j["description"].is_string()) throw ParseError("description: expected a string");
        p.model.description = j["description"].get<std::string>();
    }
    if (j.contains("envelope")) p.model.env = parse_envelope(j["envelope"]);
    if (j.contains("alpha")) p.model.alpha = get_rational(j["alpha"], "alpha");

    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("problem: missing \"kind\" (sqrt | pole | raw | interior)");
    const std::string kind = j["kind"].get<std::string>();

    auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys)
            if (j.contains(k))
                throw ParseError("problem: field \"" + std::string(k) +
                                 "\" does not belong to kind \"" + kind + "\"");
    };

    if (kind == "sqrt") {
        forbid({"principal", "lambda", "g", "pole_order", "R_prime", "M", "partial_fractions",
                "R_check", "tail"});
        if (!j.contains("h")) throw ParseError("sqrt problem: missing \"h\"");
        p.model.payload = SqrtHolomorphic{get_series(j["h"], "h")};
    } else if (kind == "pole") {
        forbid({"lambda", "g", "pole_order", "R_prime", "M", "partial_fractions", "R_check",
                "tail", "alpha"});
        if (!j.contains("principal")) throw ParseError("pole problem: missing \"principal\"");
        SqrtPole sp;
        sp.principal = get_rational_list(j["principal"], "principal");
        sp.h = j.contains("h") ? get_series(j["h"], "h") : Series<Rational>::zero(0);
        p.model.payload = std::move(sp);
    } else if (kind == "raw") {
        forbid({"h", "principal", "R_prime", "M", "partial_fractions", "R_check", "tail",
                "alpha"});
        if (!j.contains("lambda") || !j.contains("g"))
            throw ParseError("raw problem: missing \"lambda\" or \"g\"");
        RawLocalMap raw;
        raw.lambda = get_series(j["lambda"], "lambda");
        raw.g = get_series(j["g"], "g");
        if (j.contains("pole_order"))
            raw.pole_order = static_cast<int>(get_integer(j["pole_order"], "pole_order"));
        p.model.payload = std::move(raw);
    } else if (kind == "interior") {
        forbid({"h", "principal", "lambda", "g", "pole_order", "alpha"});
        for (const char* k : {"R_prime", "M", "partial_fractions", "R_check"})
            if (!j.contains(k))
                throw ParseError("interior problem: missing \"" + std::string(k) + "\"");
        InteriorPole ip;
        ip.R_prime = get_rational(j["R_prime"], "R_prime");
        ip.M = static_cast<int>(get_integer(j["M"], "M"));
        ip.partial_fractions = get_rational_list(j["partial_fractions"], "partial_fractions");
        ip.R_check = get_rational(j["R_check"], "R_check");
        if (j.contains("tail")) ip.tail_coeff = get_rational(j["tail"], "tail");
        p.model.payload = std::move(ip);
    } else {
        throw ParseError("problem: unknown kind \"" + kind + "\"");
    }

    if (j.contains("options")) p.options = parse_options(j["options"]);
    return p;
}

Problem parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("problem JSON: ") + e.what());
    }
    try {
        return parse_problem_json(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("problem JSON: ") + e.what());
    }
}

Problem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

}  // namespace tauber
