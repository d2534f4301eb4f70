#include "tauber/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tauber/equivariant.hpp"

namespace tauber {

namespace {

std::string dec(const BigFloat& x, int digits = 24) { return x.str(digits); }

std::string dec_rational(const Rational& q, int digits = 24) {
    return BigFloat(q, 192).str(digits);
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

std::vector<long> geometric_samples(long lo, long hi, int count) {
    std::set<long> out;
    if (hi < lo || count <= 0) return {};
    out.insert(lo);
    out.insert(hi);
    const double ratio = static_cast<double>(hi) / static_cast<double>(lo);
    for (int k = 1; k + 1 < count; ++k) {
        double t = static_cast<double>(k) / (count - 1);
        long n = std::lround(static_cast<double>(lo) * std::pow(ratio, t));
        out.insert(std::clamp(n, lo, hi));
    }
    return {out.begin(), out.end()};
}

std::optional<double> lin_slope(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2) return std::nullopt;
    double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double det = n * sxx - sx * sx;
    if (det <= 1e-12 * n * sxx) return std::nullopt;
    return (n * sxy - sx * sy) / det;
}

// Sum of the exact polynomial part at index n; needs rational coefficients.
template <class C>
Rational exact_polynomial_value(const AsymptoticExpansion<C>& E, long n) {
    Rational acc = rat(0);
    for (const auto& [e, c] : E.exact_terms) {
        auto q = coeff_exact_rational(c);
        require(q.has_value(), "verify: exact part has non-rational coefficients");
        acc += *q * pow_rational(rat(n), -e.get_num().get_si());
    }
    return acc;
}

const char* remainder_name(RemainderKind k) {
    switch (k) {
        case RemainderKind::None: return "none";
        case RemainderKind::PowerLaw: return "power_law";
        default: return "geometric";
    }
}

template <class C>
nlohmann::ordered_json expansion_json_impl(const AsymptoticExpansion<C>& E, mpfr_prec_t prec) {
    nlohmann::ordered_json j;
    j["radius"] = to_string(E.radius);
    j["period"] = E.period;
    j["residue"] = E.residue;
    auto term_array = [&](const std::map<Rational, C>& terms) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [e, c] : terms) {
            nlohmann::ordered_json t;
            t["exponent"] = to_string(e);
            t["coefficient"] = coeff_str(c);
            t["decimal"] = dec(coeff_to_float(c, prec));
            arr.push_back(std::move(t));
        }
        return arr;
    };
    j["exact_terms"] = term_array(E.exact_terms);
    j["terms"] = term_array(E.terms);
    nlohmann::ordered_json rem;
    rem["kind"] = remainder_name(E.remainder_kind);
    if (E.remainder_kind == RemainderKind::PowerLaw)
        rem["exponent"] = to_string(E.remainder_exponent);
    if (E.remainder_kind == RemainderKind::Geometric)
        rem["ratio"] = to_string(E.geometric_ratio);
    j["remainder"] = std::move(rem);
    if (E.finite_support_bound >= 0) j["finite_support_bound"] = E.finite_support_bound;
    if (!E.notes.empty()) j["notes"] = E.notes;
    if (!E.declared.empty()) j["declared"] = E.declared;
    return j;
}

template <class C>
std::string expansion_text_impl(const AsymptoticExpansion<C>& E, mpfr_prec_t prec) {
    std::ostringstream os;
    os << "a_{" << E.period << "n";
    if (E.residue != 0) os << "+" << E.residue;
    os << "}";
    if (E.radius != 1) os << " = (" << to_string(E.radius) << ")^{-" << E.period << "n} * b_n, b_n";
    os << " =\n";
    auto print_terms = [&](const std::map<Rational, C>& terms, const char* tag) {
        for (const auto& [e, c] : terms) {
            os << "  " << tag << "  n^(-" << to_string(e) << ") * (" << coeff_str(c) << ")"
               << "    ~ " << dec(coeff_to_float(c, prec), 12) << "\n";
        }
    };
    print_terms(E.exact_terms, "exact");
    print_terms(E.terms, "asym ");
    switch (E.remainder_kind) {
        case RemainderKind::None:
            os << "  remainder: none (expansion is exact)\n";
            break;
        case RemainderKind::PowerLaw:
            os << "  remainder: O(n^(-" << to_string(E.remainder_exponent) << "))\n";
            break;
        default:
            os << "  remainder: O((" << to_string(E.geometric_ratio) << ")^m) relative scale\n";
            break;
    }
    if (E.finite_support_bound >= 0)
        os << "  extra exact contributions allowed for n <= " << E.finite_support_bound << "\n";
    for (const auto& s : E.notes) os << "  note: " << s << "\n";
    for (const auto& s : E.declared) os << "  declared: " << s << "\n";
    return os.str();
}

template <class C>
std::string expansion_csv_impl(const AsymptoticExpansion<C>& E, mpfr_prec_t prec) {
    std::ostringstream os;
    os << "kind,exponent,coefficient,decimal\n";
    for (const auto& [e, c] : E.exact_terms)
        os << "exact," << to_string(e) << ",\"" << coeff_str(c) << "\","
           << dec(coeff_to_float(c, prec)) << "\n";
    for (const auto& [e, c] : E.terms)
        os << "asymptotic," << to_string(e) << ",\"" << coeff_str(c) << "\","
           << dec(coeff_to_float(c, prec)) << "\n";
    switch (E.remainder_kind) {
        case RemainderKind::None:
            os << "remainder_none,,,\n";
            break;
        case RemainderKind::PowerLaw:
            os << "remainder_power," << to_string(E.remainder_exponent) << ",,\n";
            break;
        default:
            os << "remainder_geometric,,\"" << to_string(E.geometric_ratio) << "\",\n";
            break;
    }
    return os.str();
}

struct CheckAccumulator {
    VerificationReport* report;
    void add(std::string name, bool pass, std::string detail) {
        report->checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

template <class C>
void run_checks(VerificationReport& report, const AsymptoticExpansion<C>& E, const Model& model,
                const VerifyOptions& opt) {
    CheckAccumulator acc{&report};
    const mpfr_prec_t prec = opt.precision;
    report.notes = E.notes;
    report.declared = E.declared;

    const std::vector<Rational> exact = exact_coeffs(model, opt.nmax);

    if (E.period > 1) {
        auto bad = first_off_class_nonzero(exact, E.period, E.residue);
        acc.add("off-class-vanishing", !bad.has_value(),
                bad ? "nonzero coefficient off the residue class at index " + std::to_string(*bad)
                    : "all coefficients off the class " + std::to_string(E.residue) + " mod " +
                          std::to_string(E.period) + " vanish up to n = " +
                          std::to_string(opt.nmax));
    }

    const long Nin = (opt.nmax - E.residue) / E.period;
    const long bound = E.finite_support_bound;
    const long n_lo = std::max<long>(4, bound + 1);
    require(Nin >= n_lo + 8, "verify: nmax leaves no sampling window past the finite-support bound");

    const std::vector<long> samples = geometric_samples(n_lo, Nin, opt.sample_count);
    const bool scaled_radius = (E.radius != 1);

    // Inner values b_n = a_{dn+r} * R^{dn}, exact.
    auto inner_value = [&](long n) {
        Rational b = exact[static_cast<std::size_t>(E.period) * n + E.residue];
        if (scaled_radius) b *= pow_rational(E.radius, static_cast<long>(E.period) * n);
        return b;
    };

    std::vector<std::pair<long, BigFloat>> power_resid;  // (n, |b_n - value(n)|)
    std::vector<std::pair<double, double>> geom_pts;     // (m, log |b_n - P(n)|)
    for (long n : samples) {
        const long m = static_cast<long>(E.period) * n + E.residue;
        const Rational ref = exact[m];
        const BigFloat pred = predict_raw(E, m, prec);
        const BigFloat refF(ref, prec);
        const BigFloat resid = abs(refF - pred);
        report.rows.push_back(
            {m, dec_rational(ref), dec(pred), resid.is_zero() ? "0" : dec(resid, 6)});
        if (E.remainder_kind == RemainderKind::PowerLaw) {
            BigFloat diff = abs(BigFloat(inner_value(n), prec) - expansion_value(E, n, prec));
            power_resid.emplace_back(n, std::move(diff));
        } else if (E.remainder_kind == RemainderKind::Geometric) {
            Rational diff = abs_rational(inner_value(n) - exact_polynomial_value(E, n));
            if (diff != 0)
                geom_pts.emplace_back(static_cast<double>(m),
                                      log(abs(BigFloat(diff, prec))).to_double());
        }
    }

    // Exact scan: every in-class coefficient past the bound must equal the
    // polynomial prediction, bit for bit.
    auto exact_scan = [&](const char* name) {
        long mismatch = -1;
        for (long n = std::max<long>(1, bound + 1); n <= Nin; ++n) {
            const long m = static_cast<long>(E.period) * n + E.residue;
            if (predict_raw_exact(E, m) != exact[m]) {
                mismatch = m;
                break;
            }
        }
        acc.add(name, mismatch < 0,
                mismatch < 0 ? "coefficients match exactly for all in-class indices up to n = " +
                                   std::to_string(opt.nmax)
                             : "first exact mismatch at raw index " + std::to_string(mismatch));
    };

    if (E.remainder_kind == RemainderKind::None) {
        exact_scan("coefficient-match-exact");
    } else if (E.remainder_kind == RemainderKind::PowerLaw) {
        std::vector<std::pair<long, BigFloat>> fit_pts;
        for (const auto& p : power_resid)
            if (p.first >= opt.slope_nmin) fit_pts.push_back(p);
        SlopeFit fit = log_log_slope(fit_pts);
        const double expected = -E.remainder_exponent.get_d();
        report.expected_slope = expected;
        if (fit.underflow) {
            acc.add("remainder-slope", true,
                    "residuals vanish to working precision; no decay rate to measure");
            report.notes.push_back("remainder residuals below the measurable floor");
        } else {
            report.measured_slope = fit.slope;
            acc.add("remainder-slope", fit.slope <= expected + opt.slope_margin,
                    "log-log slope " + format_double(fit.slope) + " vs bound " +
                        format_double(expected) + " (margin " + format_double(opt.slope_margin) +
                        ", " + std::to_string(fit.points) + " points)");
        }

        if (auto lead = E.leading()) {
            // Extrapolation grid: the stored exponents, continued past the
            // remainder bound at half-integer steps.
            std::vector<Rational> grid;
            {
                std::set<Rational> exps;
                for (const auto& [e, c] : E.exact_terms) {
                    exps.insert(e);
                    (void)c;
                }
                for (const auto& [e, c] : E.terms) {
                    exps.insert(e);
                    (void)c;
                }
                grid.assign(exps.begin(), exps.end());
            }
            int L = 5;
            const long min_anchor = std::max<long>(n_lo, opt.slope_nmin);
            while (L > 1 && (Nin >> (L - 1)) < min_anchor) --L;
            for (int i = 0; static_cast<int>(grid.size()) < L; ++i)
                grid.push_back(E.remainder_exponent + Rational(i) / 2);
            grid.resize(L);
            std::vector<std::pair<long, BigFloat>> anchors;
            for (int i = 0; i < L; ++i)
                anchors.emplace_back(Nin >> i, BigFloat(inner_value(Nin >> i), prec));
            std::vector<BigFloat> fitted = richardson_fit(anchors, grid);
            const BigFloat lead_true = coeff_to_float(lead->second, prec);
            BigFloat err = abs(fitted[0] - lead_true);
            BigFloat scale = abs(lead_true);
            double rel = scale.is_zero() ? err.to_double() : (err / scale).to_double();
            acc.add("leading-constant", rel <= opt.constant_rel_tol,
                    "extrapolated n^(-" + to_string(lead->first) + ") constant matches to " +
                        format_double(rel) + " relative (tolerance " +
                        format_double(opt.constant_rel_tol) + ")");
        }
    } else {  // Geometric
        report.declared_ratio = E.geometric_ratio.get_d();
        if (geom_pts.size() < 2) {
            exact_scan("coefficient-match-exact");
            report.notes.push_back("geometric remainder is identically zero on the sample window");
        } else {
            auto slope = lin_slope(geom_pts);
            if (!slope) {
                acc.add("geometric-ratio", false, "ratio fit is degenerate");
            } else {
                const double measured = std::exp(*slope);
                report.measured_ratio = measured;
                const double declared = E.geometric_ratio.get_d();
                acc.add("geometric-ratio", measured <= declared + opt.ratio_margin,
                        "measured per-index residual ratio " + format_double(measured) +
                            " vs declared " + format_double(declared) + " (margin " +
                            format_double(opt.ratio_margin) + ")");
            }
        }
    }

    if (opt.numeric_check) {
        const long Nn = std::min(opt.numeric_nmax, opt.nmax);
        std::vector<BigFloat> num =
            numeric_coeffs(model, opt.numeric_rho, Nn, opt.numeric_points, opt.numeric_precision);
        double worst = 0;
        long worst_n = -1;
        for (long n = 0; n <= Nn; ++n) {
            BigFloat ref(exact[n], opt.numeric_precision);
            BigFloat diff = abs(num[n] - ref);
            BigFloat denom = abs(ref);
            BigFloat one = ScalarOps<BigFloat>::from_long(1);
            if (denom < one) denom = one;
            double rel = (diff / denom).to_double();
            if (rel > worst) {
                worst = rel;
                worst_n = n;
            }
        }
        acc.add("numeric-agreement", worst <= opt.numeric_rel_tol,
                "Cauchy-circle coefficients agree with the exact recurrence to " +
                    format_double(worst) + " (worst n = " + std::to_string(worst_n) +
                    ", tolerance " + format_double(opt.numeric_rel_tol) + ", " +
                    std::to_string(opt.numeric_points) + " points on |z| = " +
                    to_string(opt.numeric_rho) + ")");
    }
}

}  // namespace

VerificationReport verify_model(const Model& model, const VerifyOptions& opt) {
    require(opt.K >= 0, "verify: negative truncation order");
    require(opt.nmax >= 16, "verify: nmax too small");
    VerificationReport report;
    report.model_id = model.id;
    report.description = model.description;
    report.K = opt.K;
    report.nmax = opt.nmax;
    report.precision = opt.precision;
    ExpansionVariant ev = expand_model(model, opt.K, opt.precision);
    report.mode = std::holds_alternative<AsymptoticExpansion<BigFloat>>(ev) ? "float" : "exact";
    report.expansion_json = expansion_to_json(ev, opt.precision);
    std::visit([&](const auto& E) { run_checks(report, E, model, opt); }, ev);
    return report;
}

nlohmann::ordered_json expansion_to_json(const ExpansionVariant& ev, mpfr_prec_t prec) {
    return std::visit([&](const auto& E) { return expansion_json_impl(E, prec); }, ev);
}

std::string expansion_to_text(const ExpansionVariant& ev, mpfr_prec_t prec) {
    return std::visit([&](const auto& E) { return expansion_text_impl(E, prec); }, ev);
}

std::string expansion_to_csv(const ExpansionVariant& ev, mpfr_prec_t prec) {
    return std::visit([&](const auto& E) { return expansion_csv_impl(E, prec); }, ev);
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["model"] = report.model_id;
    if (!report.description.empty()) j["description"] = report.description;
    j["mode"] = report.mode;
    j["passed"] = report.passed();
    nlohmann::ordered_json params;
    params["K"] = report.K;
    params["nmax"] = report.nmax;
    params["precision"] = static_cast<long>(report.precision);
    j["parameters"] = std::move(params);
    j["expansion"] = report.expansion_json;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    nlohmann::ordered_json meas;
    if (report.measured_slope) meas["slope"] = *report.measured_slope;
    if (report.expected_slope) meas["expected_slope"] = *report.expected_slope;
    if (report.measured_ratio) meas["ratio"] = *report.measured_ratio;
    if (report.declared_ratio) meas["declared_ratio"] = *report.declared_ratio;
    if (!meas.empty()) j["measurements"] = std::move(meas);
    if (!report.notes.empty()) j["notes"] = report.notes;
    if (!report.declared.empty()) j["declared"] = report.declared;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        nlohmann::ordered_json e;
        e["n"] = r.n;
        e["reference"] = r.reference;
        e["predicted"] = r.predicted;
        e["residual"] = r.residual;
        rows.push_back(std::move(e));
    }
    j["residuals"] = std::move(rows);
    return j;
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "n,reference,predicted,residual\n";
    for (const auto& r : report.rows)
        os << r.n << "," << r.reference << "," << r.predicted << "," << r.residual << "\n";
    return os.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "model " << report.model_id << " [" << report.mode << "]  "
       << (report.passed() ? "PASS" : "FAIL") << "\n";
    if (!report.description.empty()) os << "  " << report.description << "\n";
    os << "  K = " << report.K << ", nmax = " << report.nmax << ", precision = "
       << report.precision << " bits\n";
    for (const auto& c : report.checks)
        os << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    for (const auto& s : report.notes) os << "  note: " << s << "\n";
    for (const auto& s : report.declared) os << "  declared: " << s << "\n";
    return os.str();
}

}  // namespace tauber
