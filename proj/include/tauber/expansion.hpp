#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tauber/bigfloat.hpp"
#include "tauber/errors.hpp"
#include "tauber/exact_scalar.hpp"
#include "tauber/rational.hpp"

namespace tauber {

enum class RemainderKind {
    None,      // the listed terms are the coefficient, exactly
    PowerLaw,  // remainder O(n^{-remainder_exponent})
    Geometric  // remainder O(geometric_ratio^n) relative to the listed terms' scale
};

inline BigFloat coeff_to_float(const ExactScalar& c, mpfr_prec_t prec) { return c.to_float(prec); }
inline BigFloat coeff_to_float(const BigFloat& c, mpfr_prec_t prec) {
    BigFloat r = c;
    (void)prec;
    return r;
}
inline std::optional<Rational> coeff_exact_rational(const ExactScalar& c) {
    if (c.is_rational()) return c.coeff();
    return std::nullopt;
}
inline std::optional<Rational> coeff_exact_rational(const BigFloat&) { return std::nullopt; }
inline std::string coeff_str(const ExactScalar& c) { return c.str(); }
inline std::string coeff_str(const BigFloat& c) { return c.str(30); }

// Asymptotic description of a coefficient sequence along one residue class:
//
//   a_{period*n + residue} = radius^{-period*n} *
//       ( sum exact_terms  c * n^{-e}      exact polynomial part, e <= 0
//       + sum terms        c * n^{-e}      asymptotic part
//       + remainder ).
//
// Exponents index n^{-e}, so the map order (ascending e) is dominance order.
// Entries with zero coefficient are never stored: the smallest stored
// exponent is the true leading term.
template <class C>
struct AsymptoticExpansion {
    Rational radius = rat(1);
    int period = 1;
    int residue = 0;
    std::map<Rational, C> exact_terms;
    std::map<Rational, C> terms;
    RemainderKind remainder_kind = RemainderKind::None;
    Rational remainder_exponent = rat(0);   // PowerLaw only
    Rational geometric_ratio = rat(0);      // Geometric only, per raw index step
    // Indices n <= finite_support_bound may carry extra exact contributions
    // (integer-power modes) that the expansion intentionally omits.
    long finite_support_bound = -1;
    std::vector<std::string> notes;     // warnings and convention remarks
    std::vector<std::string> declared;  // user assertions taken on faith

    void add_term(const Rational& e, const C& c) {
        if (scalar_is_zero_coeff(c)) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (scalar_is_zero_coeff(it->second)) terms.erase(it);
        }
    }
    void add_exact_term(const Rational& e, const C& c) {
        if (scalar_is_zero_coeff(c)) return;
        auto [it, inserted] = exact_terms.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (scalar_is_zero_coeff(it->second)) exact_terms.erase(it);
        }
    }

    bool empty() const { return exact_terms.empty() && terms.empty(); }

    std::optional<std::pair<Rational, C>> leading() const {
        std::optional<std::pair<Rational, C>> best;
        if (!exact_terms.empty()) best = *exact_terms.begin();
        if (!terms.empty() && (!best || terms.begin()->first < best->first)) best = *terms.begin();
        return best;
    }

    void validate() const {
        require(period >= 1, "expansion: period must be >= 1");
        require(residue >= 0 && residue < period, "expansion: residue class out of range");
        require(radius > 0, "expansion: radius must be positive");
        for (const auto& [e, c] : exact_terms) {
            require(is_integer(e) && e <= 0, "expansion: exact part must be a polynomial in n");
            (void)c;
        }
        if (remainder_kind == RemainderKind::PowerLaw) {
            for (const auto& [e, c] : terms) {
                require(e < remainder_exponent, "expansion: term not dominated by remainder bound");
                (void)c;
            }
        } else {
            require(terms.empty(), "expansion: asymptotic terms need a power-law remainder");
        }
        if (remainder_kind == RemainderKind::Geometric)
            require(geometric_ratio > 0 && geometric_ratio < 1, "expansion: geometric ratio in (0,1)");
    }

   private:
    static bool scalar_is_zero_coeff(const ExactScalar& s) { return s.is_zero(); }
    static bool scalar_is_zero_coeff(const BigFloat& x) { return x.is_zero(); }
};

// Truncated expansion value at expansion index n, without the radius scale.
template <class C>
BigFloat expansion_value(const AsymptoticExpansion<C>& E, long n, mpfr_prec_t prec) {
    require(n >= 1, "expansion value: index must be >= 1");
    BigFloat acc = BigFloat::zero(prec);
    for (const auto& [e, c] : E.exact_terms)
        acc += coeff_to_float(c, prec) * pow_rational_exp(n, -e, prec);
    for (const auto& [e, c] : E.terms)
        acc += coeff_to_float(c, prec) * pow_rational_exp(n, -e, prec);
    return acc;
}

// Predicted raw coefficient a_m (includes radius^{-period*n}).
template <class C>
BigFloat predict_raw(const AsymptoticExpansion<C>& E, long m, mpfr_prec_t prec) {
    require(m >= E.residue && (m - E.residue) % E.period == 0,
            "expansion: raw index " + std::to_string(m) + " not in residue class " +
                std::to_string(E.residue) + " mod " + std::to_string(E.period));
    long n = (m - E.residue) / E.period;
    BigFloat v = expansion_value(E, n, prec);
    if (E.radius != 1) v = v * pow_si(BigFloat(E.radius, prec), -E.period * n);
    return v;
}

// Exact prediction; defined only when the expansion has no asymptotic tail
// and every exact coefficient is rational.
template <class C>
Rational predict_raw_exact(const AsymptoticExpansion<C>& E, long m) {
    require(E.terms.empty(), "expansion: exact prediction needs an exact expansion");
    require(m >= E.residue && (m - E.residue) % E.period == 0,
            "expansion: raw index not in residue class");
    long n = (m - E.residue) / E.period;
    require(n >= 1, "expansion: exact prediction needs index >= 1");
    Rational acc = rat(0);
    for (const auto& [e, c] : E.exact_terms) {
        auto q = coeff_exact_rational(c);
        require(q.has_value(), "expansion: exact prediction needs rational coefficients");
        require(is_integer(e) && e <= 0, "expansion: exact part must be polynomial");
        acc += *q * pow_rational(rat(n), -e.get_num().get_si());
    }
    if (E.radius != 1) acc *= pow_rational(E.radius, -static_cast<long>(E.period) * n);
    return acc;
}

}  // namespace tauber
