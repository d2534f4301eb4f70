#include "tauber/engine.hpp"

#include <algorithm>

#include "tauber/equivariant.hpp"
#include "tauber/uniformize.hpp"

namespace tauber {

namespace {

struct HalfFamily {
    Rational beta;    // half-odd exponent of the (1-z)^beta mode
    Rational weight;  // multiplicity in the model
};

// Shared core of sqrt_expansion / pole_expansion: expand each mode family
// termwise and merge on the half-integer exponent grid.  The truncation
// target is grid_base + K where grid_base is the deepest exponent the
// declared shape can produce (3/2 for the holomorphic part, 1 - j*/2 for
// the largest declared odd pole order j*).
AsymptoticExpansion<ExactScalar> expand_half_integer_families(
    const std::vector<Rational>& principal, const Series<Rational>& h, int K) {
    require(K >= 0, "expansion: negative truncation order");
    AsymptoticExpansion<ExactScalar> E;

    std::vector<HalfFamily> families;
    const std::size_t M = principal.size();
    for (std::size_t j = 1; j <= M; ++j) {
        const Rational& D = principal[j - 1];
        if (D == 0) continue;
        if (j % 2 == 0) {
            std::vector<Rational> poly = binomial_polynomial_coeffs(static_cast<long>(j) / 2);
            for (std::size_t deg = 0; deg < poly.size(); ++deg)
                E.add_exact_term(rat(-static_cast<long>(deg)), ExactScalar(D * poly[deg], 0));
        } else {
            families.push_back({rat(-static_cast<long>(j), 2), D});
        }
    }

    const bool h_zero = h.is_zero();
    if (!h_zero) {
        require(h.order() >= 2 * K + 1,
                "expansion: jet order " + std::to_string(h.order()) +
                    " too short for K = " + std::to_string(K) + " (need >= 2K+1)");
        bool even_note = false;
        for (int k = 0; k <= h.order(); ++k) {
            if (h[k] == 0) continue;
            if (k % 2 == 0) {
                E.finite_support_bound = std::max(E.finite_support_bound, static_cast<long>(k / 2));
                even_note = true;
            } else {
                families.push_back({rat(k, 2), h[k]});
            }
        }
        if (even_note)
            E.notes.push_back(
                "even modes are polynomial in z; they affect only indices n <= " +
                std::to_string(E.finite_support_bound));
    }

    if (families.empty()) {
        E.remainder_kind = RemainderKind::None;
        return E;
    }

    long j_star = M == 0 ? 0 : static_cast<long>(M % 2 == 1 ? M : M - 1);
    Rational grid_base = M == 0 ? rat(3, 2) : Rational(1 - rat(j_star, 2));
    Rational target = grid_base + K;

    for (const auto& fam : families) {
        HalfInteger hb = HalfInteger::from_rational(fam.beta);
        ExactScalar lead =
            ExactScalar(-fam.beta, 0) / gamma_half_integer(HalfInteger(2 - hb.twice()));
        ExactScalar w = ExactScalar(fam.weight, 0);
        for (int l = 0;; ++l) {
            Rational e = fam.beta + 1 + l;
            if (e >= target) break;
            E.add_term(e, lead * w * ExactScalar(root_correction(fam.beta, l), 0));
        }
    }
    E.remainder_kind = RemainderKind::PowerLaw;
    E.remainder_exponent = target;

    if (M == 0 && h.order() >= 1 && h[1] == 0)
        E.notes.push_back(
            "leading coefficient vanishes (h'(0) = 0); the first nonzero term starts deeper");
    bool any_odd_pole =
        std::any_of(families.begin(), families.end(), [](const HalfFamily& f) { return f.beta < 0; });
    if (any_odd_pole)
        E.notes.push_back(
            "sign convention: the family D_j (1-z)^{-j/2} contributes +D_j (j/2)/Gamma(1+j/2) "
            "n^{j/2-1}, fixed by the exact binomial oracle");
    if (E.terms.empty())
        E.notes.push_back("all asymptotic coefficients through the requested order vanish");
    E.validate();
    return E;
}

}  // namespace

AsymptoticExpansion<ExactScalar> sqrt_expansion(const Series<Rational>& h, int K) {
    return expand_half_integer_families({}, h, K);
}

AsymptoticExpansion<ExactScalar> pole_expansion(const std::vector<Rational>& principal,
                                                const Series<Rational>& h, int K) {
    require(!principal.empty(), "pole expansion: empty principal part (use sqrt_expansion)");
    return expand_half_integer_families(principal, h, K);
}

AsymptoticExpansion<BigFloat> general_alpha_expansion(const Series<Rational>& h,
                                                      const Rational& alpha, int K,
                                                      mpfr_prec_t prec) {
    require(K >= 0, "expansion: negative truncation order");
    require(alpha > 0 && alpha < 1, "general alpha: exponent must lie in (0,1)");
    AsymptoticExpansion<BigFloat> E;
    const bool h_zero = h.is_zero();
    if (!h_zero)
        require(Rational(h.order()) * alpha > K,
                "general alpha: jet order * alpha must exceed K");
    Rational target = alpha + 1 + K;
    bool any_asym = false;
    if (!h_zero) {
        for (int k = 0; k <= h.order(); ++k) {
            if (h[k] == 0) continue;
            Rational beta = Rational(k) * alpha;
            if (is_integer(beta)) {
                E.finite_support_bound =
                    std::max(E.finite_support_bound, beta.get_num().get_si());
                continue;
            }
            any_asym = true;
            BigFloat lead = -BigFloat(beta, prec) /
                            gamma_eval(BigFloat(Rational(1 - beta), prec), prec);
            BigFloat w(h[k], prec);
            for (int l = 0;; ++l) {
                Rational e = beta + 1 + l;
                if (e >= target) break;
                E.add_term(e, lead * w * BigFloat(root_correction(beta, l), prec));
            }
        }
    }
    if (E.finite_support_bound >= 0)
        E.notes.push_back("integer-power modes are polynomial in z; they affect only indices n <= " +
                          std::to_string(E.finite_support_bound));
    if (!any_asym) {
        E.remainder_kind = RemainderKind::None;
        return E;
    }
    E.remainder_kind = RemainderKind::PowerLaw;
    E.remainder_exponent = target;
    if (h.order() >= 1 && h[1] == 0)
        E.notes.push_back(
            "leading coefficient vanishes (h'(0) = 0); the first nonzero term starts deeper");
    E.validate();
    return E;
}

RawNormalForm normalize_raw(const RawLocalMap& raw) {
    require(raw.pole_order >= 0, "raw model: negative pole order");
    Series<Rational> h = uniformize(raw.lambda);
    RawNormalForm nf{{}, Series<Rational>::zero(0), {}, {}};
    nf.declared.push_back(
        "analyticity of the continued data away from the marked point is declared by the "
        "caller; jets cannot certify it");
    if (raw.pole_order == 0) {
        nf.h = compose(raw.g, h);
        return nf;
    }
    const int M = raw.pole_order;
    // raw.g is the jet of z^M g_c, so (g_c o h)(w) = w^{-M} q(w) with
    // q = (raw.g o h) * (h(w)/w)^{-M}; the unit h/w never vanishes at 0.
    Series<Rational> G = compose(raw.g, h);
    Series<Rational> u = decompose(h, 1).tail;
    int N = std::min(G.order(), u.order());
    require(N >= M, "meromorphic reduction: jets too short to isolate the principal part");
    Series<Rational> q = G.truncated(N) * pow_int(reciprocal(u.truncated(N)), M);
    nf.principal.assign(static_cast<std::size_t>(M), rat(0));
    for (int j = 1; j <= M; ++j) nf.principal[static_cast<std::size_t>(j) - 1] = q[M - j];
    std::vector<Rational> rest(q.coeffs().begin() + M, q.coeffs().end());
    nf.h = Series<Rational>(std::move(rest));
    if (q[0] == 0)
        nf.notes.push_back("declared pole order is not attained (leading principal constant is zero)");
    return nf;
}

AsymptoticExpansion<ExactScalar> analytic_expansion(const RawLocalMap& raw, int K) {
    require(raw.pole_order == 0, "analytic pipeline: observable must be holomorphic");
    RawNormalForm nf = normalize_raw(raw);
    AsymptoticExpansion<ExactScalar> E = sqrt_expansion(nf.h, K);
    E.notes.insert(E.notes.end(), nf.notes.begin(), nf.notes.end());
    E.declared.insert(E.declared.end(), nf.declared.begin(), nf.declared.end());
    return E;
}

AsymptoticExpansion<ExactScalar> meromorphic_expansion(const RawLocalMap& raw, int K) {
    require(raw.pole_order >= 1, "meromorphic pipeline: needs a declared pole order");
    RawNormalForm nf = normalize_raw(raw);
    AsymptoticExpansion<ExactScalar> E = pole_expansion(nf.principal, nf.h, K);
    E.notes.insert(E.notes.end(), nf.notes.begin(), nf.notes.end());
    E.declared.insert(E.declared.end(), nf.declared.begin(), nf.declared.end());
    return E;
}

ExpansionVariant expand_model(const Model& model, int K, mpfr_prec_t prec) {
    model.env.validate();
    if (is_general_alpha(model)) {
        const auto* p = std::get_if<SqrtHolomorphic>(&model.payload);
        require(p != nullptr, "general alpha applies to holomorphic normal-form models only");
        return apply_envelope(general_alpha_expansion(p->h, model.alpha, K, prec), model.env);
    }
    if (const auto* p = std::get_if<SqrtHolomorphic>(&model.payload))
        return apply_envelope(sqrt_expansion(p->h, K), model.env);
    if (const auto* p = std::get_if<SqrtPole>(&model.payload))
        return apply_envelope(pole_expansion(p->principal, p->h, K), model.env);
    if (const auto* p = std::get_if<InteriorPole>(&model.payload))
        return interior_pole_expansion(*p, model.env.d, model.env.r);
    const auto& raw = std::get<RawLocalMap>(model.payload);
    AsymptoticExpansion<ExactScalar> E =
        raw.pole_order == 0 ? analytic_expansion(raw, K) : meromorphic_expansion(raw, K);
    return apply_envelope(std::move(E), model.env);
}

}  // namespace tauber
