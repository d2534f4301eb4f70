#pragma once

#include <variant>
#include <vector>

#include "tauber/expansion.hpp"
#include "tauber/models.hpp"
#include "tauber/series.hpp"
#include "tauber/special.hpp"

namespace tauber {

// Coefficient asymptotics of h(sqrt(1-z)) from the jet h, all scalars exact
// in Q + Q/sqrt(pi).  Truncation: the K asymptotic exponents 3/2 .. 3/2+K-1
// are produced (those with nonzero coefficient are stored) and the remainder
// exponent is 3/2+K.  Needs order(h) >= 2K+1 unless h is identically zero.
// Even modes of h are polynomial in z and only touch indices
// n <= finite_support_bound.
AsymptoticExpansion<ExactScalar> sqrt_expansion(const Series<Rational>& h, int K);

// Same with a principal part sum_j D_j (1-z)^{-j/2} (principal[j-1] = D_j).
// Families are expanded termwise and merged on the half-integer grid: even j
// contribute exact polynomials binom(n+j/2-1, j/2-1), odd j asymptotic
// families with lead (j/2)/Gamma(1+j/2) at exponent 1-j/2.  K counts
// asymptotic exponents past the leading one; if no asymptotic family is
// present the result is exact (remainder None).
AsymptoticExpansion<ExactScalar> pole_expansion(const std::vector<Rational>& principal,
                                                const Series<Rational>& h, int K);

// h(  (1-z)^alpha-type modes ): coefficient asymptotics of
// sum_k h_k (1-z)^{k*alpha} for rational alpha in (0,1).  Correction
// constants stay exact rationals; the per-mode leads use Gamma via MPFR at
// `prec` bits.  Needs order(h) * alpha > K.  Modes with k*alpha integral are
// polynomials (finite support) and are excluded from the asymptotic part.
AsymptoticExpansion<BigFloat> general_alpha_expansion(const Series<Rational>& h,
                                                      const Rational& alpha, int K,
                                                      mpfr_prec_t prec);

// Raw local data reduced to the normal form (principal part, holomorphic
// jet) in the uniformizing variable.
struct RawNormalForm {
    std::vector<Rational> principal;
    Series<Rational> h;
    std::vector<std::string> notes;
    std::vector<std::string> declared;
};
RawNormalForm normalize_raw(const RawLocalMap& raw);

// Full pipelines on raw data: uniformize, compose the observable, expand.
AsymptoticExpansion<ExactScalar> analytic_expansion(const RawLocalMap& raw, int K);
AsymptoticExpansion<ExactScalar> meromorphic_expansion(const RawLocalMap& raw, int K);

// Transfer a unit-radius, period-1 expansion to the enveloped coefficient
// layout a_{d n + r} = R^{-d n} b_n.
template <class C>
AsymptoticExpansion<C> apply_envelope(AsymptoticExpansion<C> E, const Envelope& env) {
    env.validate();
    require(E.period == 1 && E.residue == 0 && E.radius == 1,
            "apply_envelope: expansion already enveloped");
    E.radius = env.R;
    E.period = env.d;
    E.residue = env.r;
    return E;
}

using ExpansionVariant =
    std::variant<AsymptoticExpansion<ExactScalar>, AsymptoticExpansion<BigFloat>>;

// Dispatch a model to its expansion route.  K follows the convention of the
// routines above; prec only matters for general-alpha models.
ExpansionVariant expand_model(const Model& model, int K, mpfr_prec_t prec);

}  // namespace tauber
