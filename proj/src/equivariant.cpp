#include "tauber/equivariant.hpp"

#include "tauber/special.hpp"

namespace tauber {

AsymptoticExpansion<ExactScalar> equivariant_sqrt_expansion(const Envelope& env,
                                                            const Series<Rational>& h, int K) {
    return apply_envelope(sqrt_expansion(h, K), env);
}

AsymptoticExpansion<ExactScalar> equivariant_pole_expansion(const Envelope& env,
                                                            const std::vector<Rational>& principal,
                                                            const Series<Rational>& h, int K) {
    return apply_envelope(pole_expansion(principal, h, K), env);
}

AsymptoticExpansion<ExactScalar> interior_pole_expansion(const InteriorPole& data, int d, int r) {
    require(d >= 1 && r >= 0 && r < d, "interior pole: bad residue class");
    require(data.M >= 1, "interior pole: order must be >= 1");
    require(static_cast<std::size_t>(data.M) == data.partial_fractions.size(),
            "interior pole: need one partial-fraction constant per order");
    require(data.R_prime > 0, "interior pole: inner radius must be positive");
    require(data.R_check > data.R_prime,
            "interior pole: check radius must exceed the pole radius");

    AsymptoticExpansion<ExactScalar> E;
    E.radius = data.R_prime;
    E.period = d;
    E.residue = r;
    for (int m = 1; m <= data.M; ++m) {
        const Rational& c = data.partial_fractions[static_cast<std::size_t>(m) - 1];
        if (c == 0) continue;
        Rational weight = c * pow_rational(data.R_prime, -static_cast<long>(d) * m);
        if (m % 2 == 1) weight = -weight;
        std::vector<Rational> poly = binomial_polynomial_coeffs(m);
        for (std::size_t deg = 0; deg < poly.size(); ++deg)
            E.add_exact_term(rat(-static_cast<long>(deg)), ExactScalar(weight * poly[deg], 0));
    }
    E.remainder_kind = RemainderKind::Geometric;
    E.geometric_ratio = data.R_prime / data.R_check;
    E.notes.push_back("geometric remainder ratio declared per raw index from the check radius");
    E.validate();
    return E;
}

}  // namespace tauber
