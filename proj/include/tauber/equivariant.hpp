#pragma once

#include <optional>
#include <vector>

#include "tauber/engine.hpp"
#include "tauber/expansion.hpp"
#include "tauber/models.hpp"

namespace tauber {

// First index outside the residue class r mod d carrying a nonzero
// coefficient, if any.
template <class T>
std::optional<long> first_off_class_nonzero(const std::vector<T>& coeffs, int d, int r) {
    require(d >= 1 && r >= 0 && r < d, "vanishing check: bad residue class");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (static_cast<long>(i) % d != r && !scalar_is_zero(coeffs[i]))
            return static_cast<long>(i);
    return std::nullopt;
}

template <class T>
bool check_vanishing(const std::vector<T>& coeffs, int d, int r) {
    return !first_off_class_nonzero(coeffs, d, r).has_value();
}

// Shift a class-r sequence onto the invariant class: b[i] = a[i + r], so b
// is supported on multiples of d.  Requires the off-class entries of a to
// vanish.
template <class T>
std::vector<T> reduce_to_invariant(const std::vector<T>& coeffs, int d, int r) {
    auto bad = first_off_class_nonzero(coeffs, d, r);
    require(!bad.has_value(), "reduce_to_invariant: nonzero coefficient off the residue class at index " +
                                  std::to_string(bad.value_or(0)));
    if (coeffs.size() <= static_cast<std::size_t>(r)) return {};
    return std::vector<T>(coeffs.begin() + r, coeffs.end());
}

// Enveloped normal-form expansions: the inner unit-radius model expanded,
// then annotated with a_{d n + r} = R^{-d n} b_n.
AsymptoticExpansion<ExactScalar> equivariant_sqrt_expansion(const Envelope& env,
                                                            const Series<Rational>& h, int K);
AsymptoticExpansion<ExactScalar> equivariant_pole_expansion(const Envelope& env,
                                                            const std::vector<Rational>& principal,
                                                            const Series<Rational>& h, int K);

// Exact coefficient law of an interior pole of order M at radius R' in the
// equivariant layout: a_{d n + r} = P(n) R'^{-d n} with the degree-(M-1)
// polynomial P(n) = sum_m c_m (-1)^m R'^{-d m} binom(n+m-1, m-1).  The
// remainder (everything holomorphic past the pole, up to |z| < R_check)
// decays geometrically; ratio per raw index is R'/R_check.
AsymptoticExpansion<ExactScalar> interior_pole_expansion(const InteriorPole& data, int d, int r);

}  // namespace tauber
