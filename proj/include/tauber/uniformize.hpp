#pragma once

#include <optional>

#include "tauber/errors.hpp"
#include "tauber/series.hpp"

namespace tauber {

// Square root of a scalar if it exists in the scalar's own field: rationals
// only for perfect squares, floats for any positive value.
inline std::optional<Rational> field_sqrt(const Rational& q) {
    if (q <= 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_den_mpz_t()) == 0) return std::nullopt;
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return rat(num, den);
}
inline std::optional<BigFloat> field_sqrt(const BigFloat& x) {
    if (x.sign() <= 0) return std::nullopt;
    return sqrt(x);
}

// Local inverse jet of a ramified projection.  Input: jet of lambda with
// lambda(0) = 1, lambda'(0) = 0, lambda''(0) != 0 (order >= 2).  Writing
// 1 - lambda(z) = z^2 * t(z), the square-root coordinate is
// s(z) = z * sqrt(t(z)), so that lambda(z) = 1 - s(z)^2; the returned jet h
// is the compositional inverse of s, normalized so h'(0) = 1/sqrt(t(0)) > 0
// (principal branch).  Then lambda(h(w)) = 1 - w^2 through the jet order,
// and g(h(w)) exposes the observable in the uniformizing variable.
//
// Exact scalars require t(0) = -[z^2]lambda to be a square in the scalar
// field; otherwise run the same construction over floats.
template <class T>
Series<T> uniformize(const Series<T>& lambda) {
    require(lambda.order() >= 2, "uniformize: need the jet through order 2");
    require(lambda[0] == ScalarOps<T>::from_long(1),
            "uniformize: local map must send the point to the singular value 1");
    require(scalar_is_zero(lambda[1]), "uniformize: point must be ramified (lambda'(0) = 0)");
    Series<T> one_minus = Series<T>::constant(ScalarOps<T>::from_long(1), lambda.order()) - lambda;
    Series<T> t = decompose(one_minus, 2).tail;
    require(!scalar_is_zero(t[0]), "uniformize: simple ramification needs lambda''(0) != 0");
    std::optional<T> s0 = field_sqrt(t[0]);
    require(s0.has_value(),
            "uniformize: -lambda''(0)/2 must have a square root in the scalar field "
            "(use float mode otherwise)");
    // t/s0^2 has constant term exactly 1, so the jet square root is exact.
    T inv_sq = ScalarOps<T>::from_long(1) / (*s0 * *s0);
    Series<T> root = *s0 * sqrt(inv_sq * t);
    Series<T> s = Series<T>::zero(lambda.order() - 1);
    for (int k = 0; k <= root.order(); ++k) s.at(k + 1) = root[k];
    return reversion(s);
}

}  // namespace tauber
