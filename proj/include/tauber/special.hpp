#pragma once

#include <vector>

#include "tauber/bigfloat.hpp"
#include "tauber/errors.hpp"
#include "tauber/expansion.hpp"
#include "tauber/half_integer.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Taylor coefficient [z^n] (1-z)^beta = (-1)^n binom(beta, n).
Rational binom_coeff(const Rational& beta, long n);

// The full prefix c_0..c_N of the same family, via the one-step recurrence
// c_n = c_{n-1} (n-1-beta)/n; O(N) big-rational operations.
std::vector<Rational> binom_coeff_prefix(const Rational& beta, long N);

// binom(x, k) for rational x, integer k >= 0.
Rational rational_binomial(const Rational& x, long k);

// Classical Bernoulli numbers B_0..B_L, generating function t/(e^t - 1)
// (so B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int L);

// Generalized Bernoulli polynomial value B_l^{(beta)}(z), defined by
// (t/(e^t-1))^beta e^{zt} = sum_l B_l^{(beta)}(z) t^l / l!.
Rational gen_bernoulli(int l, const Rational& beta, const Rational& z);

// Correction constants of the ratio Gamma(n+a)/Gamma(n+b):
//   Gamma(n+a)/Gamma(n+b) = n^{a-b} (1 + e_1/n + e_2/n^2 + ...),
//   e_l = binom(a-b, l) * B_l^{(a-b+1)}(a),   e_0 = 1.
Rational gamma_ratio_correction(const Rational& a, const Rational& b, int l);

// e_l for the family c_n(beta) = [z^n](1-z)^beta ~ n^{-beta-1}(1 + e_1/n + ...):
// the ratio Gamma(n-beta)/Gamma(n+1), i.e. a = -beta, b = 1.
Rational root_correction(const Rational& beta, int l);

// Constants of the factorial expansion n! = sqrt(2 pi n)(n/e)^n
// (1 + c_1/n + ... + c_K/n^K + O(n^{-K-1})); returns c_1..c_K.
std::vector<Rational> laplace_constants(int K);

// Gamma at a float point (correctly rounded); poles are errors.
BigFloat gamma_eval(const BigFloat& x, mpfr_prec_t prec);

// Exact Gamma on the half-integer lattice: rational * sqrt(pi)^{0 or 1}.
ExactScalar gamma_half_integer(const HalfInteger& x);

// Coefficients, in powers of n, of the polynomial binom(n+m-1, m-1)
// (degree m-1); index = degree.
std::vector<Rational> binomial_polynomial_coeffs(long m);

// Expansion of the coefficient family c_n(beta) = [z^n](1-z)^beta in n.
//  - beta a non-negative integer: finitely supported, empty expansion with
//    finite_support_bound = beta.
//  - beta a negative integer -m: exactly the polynomial binom(n+m-1, m-1).
//  - beta half-odd: asymptotic family at exponents beta+1+l with the lead
//    -beta/Gamma(1-beta) and K correction terms (l = 0..K), remainder
//    exponent beta+2+K.
AsymptoticExpansion<ExactScalar> cn_expansion_exact(const HalfInteger& beta, int K);

// Same family for general non-integer rational beta; lead and corrections
// carried as floats (Gamma via gamma_eval), correction constants exact
// rationals converted at `prec`.
AsymptoticExpansion<BigFloat> cn_expansion_float(const Rational& beta, int K, mpfr_prec_t prec);

}  // namespace tauber
