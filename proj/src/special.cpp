#include "tauber/special.hpp"

#include "tauber/series.hpp"

namespace tauber {

Rational binom_coeff(const Rational& beta, long n) {
    require(n >= 0, "binom_coeff: negative index");
    Rational c = rat(1);
    for (long k = 1; k <= n; ++k) c *= Rational(k - 1 - beta) / k;
    return c;
}

std::vector<Rational> binom_coeff_prefix(const Rational& beta, long N) {
    require(N >= 0, "binom_coeff_prefix: negative length");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    c[0] = rat(1);
    for (long k = 1; k <= N; ++k) c[k] = c[k - 1] * Rational(k - 1 - beta) / k;
    return c;
}

Rational rational_binomial(const Rational& x, long k) {
    require(k >= 0, "rational_binomial: negative index");
    Rational c = rat(1);
    for (long i = 0; i < k; ++i) c *= Rational(x - i) / (i + 1);
    return c;
}

namespace {

// Jet of (e^t - 1)/t: coefficients 1/(k+1)!.
Series<Rational> expm1_over_t_jet(int order) {
    Series<Rational> e = Series<Rational>::zero(order);
    Rational f = rat(1);
    for (int k = 0; k <= order; ++k) {
        f /= (k == 0) ? 1 : (k + 1);
        e.at(k) = f;
    }
    return e;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int L) {
    require(L >= 0, "bernoulli_numbers: negative order");
    Series<Rational> u = reciprocal(expm1_over_t_jet(L));
    std::vector<Rational> b(static_cast<std::size_t>(L) + 1);
    Rational fact = rat(1);
    for (int l = 0; l <= L; ++l) {
        if (l > 0) fact *= l;
        b[l] = u[l] * fact;
    }
    return b;
}

Rational gen_bernoulli(int l, const Rational& beta, const Rational& z) {
    require(l >= 0, "gen_bernoulli: negative order");
    if (l == 0) return rat(1);
    Series<Rational> lu = log(reciprocal(expm1_over_t_jet(l)));
    Series<Rational> w = beta * lu + z * Series<Rational>::identity(l);
    Series<Rational> e = exp(w);
    Rational fact = rat(1);
    for (int k = 2; k <= l; ++k) fact *= k;
    return e[l] * fact;
}

Rational gamma_ratio_correction(const Rational& a, const Rational& b, int l) {
    require(l >= 0, "gamma_ratio_correction: negative order");
    if (l == 0) return rat(1);
    return rational_binomial(a - b, l) * gen_bernoulli(l, a - b + 1, a);
}

Rational root_correction(const Rational& beta, int l) {
    return gamma_ratio_correction(-beta, rat(1), l);
}

std::vector<Rational> laplace_constants(int K) {
    require(K >= 0, "laplace_constants: negative order");
    if (K == 0) return {};
    std::vector<Rational> B = bernoulli_numbers(K + 1);
    Series<Rational> s = Series<Rational>::zero(K);
    for (int j = 1; 2 * j - 1 <= K; ++j)
        s.at(2 * j - 1) = B[2 * j] / rat(2 * j * (2 * j - 1));
    Series<Rational> e = exp(s);
    std::vector<Rational> c(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k) c[k - 1] = e[k];
    return c;
}

BigFloat gamma_eval(const BigFloat& x, mpfr_prec_t prec) {
    require(x.is_finite(), "gamma_eval: non-finite argument");
    require(!(mpfr_integer_p(x.raw()) && x.sign() <= 0),
            "gamma_eval: pole at non-positive integer");
    BigFloat r(0L, prec);
    mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

ExactScalar gamma_half_integer(const HalfInteger& x) {
    if (x.is_integer()) {
        long n = x.twice() / 2;
        require(n >= 1, "gamma: pole at non-positive integer");
        return ExactScalar(Rational(factorial(static_cast<unsigned long>(n - 1))), 0);
    }
    // x = 1/2 + t; walk the recurrence Gamma(y+1) = y Gamma(y) from Gamma(1/2).
    long t = (x.twice() - 1) / 2;
    Rational q = rat(1);
    for (long i = 0; i < t; ++i) q *= rat(2 * i + 1, 2);
    for (long i = t; i < 0; ++i) q /= rat(2 * i + 1, 2);
    return ExactScalar(q, 1);
}

// binom(n+m-1, m-1) = prod_{i=1..m-1}(n+i)/(m-1)!.
std::vector<Rational> binomial_polynomial_coeffs(long m) {
    require(m >= 1, "binomial_polynomial_coeffs: need m >= 1");
    std::vector<Rational> poly{rat(1)};
    Rational fact = rat(1);
    for (long i = 1; i <= m - 1; ++i) {
        fact *= i;
        std::vector<Rational> next(poly.size() + 1, rat(0));
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] += Rational(i) * poly[d];
        }
        poly = std::move(next);
    }
    for (auto& c : poly) c /= fact;
    return poly;
}

AsymptoticExpansion<ExactScalar> cn_expansion_exact(const HalfInteger& beta, int K) {
    require(K >= 0, "cn_expansion: negative correction order");
    AsymptoticExpansion<ExactScalar> E;
    if (beta.is_integer() && beta.twice() >= 0) {
        E.remainder_kind = RemainderKind::None;
        E.finite_support_bound = beta.twice() / 2;
        E.notes.push_back("integer exponent: family is a polynomial in z, finitely supported");
        return E;
    }
    if (beta.is_integer()) {
        long m = -beta.twice() / 2;
        std::vector<Rational> poly = binomial_polynomial_coeffs(m);
        for (std::size_t deg = 0; deg < poly.size(); ++deg)
            E.add_exact_term(rat(-static_cast<long>(deg)), ExactScalar(poly[deg], 0));
        E.remainder_kind = RemainderKind::None;
        return E;
    }
    Rational b = beta.value();
    ExactScalar lead = ExactScalar(-b, 0) / gamma_half_integer(HalfInteger(2 - beta.twice()));
    for (int l = 0; l <= K; ++l)
        E.add_term(b + 1 + l, lead * ExactScalar(root_correction(b, l), 0));
    E.remainder_kind = RemainderKind::PowerLaw;
    E.remainder_exponent = b + 2 + K;
    return E;
}

AsymptoticExpansion<BigFloat> cn_expansion_float(const Rational& beta, int K, mpfr_prec_t prec) {
    require(K >= 0, "cn_expansion: negative correction order");
    require(!is_integer(beta), "cn_expansion_float: integer exponent is exact, not asymptotic");
    AsymptoticExpansion<BigFloat> E;
    BigFloat lead = -BigFloat(beta, prec) / gamma_eval(BigFloat(Rational(1 - beta), prec), prec);
    for (int l = 0; l <= K; ++l)
        E.add_term(beta + 1 + l, lead * BigFloat(root_correction(beta, l), prec));
    E.remainder_kind = RemainderKind::PowerLaw;
    E.remainder_exponent = beta + 2 + K;
    return E;
}

}  // namespace tauber
