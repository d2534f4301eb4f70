#include <doctest.h>

#include <utility>
#include <vector>

#include "tauber/corpus.hpp"
#include "tauber/oracle.hpp"

using namespace tauber;

namespace {

Rational catalan_scaled(long n) {
    return Rational(binomial_integer(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n))) /
           (Rational(n + 1) * pow_rational(rat(4), n));
}

}  // namespace

TEST_CASE("exact prefix, square root of the gap") {
    // sqrt(1-z) = 1 - z/2 - z^2/8 - z^3/16 - 5 z^4/128 - ...
    std::vector<Rational> a = exact_coeffs(corpus_model("sqrt-identity"), 4);
    CHECK(a == std::vector<Rational>{rat(1), rat(-1, 2), rat(-1, 8), rat(-1, 16), rat(-5, 128)});
}

TEST_CASE("exact prefix, catalan family, dual routes") {
    // Route 1: per-mode binomial recurrences inside exact_coeffs.
    Model m = corpus_model("catalan");
    const long N = 30;
    std::vector<Rational> a = exact_coeffs(m, N);
    // Route 2: series arithmetic in z.  The model is the finite mode sum
    // sum_k h_k (1-z)^{k/2}; evaluate it by Horner in w(z) = sqrt(1-z).
    const Series<Rational>& h = std::get<SqrtHolomorphic>(m.payload).h;
    std::vector<Rational> gap_coeffs(static_cast<std::size_t>(N) + 1, rat(0));
    gap_coeffs[0] = rat(1);
    gap_coeffs[1] = rat(-1);
    Series<Rational> w = sqrt(Series<Rational>(std::move(gap_coeffs)));
    Series<Rational> acc = Series<Rational>::zero(N);
    for (int k = h.order(); k >= 0; --k)
        acc = acc * w + Series<Rational>::constant(h[k], N);
    for (long n = 0; n <= N; ++n) CHECK(a[static_cast<std::size_t>(n)] == acc[static_cast<int>(n)]);
    // The jet's coefficients approach the scaled Catalan law only once n
    // clears the deepest mode: at n = 30 the gap is tiny but nonzero.
    BigFloat gap = abs(BigFloat(a[30] - catalan_scaled(30), 128));
    CHECK(gap.to_double() < 1e-6);
    CHECK(gap.to_double() > 0.0);
}

TEST_CASE("exact prefix, central binomial family") {
    std::vector<Rational> a = exact_coeffs(corpus_model("central-binomial"), 25);
    for (long n = 0; n <= 25; ++n) {
        Rational want =
            Rational(binomial_integer(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n))) /
            pow_rational(rat(4), n);
        CHECK(a[static_cast<std::size_t>(n)] == want);
    }
}

TEST_CASE("exact prefix respects the envelope") {
    // equiv-scaled: radius 2, period 2, class 1: a_{2n+1} = b_n 2^{-2n}.
    std::vector<Rational> a = exact_coeffs(corpus_model("equiv-scaled"), 41);
    std::vector<Rational> b = exact_coeffs(corpus_model("sqrt-identity"), 20);
    for (long n = 0; n <= 20; ++n) {
        Rational want = b[static_cast<std::size_t>(n)] / pow_rational(rat(4), n);
        CHECK(a[static_cast<std::size_t>(2 * n + 1)] == want);
    }
    for (long i = 0; i <= 41; i += 2) CHECK(a[static_cast<std::size_t>(i)] == 0);
}

TEST_CASE("exact prefix, interior pole with geometric tail") {
    // g(z) = 1/(z - 3/4) + (1/8)/(1 - 2z/3):
    // a_n = -(4/3)^{n+1} + (1/8)(2/3)^n.
    std::vector<Rational> a = exact_coeffs(corpus_model("interior-d1-simple"), 50);
    for (long n = 0; n <= 50; ++n) {
        Rational want = -pow_rational(rat(4, 3), n + 1) + rat(1, 8) * pow_rational(rat(2, 3), n);
        CHECK(a[static_cast<std::size_t>(n)] == want);
    }
}

TEST_CASE("numeric coefficients recover a known geometric law") {
    // -2/(z - 2) = 1/(1 - z/2): a_n = 2^{-n}.
    Model m;
    m.id = "inline-geometric";
    m.env = Envelope{rat(1), 1, 0};
    InteriorPole ip;
    ip.R_prime = rat(2);
    ip.M = 1;
    ip.partial_fractions = {rat(-2)};
    ip.R_check = rat(4);
    ip.tail_coeff = rat(0);
    m.payload = ip;
    std::vector<BigFloat> num = numeric_coeffs(m, rat(1, 4), 20, 128, 256);
    for (long n = 0; n <= 20; ++n) {
        BigFloat want(pow_rational(rat(1, 2), n), 256);
        CHECK(abs(num[static_cast<std::size_t>(n)] - want).to_double() < 1e-60);
    }
}

TEST_CASE("numeric coefficients match the exact oracle on a corpus model") {
    Model m = corpus_model("catalan");
    std::vector<BigFloat> num = numeric_coeffs(m, rat(1, 2), 12, 64, 256);
    std::vector<Rational> ex = exact_coeffs(m, 12);
    // DFT aliasing at rho = 1/2, S = 64 leaves an error near 2^-64 ~ 5e-20;
    // the a_{n+64} tail decays only like the coefficients themselves.
    for (long n = 0; n <= 12; ++n) {
        BigFloat want(ex[static_cast<std::size_t>(n)], 256);
        CHECK(abs(num[static_cast<std::size_t>(n)] - want).to_double() < 1e-17);
    }
}

TEST_CASE("numeric coefficient preconditions") {
    Model m = corpus_model("catalan");
    CHECK_THROWS_AS(numeric_coeffs(m, rat(1, 2), 16, 32, 128), PreconditionError);  // S <= 2N
    CHECK_THROWS_AS(numeric_coeffs(m, rat(3, 2), 4, 32, 128), PreconditionError);   // rho >= 1
    CHECK_THROWS_AS(numeric_coeffs(m, rat(-1, 2), 4, 32, 128), PreconditionError);

    Model ip = corpus_model("interior-d1-simple");  // pole radius 3/4
    CHECK_THROWS_AS(numeric_coeffs(ip, rat(7, 8), 4, 32, 128), PreconditionError);
}

TEST_CASE("richardson fit recovers planted constants") {
    const mpfr_prec_t P = 256;
    auto v = [&](long n) {
        return BigFloat(2, P) - BigFloat(3, P) / BigFloat(n, P) +
               BigFloat(5, P) / BigFloat(n * n, P);
    };
    std::vector<std::pair<long, BigFloat>> samples = {{10, v(10)}, {20, v(20)}, {40, v(40)}};
    std::vector<Rational> exps = {rat(0), rat(1), rat(2)};
    std::vector<BigFloat> c = richardson_fit(samples, exps);
    REQUIRE(c.size() == 3);
    CHECK(abs(c[0] - BigFloat(2, P)).to_double() < 1e-70);
    CHECK(abs(c[1] - BigFloat(-3, P)).to_double() < 1e-70);
    CHECK(abs(c[2] - BigFloat(5, P)).to_double() < 1e-70);

    // Half-integer exponents go through the same solver.
    auto u = [&](long n) {
        return BigFloat(1, P) / pow_rational_exp(n, rat(3, 2), P) +
               BigFloat(7, P) / pow_rational_exp(n, rat(5, 2), P);
    };
    std::vector<std::pair<long, BigFloat>> s2 = {{16, u(16)}, {64, u(64)}};
    std::vector<BigFloat> c2 = richardson_fit(s2, {rat(3, 2), rat(5, 2)});
    CHECK(abs(c2[0] - BigFloat(1, P)).to_double() < 1e-65);
    CHECK(abs(c2[1] - BigFloat(7, P)).to_double() < 1e-65);
}

TEST_CASE("richardson fit error paths") {
    const mpfr_prec_t P = 128;
    std::vector<std::pair<long, BigFloat>> dup = {{8, BigFloat(1, P)}, {8, BigFloat(1, P)}};
    CHECK_THROWS_AS(richardson_fit(dup, {rat(0), rat(1)}), PreconditionError);
    std::vector<std::pair<long, BigFloat>> one = {{8, BigFloat(1, P)}};
    CHECK_THROWS_AS(richardson_fit(one, {rat(0), rat(1)}), PreconditionError);
    std::vector<std::pair<long, BigFloat>> zero_idx = {{0, BigFloat(1, P)}};
    CHECK_THROWS_AS(richardson_fit(zero_idx, {rat(0)}), PreconditionError);
}

TEST_CASE("log-log slope estimation") {
    const mpfr_prec_t P = 128;
    std::vector<std::pair<long, BigFloat>> vals;
    for (long n = 64; n <= 8192; n *= 2)
        vals.push_back({n, BigFloat(1, P) / pow_rational_exp(n, rat(7, 2), P)});
    SlopeFit fit = log_log_slope(vals);
    CHECK_FALSE(fit.underflow);
    CHECK(fit.points == 8);
    CHECK(fit.slope == doctest::Approx(-3.5).epsilon(1e-9));

    // Exact zeros are skipped; all-zero input cannot be fitted.
    std::vector<std::pair<long, BigFloat>> zeros = {{4, BigFloat::zero(P)}, {8, BigFloat::zero(P)}};
    SlopeFit z = log_log_slope(zeros);
    CHECK(z.underflow);

    // A single usable point is not a line either.
    std::vector<std::pair<long, BigFloat>> single = {{4, BigFloat(1, P)}, {8, BigFloat::zero(P)}};
    CHECK(log_log_slope(single).underflow);
}

TEST_CASE("oracle form reduces raw data once") {
    OracleForm form = oracle_form(corpus_model("raw-merom"));
    CHECK_FALSE(form.interior);
    CHECK(form.principal == std::vector<Rational>{rat(1)});
    CHECK(form.h.is_zero());

    // Raw pipelines reject the general-exponent mode.
    Model m = corpus_model("raw-merom");
    m.alpha = rat(1, 3);
    CHECK_THROWS_AS(oracle_form(m), PreconditionError);
}

TEST_CASE("model evaluation at a point") {
    const mpfr_prec_t P = 256;
    // h(w) = w is its own closed form: value sqrt(3)/2 at z = 1/4.
    OracleForm root = oracle_form(corpus_model("sqrt-identity"));
    BigComplex z(BigFloat(rat(1, 4), P), BigFloat::zero(P));
    BigComplex val = evaluate_model(root, z, P);
    CHECK(abs(val.im()).to_double() < 1e-70);
    CHECK(abs(val.re() - sqrt(BigFloat(rat(3, 4), P))).to_double() < 1e-70);

    // Branch consistency off the real axis: val^2 = 1 - z.
    BigComplex zc(BigFloat(rat(1, 8), P), BigFloat(rat(1, 4), P));
    BigComplex w = evaluate_model(root, zc, P);
    BigComplex back = w * w + zc;
    CHECK(abs(back - BigComplex(rat(1), P)).to_double() < 1e-70);
    CHECK(w.re().sign() > 0);  // principal branch

    // Principal part only: (1-z)^{-1/2} at z = 1/4 is sqrt(4/3).
    OracleForm pp = oracle_form(corpus_model("central-binomial"));
    BigComplex inv = evaluate_model(pp, z, P);
    CHECK(abs(inv.re() - sqrt(BigFloat(rat(4, 3), P))).to_double() < 1e-70);

    // Interior pole: 1/(z - 3/4) + (1/8)/(1 - 2z/3) at z = 1/4 is -2 + 3/20.
    OracleForm ip = oracle_form(corpus_model("interior-d1-simple"));
    BigComplex g = evaluate_model(ip, z, P);
    CHECK(abs(g.re() - BigFloat(rat(-2) + rat(3, 20), P)).to_double() < 1e-70);
    CHECK(abs(g.im()).to_double() < 1e-70);
}
