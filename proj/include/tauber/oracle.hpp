#pragma once

#include <utility>
#include <vector>

#include "tauber/bigfloat.hpp"
#include "tauber/models.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Model data flattened for the oracles: either an interior-pole law or a
// normal form (principal part + mode jet) under an envelope.  Raw local
// maps are reduced by the jet pipeline once, here, so thousands of
// evaluations reuse it.
struct OracleForm {
    bool interior = false;
    InteriorPole ip;
    Envelope env;
    std::vector<Rational> principal;
    Series<Rational> h = Series<Rational>::zero(0);
    Rational alpha = rat(1, 2);
};
OracleForm oracle_form(const Model& model);

// Exact Taylor prefix a_0..a_N.  Routes independent of the asymptotic
// machinery: mode sums through the one-step binomial recurrence for
// normal-form data, scaled geometric-series convolutions for interior
// poles.
std::vector<Rational> exact_coeffs(const Model& model, long N);

// Model function at a point, for the Cauchy-circle route.
BigComplex evaluate_model(const OracleForm& form, const BigComplex& z, mpfr_prec_t prec);

// Trapezoid (= DFT) approximation of the Cauchy coefficient integrals on
// the circle |z| = rho with S sample points: numeric a_0..a_N.  Requires S
// > 2N and rho strictly inside every singularity of the model.
std::vector<BigFloat> numeric_coeffs(const Model& model, const Rational& rho, long N, long S,
                                     mpfr_prec_t prec);

// Solve v(n_i) = sum_j c_j n_i^{-e_j} for the constants c_j from exactly
// |exponents| samples (square system, partial pivoting).
std::vector<BigFloat> richardson_fit(const std::vector<std::pair<long, BigFloat>>& samples,
                                     const std::vector<Rational>& exponents);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    long points = 0;
    bool underflow = false;  // too few nonzero samples to fit
};

// Least-squares slope of log|v| against log n; exact zeros are skipped.
SlopeFit log_log_slope(const std::vector<std::pair<long, BigFloat>>& values);

}  // namespace tauber
