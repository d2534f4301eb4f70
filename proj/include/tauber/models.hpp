#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tauber/rational.hpp"
#include "tauber/series.hpp"

namespace tauber {

// Outer structure shared by every model: along the residue class r mod d,
//   a_{d*n + r} = R^{-d*n} * b_n,
// where b_n comes from the inner (unit-radius) singularity data.  Off-class
// coefficients vanish.
struct Envelope {
    Rational R = rat(1);
    int d = 1;
    int r = 0;

    void validate() const {
        require(R > 0, "envelope: radius must be positive");
        require(d >= 1, "envelope: period must be >= 1");
        require(r >= 0 && r < d, "envelope: residue class out of range");
    }
};

// b_n are the coefficients of h(sqrt(1-w)) for a holomorphic jet h.
struct SqrtHolomorphic {
    Series<Rational> h = Series<Rational>::zero(0);
};

// Same with a principal part: sum_{j=1..M} D_j (1-w)^{-j/2} + h(sqrt(1-w));
// principal[j-1] = D_j.
struct SqrtPole {
    std::vector<Rational> principal;
    Series<Rational> h = Series<Rational>::zero(0);
};

// Pole of order M strictly inside the disk of analyticity, equivariant
// layout: g(z) = z^r * ( sum_{m=1..M} c_m / (z^d - R'^d)^m + rest ), with
// rest holomorphic on |z| < R_check.  partial_fractions[m-1] = c_m.
// tail_coeff parametrizes the model's concrete rest term
// tail_coeff * z^r / (1 - (z/R_check)^d) used by the oracles; the engine
// prediction never reads it.
struct InteriorPole {
    Rational R_prime;
    int M = 1;
    std::vector<Rational> partial_fractions;
    Rational R_check;
    Rational tail_coeff = rat(0);
};

// Raw local data at a ramified singular point: lambda is the jet of the
// projection in a local coordinate (lambda(0) = 1, lambda'(0) = 0,
// lambda''(0) != 0), g the jet of the observable.  When pole_order = M >= 1,
// g is the jet of z^M * g_c for an observable with a pole of order M at the
// point.
struct RawLocalMap {
    Series<Rational> lambda = Series<Rational>::zero(0);
    Series<Rational> g = Series<Rational>::zero(0);
    int pole_order = 0;
};

using ModelPayload = std::variant<SqrtHolomorphic, SqrtPole, InteriorPole, RawLocalMap>;

struct Model {
    std::string id;
    std::string description;
    Envelope env;
    ModelPayload payload;
    // Expansion mode: when alpha has denominator other than 1 or 2 the
    // sqrt exponent 1/2 is replaced by alpha and expansion coefficients are
    // floats.  Only SqrtHolomorphic payloads support a general alpha.
    Rational alpha = rat(1, 2);
};

inline bool is_general_alpha(const Model& m) { return m.alpha != rat(1, 2); }

}  // namespace tauber
