#include <doctest.h>

#include <vector>

#include "tauber/engine.hpp"

using namespace tauber;

namespace {

Series<Rational> jet(std::initializer_list<long> cs, int order) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(rat(c));
    v.resize(static_cast<std::size_t>(order) + 1, rat(0));
    return Series<Rational>(std::move(v));
}

Series<Rational> catalan_jet(int order) {
    return jet({2}, order) * reciprocal(jet({1, 1}, order));
}

}  // namespace

TEST_CASE("square root expansion, identity observable") {
    AsymptoticExpansion<ExactScalar> E = sqrt_expansion(jet({0, 1}, 9), 3);
    CHECK(E.period == 1);
    CHECK(E.radius == 1);
    auto lead = E.leading();
    REQUIRE(lead.has_value());
    CHECK(lead->first == rat(3, 2));
    CHECK(lead->second == ExactScalar(rat(-1, 2), -1));
    // Corrections are lead * e_l at half-step exponents.
    CHECK(E.terms.at(rat(5, 2)) == ExactScalar(rat(-3, 16), -1));
    CHECK(E.terms.at(rat(7, 2)) == ExactScalar(rat(-25, 256), -1));
    CHECK(E.remainder_kind == RemainderKind::PowerLaw);
    CHECK(E.remainder_exponent == rat(9, 2));
    CHECK(E.exact_terms.empty());
}

TEST_CASE("square root expansion, cubic observable") {
    // h = w^3: the mode (1-z)^{3/2} leads at n^{-5/2} with constant
    // -(3/2)/Gamma(-1/2) = 3/(4 sqrt pi).
    AsymptoticExpansion<ExactScalar> E = sqrt_expansion(jet({0, 0, 0, 1}, 9), 2);
    auto lead = E.leading();
    REQUIRE(lead.has_value());
    CHECK(lead->first == rat(5, 2));
    CHECK(lead->second == ExactScalar(rat(3, 4), -1));
    CHECK(E.remainder_exponent == rat(7, 2));
    // h'(0) = 0 is worth a remark: the 3/2 slot is empty.
    CHECK(E.terms.count(rat(3, 2)) == 0);
    bool noted = false;
    for (const auto& n : E.notes) noted = noted || n.find("leading coefficient vanishes") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("square root expansion, catalan observable") {
    // h = 2/(1+w) reproduces the classical series
    // n^{-3/2}/sqrt(pi) (1 - 9/(8n) + 145/(128 n^2) - ...).
    AsymptoticExpansion<ExactScalar> E = sqrt_expansion(catalan_jet(41), 3);
    CHECK(E.terms.at(rat(3, 2)) == ExactScalar(rat(1), -1));
    CHECK(E.terms.at(rat(5, 2)) == ExactScalar(rat(-9, 8), -1));
    CHECK(E.terms.at(rat(7, 2)) == ExactScalar(rat(145, 128), -1));
    CHECK(E.remainder_exponent == rat(9, 2));
}

TEST_CASE("square root expansion, truncation is a prefix") {
    Series<Rational> h = catalan_jet(41);
    AsymptoticExpansion<ExactScalar> E2 = sqrt_expansion(h, 2);
    AsymptoticExpansion<ExactScalar> E3 = sqrt_expansion(h, 3);
    for (const auto& [e, c] : E2.terms) CHECK(E3.terms.at(e) == c);
    CHECK(E2.remainder_exponent + 1 == E3.remainder_exponent);
}

TEST_CASE("square root expansion, even modes are polynomial") {
    AsymptoticExpansion<ExactScalar> E = sqrt_expansion(jet({0, 0, 1}, 9), 2);
    CHECK(E.remainder_kind == RemainderKind::None);
    CHECK(E.empty());
    CHECK(E.finite_support_bound == 1);
    CHECK_FALSE(E.notes.empty());
}

TEST_CASE("square root expansion, error paths") {
    CHECK_THROWS_AS(sqrt_expansion(jet({0, 1}, 5), 3), PreconditionError);  // needs order >= 7
    CHECK_THROWS_AS(sqrt_expansion(jet({0, 1}, 9), -1), PreconditionError);
    // The zero jet is exact at any depth.
    AsymptoticExpansion<ExactScalar> Z = sqrt_expansion(Series<Rational>::zero(0), 5);
    CHECK(Z.remainder_kind == RemainderKind::None);
    CHECK(Z.empty());
}

TEST_CASE("pole expansion, single half pole") {
    AsymptoticExpansion<ExactScalar> E = pole_expansion({rat(1)}, Series<Rational>::zero(0), 3);
    auto lead = E.leading();
    REQUIRE(lead.has_value());
    CHECK(lead->first == rat(1, 2));
    CHECK(lead->second == ExactScalar(rat(1), -1));
    CHECK(E.terms.at(rat(3, 2)) == ExactScalar(rat(-1, 8), -1));
    CHECK(E.remainder_exponent == rat(7, 2));
}

TEST_CASE("pole expansion, integer poles are exact") {
    // (1-z)^{-1}: coefficient 1 for every n, no asymptotic tail.
    AsymptoticExpansion<ExactScalar> E = pole_expansion({rat(0), rat(1)}, Series<Rational>::zero(0), 3);
    CHECK(E.remainder_kind == RemainderKind::None);
    CHECK(E.terms.empty());
    CHECK(E.exact_terms.at(rat(0)) == ExactScalar(rat(1)));
    CHECK(predict_raw_exact(E, 123) == 1);

    // (1-z)^{-2}: coefficient n + 1.
    AsymptoticExpansion<ExactScalar> E2 =
        pole_expansion({rat(0), rat(0), rat(0), rat(1)}, Series<Rational>::zero(0), 3);
    CHECK(predict_raw_exact(E2, 40) == 41);
}

TEST_CASE("pole expansion, mixed principal part") {
    // D_1 = D_2 = 1: exact part 1, asymptotic family from the half pole.
    AsymptoticExpansion<ExactScalar> E =
        pole_expansion({rat(1), rat(1)}, Series<Rational>::zero(0), 3);
    CHECK(E.exact_terms.at(rat(0)) == ExactScalar(rat(1)));
    CHECK(E.terms.at(rat(1, 2)) == ExactScalar(rat(1), -1));
    CHECK(E.remainder_kind == RemainderKind::PowerLaw);
    CHECK(E.remainder_exponent == rat(7, 2));
}

TEST_CASE("pole expansion, deeper half pole") {
    // D_3 (1-z)^{-3/2} leads at n^{1/2} with constant (3/2)/Gamma(5/2) = 2/sqrt(pi).
    AsymptoticExpansion<ExactScalar> E =
        pole_expansion({rat(0), rat(0), rat(1)}, Series<Rational>::zero(0), 2);
    auto lead = E.leading();
    REQUIRE(lead.has_value());
    CHECK(lead->first == rat(-1, 2));
    CHECK(lead->second == ExactScalar(rat(2), -1));
    CHECK(E.remainder_exponent == rat(-1, 2) + 2);
}

TEST_CASE("pole expansion, linearity in the principal part") {
    AsymptoticExpansion<ExactScalar> E1 = pole_expansion({rat(1)}, Series<Rational>::zero(0), 3);
    AsymptoticExpansion<ExactScalar> E2 = pole_expansion({rat(2)}, Series<Rational>::zero(0), 3);
    CHECK(E1.terms.size() == E2.terms.size());
    for (const auto& [e, c] : E1.terms) CHECK(E2.terms.at(e) == c * ExactScalar(rat(2)));
    CHECK_THROWS_AS(pole_expansion({}, Series<Rational>::zero(0), 3), PreconditionError);
}

TEST_CASE("general exponent route agrees with the exact square root route") {
    const mpfr_prec_t P = 256;
    Series<Rational> h = jet({0, 1, 0, 2, 0, -1}, 9);
    AsymptoticExpansion<ExactScalar> X = sqrt_expansion(h, 3);
    AsymptoticExpansion<BigFloat> F = general_alpha_expansion(h, rat(1, 2), 3, P);
    CHECK(F.remainder_exponent == X.remainder_exponent);
    CHECK(F.terms.size() == X.terms.size());
    for (const auto& [e, c] : X.terms) {
        BigFloat want = c.to_float(P);
        BigFloat got = F.terms.at(e);
        CHECK(abs(got - want).to_double() < 1e-70);
    }
}

TEST_CASE("general exponent route, third-power singularity") {
    const mpfr_prec_t P = 256;
    // h = w + w^3 at alpha = 1/3: mode k=1 is asymptotic at 4/3, mode k=3
    // has integer exponent 1 and is polynomial.
    AsymptoticExpansion<BigFloat> E = general_alpha_expansion(jet({0, 1, 0, 1}, 30), rat(1, 3), 3, P);
    auto lead = E.leading();
    REQUIRE(lead.has_value());
    CHECK(lead->first == rat(4, 3));
    BigFloat want = BigFloat(rat(-1, 3), P) / gamma_eval(BigFloat(rat(2, 3), P), P);
    CHECK(abs(lead->second - want).to_double() < 1e-60);
    CHECK(E.finite_support_bound == 1);
    CHECK(E.remainder_exponent == rat(1, 3) + 4);

    CHECK_THROWS_AS(general_alpha_expansion(jet({0, 1}, 9), rat(3, 2), 2, P), PreconditionError);
    CHECK_THROWS_AS(general_alpha_expansion(jet({0, 1}, 9), rat(1), 2, P), PreconditionError);
    // order * alpha must exceed K: 5/3 < 3.
    CHECK_THROWS_AS(general_alpha_expansion(jet({0, 1}, 5), rat(1, 3), 3, P), PreconditionError);
}

TEST_CASE("expansion evaluation and raw prediction") {
    const mpfr_prec_t P = 128;
    AsymptoticExpansion<ExactScalar> E;
    E.add_term(rat(3, 2), ExactScalar(rat(1)));
    E.remainder_kind = RemainderKind::PowerLaw;
    E.remainder_exponent = rat(5, 2);
    CHECK(abs(expansion_value(E, 4, P) - BigFloat(rat(1, 8), P)).to_double() < 1e-30);

    Envelope env;
    env.R = rat(1);
    env.d = 2;
    env.r = 1;
    AsymptoticExpansion<ExactScalar> S = apply_envelope(E, env);
    CHECK(S.period == 2);
    CHECK(S.residue == 1);
    // Raw index 9 is class 1 mod 2 with inner index 4.
    CHECK(abs(predict_raw(S, 9, P) - BigFloat(rat(1, 8), P)).to_double() < 1e-30);
    CHECK_THROWS_AS(predict_raw(S, 4, P), PreconditionError);
    // A second envelope cannot be stamped on top.
    CHECK_THROWS_AS(apply_envelope(S, env), PreconditionError);
}

TEST_CASE("raw reduction, holomorphic observable") {
    RawLocalMap raw;
    raw.lambda = jet({1, 0, -1}, 12);  // already in normal position
    raw.g = jet({0, 1}, 12);
    raw.pole_order = 0;
    RawNormalForm nf = normalize_raw(raw);
    CHECK(nf.principal.empty());
    CHECK(nf.h[0] == 0);
    CHECK(nf.h[1] == 1);
    for (int k = 2; k <= nf.h.order(); ++k) CHECK(nf.h[k] == 0);
    CHECK_FALSE(nf.declared.empty());

    AsymptoticExpansion<ExactScalar> E = analytic_expansion(raw, 3);
    AsymptoticExpansion<ExactScalar> W = sqrt_expansion(jet({0, 1}, 9), 3);
    CHECK(E.terms == W.terms);
    CHECK(E.remainder_exponent == W.remainder_exponent);
}

TEST_CASE("raw reduction, meromorphic observable") {
    // g is the jet of z * g_c.  g_c = 1/z gives a pure principal part.
    RawLocalMap raw;
    raw.lambda = jet({1, 0, -1}, 12);
    raw.g = jet({1}, 11);
    raw.pole_order = 1;
    RawNormalForm nf = normalize_raw(raw);
    CHECK(nf.principal == std::vector<Rational>{rat(1)});
    CHECK(nf.h.is_zero());

    // g_c = 1/z + 1 leaves the constant 1 in the holomorphic part.
    raw.g = jet({1, 1}, 11);
    nf = normalize_raw(raw);
    CHECK(nf.principal == std::vector<Rational>{rat(1)});
    CHECK(nf.h[0] == 1);
    for (int k = 1; k <= nf.h.order(); ++k) CHECK(nf.h[k] == 0);

    // Declared pole order not attained: g_c = 1 under pole_order 1.
    raw.g = jet({0, 1}, 12);
    nf = normalize_raw(raw);
    CHECK(nf.principal == std::vector<Rational>{rat(0)});
    bool noted = false;
    for (const auto& n : nf.notes) noted = noted || n.find("not attained") != std::string::npos;
    CHECK(noted);

    // Jets too short to isolate the principal part.
    RawLocalMap shallow;
    shallow.lambda = jet({1, 0, -1}, 12);
    shallow.g = jet({1}, 0);
    shallow.pole_order = 1;
    CHECK_THROWS_AS(normalize_raw(shallow), PreconditionError);
}

TEST_CASE("pipeline selection errors") {
    RawLocalMap raw;
    raw.lambda = jet({1, 0, -1}, 12);
    raw.g = jet({0, 1}, 12);
    raw.pole_order = 0;
    CHECK_THROWS_AS(meromorphic_expansion(raw, 2), PreconditionError);
    raw.pole_order = 1;
    CHECK_THROWS_AS(analytic_expansion(raw, 2), PreconditionError);

    // General alpha is only defined on holomorphic normal-form models.
    Model m;
    m.id = "bad-alpha";
    m.env = Envelope{};
    m.payload = SqrtPole{{rat(1)}, Series<Rational>::zero(0)};
    m.alpha = rat(1, 3);
    CHECK_THROWS_AS(expand_model(m, 2, 128), PreconditionError);
}

TEST_CASE("model dispatch covers every payload") {
    const mpfr_prec_t P = 192;
    Model m;
    m.env = Envelope{};

    m.payload = SqrtHolomorphic{jet({0, 1}, 9)};
    ExpansionVariant v = expand_model(m, 3, P);
    CHECK(std::holds_alternative<AsymptoticExpansion<ExactScalar>>(v));

    m.alpha = rat(1, 3);
    m.payload = SqrtHolomorphic{jet({0, 1}, 30)};
    v = expand_model(m, 3, P);
    CHECK(std::holds_alternative<AsymptoticExpansion<BigFloat>>(v));
    m.alpha = rat(1, 2);

    m.payload = SqrtPole{{rat(1)}, Series<Rational>::zero(0)};
    v = expand_model(m, 3, P);
    CHECK(std::get<AsymptoticExpansion<ExactScalar>>(v).leading()->first == rat(1, 2));

    RawLocalMap raw;
    raw.lambda = jet({1, 0, -1}, 12);
    raw.g = jet({0, 1}, 12);
    m.payload = raw;
    v = expand_model(m, 3, P);
    CHECK(std::get<AsymptoticExpansion<ExactScalar>>(v).leading()->first == rat(3, 2));

    InteriorPole ip;
    ip.R_prime = rat(1, 2);
    ip.M = 1;
    ip.partial_fractions = {rat(1)};
    ip.R_check = rat(1);
    m.payload = ip;
    v = expand_model(m, 3, P);
    const auto& E = std::get<AsymptoticExpansion<ExactScalar>>(v);
    CHECK(E.remainder_kind == RemainderKind::Geometric);
    CHECK(E.radius == rat(1, 2));
}
