#include <doctest.h>

#include <random>
#include <vector>

#include "tauber/engine.hpp"
#include "tauber/uniformize.hpp"

using namespace tauber;

namespace {

Series<Rational> jet(std::initializer_list<long> cs, int order) {
    std::vector<Rational> v;
    for (long c : cs) v.push_back(rat(c));
    v.resize(static_cast<std::size_t>(order) + 1, rat(0));
    return Series<Rational>(std::move(v));
}

Series<Rational> one_minus_w2(int order) { return jet({1, 0, -1}, order); }

}  // namespace

TEST_CASE("uniformize the normal form itself") {
    Series<Rational> h = uniformize(one_minus_w2(10));
    CHECK(h.order() == 9);
    CHECK(h[1] == 1);
    for (int k = 0; k <= 9; ++k)
        if (k != 1) CHECK(h[k] == 0);
}

TEST_CASE("uniformize rescales to a positive derivative") {
    // lambda = 1 - 4 z^2: s(z) = 2z, so h(w) = w/2 (principal branch,
    // h'(0) > 0 even though -w/2 also inverts the square).
    Series<Rational> h = uniformize(jet({1, 0, -4}, 8));
    CHECK(h[1] == rat(1, 2));
    for (int k = 2; k <= h.order(); ++k) CHECK(h[k] == 0);
}

TEST_CASE("uniformize a perturbed projection, frozen jet") {
    Series<Rational> lam = jet({1, 0, -1, 1}, 12);
    Series<Rational> h = uniformize(lam);
    CHECK(h[0] == 0);
    CHECK(h[1] == 1);
    CHECK(h[2] == rat(1, 2));
    CHECK(h[3] == rat(5, 8));
    // Round trip: lambda(h(w)) = 1 - w^2 through the common order.
    Series<Rational> rt = compose(lam, h);
    CHECK(rt == one_minus_w2(rt.order()));
}

TEST_CASE("uniformize round trip on random projections") {
    std::mt19937_64 rng(777001);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    for (int t = 0; t < 25; ++t) {
        std::vector<Rational> cs = {rat(1), rat(0), rat(-1)};
        for (int k = 3; k <= 10; ++k) cs.push_back(rat(num(rng), den(rng)));
        Series<Rational> lam(std::move(cs));
        Series<Rational> h = uniformize(lam);
        CHECK(h[1] == 1);
        CHECK(compose(lam, h) == one_minus_w2(h.order()));
    }
}

TEST_CASE("uniformize degeneracy errors") {
    CHECK_THROWS_AS(uniformize(jet({2, 0, -1}, 8)), PreconditionError);   // lambda(0) != 1
    CHECK_THROWS_AS(uniformize(jet({1, 1, -1}, 8)), PreconditionError);   // lambda'(0) != 0
    CHECK_THROWS_AS(uniformize(jet({1, 0, 0, 1}, 8)), PreconditionError); // lambda''(0) = 0
    CHECK_THROWS_AS(uniformize(jet({1, 0}, 1)), PreconditionError);       // jet too short
    // -lambda''(0)/2 = 2 is not a rational square: exact mode refuses.
    CHECK_THROWS_AS(uniformize(jet({1, 0, -2}, 8)), PreconditionError);
}

TEST_CASE("uniformize in float mode handles non-square curvature") {
    const mpfr_prec_t P = 256;
    Series<BigFloat> lam = to_float_series(jet({1, 0, -2, 1}, 10), P);
    Series<BigFloat> h = uniformize(lam);
    // h'(0) = 1/sqrt(2).
    BigFloat want = BigFloat(1, P) / sqrt(BigFloat(2, P));
    CHECK(abs(h[1] - want).to_double() < 1e-70);
    CHECK(h[1].sign() > 0);
    Series<BigFloat> rt = compose(lam, h);
    Series<BigFloat> target = to_float_series(one_minus_w2(rt.order()), P);
    for (int k = 0; k <= rt.order(); ++k) CHECK(abs(rt[k] - target[k]).to_double() < 1e-65);
}

TEST_CASE("field square roots") {
    CHECK(field_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK_FALSE(field_sqrt(rat(2)).has_value());
    CHECK_FALSE(field_sqrt(rat(-4)).has_value());
    CHECK_FALSE(field_sqrt(rat(0)).has_value());
    auto f = field_sqrt(BigFloat(2, 128));
    REQUIRE(f.has_value());
    CHECK(abs(*f * *f - BigFloat(2, 128)).to_double() < 1e-35);
}

TEST_CASE("uniformized composite observable reaches the expansion directly") {
    // lambda = 1 - z^2 with observable 2/(1+z): the normal form h-jet is
    // 2/(1+w), so the raw pipeline and the direct jet agree termwise.
    int order = 20;
    RawLocalMap raw;
    raw.lambda = one_minus_w2(order + 1);
    raw.g = jet({2}, order) * reciprocal(jet({1, 1}, order));
    raw.pole_order = 0;
    RawNormalForm nf = normalize_raw(raw);
    Series<Rational> direct = jet({2}, nf.h.order()) * reciprocal(jet({1, 1}, nf.h.order()));
    CHECK(nf.h == direct);
}
