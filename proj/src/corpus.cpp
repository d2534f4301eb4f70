#include "tauber/corpus.hpp"

#include <initializer_list>

#include "tauber/errors.hpp"
#include "tauber/series.hpp"

namespace tauber {

namespace {

// Jet from low-order coefficients, zero-padded to `order`.
Series<Rational> jet(std::initializer_list<long> low, int order) {
    Series<Rational> s = Series<Rational>::zero(order);
    int k = 0;
    for (long v : low) s.at(k++) = rat(v);
    return s;
}

// Jet of 2/(1+w).
Series<Rational> two_over_one_plus(int order) {
    Series<Rational> d = Series<Rational>::zero(order);
    d.at(0) = rat(1);
    d.at(1) = rat(1);
    return rat(2) * reciprocal(d);
}

Model sqrt_model(std::string id, std::string desc, Series<Rational> h) {
    Model m;
    m.id = std::move(id);
    m.description = std::move(desc);
    m.payload = SqrtHolomorphic{std::move(h)};
    return m;
}

Model pole_model(std::string id, std::string desc, std::vector<Rational> principal,
                 Series<Rational> h) {
    Model m;
    m.id = std::move(id);
    m.description = std::move(desc);
    m.payload = SqrtPole{std::move(principal), std::move(h)};
    return m;
}

Model raw_model(std::string id, std::string desc, Series<Rational> lambda, Series<Rational> g,
                int pole_order) {
    Model m;
    m.id = std::move(id);
    m.description = std::move(desc);
    m.payload = RawLocalMap{std::move(lambda), std::move(g), pole_order};
    return m;
}

Model interior_model(std::string id, std::string desc, int d, int r, int M,
                     std::vector<Rational> c, Rational tail) {
    Model m;
    m.id = std::move(id);
    m.description = std::move(desc);
    m.env = Envelope{rat(1), d, r};
    InteriorPole ip;
    ip.R_prime = rat(3, 4);
    ip.M = M;
    ip.partial_fractions = std::move(c);
    ip.R_check = rat(3, 2);
    ip.tail_coeff = std::move(tail);
    m.payload = std::move(ip);
    return m;
}

std::vector<Model> build() {
    std::vector<Model> v;

    // Square-root singularities, plain envelope.
    v.push_back(sqrt_model("sqrt-identity", "square root of the gap: h(w) = w", jet({0, 1}, 41)));
    v.push_back(sqrt_model("sqrt-cubic", "degenerate front: h(w) = w^3, leading term at n^(-5/2)",
                           jet({0, 0, 0, 1}, 41)));
    v.push_back(sqrt_model("catalan", "shifted Catalan numbers: h(w) = 2/(1+w), a_n = binom(2n,n)/((n+1)4^n)",
                           two_over_one_plus(41)));
    v.push_back(sqrt_model("sqrt-mixed-even",
                           "mixed parity: h(w) = w + w^2, even mode is a polynomial part",
                           jet({0, 1, 1}, 41)));

    // Principal parts on the half-integer grid.
    v.push_back(pole_model("central-binomial",
                           "inverse square root: a_n = binom(2n,n)/4^n", {rat(1)},
                           Series<Rational>::zero(0)));
    v.push_back(pole_model("geometric-pole", "simple pole: a_n = 1 exactly",
                           {rat(0), rat(1)}, Series<Rational>::zero(0)));
    v.push_back(pole_model("pole-mixed", "2(1-z)^(-1/2) plus a square-root part", {rat(2)},
                           jet({0, 1}, 41)));
    v.push_back(pole_model("double-pole-mixed",
                           "(1-z)^(-1/2) + (1-z)^(-1) with a polynomial correction",
                           {rat(1), rat(1)}, jet({0, 0, 1}, 41)));

    // Raw local data: projection jet + observable jet.
    v.push_back(raw_model("raw-quadratic", "plain quadratic contact, identity observable",
                          jet({1, 0, -1}, 12), jet({0, 1}, 12), 0));
    v.push_back(raw_model("raw-cubic", "cubic-corrected contact, identity observable",
                          jet({1, 0, -1, 1}, 14), jet({0, 1}, 14), 0));
    v.push_back(raw_model("raw-catalan", "quadratic contact with observable 2/(1+z)",
                          jet({1, 0, -1}, 42), two_over_one_plus(42), 0));
    v.push_back(raw_model("raw-merom", "observable with a simple pole at the singular point",
                          jet({1, 0, -1}, 14), jet({1}, 14), 1));
    v.push_back(raw_model("raw-merom-mixed", "simple pole plus regular part in the observable",
                          jet({1, 0, -1}, 14), jet({1, 1}, 14), 1));

    // Periodic layouts and a scaled radius.
    {
        Model m = sqrt_model("equiv-d2", "period-2 support, square-root inner data", jet({0, 1}, 41));
        m.env = Envelope{rat(1), 2, 0};
        v.push_back(std::move(m));
    }
    {
        Model m = sqrt_model("equiv-d2-shift", "period-2 support on the odd class", jet({0, 1}, 41));
        m.env = Envelope{rat(1), 2, 1};
        v.push_back(std::move(m));
    }
    {
        Model m = sqrt_model("equiv-d3-shift", "period-3 support with Catalan-type inner data",
                             two_over_one_plus(41));
        m.env = Envelope{rat(1), 3, 1};
        v.push_back(std::move(m));
    }
    {
        Model m = sqrt_model("equiv-scaled", "radius 2 with period-2 support", jet({0, 1}, 41));
        m.env = Envelope{rat(2), 2, 1};
        v.push_back(std::move(m));
    }
    {
        Model m = pole_model("equiv-pole-d2", "period-2 inverse-square-root law", {rat(1)},
                             Series<Rational>::zero(0));
        m.env = Envelope{rat(1), 2, 0};
        v.push_back(std::move(m));
    }

    // General singular exponent.
    {
        Model m = sqrt_model("alpha-third", "cube-root singularity: h(w) = w at alpha = 1/3",
                             jet({0, 1}, 30));
        m.alpha = rat(1, 3);
        v.push_back(std::move(m));
    }
    {
        Model m = sqrt_model("alpha-third-cubic", "cube-root singularity, h(w) = w + w^3",
                             jet({0, 1, 0, 1}, 30));
        m.alpha = rat(1, 3);
        v.push_back(std::move(m));
    }

    // Poles strictly inside the check disk; coefficients are polynomial in n
    // times a geometric factor, with a geometrically smaller tail.
    const Rational tail = rat(1, 8);
    v.push_back(interior_model("interior-d1-simple", "inner simple pole, plain layout", 1, 0, 1,
                               {rat(1)}, tail));
    v.push_back(interior_model("interior-d1-double", "inner double pole, plain layout", 1, 0, 2,
                               {rat(1), rat(1, 2)}, tail));
    v.push_back(interior_model("interior-d2", "inner simple pole on the odd period-2 class", 2, 1,
                               1, {rat(1)}, tail));
    v.push_back(interior_model("interior-d2-double", "inner double pole, period 2", 2, 0, 2,
                               {rat(1), rat(1, 2)}, tail));
    v.push_back(interior_model("interior-d3", "inner simple pole, period 3, class 2", 3, 2, 1,
                               {rat(1)}, tail));
    v.push_back(interior_model("interior-d3-double", "inner double pole, period 3, class 1", 3, 1,
                               2, {rat(1), rat(1, 2)}, tail));
    v.push_back(interior_model("interior-pure", "inner pole with no tail: law is exact", 1, 0, 1,
                               {rat(1)}, rat(0)));

    return v;
}

}  // namespace

const std::vector<Model>& builtin_corpus() {
    static const std::vector<Model> corpus = build();
    return corpus;
}

const Model& corpus_model(const std::string& id) {
    for (const Model& m : builtin_corpus())
        if (m.id == id) return m;
    throw ParseError("unknown model id: " + id);
}

std::vector<VerificationReport> run_corpus_sweep(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    reports.reserve(builtin_corpus().size());
    for (const Model& m : builtin_corpus()) reports.push_back(verify_model(m, opt));
    return reports;
}

}  // namespace tauber
