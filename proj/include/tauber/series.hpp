#pragma once

#include <algorithm>
#include <vector>

#include "tauber/bigfloat.hpp"
#include "tauber/errors.hpp"
#include "tauber/exact_scalar.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Uniform construction of ring constants for the scalar types usable as
// series coefficients.  BigFloat literals materialize at the process default
// precision; small integers are exact at any precision, and mixed-precision
// arithmetic rounds to the wider operand, so no accuracy is lost.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static Rational from_long(long n) { return Rational(n); }
    static bool is_zero(const Rational& q) { return q == 0; }
};
template <>
struct ScalarOps<ExactScalar> {
    static ExactScalar from_long(long n) { return ExactScalar(n); }
    static bool is_zero(const ExactScalar& s) { return s.is_zero(); }
};
template <>
struct ScalarOps<BigFloat> {
    static BigFloat from_long(long n) { return BigFloat(n, BigFloat::default_precision()); }
    static bool is_zero(const BigFloat& x) { return x.is_zero(); }
};

template <class T>
bool scalar_is_zero(const T& v) {
    return ScalarOps<T>::is_zero(v);
}

// Constant term of an exact square root: exact mode insists on f(0) = 1 so
// no square roots of general rationals are ever materialized.
inline Rational sqrt_constant(const Rational& q) {
    require(q == 1, "series sqrt: exact mode needs constant term 1, got " + to_string(q));
    return q;
}
inline ExactScalar sqrt_constant(const ExactScalar& s) {
    require(s == ExactScalar(1), "series sqrt: exact mode needs constant term 1");
    return s;
}
inline BigFloat sqrt_constant(const BigFloat& x) {
    require(x.sign() > 0, "series sqrt: constant term must be positive");
    return sqrt(x);
}

// Truncated power series ("jet") of a fixed order N: coefficients 0..N are
// known, everything above is unknown.  Operations return jets truncated to
// the order through which the result is determined by the inputs.
template <class T>
class Series {
   public:
    explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        require(!c_.empty(), "series: a jet stores at least the constant term");
    }

    static Series zero(int order) {
        require(order >= 0, "series: negative order");
        return Series(std::vector<T>(static_cast<std::size_t>(order) + 1, ScalarOps<T>::from_long(0)));
    }
    static Series constant(const T& v, int order) {
        Series s = zero(order);
        s.c_[0] = v;
        return s;
    }
    static Series identity(int order) {
        require(order >= 1, "series: identity jet needs order >= 1");
        Series s = zero(order);
        s.c_[1] = ScalarOps<T>::from_long(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    T& at(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<T>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const T& v) { return scalar_is_zero(v); });
    }

    Series truncated(int new_order) const {
        require(new_order >= 0 && new_order <= order(), "series: bad truncation order");
        return Series(std::vector<T>(c_.begin(), c_.begin() + new_order + 1));
    }
    // Zero-padding marks coefficients as known-zero; only for constructions
    // (Newton iteration) where the pad provably cannot reach reported orders.
    Series extended(int new_order) const {
        require(new_order >= order(), "series: extension must not shrink");
        std::vector<T> c = c_;
        c.resize(static_cast<std::size_t>(new_order) + 1, ScalarOps<T>::from_long(0));
        return Series(std::move(c));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

   private:
    std::vector<T> c_;
};

template <class T>
Series<T> operator+(const Series<T>& f, const Series<T>& g) {
    int n = std::min(f.order(), g.order());
    Series<T> r = Series<T>::zero(n);
    for (int k = 0; k <= n; ++k) r.at(k) = f[k] + g[k];
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& f) {
    Series<T> r = Series<T>::zero(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = -f[k];
    return r;
}

template <class T>
Series<T> operator-(const Series<T>& f, const Series<T>& g) {
    return f + (-g);
}

template <class T>
Series<T> operator*(const Series<T>& f, const Series<T>& g) {
    int n = std::min(f.order(), g.order());
    Series<T> r = Series<T>::zero(n);
    for (int i = 0; i <= n; ++i) {
        if (scalar_is_zero(f[i])) continue;
        for (int j = 0; i + j <= n; ++j) r.at(i + j) += f[i] * g[j];
    }
    return r;
}

template <class T>
Series<T> operator*(const T& s, const Series<T>& f) {
    Series<T> r = Series<T>::zero(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = s * f[k];
    return r;
}

template <class T>
Series<T> pow_int(const Series<T>& f, long e) {
    require(e >= 0, "series pow: negative exponent (use reciprocal)");
    Series<T> acc = Series<T>::constant(ScalarOps<T>::from_long(1), f.order());
    Series<T> base = f;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

template <class T>
Series<T> derivative(const Series<T>& f) {
    require(f.order() >= 1, "series derivative: order 0 jet determines nothing");
    Series<T> r = Series<T>::zero(f.order() - 1);
    for (int k = 1; k <= f.order(); ++k) r.at(k - 1) = ScalarOps<T>::from_long(k) * f[k];
    return r;
}

template <class T>
Series<T> integrate(const Series<T>& f) {
    Series<T> r = Series<T>::zero(f.order() + 1);
    for (int k = 0; k <= f.order(); ++k) r.at(k + 1) = f[k] / ScalarOps<T>::from_long(k + 1);
    return r;
}

// f(g(z)) through order min(order f, order g); needs g(0) = 0 so the
// composite jet is determined by finitely many modes.
template <class T>
Series<T> compose(const Series<T>& f, const Series<T>& g) {
    require(scalar_is_zero(g[0]), "series compose: inner jet must vanish at 0");
    int n = std::min(f.order(), g.order());
    Series<T> gn = g.truncated(n);
    Series<T> r = Series<T>::constant(f[n], n);
    for (int k = n - 1; k >= 0; --k) r = r * gn + Series<T>::constant(f[k], n);
    return r;
}

template <class T>
Series<T> reciprocal(const Series<T>& f) {
    require(!scalar_is_zero(f[0]), "series reciprocal: constant term is zero");
    int n = f.order();
    Series<T> r = Series<T>::zero(n);
    r.at(0) = ScalarOps<T>::from_long(1) / f[0];
    for (int k = 1; k <= n; ++k) {
        T acc = ScalarOps<T>::from_long(0);
        for (int i = 1; i <= k; ++i) acc += f[i] * r[k - i];
        r.at(k) = -(acc / f[0]);
    }
    return r;
}

template <class T>
Series<T> sqrt(const Series<T>& f) {
    int n = f.order();
    Series<T> s = Series<T>::zero(n);
    s.at(0) = sqrt_constant(f[0]);
    T two_s0 = s[0] + s[0];
    for (int k = 1; k <= n; ++k) {
        T acc = ScalarOps<T>::from_long(0);
        for (int i = 1; i < k; ++i) acc += s[i] * s[k - i];
        s.at(k) = (f[k] - acc) / two_s0;
    }
    return s;
}

template <class T>
Series<T> exp(const Series<T>& f) {
    require(scalar_is_zero(f[0]), "series exp: jet must vanish at 0");
    int n = f.order();
    Series<T> e = Series<T>::zero(n);
    e.at(0) = ScalarOps<T>::from_long(1);
    for (int k = 1; k <= n; ++k) {
        T acc = ScalarOps<T>::from_long(0);
        for (int i = 1; i <= k; ++i) acc += ScalarOps<T>::from_long(i) * f[i] * e[k - i];
        e.at(k) = acc / ScalarOps<T>::from_long(k);
    }
    return e;
}

template <class T>
Series<T> log(const Series<T>& f) {
    require(f[0] == ScalarOps<T>::from_long(1), "series log: constant term must be 1");
    if (f.order() == 0) return Series<T>::zero(0);
    Series<T> d = derivative(f) * reciprocal(f).truncated(f.order() - 1);
    return integrate(d);
}

// Compositional inverse of f = f1*z + ..., f(0) = 0, f1 invertible; Newton
// doubling, each step g <- g - (f(g) - z)/f'(g).
template <class T>
Series<T> reversion(const Series<T>& f) {
    require(f.order() >= 1, "series reversion: need order >= 1");
    require(scalar_is_zero(f[0]), "series reversion: jet must vanish at 0");
    require(!scalar_is_zero(f[1]), "series reversion: linear coefficient is zero");
    int n = f.order();
    Series<T> g = Series<T>::zero(1);
    g.at(1) = ScalarOps<T>::from_long(1) / f[1];
    if (n == 1) return g;
    // False zeros in the pad of f' only influence orders beyond the current
    // correction valuation, so they never reach reported coefficients.
    Series<T> fp = derivative(f).extended(n);
    int cur = 1;
    while (cur < n) {
        int next = std::min(2 * cur + 1, n);
        Series<T> ge = g.extended(next);
        Series<T> err = compose(f, ge) - Series<T>::identity(next);
        Series<T> den = compose(fp, ge);
        g = ge - err * reciprocal(den);
        cur = next;
    }
    return g;
}

template <class T>
struct Decomposition {
    std::vector<T> head;  // polynomial part, degrees 0..m-1 (empty when m = 0)
    Series<T> tail;       // jet of (f - head)/z^m, order reduced by m
};

template <class T>
Decomposition<T> decompose(const Series<T>& f, int m) {
    require(m >= 0 && m <= f.order(), "series decompose: split index out of range");
    std::vector<T> head(f.coeffs().begin(), f.coeffs().begin() + m);
    std::vector<T> tail(f.coeffs().begin() + m, f.coeffs().end());
    return {std::move(head), Series<T>(std::move(tail))};
}

inline Series<BigFloat> to_float_series(const Series<Rational>& f, mpfr_prec_t prec) {
    Series<BigFloat> r = Series<BigFloat>::zero(f.order());
    for (int k = 0; k <= f.order(); ++k) r.at(k) = BigFloat(f[k], prec);
    return r;
}

}  // namespace tauber
