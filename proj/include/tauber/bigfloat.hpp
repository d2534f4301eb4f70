#pragma once

#include <mpfr.h>

#include <atomic>
#include <cstdio>
#include <string>
#include <utility>

#include "tauber/errors.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Arbitrary-precision binary float, RAII over mpfr_t.  Every value carries
// its own precision in bits; binary operations round to the larger operand
// precision (MPFR nearest-even).  The process-wide default feeds
// constructors that do not name a precision.
class BigFloat {
   public:
    static mpfr_prec_t default_precision() { return default_prec_.load(); }
    static void set_default_precision(mpfr_prec_t p) {
        if (p < MPFR_PREC_MIN) p = MPFR_PREC_MIN;
        default_prec_.store(p);
    }

    BigFloat() : BigFloat(default_precision()) {}
    BigFloat(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const Integer& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    static BigFloat zero(mpfr_prec_t prec) { return BigFloat(prec); }
    static BigFloat from_double(double x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
#define TAUBER_BF_BINOP(op, fn)                                         \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
        BigFloat r(std::max(a.precision(), b.precision()));             \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                \
        return r;                                                       \
    }
    TAUBER_BF_BINOP(+, mpfr_add)
    TAUBER_BF_BINOP(-, mpfr_sub)
    TAUBER_BF_BINOP(*, mpfr_mul)
    TAUBER_BF_BINOP(/, mpfr_div)
#undef TAUBER_BF_BINOP
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

#define TAUBER_BF_UNARY(name, fn)             \
    friend BigFloat name(const BigFloat& a) { \
        BigFloat r(a.precision());            \
        fn(r.v_, a.v_, MPFR_RNDN);            \
        return r;                             \
    }
    TAUBER_BF_UNARY(abs, mpfr_abs)
    TAUBER_BF_UNARY(exp, mpfr_exp)
    TAUBER_BF_UNARY(log, mpfr_log)
    TAUBER_BF_UNARY(sin, mpfr_sin)
    TAUBER_BF_UNARY(cos, mpfr_cos)
#undef TAUBER_BF_UNARY

    friend BigFloat sqrt(const BigFloat& a) {
        require(a.sign() >= 0, "sqrt: negative argument");
        BigFloat r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_si(const BigFloat& a, long e) {
        BigFloat r(a.precision());
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(std::max(y.precision(), x.precision()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat sqrt_pi(mpfr_prec_t prec) { return sqrt(pi(prec)); }

   private:
    // Zero at the given precision; private because BigFloat(n) must never
    // read as "the value n" (use BigFloat(n, prec) or zero(prec)).
    explicit BigFloat(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    mpfr_t v_;
    inline static std::atomic<mpfr_prec_t> default_prec_{256};
};

// n^x for integer n >= 1 and rational exponent x, to `prec` bits.
inline BigFloat pow_rational_exp(long n, const Rational& x, mpfr_prec_t prec) {
    require(n >= 1, "pow_rational_exp: base must be >= 1");
    return pow(BigFloat(n, prec), BigFloat(x, prec));
}

// Rectangular complex value on two BigFloats; enough arithmetic for Cauchy
// integrals and principal-branch powers.
class BigComplex {
   public:
    BigComplex() = default;
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const Rational& q, mpfr_prec_t prec) : re_(q, prec), im_(BigFloat::zero(prec)) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
        require(!d.is_zero(), "complex division by zero");
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    friend BigFloat abs(const BigComplex& a) { return sqrt(a.re_ * a.re_ + a.im_ * a.im_); }

    // Principal branch: log on C minus the negative real axis.
    friend BigComplex log(const BigComplex& a) { return {log(abs(a)), atan2(a.im_, a.re_)}; }
    friend BigComplex exp(const BigComplex& a) {
        BigFloat m = exp(a.re_);
        return {m * cos(a.im_), m * sin(a.im_)};
    }
    friend BigComplex pow(const BigComplex& a, const Rational& x, mpfr_prec_t prec) {
        if (x == 0) return BigComplex(rat(1), prec);
        BigComplex l = log(a);
        BigFloat e(x, prec);
        return exp(BigComplex(l.re() * e, l.im() * e));
    }
    friend BigComplex pow_int(const BigComplex& a, long e, mpfr_prec_t prec) {
        BigComplex acc(rat(1), prec);
        BigComplex base = a;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        if (e < 0) return BigComplex(rat(1), prec) / acc;
        return acc;
    }

    // exp(2*pi*i*s/S).
    static BigComplex unit_circle(long s, long S, mpfr_prec_t prec) {
        BigFloat theta = BigFloat(2 * s, prec) * BigFloat::pi(prec) / BigFloat(S, prec);
        return {cos(theta), sin(theta)};
    }

   private:
    BigFloat re_, im_;
};

}  // namespace tauber
