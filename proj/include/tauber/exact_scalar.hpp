#pragma once

#include <string>

#include "tauber/bigfloat.hpp"
#include "tauber/errors.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Exact constant q * (sqrt(pi))^k with rational q and integer k.  Closed
// under multiplication and division; addition requires matching k (adding
// incommensurable powers of sqrt(pi) has no exact normal form and is a
// reported error).  Zero is normalized to k = 0 so it is addable to
// anything.
class ExactScalar {
   public:
    ExactScalar() : q_(0), k_(0) {}
    ExactScalar(long n) : q_(n), k_(0) {}  // NOLINT: implicit by design for series templates
    explicit ExactScalar(Rational q, long k = 0) : q_(std::move(q)), k_(k) {
        if (q_ == 0) k_ = 0;
    }

    const Rational& coeff() const { return q_; }
    long sqrtpi_power() const { return k_; }
    bool is_zero() const { return q_ == 0; }
    bool is_rational() const { return k_ == 0; }

    friend ExactScalar operator-(const ExactScalar& a) { return ExactScalar(-a.q_, a.k_); }
    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        require(a.k_ == b.k_, "exact scalar: cannot add sqrt(pi)^" + std::to_string(a.k_) +
                                  " and sqrt(pi)^" + std::to_string(b.k_) + " terms");
        return ExactScalar(a.q_ + b.q_, a.k_);
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(a.q_ * b.q_, a.k_ + b.k_);
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        require(!b.is_zero(), "exact scalar: division by zero");
        return ExactScalar(a.q_ / b.q_, a.k_ - b.k_);
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.q_ == b.q_ && a.k_ == b.k_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    BigFloat to_float(mpfr_prec_t prec) const {
        BigFloat x(q_, prec);
        if (k_ != 0) x = x * pow_si(BigFloat::sqrt_pi(prec), k_);
        return x;
    }

    // "3/4 * pi^(-1/2)"; plain rational string when k = 0.
    std::string str() const {
        if (k_ == 0) return to_string(q_);
        std::string p = k_ % 2 == 0 ? std::to_string(k_ / 2)
                                    : "(" + std::to_string(k_) + "/2)";
        return to_string(q_) + " * pi^" + p;
    }

   private:
    Rational q_;
    long k_;
};

inline ExactScalar rational_scalar(const Rational& q) { return ExactScalar(q, 0); }

}  // namespace tauber
