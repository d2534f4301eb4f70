#pragma once

#include <string>

#include "tauber/errors.hpp"
#include "tauber/rational.hpp"

namespace tauber {

// Element of (1/2)Z, stored as twice its value.
class HalfInteger {
   public:
    HalfInteger() : twice_(0) {}
    explicit HalfInteger(long twice) : twice_(twice) {}
    static HalfInteger whole(long n) { return HalfInteger(2 * n); }
    static HalfInteger from_rational(const Rational& q) {
        Rational t = q * 2;
        require(tauber::is_integer(t), "half-integer: " + to_string(q) + " not in (1/2)Z");
        require(t.get_num().fits_slong_p(), "half-integer: out of range");
        return HalfInteger(t.get_num().get_si());
    }

    long twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    long floor() const { return twice_ >= 0 ? twice_ / 2 : (twice_ - 1) / 2; }
    Rational value() const { return rat(twice_, 2); }

    HalfInteger operator-() const { return HalfInteger(-twice_); }
    HalfInteger operator+(const HalfInteger& o) const { return HalfInteger(twice_ + o.twice_); }
    HalfInteger operator-(const HalfInteger& o) const { return HalfInteger(twice_ - o.twice_); }
    HalfInteger operator+(long n) const { return HalfInteger(twice_ + 2 * n); }
    HalfInteger operator-(long n) const { return HalfInteger(twice_ - 2 * n); }

    auto operator<=>(const HalfInteger&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

   private:
    long twice_;
};

}  // namespace tauber
