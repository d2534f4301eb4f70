#pragma once

#include <gmpxx.h>

#include <string>

#include "tauber/errors.hpp"

namespace tauber {

// Exact rational scalar.  GMP keeps values in lowest terms with a positive
// denominator as long as every construction site canonicalizes; all
// construction in this project goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    require(den != 0, "rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    require(den != 0, "rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with optional whitespace padding; base 10 only.
inline Rational parse_rational(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw ParseError("rational: empty literal");
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') ++pos;
    bool digits = false, slash = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
            digits = false;
            if (pos + 1 < s.size() && (s[pos + 1] == '+' || s[pos + 1] == '-')) ++pos;
        } else {
            throw ParseError("rational: bad literal '" + text + "'");
        }
    }
    if (!digits) throw ParseError("rational: bad literal '" + text + "'");
    // GMP rejects '+' signs, which the scan above deliberately admits.
    if (s.front() == '+') s.erase(s.begin());
    std::size_t sp = s.find("/+");
    if (sp != std::string::npos) s.erase(sp + 1, 1);
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("rational: bad literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact q^e for integer e; q != 0 when e < 0.
inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return rat(1);
    require(q != 0 || e > 0, "pow: zero base with negative exponent");
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    // num/den coprime, so num^n/den^n already canonical.
    return out;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial_integer(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace tauber
