#include <doctest.h>

#include "tauber/bigfloat.hpp"
#include "tauber/exact_scalar.hpp"
#include "tauber/half_integer.hpp"
#include "tauber/rational.hpp"

using namespace tauber;

TEST_CASE("rational construction and parsing") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK_THROWS_AS(rat(1, 0), PreconditionError);

    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational(" -7 ") == rat(-7));
    CHECK(parse_rational("+5") == rat(5));
    CHECK(parse_rational("10/-4") == rat(-5, 2));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
}

TEST_CASE("rational powers and combinatorics") {
    CHECK(pow_rational(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_rational(rat(2, 3), -2) == rat(9, 4));
    CHECK(pow_rational(rat(0), 0) == rat(1));
    CHECK_THROWS_AS(pow_rational(rat(0), -1), PreconditionError);
    CHECK(factorial(6) == 720);
    CHECK(binomial_integer(10, 3) == 120);
    CHECK(abs_rational(rat(-5, 3)) == rat(5, 3));
    CHECK(is_integer(rat(8, 4)));
    CHECK(!is_integer(rat(1, 3)));
}

TEST_CASE("half integers") {
    HalfInteger h = HalfInteger::from_rational(rat(5, 2));
    CHECK(h.twice() == 5);
    CHECK(!h.is_integer());
    CHECK(h.floor() == 2);
    CHECK(HalfInteger::from_rational(rat(-3, 2)).floor() == -2);
    CHECK(HalfInteger::whole(3).value() == rat(3));
    CHECK((h + 1).value() == rat(7, 2));
    CHECK((-h).str() == "-5/2");
    CHECK(HalfInteger::whole(2).str() == "2");
    CHECK(HalfInteger::whole(1) < h);
    CHECK_THROWS_AS(HalfInteger::from_rational(rat(1, 3)), PreconditionError);
}

TEST_CASE("exact scalars track powers of sqrt(pi)") {
    ExactScalar a(rat(1, 2), 1);   // (1/2) sqrt(pi)
    ExactScalar b(rat(3), -1);     // 3 / sqrt(pi)
    CHECK((a * b) == ExactScalar(rat(3, 2)));
    CHECK((a / b) == ExactScalar(rat(1, 6), 2));
    CHECK((a + a) == ExactScalar(rat(1), 1));
    CHECK_THROWS_AS(a + b, PreconditionError);
    CHECK_THROWS_AS(a / ExactScalar(0), PreconditionError);

    // Zero forgets its scale and is addable to anything.
    ExactScalar z = a - a;
    CHECK(z.is_zero());
    CHECK(z.sqrtpi_power() == 0);
    CHECK((z + b) == b);

    CHECK(a.str() == "1/2 * pi^(1/2)");
    CHECK(b.str() == "3 * pi^(-1/2)");
    CHECK(ExactScalar(rat(-2, 7)).str() == "-2/7");

    // Numeric value: (1/2)sqrt(pi) * 3/sqrt(pi) = 3/2.
    BigFloat v = (a.to_float(128) * b.to_float(128)) - BigFloat(rat(3, 2), 128);
    CHECK(abs(v).to_double() < 1e-35);
}

TEST_CASE("big floats") {
    BigFloat x(rat(1, 3), 192);
    CHECK(x.precision() == 192);
    CHECK((x * BigFloat(3, 192) - BigFloat(1, 192)).is_zero());
    CHECK(BigFloat::zero(64).is_zero());
    CHECK(BigFloat::from_double(-1.5, 64).to_double() == -1.5);
    CHECK(BigFloat(rat(-9, 2), 64).sign() < 0);

    // Mixed precision rounds into the wider operand.
    BigFloat wide = BigFloat(1, 300) / BigFloat(7, 300);
    BigFloat narrow(rat(1, 7), 64);
    CHECK((wide + narrow).precision() == 300);

    CHECK(abs(sqrt(BigFloat(2, 256)) * sqrt(BigFloat(2, 256)) - BigFloat(2, 256)).to_double() <
          1e-70);
    CHECK_THROWS_AS(sqrt(BigFloat(-1, 64)), PreconditionError);

    // pi to double accuracy and beyond.
    CHECK(BigFloat::pi(256).to_double() == doctest::Approx(3.14159265358979).epsilon(1e-12));
    BigFloat spi = BigFloat::sqrt_pi(256);
    CHECK(abs(spi * spi - BigFloat::pi(256)).to_double() < 1e-70);

    // n^(p/q) for rational exponents.
    CHECK(abs(pow_rational_exp(8, rat(2, 3), 128) - BigFloat(4, 128)).to_double() < 1e-30);
    CHECK(abs(pow_rational_exp(4, rat(-1, 2), 128) - BigFloat(rat(1, 2), 128)).to_double() <
          1e-30);
}

TEST_CASE("big complex arithmetic") {
    const mpfr_prec_t P = 192;
    BigComplex i(BigFloat::zero(P), BigFloat(1, P));
    BigComplex one(rat(1), P);
    CHECK(abs((i * i + one)).to_double() < 1e-50);

    // Division: (1+i)/(1-i) = i.
    BigComplex a(BigFloat(1, P), BigFloat(1, P));
    BigComplex b(BigFloat(1, P), BigFloat(-1, P));
    CHECK(abs(a / b - i).to_double() < 1e-50);
    CHECK_THROWS_AS(a / (b - b), PreconditionError);

    // Principal powers: (-1)^(1/2) = i, and exp(log z) = z off the cut.
    BigComplex m1(rat(-1), P);
    CHECK(abs(pow(m1, rat(1, 2), P) - i).to_double() < 1e-50);
    BigComplex z(BigFloat(3, P), BigFloat(4, P));
    CHECK(abs(exp(log(z)) - z).to_double() < 1e-45);
    CHECK(abs(pow_int(z, -2, P) * pow_int(z, 2, P) - one).to_double() < 1e-45);

    // S-th roots of unity: s = S/4 lands on i for S divisible by 4.
    BigComplex w = BigComplex::unit_circle(3, 12, P);
    CHECK(abs(w - i).to_double() < 1e-50);
    CHECK(abs(pow_int(BigComplex::unit_circle(1, 7, P), 7, P) - one).to_double() < 1e-45);
}
