#include "cpngenus/rational.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

using namespace cpngenus;

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    const Rational a(Integer(6), Integer(-4));
    CHECK(numerator_of(a) == -3);
    CHECK(denominator_of(a) == 2);
    const Rational b = Rational(1, 3) + Rational(2, 3);
    CHECK(numerator_of(b) == 1);
    CHECK(denominator_of(b) == 1);
    CHECK(boost::multiprecision::gcd(numerator_of(a), Integer(denominator_of(a))) == 1);
}

TEST_CASE("string round trips") {
    CHECK(to_string(Rational(-5, 2)) == "-5/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(rational_from_string("-5/2") == Rational(-5, 2));
    CHECK(rational_from_string("42") == Rational(42));
    CHECK(to_string(rational_from_string("1375/2")) == "1375/2");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(integer_from_string("zzz"), std::invalid_argument);
}

TEST_CASE("to_integer guards") {
    CHECK(to_integer(Rational(10, 2)) == 5);
    CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::domain_error);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    CHECK(factorial(12) == 479001600);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(8, 4) == 70);
}

TEST_CASE("generalized binomial: C(n, n) = 1") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(generalized_binomial(Rational(n), static_cast<unsigned>(n)) == 1);
    }
}

TEST_CASE("generalized binomial: C(-1, 4) = 1") {
    CHECK(generalized_binomial(Rational(-1), 4) == 1);
}

TEST_CASE("generalized binomial: C(1/2, 2) = -1/8") {
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("generalized binomial agrees with integer binomial for 0 <= n <= j <= 12") {
    for (unsigned j = 0; j <= 12; ++j) {
        for (unsigned n = 0; n <= j; ++n) {
            CHECK(generalized_binomial(Rational(j), n) == Rational(binomial(j, n)));
        }
    }
}

TEST_CASE("integer square root and perfect squares") {
    CHECK(isqrt_floor(Integer(0)) == 0);
    CHECK(isqrt_floor(Integer(1)) == 1);
    CHECK(isqrt_floor(Integer(8)) == 2);
    CHECK(isqrt_floor(Integer(9)) == 3);
    CHECK(isqrt_floor(Integer("43752025")) == 6614);
    CHECK_THROWS_AS(isqrt_floor(Integer(-1)), std::domain_error);

    Integer root;
    CHECK(is_perfect_square(Integer(6400), &root));
    CHECK(root == 80);
    CHECK_FALSE(is_perfect_square(Integer(2032)));   // between 45^2 and 46^2
    CHECK_FALSE(is_perfect_square(Integer(72025)));  // 7*10^4 + 2025
    CHECK_FALSE(is_perfect_square(Integer(-4)));

    // exactness far past word size
    const Integer big = pow_integer(Integer("123456789123456789"), 2);
    CHECK(is_perfect_square(big, &root));
    CHECK(root == Integer("123456789123456789"));
    CHECK_FALSE(is_perfect_square(big + 1));
}

TEST_CASE("rational powers") {
    CHECK(pow_rational(Rational(-5), 4) == 625);
    CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_rational(Rational(0), 0) == 1);
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}
