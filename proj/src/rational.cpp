#include "cpngenus/rational.hpp"

#include <stdexcept>

namespace cpngenus {

std::string to_string(const Rational& v) {
    const Integer num = numerator_of(v);
    const Integer den = denominator_of(v);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string to_string(const Integer& v) { return v.str(); }

Integer integer_from_string(const std::string& s) {
    if (s.empty()) {
        throw std::invalid_argument("integer_from_string: empty string");
    }
    try {
        return Integer(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("integer_from_string: cannot parse '" + s + "'");
    }
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(integer_from_string(s));
    }
    const Integer num = integer_from_string(s.substr(0, slash));
    const Integer den = integer_from_string(s.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

bool is_integer(const Rational& v) { return denominator_of(v) == 1; }

Integer to_integer(const Rational& v) {
    if (!is_integer(v)) {
        throw std::domain_error("to_integer: " + to_string(v) + " is not an integer");
    }
    return numerator_of(v);
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // division exact at each step
    }
    return r;
}

Rational falling_factorial(const Rational& j, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= j - Rational(i);
    }
    return r;
}

Rational generalized_binomial(const Rational& j, unsigned n) {
    return falling_factorial(j, n) / Rational(factorial(n));
}

Integer isqrt_floor(const Integer& v) {
    if (v < 0) {
        throw std::domain_error("isqrt_floor: negative argument " + to_string(v));
    }
    if (v < 2) {
        return v;
    }
    // Newton's method on integers; converges from above once past the root.
    Integer x = Integer(1) << (static_cast<unsigned>(boost::multiprecision::msb(v)) / 2 + 1);
    while (true) {
        const Integer y = (x + v / x) / 2;
        if (y >= x) {
            break;
        }
        x = y;
    }
    return x;
}

bool is_perfect_square(const Integer& v, Integer* root) {
    if (v < 0) {
        return false;
    }
    const Integer r = isqrt_floor(v);
    if (r * r != v) {
        return false;
    }
    if (root != nullptr) {
        *root = r;
    }
    return true;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) {
        return 1;
    }
    if (exp < 0) {
        if (base == 0) {
            throw std::domain_error("pow_rational: zero base with negative exponent");
        }
        return pow_rational(1 / base, -exp);
    }
    Rational acc = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1UL) {
            acc *= b;
        }
        b *= b;
        e >>= 1;
    }
    return acc;
}

Integer pow_integer(const Integer& base, unsigned exp) {
    Integer acc = 1;
    Integer b = base;
    while (exp > 0) {
        if (exp & 1U) {
            acc *= b;
        }
        b *= b;
        exp >>= 1;
    }
    return acc;
}

}  // namespace cpngenus
