#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace occ {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Int factorial(long n) {
    Int result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero base, negative exponent");
        return 1 / pow_rational(base, -exp);
    }
    Rational result = 1;
    Rational b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

/// Parses "p/q" or "p" with optional sign; q must be positive.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" for integers, "p/q" otherwise, q > 0, reduced.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace occ
