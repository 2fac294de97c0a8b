#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mahonian {

// All counting is done over arbitrary-precision integers; every derived
// statistic (mean, variance, moments) is an exact rational until the caller
// explicitly asks for a floating-point view.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(std::uint64_t n) {
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return b;
}

// N! / (a_1! ... a_m!) for N = sum of parts.
inline BigInt multinomial(std::span<const std::int64_t> parts) {
    BigInt m = 1;
    std::uint64_t seen = 0;
    for (std::int64_t a : parts) {
        if (a < 0) throw std::invalid_argument("multinomial: negative part");
        // running product of binomial(seen + a, a)
        m *= binomial(seen + static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(a));
        seen += static_cast<std::uint64_t>(a);
    }
    return m;
}

// Generalized binomial C(x, r) = x(x-1)...(x-r+1)/r! with rational x.
inline Rational generalized_binomial(const Rational& x, unsigned r) {
    Rational p = 1;
    for (unsigned i = 0; i < r; ++i) p *= x - i;
    return p / Rational(factorial(r));
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

// Decimal serialization; rationals as "p/q", integer values without "/1".
inline std::string to_decimal_string(const BigInt& v) { return v.str(); }
inline std::string to_decimal_string(const Rational& v) {
    const BigInt num = numerator(v);
    const BigInt den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mahonian
