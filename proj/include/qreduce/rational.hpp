#pragma once
/// @file rational.hpp
/// @brief Exact rational scalar type and parsing/formatting helpers.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qreduce {

/// Arbitrary-precision rational; all core arithmetic is exact.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// b^e for integer e of either sign. Throws std::domain_error for 0^negative.
inline Rat rpow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (b == 0) {
        if (e > 0) return Rat(0);
        throw std::domain_error("rpow: zero base with negative exponent");
    }
    Rat acc(1);
    Rat base = b;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (e < 0) acc = Rat(1) / acc;
    return acc;
}

/// Parse "num/den" or an integer literal into an exact rational.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

/// Serialize as "num/den" ("num" when the denominator is 1).
inline std::string format_rational(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace qreduce
