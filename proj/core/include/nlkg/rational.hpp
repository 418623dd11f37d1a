#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>

namespace nlkg {

using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }

inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline double to_double(const Rational& x) { return static_cast<double>(x); }

inline std::string to_fraction_string(const Rational& x) {
    return x.str();
}

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    int exp = 0;
    double mant = std::frexp(x, &exp);
    // mant * 2^exp == x, with mant = m / 2^53 for integer m
    auto m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(m);
    if (exp >= 0) {
        r *= boost::multiprecision::pow(boost::multiprecision::cpp_int(2), exp);
    } else {
        r /= boost::multiprecision::pow(boost::multiprecision::cpp_int(2), -exp);
    }
    return r;
}

// Parses "p", "-p", or "p/q". Returns nullopt on malformed input.
inline std::optional<Rational> rational_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace nlkg
