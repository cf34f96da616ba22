#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace composa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& x, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

inline Integer integer_pow(const Integer& x, unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) r *= x;
    return r;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// "n" when the denominator is 1, "n/d" otherwise.
inline std::string rational_str(const Rational& x) { return x.str(); }

}  // namespace composa
