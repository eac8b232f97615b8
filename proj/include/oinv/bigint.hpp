#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace oinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// (2m-1)!! = 1*3*5*...*(2m-1), the number of matchings on 2m points.
inline BigInt double_factorial_odd(int m) {
    BigInt f = 1;
    for (int k = 3; k <= 2 * m - 1; k += 2) f *= k;
    return f;
}

inline BigInt pow_int(const BigInt& base, int exp) {
    BigInt p = 1, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) p *= b;
        b *= b;
    }
    return p;
}

// Exact division; a nonzero remainder signals an implementation bug in a
// counting formula, not bad input.
inline BigInt checked_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw std::logic_error("checked_div: " + num.str() + " not divisible by " + den.str());
    return q;
}

} // namespace oinv
