#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace specq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Fixed-width fast paths for matrix kernels. Width is chosen from a priori
// coefficient bounds, see intmatrix.cpp; the 256-bit type traps on overflow.
using Int128 = __int128;
using Int256 = boost::multiprecision::checked_int256_t;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt abs(const BigInt& a) { return boost::multiprecision::abs(a); }

}  // namespace specq
