#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace salkit {

// Exact arithmetic throughout; cpp_rational keeps gcd-reduced canonical form
// with positive denominator, so equality is structural.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const BigInt& z) { return z.sign(); }

} // namespace salkit
