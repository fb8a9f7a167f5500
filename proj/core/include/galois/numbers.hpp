#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace galois {

/// Arbitrary-precision signed integer. All exact-phase arithmetic in the
/// pipeline runs on this type; quintic discriminants and sextic resolvent
/// coefficients overflow 64 bits for quite small inputs.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

}  // namespace galois
