#pragma once

#include <optional>
#include <vector>

#include "galois/numbers.hpp"
#include "galois/poly.hpp"

namespace galois {

/// Floor of the square root, exact. Newton iteration with a bit-length
/// initial guess; no floating point involved. Throws on negative input.
Integer isqrt(const Integer& n);

/// Floor of the k-th root of n >= 0 (k >= 1), exact.
Integer iroot(const Integer& n, unsigned k);

/// Returns k >= 0 with k^2 == n when n is a perfect square, absent otherwise
/// (negative n is never a square; 0 is).
std::optional<Integer> is_perfect_square(const Integer& n);

/// All integer roots of a monic polynomial of degree >= 1, sorted ascending,
/// duplicates reported once. Candidates come from rounded numeric roots and,
/// when the constant term is small enough to factor cheaply, from its
/// divisors; every candidate is accepted only on exact evaluation to zero.
std::vector<Integer> integer_roots(const IntPoly& p);

}  // namespace galois
