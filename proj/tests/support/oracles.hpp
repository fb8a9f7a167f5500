#pragma once

// Independent test oracles. Everything here recomputes results the library
// claims, by a different route: resultants instead of discriminant formulas,
// exhaustive scans instead of candidate generation, group-element enumeration
// instead of frozen tables. Nothing in this file calls the code path it is
// used to check.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "galois/group.hpp"
#include "galois/numbers.hpp"
#include "galois/poly.hpp"

namespace oracles {

using galois::CycleType;
using galois::Integer;
using galois::IntPoly;

/// Discriminant via the Sylvester resultant of (f, f') and fraction-free
/// Bareiss elimination; exact, for monic f.
Integer resultant_discriminant(const IntPoly& f);

/// Polynomial evaluation using only integer addition (digit-by-digit
/// shift-and-add); no multiplication operator anywhere in the computation.
Integer eval_by_addition(const IntPoly& p, const Integer& x);

/// Every integer root by exhaustive scan over |k| <= 1 + max|coeff|.
std::vector<Integer> integer_roots_by_scan(const IntPoly& p);

/// Exact irreducibility over Z for monic degree <= 5 with small coefficients,
/// by exhaustive enumeration of monic factor candidates of degree 1 and 2
/// inside the root-magnitude coefficient bounds. int64 arithmetic.
bool irreducible_by_enumeration(const IntPoly& f);

/// All element cycle types of the permutation group generated by gens
/// (permutations of {0..n-1}), via breadth-first closure.
std::set<CycleType> cycle_types_by_enumeration(int n, const std::vector<std::vector<int>>& gens,
                                               int* order_out = nullptr);

/// Generators for each of the fourteen classifiable groups, in one-line form.
std::vector<std::vector<int>> standard_generators(galois::GaloisGroup g);

/// Numeric discriminant: product of squared root differences from the
/// numeric root finder.
std::complex<double> product_discriminant(const IntPoly& f);

// Seeded random helpers shared by the property tests.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::mt19937_64 engine;
  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine);
  }
  /// Monic polynomial of the exact degree with coefficients in [lo, hi].
  IntPoly monic(int degree, long long lo, long long hi);
};

}  // namespace oracles
