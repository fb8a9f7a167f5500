#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "galois/numbers.hpp"
#include "galois/poly.hpp"

namespace galois {

using Complex = std::complex<double>;

struct RootFindOptions {
  int max_iterations = 500;        // simultaneous-iteration budget
  double residual_scale = 1e-12;   // accept |f(z)| <= residual_scale * (1 + sum |c_i| |z|^i)
  double pairing_scale = 1e-8;     // |Im z| below pairing_scale * max(1, |z|) counts as real
};

/// All complex roots of a squarefree polynomial (degree 1..8), deterministic:
/// Durand-Kerner from a fixed equiangular start on the root inclusion circle,
/// followed by per-root Newton polishing. Sorted by (Re, Im).
/// Throws convergence_failure / precision_exceeded.
std::vector<Complex> polynomial_roots(const IntPoly& f, const RootFindOptions& opts = {});

/// Fujiwara bound: every complex root of f has magnitude below this. Exact
/// integer ceiling with a safety margin over the floating computation.
Integer root_magnitude_bound(const IntPoly& f);

/// The five roots of a monic squarefree quintic, with residuals and the
/// conjugate-pairing bookkeeping the theta machinery relies on. Non-real
/// roots are snapped to exact conjugate pairs to keep symmetric functions
/// from accumulating imaginary noise.
struct RootSet {
  std::array<Complex, 5> roots;          // sorted by (Re, Im)
  std::array<double, 5> residuals;       // |f(roots[i])|
  std::array<int, 5> conjugate_pairing;  // index of the conjugate partner; i itself if real
  int real_count = 0;                    // 1, 3, or 5
  double residual_tolerance = 0;         // largest per-root acceptance bound used
};

RootSet all_roots(const IntPoly& f, const RootFindOptions& opts = {});

/// The ten-monomial degree-4 expression whose six permutation conjugates are
/// the roots of the resolvent sextic.
Complex theta1(std::span<const Complex, 5> r);

/// r1 r2^2 + r2 r3^2 + r3 r4^2 + r4 r5^2 + r5 r1^2.
Complex sigma1(std::span<const Complex, 5> r);

/// sigma1 after the involution (2,5)(3,4): the conjugate value that pairs
/// with sigma1 under a dihedral Galois action.
Complex sigma2(std::span<const Complex, 5> r);

/// Root ordering matched against the integer root of the resolvent sextic.
/// perm maps positions to RootSet indices: ordered[i] = rs.roots[perm[i]].
struct ThetaOrdering {
  std::array<int, 5> perm{};
  Complex theta_value{};
  Integer target;
  double mismatch = 0;  // |theta_value - target|
};

/// One matched ordering together with its sigma pair, as produced by the
/// full scan over all 120 orderings.
struct ThetaMatch {
  std::array<int, 5> perm{};
  Complex theta{};
  Complex sigma{};        // sigma1 of the ordering
  Complex sigma_partner{};  // sigma1 after the involution (2,5)(3,4)
};

/// Every ordering whose theta1 falls within tol of target, where
/// tol = tol_theta * max(1, |target|). Exactly the stabilizer coset of a
/// true match (20 orderings) in the non-degenerate case.
std::vector<ThetaMatch> theta_matches(const RootSet& rs, const Integer& target,
                                      double tol_theta = 1e-3);

/// The ordering minimizing |theta1 - target| over all 120 permutations.
/// Throws numeric_ambiguity: "no ordering" when the minimum exceeds the
/// tolerance, "ambiguous ordering" when two orderings with distinct theta
/// values both fall within it.
ThetaOrdering find_theta_ordering(const RootSet& rs, const Integer& target,
                                  double tol_theta = 1e-3);

/// round(Re z) when z is within tol of a real integer, absent otherwise.
std::optional<Integer> is_near_integer(Complex z, double tol);

}  // namespace galois
