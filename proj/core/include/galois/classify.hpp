#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galois/group.hpp"
#include "galois/numbers.hpp"
#include "galois/poly.hpp"
#include "galois/roots.hpp"

namespace galois {

/// Numeric tolerances actually used along a classification, reproduced in
/// every certificate so a verifier can re-run the numeric phase.
struct Tolerances {
  double residual_scale = 1e-12;
  double theta = 1e-3;   // ordering: |theta1 - target| < theta * max(1, |target|)
  double sigma = 1e-3;   // integrality: |Im| and distance to nearest integer
  double pairing_scale = 1e-8;
  int max_iterations = 500;
};

struct ClassifyOptions {
  Tolerances tol;
  /// When set, every trinomial classification re-runs through the closed-form
  /// shortcut and the two paths must agree (always on by default).
  bool cross_check_trinomial = true;
};

struct KappeWarrenEvidence {
  Integer n1;  // (a^2 - 4(b - r)) * delta
  Integer n2;  // (r^2 - 4d) * delta
  std::optional<Integer> n1_sqrt;
  std::optional<Integer> n2_sqrt;
  bool both_square = false;
};

/// The complete evidence trail for one classification. Optional fields are
/// present exactly along the branch taken.
struct Certificate {
  IntPoly input;       // monic integral polynomial handed to classification
  IntPoly normalized;  // after quintic depression; equals input otherwise
  Integer lambda = 1;  // root scaling from rational normalization
  Integer shift = 0;   // x^4 coefficient removed by depression
  Integer delta;
  std::optional<Integer> delta_sqrt;           // present iff delta is a square
  std::optional<IntPoly> resolvent;            // R3 or R6
  std::optional<Integer> resolvent_root;       // selected integer root
  std::optional<KappeWarrenEvidence> kappe_warren;
  std::optional<ThetaOrdering> theta_ordering;
  std::optional<Complex> sigma1;
  std::optional<Integer> sigma1_integer;       // present iff sigma1 decided integral
  Tolerances tolerances;
};

struct ClassifyReport {
  GaloisGroup group;
  Certificate certificate;
  std::optional<bool> dedekind_checked;
  std::vector<std::string> warnings;
};

/// Exact irreducibility over Q for monic integral polynomials of degree 1-5.
bool is_irreducible(const IntPoly& f);

/// A nonconstant proper monic factor when one exists (evidence for the
/// reducible-input error), absent when f is irreducible.
std::optional<IntPoly> find_factor(const IntPoly& f);

/// Degree pattern of f modulo p as a descending partition of deg f, via
/// distinct-degree splitting over the p-element field. Throws
/// internal_invariant("bad prime") when f mod p is not squarefree
/// (equivalently p divides the discriminant).
CycleType cycle_type_mod_p(const IntPoly& f, std::uint32_t p);

/// Frobenius cycle-type verification: true iff for every prime p <= bound
/// not dividing the discriminant, the factor pattern of f mod p is an
/// element cycle type of the claimed group.
bool dedekind_check(const IntPoly& f, GaloisGroup claimed, std::uint32_t prime_bound);

/// Specialized classifiers. Inputs must be monic and irreducible; the
/// quintic one additionally requires a zero x^4 coefficient.
ClassifyReport classify_cubic(const IntPoly& f, const ClassifyOptions& opts = {});
ClassifyReport classify_quartic(const IntPoly& f, const ClassifyOptions& opts = {});
ClassifyReport classify_quintic(const IntPoly& f, const ClassifyOptions& opts = {});

/// Full pipeline for a monic integral polynomial: irreducibility gate,
/// degree dispatch, quintic depression.
ClassifyReport classify(const IntPoly& f, const ClassifyOptions& opts = {});

/// Full pipeline from a rational polynomial: normalization first.
ClassifyReport classify(const RatPoly& g, const ClassifyOptions& opts = {});

/// Primes up to bound (inclusive), for dedekind_check drivers.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

}  // namespace galois
