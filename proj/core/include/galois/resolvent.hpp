#pragma once

#include <utility>

#include "galois/numbers.hpp"
#include "galois/poly.hpp"

namespace galois {

// Discriminants of monic polynomials, by explicit formula in the
// coefficients. The quintic form requires a zero x^4 coefficient.

/// x^3 + ax^2 + bx + c
Integer disc_cubic(const Integer& a, const Integer& b, const Integer& c);

/// x^4 + ax^3 + bx^2 + cx + d
Integer disc_quartic(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// x^5 + px^3 + qx^2 + rx + s
Integer disc_quintic(const Integer& p, const Integer& q, const Integer& r, const Integer& s);

/// Resolvent cubic of x^4 + ax^3 + bx^2 + cx + d: the monic cubic whose roots
/// are r1r2 + r3r4, r1r3 + r2r4, r1r4 + r2r3.
IntPoly resolvent_cubic(const Integer& a, const Integer& b, const Integer& c, const Integer& d);

/// Resolvent sextic of x^5 + px^3 + qx^2 + rx + s: the monic sextic whose
/// roots are the six conjugates of the degree-4 root expression theta1.
IntPoly resolvent_sextic(const Integer& p, const Integer& q, const Integer& r, const Integer& s);

/// The two products whose simultaneous squareness separates C4 from D8:
/// (a^2 - 4(b - r)) * delta and (r^2 - 4d) * delta, where r is the integer
/// root of the quartic's resolvent cubic.
std::pair<Integer, Integer> kappe_warren_products(const Integer& a, const Integer& b,
                                                  const Integer& d, const Integer& r,
                                                  const Integer& delta);

// Closed forms for trinomials x^n + px + q. These short-circuit the general
// formulas and double as a cross-check against them: a transcription slip in
// the long coefficient polynomials is the dominant implementation risk.

Integer disc_cubic_trinomial(const Integer& p, const Integer& q);
Integer disc_quartic_trinomial(const Integer& p, const Integer& q);
Integer disc_quintic_trinomial(const Integer& p, const Integer& q);
IntPoly resolvent_cubic_trinomial(const Integer& p, const Integer& q);
IntPoly resolvent_sextic_trinomial(const Integer& p, const Integer& q);

struct QuarticAux {
  Integer delta;
  IntPoly r3;
};

struct QuinticAux {
  Integer delta;
  IntPoly r6;
};

/// Discriminant + resolvent bundle for a monic quartic/quintic. On trinomial
/// input the closed forms are computed as well and must agree with the
/// general formulas exactly; disagreement throws internal_invariant.
QuarticAux quartic_aux(const Integer& a, const Integer& b, const Integer& c, const Integer& d);
QuinticAux quintic_aux(const Integer& p, const Integer& q, const Integer& r, const Integer& s);

}  // namespace galois
