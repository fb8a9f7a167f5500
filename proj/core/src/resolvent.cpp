#include "galois/resolvent.hpp"

#include "galois/error.hpp"

namespace galois {

namespace {

using boost::multiprecision::pow;

Integer p2(const Integer& x) { return x * x; }
Integer p3(const Integer& x) { return x * x * x; }
Integer p4(const Integer& x) { return p2(x) * p2(x); }

}  // namespace

Integer disc_cubic(const Integer& a, const Integer& b, const Integer& c) {
  return p2(a) * p2(b) - 4 * p3(a) * c - 4 * p3(b) + 18 * a * b * c - 27 * p2(c);
}

Integer disc_quartic(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  return p2(a) * p2(b) * p2(c) - 4 * p3(a) * p3(c) - 4 * p2(a) * p3(b) * d +
         18 * p3(a) * b * c * d - 27 * p4(a) * p2(d) - 4 * p3(b) * p2(c) + 18 * a * b * p3(c) +
         16 * p4(b) * d - 80 * a * p2(b) * c * d - 6 * p2(a) * p2(c) * d +
         144 * p2(a) * b * p2(d) - 27 * p4(c) + 144 * b * p2(c) * d - 128 * p2(b) * p2(d) -
         192 * a * c * p2(d) + 256 * p3(d);
}

Integer disc_quintic(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  return -4 * p3(p) * p2(q) * p2(r) + 16 * p4(p) * p3(r) + 16 * p3(p) * p3(q) * s -
         72 * p4(p) * q * r * s + 108 * pow(p, 5) * p2(s) - 27 * p4(q) * p2(r) +
         144 * p * p2(q) * p3(r) - 128 * p2(p) * p4(r) + 108 * pow(q, 5) * s -
         630 * p * p3(q) * r * s + 560 * p2(p) * q * p2(r) * s + 825 * p2(p) * p2(q) * p2(s) -
         900 * p3(p) * r * p2(s) + 256 * pow(r, 5) - 1600 * q * p3(r) * s +
         2250 * p2(q) * r * p2(s) + 2000 * p * p2(r) * p2(s) - 3750 * p * q * p3(s) +
         3125 * p4(s);
}

IntPoly resolvent_cubic(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  const Integer A = -b;
  const Integer B = a * c - 4 * d;
  const Integer C = -(p2(a) * d + p2(c) - 4 * b * d);
  return IntPoly::from_desc({Integer(1), A, B, C});
}

IntPoly resolvent_sextic(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  const Integer A = 8 * r;
  const Integer B = 2 * p * p2(q) - 6 * p2(p) * r + 40 * p2(r) - 50 * q * s;
  const Integer C = -2 * p4(q) + 21 * p * p2(q) * r - 40 * p2(p) * p2(r) + 160 * p3(r) -
                    15 * p2(p) * q * s - 400 * q * r * s + 125 * p * p2(s);
  const Integer D = p2(p) * p4(q) - 6 * p3(p) * p2(q) * r - 8 * p4(q) * r + 9 * p4(p) * p2(r) +
                    76 * p * p2(q) * p2(r) - 136 * p2(p) * p3(r) + 400 * p4(r) -
                    50 * p * p3(q) * s + 90 * p2(p) * q * r * s - 1400 * q * p2(r) * s +
                    625 * p2(q) * p2(s) + 500 * p * r * p2(s);
  const Integer E = -2 * p * pow(q, 6) + 19 * p2(p) * p4(q) * r - 51 * p3(p) * p2(q) * p2(r) +
                    3 * p4(q) * p2(r) + 32 * p4(p) * p3(r) + 76 * p * p2(q) * p3(r) -
                    256 * p2(p) * p4(r) + 512 * pow(r, 5) - 31 * p3(p) * p3(q) * s -
                    58 * pow(q, 5) * s + 117 * p4(p) * q * r * s + 105 * p * p3(q) * r * s +
                    260 * p2(p) * q * p2(r) * s - 2400 * q * p3(r) * s - 108 * pow(p, 5) * p2(s) -
                    325 * p2(p) * p2(q) * p2(s) + 525 * p3(p) * r * p2(s) +
                    2750 * p2(q) * r * p2(s) - 500 * p * p2(r) * p2(s) + 625 * p * q * p3(s) -
                    3125 * p4(s);
  // The p^3 q^2 r^3 coefficient is -128; validated against the theta-product
  // oracle in the test suite (see tests/test_resolvent.cpp).
  const Integer F = pow(q, 8) - 13 * p * pow(q, 6) * r + pow(p, 5) * p2(q) * p2(r) +
                    65 * p2(p) * p4(q) * p2(r) - 4 * pow(p, 6) * p3(r) -
                    128 * p3(p) * p2(q) * p3(r) + 17 * p4(q) * p3(r) + 48 * p4(p) * p4(r) -
                    16 * p * p2(q) * p4(r) - 192 * p2(p) * pow(r, 5) + 256 * pow(r, 6) -
                    4 * pow(p, 5) * p3(q) * s - 12 * p2(p) * pow(q, 5) * s +
                    18 * pow(p, 6) * q * r * s + 12 * p3(p) * p3(q) * r * s -
                    124 * pow(q, 5) * r * s + 196 * p4(p) * q * p2(r) * s +
                    590 * p * p3(q) * p2(r) * s - 160 * p2(p) * q * p3(r) * s -
                    1600 * q * p4(r) * s - 27 * pow(p, 7) * p2(s) - 150 * p4(p) * p2(q) * p2(s) -
                    125 * p * p4(q) * p2(s) - 99 * pow(p, 5) * r * p2(s) -
                    725 * p2(p) * p2(q) * r * p2(s) + 1200 * p3(p) * p2(r) * p2(s) +
                    3250 * p2(q) * p2(r) * p2(s) - 2000 * p * p3(r) * p2(s) -
                    1250 * p * q * r * p3(s) + 3125 * p2(p) * p4(s) - 9375 * r * p4(s);
  return IntPoly::from_desc({Integer(1), A, B, C, D, E, F});
}

std::pair<Integer, Integer> kappe_warren_products(const Integer& a, const Integer& b,
                                                  const Integer& d, const Integer& r,
                                                  const Integer& delta) {
  return {(p2(a) - 4 * (b - r)) * delta, (p2(r) - 4 * d) * delta};
}

Integer disc_cubic_trinomial(const Integer& p, const Integer& q) {
  return -4 * p3(p) - 27 * p2(q);
}

Integer disc_quartic_trinomial(const Integer& p, const Integer& q) {
  return -27 * p4(p) + 256 * p3(q);
}

Integer disc_quintic_trinomial(const Integer& p, const Integer& q) {
  return 256 * pow(p, 5) + 3125 * p4(q);
}

IntPoly resolvent_cubic_trinomial(const Integer& p, const Integer& q) {
  // constant term -p^2, matching the pairwise-product-sum convention of the
  // general formula: with +p^2 the root flips sign and the C4/D8 product test
  // breaks (x^4 + 5x + 5 would come out D8 instead of C4).
  return IntPoly::from_desc({Integer(1), Integer(0), -4 * q, -p2(p)});
}

IntPoly resolvent_sextic_trinomial(const Integer& p, const Integer& q) {
  return IntPoly::from_desc({Integer(1), 8 * p, 40 * p2(p), 160 * p3(p), 400 * p4(p),
                             512 * pow(p, 5) - 3125 * p4(q),
                             256 * pow(p, 6) - 9375 * p * p4(q)});
}

QuarticAux quartic_aux(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  QuarticAux aux{disc_quartic(a, b, c, d), resolvent_cubic(a, b, c, d)};
  if (a == 0 && b == 0) {
    if (disc_quartic_trinomial(c, d) != aux.delta ||
        resolvent_cubic_trinomial(c, d) != aux.r3)
      throw Error(Error::Kind::internal_invariant,
                  "trinomial quartic fast path disagrees with the general formulas");
  }
  return aux;
}

QuinticAux quintic_aux(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  QuinticAux aux{disc_quintic(p, q, r, s), resolvent_sextic(p, q, r, s)};
  if (p == 0 && q == 0) {
    if (disc_quintic_trinomial(r, s) != aux.delta ||
        resolvent_sextic_trinomial(r, s) != aux.r6)
      throw Error(Error::Kind::internal_invariant,
                  "trinomial quintic fast path disagrees with the general formulas");
  }
  return aux;
}

}  // namespace galois
