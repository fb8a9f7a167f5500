#include <doctest.h>

#include <algorithm>

#include "galois/error.hpp"
#include "galois/exact.hpp"
#include "support/oracles.hpp"

using galois::Integer;
using galois::IntPoly;

TEST_CASE("isqrt pinned values") {
  CHECK(galois::isqrt(0) == 0);
  CHECK(galois::isqrt(10) == 3);
  CHECK(galois::isqrt(331776) == 576);
  CHECK_THROWS_AS(galois::isqrt(-1), galois::Error);
}

TEST_CASE("isqrt and is_perfect_square invariants up to 10^18") {
  oracles::Rng rng(123);
  for (int trial = 0; trial < 4000; ++trial) {
    Integer n = rng.uniform(0, 1000000000000000000LL);
    if (trial % 3 == 0) {  // exercise exact squares and near-squares
      Integer k = rng.uniform(0, 1000000000LL);
      n = k * k + rng.uniform(-1, 1);
      if (n < 0) n = 0;
    }
    const Integer r = galois::isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    const auto sq = galois::is_perfect_square(n);
    CHECK(sq.has_value() == (r * r == n));
    if (sq) CHECK(*sq * *sq == n);
  }
  CHECK(!galois::is_perfect_square(-31).has_value());
  CHECK(galois::is_perfect_square(302500).value() == 550);
  CHECK(!galois::is_perfect_square(2869).has_value());
  CHECK(galois::is_perfect_square(0).value() == 0);
}

TEST_CASE("iroot") {
  CHECK(galois::iroot(Integer("1000000000000000000000000"), 3) == Integer("100000000"));
  CHECK(galois::iroot(26, 3) == 2);
  CHECK(galois::iroot(27, 3) == 3);
  CHECK(galois::iroot(1, 7) == 1);
  oracles::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Integer n = rng.uniform(0, 1000000000000000LL);
    unsigned k = static_cast<unsigned>(rng.uniform(2, 10));
    Integer r = galois::iroot(n, k);
    CHECK(boost::multiprecision::pow(r, k) <= n);
    CHECK(boost::multiprecision::pow(r + 1, k) > n);
  }
}

TEST_CASE("integer_roots pinned values") {
  const auto roots = galois::integer_roots(IntPoly::from_desc({1, 0, -252, -1296}));
  CHECK(roots == std::vector<Integer>{-12, -6, 18});
  CHECK(galois::integer_roots(IntPoly::from_desc({1, 0, 4, -1})).empty());
  // sextic with constant term 0: root 0 must be found and the deflated part
  // scanned; the full set of this one is exactly {0}
  const auto r6roots = galois::integer_roots(
      IntPoly::from_desc({1, 120, 9000, 540000, 20250000, 324000000, 0}));
  CHECK(r6roots == std::vector<Integer>{0});
  // huge constant term: divisor candidates are skipped, numeric ones suffice
  const auto a5 = galois::integer_roots(IntPoly::from_desc(
      {1, 160, 16000, 1280000, 64000000, 1433600000, 4096000000}));
  CHECK(a5.empty());
}

TEST_CASE("integer_roots recovers roots beyond double precision exactly") {
  // roots at this scale cannot be hit by rounding a double approximation;
  // the exact Newton polish has to close the gap
  const Integer big("6000000000000000001");
  IntPoly p = IntPoly{-big, Integer(1)} * IntPoly{Integer(1), Integer(1)};
  CHECK(galois::integer_roots(p) == std::vector<Integer>{-1, big});

  const Integer huge("10000000000000000000000002");
  IntPoly q = IntPoly{-huge, Integer(1)} * IntPoly{Integer(3), Integer(1)} *
              IntPoly{Integer(-7), Integer(1)};
  CHECK(galois::integer_roots(q) == std::vector<Integer>{-3, 7, huge});
}

TEST_CASE("integer_roots equals the exhaustive scan oracle") {
  oracles::Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = static_cast<int>(rng.uniform(1, 6));
    IntPoly p;
    if (trial % 2 == 0) {
      p = rng.monic(deg, -10000, 10000);
    } else {
      // plant integer roots (small, so the scan oracle's coefficient bound
      // stays walkable) so the positive path is exercised
      p = IntPoly{Integer(1)};
      for (int i = 0; i < deg; ++i)
        p = p * IntPoly{-Integer(rng.uniform(-6, 6)), Integer(1)};
    }
    const auto got = galois::integer_roots(p);
    CHECK(got == oracles::integer_roots_by_scan(p));
    for (const auto& k : got) CHECK(galois::eval_exact(p, k) == 0);
  }
}
