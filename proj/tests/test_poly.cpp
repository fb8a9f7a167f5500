#include <doctest.h>

#include <cmath>
#include <complex>

#include "galois/error.hpp"
#include "galois/exact.hpp"
#include "galois/poly.hpp"
#include "galois/roots.hpp"
#include "support/oracles.hpp"

using galois::Integer;
using galois::IntPoly;
using galois::RatPoly;
using galois::Rational;

TEST_CASE("eval_exact on pinned values") {
  CHECK(galois::eval_exact(IntPoly::from_desc({1, 0, -12, -9}), -3) == 0);
  CHECK(galois::eval_exact(IntPoly::from_desc({1, 0, 1, 1}), 1) == 3);
  CHECK(galois::eval_exact(
            IntPoly::from_desc({1, 120, 9000, 540000, 20250000, 324000000, 0}), 0) == 0);
}

TEST_CASE("eval_exact agrees with the addition-only oracle") {
  oracles::Rng rng(0x9e3779b9);
  for (int trial = 0; trial < 25; ++trial) {
    const int deg = static_cast<int>(rng.uniform(0, 6));
    IntPoly p = rng.monic(deg, -1000000, 1000000);
    const Integer x = rng.uniform(-1000, 1000);
    CHECK(galois::eval_exact(p, x) == oracles::eval_by_addition(p, x));
  }
}

TEST_CASE("eval_complex on pinned values") {
  using namespace std::complex_literals;
  CHECK(std::abs(galois::eval_complex(IntPoly::from_desc({1, 0, 1}), 1.0i)) < 1e-15);
  const IntPoly f = IntPoly::from_desc({1, 0, 0, 0, -5, 12});
  CHECK(std::abs(galois::eval_complex(f, -1.84208596619)) < 1e-9);
  CHECK(std::abs(galois::eval_complex(f, {-0.35185424, 1.70956104})) < 1e-6);
}

TEST_CASE("eval_complex rejects coefficients beyond double range") {
  Integer huge = boost::multiprecision::pow(Integer(10), 400);
  try {
    static_cast<void>(galois::eval_complex(IntPoly{huge, Integer(1)}, 1.0));
    CHECK(false);
  } catch (const galois::Error& e) {
    CHECK(e.kind() == galois::Error::Kind::precision_exceeded);
  }
}

TEST_CASE("derivative") {
  CHECK(galois::derivative(IntPoly::from_desc({1, 0, 0, 0, -5, 12})) ==
        IntPoly::from_desc({5, 0, 0, 0, -5}));
  CHECK(galois::derivative(IntPoly{Integer(7)}) == IntPoly{});
  CHECK(galois::derivative(IntPoly::from_desc({1, 3, 0, -3})) == IntPoly::from_desc({3, 6, 0}));
}

TEST_CASE("divmod by monic divisors is exact") {
  oracles::Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly d = rng.monic(static_cast<int>(rng.uniform(1, 3)), -9, 9);
    IntPoly q = rng.monic(static_cast<int>(rng.uniform(0, 3)), -9, 9);
    IntPoly r = rng.monic(0, 0, 0);  // constant 1
    r = Integer(rng.uniform(-20, 20)) * r;
    auto [q2, r2] = galois::divmod(q * d + r, d);
    CHECK(q2 == q);
    CHECK(r2 == r);
  }
}

TEST_CASE("normalize_to_monic_integral pinned examples") {
  {
    auto [f, lambda] = galois::normalize_to_monic_integral(RatPoly{Rational(-1, 2), 0, 1});
    CHECK(f == IntPoly::from_desc({1, 0, -2}));
    CHECK(lambda == 2);
  }
  {
    auto [f, lambda] = galois::normalize_to_monic_integral(RatPoly{1, 1, 0, 1});
    CHECK(f == IntPoly::from_desc({1, 0, 1, 1}));
    CHECK(lambda == 1);
  }
  {
    auto [f, lambda] = galois::normalize_to_monic_integral(RatPoly{-1, 0, 2});
    CHECK(f == IntPoly::from_desc({1, 0, -2}));
    CHECK(lambda == 2);
  }
  CHECK_THROWS_AS(galois::normalize_to_monic_integral(RatPoly{}), galois::Error);
}

TEST_CASE("normalized polynomial vanishes at lambda times the original roots") {
  oracles::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = static_cast<int>(rng.uniform(1, 5));
    std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i)
      coeffs[static_cast<size_t>(i)] =
          Rational(rng.uniform(-12, 12), rng.uniform(1, 9));
    if (coeffs.back() == 0) coeffs.back() = 1;
    RatPoly g(coeffs);
    auto [f, lambda] = galois::normalize_to_monic_integral(g);
    REQUIRE(f.is_monic());
    REQUIRE(f.degree() == deg);

    // roots of the monicized input, via an integer polynomial with the same
    // roots (clear denominators without scaling the variable)
    Integer den_lcm = 1;
    for (const auto& c : g.coeffs())
      den_lcm = boost::multiprecision::lcm(den_lcm, galois::denominator(c));
    std::vector<Integer> scaled(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
      Rational v = g.coeff(i) * Rational(den_lcm);
      scaled[static_cast<size_t>(i)] = galois::numerator(v);
    }
    for (const auto& rho : galois::polynomial_roots(IntPoly(scaled))) {
      std::complex<double> z = std::complex<double>(lambda.convert_to<double>()) * rho;
      double scale = 0;
      for (int i = f.degree(); i >= 0; --i)
        scale = scale * std::abs(z) + std::abs(f.coeff(i).convert_to<double>());
      CHECK(std::abs(galois::eval_complex(f, z)) < 1e-6 * (1 + scale));
    }
  }
}

TEST_CASE("depress_quintic") {
  const IntPoly already = IntPoly::from_desc({1, 0, 0, 0, 20, 16});
  auto dep = galois::depress_quintic(already);
  CHECK(dep.poly == already);
  CHECK(dep.shift == 0);

  oracles::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly g = rng.monic(5, -15, 15);
    auto [f, a] = galois::depress_quintic(g);
    CHECK(f.is_monic());
    CHECK(f.degree() == 5);
    CHECK(f.coeff(4) == 0);
    if (a == 0) {
      CHECK(f == g);
      continue;
    }
    // inverse substitution: 5^5 g(y) == f(5y + a) exactly
    const IntPoly five_y_plus_a = IntPoly{a, Integer(5)};
    IntPoly recovered = IntPoly{Integer(1)};
    for (int i = 4; i >= 0; --i) recovered = recovered * five_y_plus_a + IntPoly{f.coeff(i)};
    CHECK(recovered == Integer(3125) * g);
  }
}
