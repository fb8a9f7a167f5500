#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "galois/error.hpp"
#include "galois/roots.hpp"
#include "support/oracles.hpp"

using galois::Complex;
using galois::Integer;
using galois::IntPoly;
using galois::RootSet;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) < tol; }

bool contains_root(const RootSet& rs, Complex want, double tol) {
  for (const auto& r : rs.roots)
    if (close(r, want, tol)) return true;
  return false;
}

std::array<Complex, 5> ordered(const RootSet& rs, std::array<int, 5> perm) {
  std::array<Complex, 5> out;
  for (int i = 0; i < 5; ++i) out[static_cast<size_t>(i)] = rs.roots[static_cast<size_t>(perm[static_cast<size_t>(i)])];
  return out;
}

}  // namespace

TEST_CASE("all_roots on the mixed-roots example") {
  const RootSet rs = galois::all_roots(IntPoly::from_desc({1, 0, 0, 0, -5, 12}));
  CHECK(rs.real_count == 1);
  CHECK(contains_root(rs, {-1.84208596619, 0}, 1e-9));
  CHECK(contains_root(rs, {-0.35185424, 1.70956104}, 1e-7));
  CHECK(contains_root(rs, {-0.35185424, -1.70956104}, 1e-7));
  CHECK(contains_root(rs, {1.27289722, 0.71979868}, 1e-7));
  CHECK(contains_root(rs, {1.27289722, -0.71979868}, 1e-7));
  for (int i = 0; i < 5; ++i) {
    CHECK(rs.residuals[static_cast<size_t>(i)] <= rs.residual_tolerance);
    const int j = rs.conjugate_pairing[static_cast<size_t>(i)];
    if (j != i)
      CHECK(rs.roots[static_cast<size_t>(j)] == std::conj(rs.roots[static_cast<size_t>(i)]));
    else
      CHECK(rs.roots[static_cast<size_t>(i)].imag() == 0);
  }
}

TEST_CASE("all_roots on the all-real example") {
  const RootSet rs = galois::all_roots(IntPoly::from_desc({1, 0, -10, 5, 10, 1}));
  CHECK(rs.real_count == 5);
  const double table[5] = {-3.25907738213, -0.106939611689, -0.725977544072, 1.56240369309,
                           2.5295908448};
  for (double want : table) CHECK(contains_root(rs, {want, 0}, 1e-9));
}

TEST_CASE("all_roots on constructed integer roots") {
  // (x-1)(x-2)(x-3)(x-4)(x-5)
  const IntPoly f = IntPoly::from_desc({1, -15, 85, -225, 274, -120});
  const RootSet rs = galois::all_roots(f);
  CHECK(rs.real_count == 5);
  for (int k = 1; k <= 5; ++k) CHECK(contains_root(rs, {static_cast<double>(k), 0}, 1e-10));
}

TEST_CASE("root-set completeness: power sums match the coefficients") {
  oracles::Rng rng(21);
  int checked = 0;
  while (checked < 40) {
    IntPoly f = rng.monic(5, -20, 20);
    std::vector<Integer> c(f.coeffs());
    c[4] = 0;
    f = IntPoly(c);
    RootSet rs;
    try {
      rs = galois::all_roots(f);
    } catch (const galois::Error&) {
      continue;  // repeated roots; not this test's subject
    }
    Complex sum = 0, prod = 1;
    for (const auto& r : rs.roots) {
      sum += r;
      prod *= r;
    }
    const double s0 = f.coeff(0).convert_to<double>();
    CHECK(std::abs(sum) < 1e-8 * std::max(1.0, std::abs(prod)));
    CHECK(std::abs(prod - Complex(-s0)) < 1e-8 * std::max(1.0, std::abs(s0)));
    ++checked;
  }
}

TEST_CASE("theta1 and sigma1 on pinned orderings") {
  // the published ordering for x^5 - 5x + 12 (theta = 40, dihedral sigma)
  const RootSet rs = galois::all_roots(IntPoly::from_desc({1, 0, 0, 0, -5, 12}));
  // roots sorted by (re, im): [-1.84, -0.35-1.71i, -0.35+1.71i, 1.27-0.72i, 1.27+0.72i]
  const std::array<int, 5> paper_perm{1, 3, 0, 4, 2};
  const auto r = ordered(rs, paper_perm);
  CHECK(std::abs(galois::theta1(r) - Complex(40, 0)) < 1e-6);
  CHECK(std::abs(galois::sigma1(r) - Complex(-4.99999994673280, -15.8113882118127)) < 1e-6);
  CHECK(std::abs(galois::sigma2(r) - std::conj(galois::sigma1(r))) < 1e-6);

  // all-real example: Table ordering gives theta = -55, sigma = 35
  const RootSet rc = galois::all_roots(IntPoly::from_desc({1, 0, -10, 5, 10, 1}));
  // sorted: [-3.259, -0.726, -0.107, 1.562, 2.530]; table order swaps 2nd/3rd
  const std::array<int, 5> table_perm{0, 2, 1, 3, 4};
  const auto rr = ordered(rc, table_perm);
  CHECK(std::abs(galois::theta1(rr) - Complex(-55, 0)) < 1e-6);
  CHECK(std::abs(galois::sigma1(rr) - Complex(35, 0)) < 1e-6);

  const std::array<Complex, 5> ones{Complex(1), Complex(1), Complex(1), Complex(1), Complex(1)};
  CHECK(galois::theta1(ones) == Complex(10, 0));
  const std::array<Complex, 5> zeros{};
  CHECK(galois::sigma1(zeros) == Complex(0, 0));
}

TEST_CASE("find_theta_ordering matches the target within tolerance") {
  const RootSet rs = galois::all_roots(IntPoly::from_desc({1, 0, 0, 0, -5, 12}));
  const auto ord = galois::find_theta_ordering(rs, 40);
  CHECK(ord.mismatch < 1e-3 * 40);
  CHECK(std::abs(ord.theta_value - Complex(40, 0)) < 1e-6);

  const RootSet rc = galois::all_roots(IntPoly::from_desc({1, 0, -10, 5, 10, 1}));
  const auto ord2 = galois::find_theta_ordering(rc, -55);
  CHECK(std::abs(ord2.theta_value - Complex(-55, 0)) < 1e-6);

  CHECK_THROWS_AS(galois::find_theta_ordering(rs, 41), galois::Error);  // no ordering
}

TEST_CASE("exactly 20 of 120 orderings match theta for both numeric examples") {
  for (const auto& [poly, target] :
       {std::pair{IntPoly::from_desc({1, 0, 0, 0, -5, 12}), Integer(40)},
        std::pair{IntPoly::from_desc({1, 0, -10, 5, 10, 1}), Integer(-55)}}) {
    const RootSet rs = galois::all_roots(poly);
    CHECK(galois::theta_matches(rs, target).size() == 20);
  }
}

TEST_CASE("sigma pair invariants hold on matched orderings") {
  const RootSet rs = galois::all_roots(IntPoly::from_desc({1, 0, 0, 0, -5, 12}));
  for (const auto& m : galois::theta_matches(rs, 40)) {
    const Complex sum = m.sigma + m.sigma_partner;
    const Complex prod = m.sigma * m.sigma_partner;
    CHECK(galois::is_near_integer(sum, 1e-3).has_value());
    CHECK(galois::is_near_integer(prod, 1e-3 * std::max(1.0, std::abs(prod))).has_value());
  }
}

TEST_CASE("is_near_integer") {
  CHECK(galois::is_near_integer({35.0000000001, 0}, 1e-3).value() == 35);
  CHECK(!galois::is_near_integer({-5, -15.81}, 1e-3).has_value());
  CHECK(!galois::is_near_integer({0.4999, 0}, 1e-3).has_value());
  CHECK(galois::is_near_integer({-0.0004, 0.0002}, 1e-3).value() == 0);
}

TEST_CASE("polynomial_roots is deterministic") {
  const IntPoly f = IntPoly::from_desc({1, 0, -10, 5, 10, 1});
  const auto a = galois::polynomial_roots(f);
  const auto b = galois::polynomial_roots(f);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
