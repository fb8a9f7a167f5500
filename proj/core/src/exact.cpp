#include "galois/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "galois/error.hpp"
#include "galois/roots.hpp"

namespace galois {

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(Error::Kind::internal_invariant, "isqrt of negative integer");
  if (n < 2) return n;
  // Newton iteration; the initial guess 2^ceil(bits/2) is >= sqrt(n), and the
  // iteration is monotone decreasing from above until it stabilizes.
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  Integer x = Integer(1) << ((bits + 1) / 2);
  while (true) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return x;
}

Integer iroot(const Integer& n, unsigned k) {
  if (n < 0) throw Error(Error::Kind::internal_invariant, "iroot of negative integer");
  if (k == 0) throw Error(Error::Kind::internal_invariant, "iroot with k = 0");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  if (bits <= k) return 1;  // 2^k > n > 1
  Integer lo = 1, hi = Integer(1) << (bits / k + 1);
  while (lo < hi) {  // largest x with x^k <= n
    Integer mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer k = isqrt(n);
  if (k * k == n) return k;
  return std::nullopt;
}

namespace {

// Divisor-candidate cap: constants beyond this are left to the numeric path
// rather than factored (see integer root strategy notes in exact.hpp).
const Integer kDivisorCap = 1000000000;

void add_verified(const IntPoly& p, const Integer& k, std::vector<Integer>& out) {
  if (eval_exact(p, k) == 0) out.push_back(k);
}

// Exact Newton steps in integer arithmetic. A double approximation of a root
// beyond 2^53 carries an absolute error of many units, so rounding alone can
// miss; polishing with p and p' over the integers recovers the exact root
// whenever the seed is in its basin. Never produces a false positive: the
// caller still verifies by exact evaluation.
void refine_integer_candidate(const IntPoly& p, const IntPoly& dp, Integer k,
                              std::vector<Integer>& out) {
  Integer bound = 1;
  for (const auto& c : p.coeffs()) bound = std::max(bound, Integer(abs(c)));
  bound += 1;  // all integer roots lie within the Cauchy bound
  for (int step = 0; step < 64; ++step) {
    const Integer value = eval_exact(p, k);
    if (value == 0) {
      out.push_back(k);
      return;
    }
    const Integer slope = eval_exact(dp, k);
    if (slope == 0) return;
    Integer delta = value / slope;  // truncated; exactness comes from the final check
    if (delta == 0) delta = (value > 0) == (slope > 0) ? 1 : -1;
    k -= delta;
    if (abs(k) > bound) return;
  }
}

void collect_roots(const IntPoly& p, std::vector<Integer>& out) {
  if (p.degree() < 1) return;

  // Zero constant term: 0 is a root; deflate by x and continue on the rest.
  if (p.coeff(0) == 0) {
    out.push_back(0);
    std::vector<Integer> deflated(p.coeffs().begin() + 1, p.coeffs().end());
    collect_roots(IntPoly(std::move(deflated)), out);
    return;
  }

  if (p.degree() == 1) {  // monic: x + c
    out.push_back(-p.coeff(0));
    return;
  }

  // Numeric candidates: real roots rounded to nearby integers; acceptance is
  // exact evaluation, so a poor approximation can only miss, never lie. The
  // loose residual target keeps repeated-root inputs (possible outside the
  // classification pipeline, where resolvents are squarefree) from aborting.
  RootFindOptions numeric_opts;
  numeric_opts.max_iterations = 800;
  numeric_opts.residual_scale = 1e-8;
  const IntPoly dp = derivative(p);
  for (const Complex& z : polynomial_roots(p, numeric_opts)) {
    if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
    const double re = z.real();
    const double candidates[3] = {std::floor(re), std::round(re), std::ceil(re)};
    for (double c : candidates) {
      add_verified(p, Integer(c), out);  // cpp_int from double is exact
    }
    // beyond 2^53 the rounded candidates can be off by many units
    if (std::abs(re) > 9.0e15) refine_integer_candidate(p, dp, Integer(std::round(re)), out);
  }

  // Divisor candidates, only when the constant term is cheap to factor.
  const Integer c0 = abs(p.coeff(0));
  if (c0 <= kDivisorCap) {
    const std::uint64_t n = c0.convert_to<std::uint64_t>();
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      for (std::uint64_t div : {d, n / d}) {
        add_verified(p, Integer(div), out);
        add_verified(p, -Integer(div), out);
      }
    }
  }
}

}  // namespace

std::vector<Integer> integer_roots(const IntPoly& p) {
  if (!p.is_monic() || p.degree() < 1)
    throw Error(Error::Kind::internal_invariant, "integer_roots expects a monic polynomial of degree >= 1");
  std::vector<Integer> out;
  collect_roots(p, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace galois
