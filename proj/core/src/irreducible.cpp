#include <algorithm>

#include "galois/classify.hpp"
#include "galois/error.hpp"
#include "galois/exact.hpp"
#include "galois/roots.hpp"

namespace galois {

namespace {

// Positive divisors of |n| no larger than cap, by trial division. Narrow
// integer tiers keep the walk cheap when |n| fits a machine word; scaled
// inputs produce constant terms around 10^20 where cpp_int modulo per
// candidate would dominate the whole classification.
template <typename Word>
void divisor_walk(Word n, Word cap, std::vector<Integer>& out) {
  for (Word d = 1; d <= n / d && d <= cap; ++d) {
    if (n % d != 0) continue;
    out.push_back(Integer(d));
    const Word e = n / d;
    if (e != d && e <= cap) out.push_back(Integer(e));
  }
}

std::vector<Integer> divisors_up_to(const Integer& n, const Integer& cap) {
  std::vector<Integer> out;
  const Integer a = abs(n);
  const Integer effective_cap = std::min(cap, a);
  if (a <= std::numeric_limits<std::uint64_t>::max()) {
    divisor_walk<std::uint64_t>(a.convert_to<std::uint64_t>(),
                                effective_cap.convert_to<std::uint64_t>(), out);
  } else if (a <= Integer(std::numeric_limits<unsigned __int128>::max())) {
    divisor_walk<unsigned __int128>(a.convert_to<unsigned __int128>(),
                                    effective_cap.convert_to<unsigned __int128>(), out);
  } else {
    for (Integer d = 1; d * d <= a && d <= effective_cap; ++d) {
      if (a % d != 0) continue;
      out.push_back(d);
      Integer e = a / d;
      if (e != d && e <= effective_cap) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Monic quadratic factor of a monic quartic, if any: f = (x^2+ax+b)(x^2+cx+d)
// forces b*d = f0, a+c = f3, ac = f2-b-d, ad+bc = f1. Enumerate divisor pairs
// (b, d) and solve the symmetric system for (a, c) exactly. The factor's
// roots are roots of f, so its coefficients are bounded by the root
// magnitudes, which is far tighter than the coefficient height when the
// input was scaled by normalization or depression.
std::optional<IntPoly> quadratic_factor_of_quartic(const IntPoly& f) {
  const Integer f0 = f.coeff(0), f1 = f.coeff(1), f2 = f.coeff(2), f3 = f.coeff(3);
  const Integer root_bound = root_magnitude_bound(f);
  const Integer pair_bound = root_bound * root_bound;  // |b|,|d| <= R^2
  for (const Integer& babs : divisors_up_to(f0, pair_bound)) {
    for (int bsign : {1, -1}) {
      const Integer b = bsign * babs;
      if (b == 0) continue;
      const Integer d = f0 / b;
      if (abs(d) > pair_bound) continue;
      // a + c = f3, a*c = f2 - b - d
      const Integer sum = f3, prod = f2 - b - d;
      auto disc = is_perfect_square(sum * sum - 4 * prod);
      if (!disc) continue;
      if ((sum - *disc) % 2 != 0) continue;
      for (const Integer& a : {Integer((sum + *disc) / 2), Integer((sum - *disc) / 2)}) {
        const Integer c = sum - a;
        if (a * d + b * c == f1) return IntPoly{b, a, Integer(1)};
      }
    }
  }
  return std::nullopt;
}

// Monic quadratic factor x^2 + ax + b of a monic quintic. b runs over the
// divisors of the constant term; for each b, matching the x^2 coefficient of
// the product (x^2+ax+b)(x^3+cx^2+dx+e) forces a to be an integer root of
//   a^3 - f4 a^2 + (f3 - 2b) a + (b f4 - f2 + f0/b) = 0,
// so the candidate values of a come from an exact cubic root extraction
// instead of a scan over the whole coefficient bound. Divisibility is then
// checked outright.
std::optional<IntPoly> quadratic_factor_of_quintic(const IntPoly& f) {
  const Integer f0 = f.coeff(0), f2 = f.coeff(2), f3 = f.coeff(3), f4 = f.coeff(4);
  const Integer root_bound = root_magnitude_bound(f);
  const Integer bound_b = root_bound * root_bound;
  for (const Integer& babs : divisors_up_to(f0, bound_b)) {
    for (int bsign : {1, -1}) {
      const Integer b = bsign * babs;
      if (b == 0) continue;
      const Integer e = f0 / b;
      const IntPoly a_constraint{b * f4 - f2 + e, f3 - 2 * b, -f4, Integer(1)};
      for (const Integer& a : integer_roots(a_constraint)) {
        IntPoly candidate{b, a, Integer(1)};
        auto [q, rem] = divmod(f, candidate);
        if (rem.is_zero()) return candidate;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntPoly> find_factor(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1 || f.degree() > 5)
    throw Error(Error::Kind::degree_out_of_range,
                "irreducibility test expects a monic polynomial of degree 1 to 5");
  if (f.degree() == 1) return std::nullopt;

  // A monic polynomial has a linear factor exactly when it has an integer root.
  auto roots = integer_roots(f);
  if (!roots.empty()) return IntPoly{-roots.back(), Integer(1)};

  if (f.degree() == 4) return quadratic_factor_of_quartic(f);
  if (f.degree() == 5) return quadratic_factor_of_quintic(f);
  return std::nullopt;  // degrees 2 and 3 are settled by the root test
}

bool is_irreducible(const IntPoly& f) { return !find_factor(f).has_value(); }

}  // namespace galois
