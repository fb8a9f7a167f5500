#include <algorithm>
#include <cstdint>
#include <vector>

#include "galois/classify.hpp"
#include "galois/error.hpp"

namespace galois {

namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Dense polynomial over F_p, lowest degree first, normalized.
using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^31 keeps this exact

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

FpPoly fp_reduce(const IntPoly& f, u64 p) {
  FpPoly out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    Integer c = f.coeffs()[i] % Integer(p);
    if (c < 0) c += Integer(p);
    out[i] = c.convert_to<u64>();
  }
  fp_trim(out);
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(out);
  return out;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
  const int dm = fp_deg(m);
  const u64 lead_inv = invmod(m.back(), p);
  while (fp_deg(a) >= dm) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const size_t shift = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) {
      u64 sub = mulmod(c, m[j], p);
      a[shift + j] = (a[shift + j] + p - sub) % p;
    }
    fp_trim(a);
  }
  return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& d, u64 p) {
  const int dd = fp_deg(d);
  const u64 lead_inv = invmod(d.back(), p);
  FpPoly q(a.size() - d.size() + 1, 0);
  for (int i = fp_deg(a); i >= dd; --i) {
    if (static_cast<int>(a.size()) <= i) continue;
    u64 c = mulmod(a[static_cast<size_t>(i)], lead_inv, p);
    q[static_cast<size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      u64 sub = mulmod(c, d[static_cast<size_t>(j)], p);
      auto& slot = a[static_cast<size_t>(i - dd + j)];
      slot = (slot + p - sub) % p;
    }
  }
  fp_trim(q);
  return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  if (a.size() < 2) return {};
  FpPoly out(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] % p * (i % p) % p;
  fp_trim(out);
  return out;
}

FpPoly fp_powmod_x(u64 e, const FpPoly& m, u64 p) {
  // x^e mod m by square-and-multiply on exponent bits.
  FpPoly result{1};
  FpPoly base{0, 1};
  base = fp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = fp_mod(fp_mul(result, base, p), m, p);
    base = fp_mod(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::vector<u32> primes_up_to(u32 bound) {
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  std::vector<u32> out;
  for (u32 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = static_cast<u64>(i) * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

CycleType cycle_type_mod_p(const IntPoly& f, u32 p) {
  if (!is_prime_u32(p) || p >= (1u << 31))
    throw Error(Error::Kind::internal_invariant, "cycle_type_mod_p requires a prime below 2^31");
  if (!f.is_monic() || f.degree() < 1)
    throw Error(Error::Kind::internal_invariant, "cycle_type_mod_p expects a monic polynomial");

  FpPoly g = fp_reduce(f, p);  // still monic: leading coefficient is 1
  FpPoly gp = fp_derivative(g, p);
  FpPoly sf = fp_gcd(g, gp, p);
  if (fp_deg(sf) > 0 || gp.empty())
    throw Error(Error::Kind::internal_invariant,
                "bad prime: polynomial is not squarefree modulo " + std::to_string(p));

  // Distinct-degree splitting: gcd with x^(p^k) - x collects all irreducible
  // factors of degree k. h tracks x^(p^k) mod g across rounds.
  CycleType type;
  FpPoly h{0, 1};  // x
  h = fp_mod(std::move(h), g, p);
  int k = 0;
  while (fp_deg(g) > 0) {
    ++k;
    if (2 * k > fp_deg(g)) {  // what is left is a single irreducible factor
      type.push_back(fp_deg(g));
      break;
    }
    // h <- h^p mod g (one more Frobenius power)
    {
      // compute h(x)^p mod g via repeated squaring of h as a polynomial value:
      // h^p = (x^(p^(k-1)))^p = x^(p^k); using modular composition would be
      // faster, but exponent-by-squaring on h itself is plenty at degree <= 6.
      FpPoly acc{1};
      FpPoly base = h;
      u64 e = p;
      while (e) {
        if (e & 1) acc = fp_mod(fp_mul(acc, base, p), g, p);
        base = fp_mod(fp_mul(base, base, p), g, p);
        e >>= 1;
      }
      h = std::move(acc);
    }
    FpPoly diff = h;
    // diff <- h - x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(diff);
    FpPoly d = fp_gcd(g, diff, p);
    if (fp_deg(d) > 0) {
      for (int i = 0; i < fp_deg(d) / k; ++i) type.push_back(k);
      g = fp_divexact(std::move(g), d, p);
      h = fp_mod(std::move(h), g, p);
    }
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool dedekind_check(const IntPoly& f, GaloisGroup claimed, u32 prime_bound) {
  for (u32 p : primes_up_to(prime_bound)) {
    CycleType type;
    try {
      type = cycle_type_mod_p(f, p);
    } catch (const Error&) {
      continue;  // p divides the discriminant; Frobenius says nothing
    }
    if (!has_cycle_type(claimed, type)) return false;
  }
  return true;
}

}  // namespace galois
