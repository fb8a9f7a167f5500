#include "galois/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "galois/error.hpp"
#include "galois/exact.hpp"

namespace galois {

namespace {
const Integer kZero = 0;
const Rational kZeroQ = 0;
}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Integer> coeffs_lowest_first)
    : coeffs_(coeffs_lowest_first) {
  trim();
}

IntPoly IntPoly::from_desc(std::initializer_list<Integer> coeffs_highest_first) {
  std::vector<Integer> v(coeffs_highest_first);
  std::reverse(v.begin(), v.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_desc(std::vector<Integer> coeffs_highest_first) {
  std::reverse(coeffs_highest_first.begin(), coeffs_highest_first.end());
  return IntPoly(std::move(coeffs_highest_first));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& k, const IntPoly& p) {
  std::vector<Integer> v(p.coeffs_);
  for (auto& c : v) c *= k;
  return IntPoly(std::move(v));
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs_lowest_first)
    : coeffs_(coeffs_lowest_first) {
  trim();
}

RatPoly RatPoly::from_desc(std::vector<Rational> coeffs_highest_first) {
  std::reverse(coeffs_highest_first.begin(), coeffs_highest_first.end());
  return RatPoly(std::move(coeffs_highest_first));
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroQ;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (coeffs_.empty()) return kZeroQ;
  return coeffs_.back();
}

Integer eval_exact(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

double to_double_checked(const Integer& n) {
  double d = n.convert_to<double>();
  if (!std::isfinite(d))
    throw Error(Error::Kind::precision_exceeded,
                "coefficient overflows double precision: " + to_string(n));
  return d;
}

std::complex<double> eval_complex(const IntPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + to_double_checked(*it);
  return acc;
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return IntPoly{};
  std::vector<Integer> v(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) v[static_cast<size_t>(i - 1)] = Integer(i) * p.coeff(i);
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& numerator, const IntPoly& monic_divisor) {
  if (!monic_divisor.is_monic())
    throw Error(Error::Kind::internal_invariant, "divmod requires a monic divisor");
  const int dd = monic_divisor.degree();
  std::vector<Integer> rem(numerator.coeffs());
  if (numerator.degree() < dd) return {IntPoly{}, numerator};
  std::vector<Integer> quot(static_cast<size_t>(numerator.degree() - dd + 1), Integer(0));
  for (int i = numerator.degree(); i >= dd; --i) {
    Integer c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= c * monic_divisor.coeff(j);
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

namespace {

std::string term_string(const std::string& coeff_text, int exp, const std::string& var,
                        bool leading_one_elided) {
  std::ostringstream os;
  if (exp == 0) {
    os << coeff_text;
  } else {
    if (!leading_one_elided) os << coeff_text;
    os << var;
    if (exp > 1) os << '^' << exp;
  }
  return os.str();
}

template <typename Poly, typename CoeffToText, typename IsOne>
std::string render_poly(const Poly& p, const std::string& var, CoeffToText text, IsOne is_one) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const auto& c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    auto abs_text = text(c);
    os << term_string(abs_text, i, var, is_one(c) && i > 0);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const IntPoly& p, const std::string& var) {
  return render_poly(
      p, var, [](const Integer& c) { return Integer(abs(c)).str(); },
      [](const Integer& c) { return c == 1 || c == -1; });
}

std::string to_string(const RatPoly& p, const std::string& var) {
  return render_poly(
      p, var,
      [](const Rational& c) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (denominator(a) == 1) return numerator(a).str();
        return numerator(a).str() + "/" + denominator(a).str();
      },
      [](const Rational& c) { return c == 1 || c == -1; });
}

namespace {

// Prime-power factorization good enough to pick the minimal clearing scalar:
// trial division up to 10^6, then perfect-power extraction; whatever survives
// is treated as prime. A composite survivor can only arise from a denominator
// beyond 10^12 and errs toward a larger (still correct) lambda.
std::map<Integer, unsigned> factor_positive(Integer m) {
  std::map<Integer, unsigned> out;
  auto strip = [&](const Integer& p) {
    while (m % p == 0) {
      ++out[p];
      m /= p;
    }
  };
  strip(2);
  for (Integer p = 3; p <= 1000000 && p * p <= m; p += 2) strip(p);
  if (m > 1) {
    unsigned power = 1;
    Integer base = m;
    for (unsigned e = 63; e >= 2; --e) {
      Integer r = iroot(base, e);
      if (r > 1 && boost::multiprecision::pow(r, e) == base) {
        base = r;
        power *= e;
        e = 64;  // restart, the root may itself be a power
      }
    }
    out[base] += power;
  }
  return out;
}

}  // namespace

MonicIntegral normalize_to_monic_integral(const RatPoly& g) {
  if (g.is_zero())
    throw Error(Error::Kind::degree_out_of_range, "zero polynomial cannot be normalized");
  const int n = g.degree();
  if (n < 1)
    throw Error(Error::Kind::degree_out_of_range, "constant polynomial cannot be normalized");

  std::vector<Rational> monic(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) monic[static_cast<size_t>(i)] = g.coeff(i) / g.leading();

  // lambda minimal with denom(c_i) | lambda^(n-i): per prime, the exponent
  // needed is ceil(e_i / (n - i)).
  std::map<Integer, unsigned> lambda_exp;
  for (int i = 0; i < n; ++i) {
    Integer den = denominator(monic[static_cast<size_t>(i)]);
    if (den == 1) continue;
    const unsigned k = static_cast<unsigned>(n - i);
    for (auto& [prime, e] : factor_positive(den)) {
      unsigned need = (e + k - 1) / k;
      auto& cur = lambda_exp[prime];
      cur = std::max(cur, need);
    }
  }
  Integer lambda = 1;
  for (auto& [prime, e] : lambda_exp) lambda *= boost::multiprecision::pow(prime, e);

  std::vector<Integer> out(static_cast<size_t>(n) + 1);
  Integer scale = 1;  // lambda^(n-i)
  for (int i = n; i >= 0; --i) {
    Rational c = monic[static_cast<size_t>(i)] * Rational(scale);
    if (denominator(c) != 1)
      throw Error(Error::Kind::internal_invariant, "lambda failed to clear a denominator");
    out[static_cast<size_t>(i)] = numerator(c);
    scale *= lambda;
  }
  return {IntPoly(std::move(out)), lambda};
}

DepressedQuintic depress_quintic(const IntPoly& g) {
  if (g.degree() != 5 || !g.is_monic())
    throw Error(Error::Kind::internal_invariant, "depress_quintic expects a monic quintic");
  const Integer a = g.coeff(4);
  if (a == 0) return {g, 0};

  // f(x) = 5^5 g((x - a)/5) = sum_i g_i 5^(5-i) (x - a)^i, by Horner in (x - a).
  const IntPoly x_minus_a = IntPoly{-a, Integer(1)};
  IntPoly f = IntPoly{Integer(1)};
  Integer pow5 = 1;
  for (int i = 4; i >= 0; --i) {
    pow5 *= 5;
    f = f * x_minus_a + pow5 * IntPoly{g.coeff(i)};
  }
  if (f.coeff(4) != 0)
    throw Error(Error::Kind::internal_invariant, "depression left a nonzero x^4 term");
  return {std::move(f), a};
}

}  // namespace galois
