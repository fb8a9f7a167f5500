#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "galois/numbers.hpp"

namespace galois {

/// Dense univariate polynomial over arbitrary-precision integers.
/// Coefficients are stored lowest degree first: coeff(i) multiplies x^i.
/// The representation is normalized (no trailing zero coefficient), so the
/// zero polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<Integer> coeffs_lowest_first);

  /// Builds from the written-down order (highest degree first), matching how
  /// polynomials appear in text: from_desc({1, 0, -5, 12}) is x^3 - 5x + 12.
  static IntPoly from_desc(std::initializer_list<Integer> coeffs_highest_first);
  static IntPoly from_desc(std::vector<Integer> coeffs_highest_first);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero beyond the stored range.
  const Integer& coeff(int i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool operator==(const IntPoly&) const = default;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& k, const IntPoly& p);

 private:
  std::vector<Integer> coeffs_;
  void trim();
};

/// Dense univariate polynomial over exact rationals (parser output and the
/// entry type of classification; everything downstream is integral).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs_lowest_first);
  static RatPoly from_desc(std::vector<Rational> coeffs_highest_first);
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool operator==(const RatPoly&) const = default;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

/// Exact evaluation by Horner's rule.
Integer eval_exact(const IntPoly& p, const Integer& x);

/// Horner evaluation in complex double precision. Throws
/// Error::Kind::precision_exceeded if a coefficient overflows double range.
std::complex<double> eval_complex(const IntPoly& p, std::complex<double> z);

/// Formal derivative.
IntPoly derivative(const IntPoly& p);

/// Euclidean division by a monic divisor; exact over the integers.
/// Returns {quotient, remainder} with deg(remainder) < deg(divisor).
std::pair<IntPoly, IntPoly> divmod(const IntPoly& numerator, const IntPoly& monic_divisor);

/// Checked conversion; throws precision_exceeded on overflow.
double to_double_checked(const Integer& n);

/// Renders in conventional text form, e.g. "x^5 - 5x + 12".
std::string to_string(const IntPoly& p, const std::string& var = "x");
std::string to_string(const RatPoly& p, const std::string& var = "x");
std::string to_string(const Integer& n);

struct MonicIntegral {
  IntPoly poly;    // monic, integral, same degree as the input
  Integer lambda;  // roots of poly = lambda * (roots of the monicized input)
};

/// Converts a rational polynomial to a monic integral one with the same
/// Galois group. lambda is the least positive integer clearing all
/// denominators of the monic form under f(x) = lambda^n * g_monic(x/lambda).
/// Throws degree_out_of_range for the zero polynomial or degree < 1.
MonicIntegral normalize_to_monic_integral(const RatPoly& g);

struct DepressedQuintic {
  IntPoly poly;   // monic quintic with zero x^4 coefficient
  Integer shift;  // the original x^4 coefficient a
};

/// Eliminates the x^4 term of a monic quintic via y = (x - a)/5, scaling by
/// 5^5 to stay integral: roots map to 5*root + a. When the x^4 coefficient is
/// already zero the input is returned unchanged (no pointless 5^n growth).
DepressedQuintic depress_quintic(const IntPoly& g);

}  // namespace galois
