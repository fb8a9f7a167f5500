#include "galois/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "galois/error.hpp"

namespace galois {

namespace {

double eval_abs_scale(const std::vector<double>& coeffs_desc, double z_abs) {
  // sum |c_i| |z|^i, the natural magnitude of f near z (backward-error scale).
  double acc = 0;
  for (double c : coeffs_desc) acc = acc * z_abs + std::abs(c);
  return acc;
}

Complex horner(const std::vector<double>& coeffs_desc, Complex z) {
  Complex acc = 0;
  for (double c : coeffs_desc) acc = acc * z + c;
  return acc;
}

}  // namespace

std::vector<Complex> polynomial_roots(const IntPoly& f, const RootFindOptions& opts) {
  const int n = f.degree();
  if (n < 1) return {};
  std::vector<double> co(static_cast<size_t>(n) + 1);  // highest first
  for (int i = 0; i <= n; ++i) co[static_cast<size_t>(n - i)] = to_double_checked(f.coeff(i));
  const double lead = co[0];

  if (n == 1) return {Complex(-co[1] / lead, 0.0)};

  // Fujiwara root inclusion radius: 2 * max(|c_i/c_0|^(1/i), |c_n/(2 c_0)|^(1/n)).
  // The plain 1 + max|c_i| Cauchy radius is useless here: depressed quintics
  // scale coefficients by powers of 5, and a start circle many orders of
  // magnitude above the roots makes the contraction stall inside the budget.
  double radius = 0;
  for (int i = 1; i <= n; ++i) {
    double c = std::abs(co[static_cast<size_t>(i)] / lead);
    if (i == n) c /= 2;
    if (c > 0) radius = std::max(radius, std::pow(c, 1.0 / i));
  }
  radius = std::max(2.0 * radius, 1.0);

  // Fixed equiangular start, rotated off the real axis so real-coefficient
  // symmetry cannot trap the iteration. Deterministic by construction.
  std::vector<Complex> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<size_t>(k)] = radius * Complex(std::cos(angle), std::sin(angle));
  }

  // Durand-Kerner: simultaneous first-order corrections. The stall test is
  // relative to each iterate so large root magnitudes do not end the loop
  // while corrections are still macroscopic.
  for (int it = 0; it < opts.max_iterations; ++it) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      Complex denom = lead;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      if (denom == Complex(0)) {  // collided iterates; nudge apart
        z[static_cast<size_t>(i)] += Complex(1e-8 * radius, 1e-8 * radius);
        moved = 1.0;
        continue;
      }
      Complex d = horner(co, z[static_cast<size_t>(i)]) / denom;
      z[static_cast<size_t>(i)] -= d;
      moved = std::max(moved, std::abs(d) / std::max(1.0, std::abs(z[static_cast<size_t>(i)])));
    }
    if (moved < 1e-14) break;
  }

  // Per-root Newton polishing.
  std::vector<double> dco(static_cast<size_t>(n));  // derivative, highest first
  for (int i = 0; i < n; ++i) dco[static_cast<size_t>(i)] = co[static_cast<size_t>(i)] * (n - i);
  for (auto& zi : z) {
    for (int it = 0; it < 16; ++it) {
      Complex fv = horner(co, zi);
      Complex dv = horner(dco, zi);
      if (dv == Complex(0)) break;
      Complex step = fv / dv;
      zi -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(zi))) break;
    }
  }

  for (const auto& zi : z) {
    double bound = opts.residual_scale * (1.0 + eval_abs_scale(co, std::abs(zi)));
    if (!std::isfinite(bound))
      throw Error(Error::Kind::precision_exceeded,
                  "polynomial magnitude overflows double precision near a root estimate");
    if (!(std::abs(horner(co, zi)) <= bound))
      throw Error(Error::Kind::convergence_failure,
                  "root iteration exhausted its budget without meeting the residual bound");
  }

  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

Integer root_magnitude_bound(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) return 1;
  const double lead = std::abs(to_double_checked(f.leading()));
  double radius = 0;
  for (int i = 1; i <= n; ++i) {
    double c = std::abs(to_double_checked(f.coeff(n - i))) / lead;
    if (i == n) c /= 2;
    if (c > 0) radius = std::max(radius, std::pow(c, 1.0 / i));
  }
  const double bound = 2.0 * radius * 1.0000001 + 1.0;
  if (bound >= 9.0e18) {
    Integer big = 1;  // fall back to the coefficient-height bound
    for (const auto& c : f.coeffs()) big = std::max(big, Integer(abs(c)));
    return big + 1;
  }
  return Integer(std::ceil(bound));
}

RootSet all_roots(const IntPoly& f, const RootFindOptions& opts) {
  if (f.degree() != 5 || !f.is_monic())
    throw Error(Error::Kind::internal_invariant, "all_roots expects a monic quintic");
  std::vector<Complex> z = polynomial_roots(f, opts);

  RootSet rs;
  std::array<bool, 5> is_real{};
  for (int i = 0; i < 5; ++i) {
    double tol = opts.pairing_scale * std::max(1.0, std::abs(z[static_cast<size_t>(i)]));
    is_real[static_cast<size_t>(i)] = std::abs(z[static_cast<size_t>(i)].imag()) < tol;
  }

  // Snap real roots onto the axis, and non-real ones onto exact conjugate
  // pairs, so the symmetric functions downstream see clean symmetry.
  std::array<int, 5> pairing{};
  std::array<bool, 5> used{};
  for (int i = 0; i < 5; ++i) pairing[static_cast<size_t>(i)] = i;
  for (int i = 0; i < 5; ++i) {
    if (is_real[static_cast<size_t>(i)]) {
      z[static_cast<size_t>(i)] = Complex(z[static_cast<size_t>(i)].real(), 0.0);
      rs.real_count++;
      used[static_cast<size_t>(i)] = true;
    }
  }
  for (int i = 0; i < 5; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    used[static_cast<size_t>(i)] = true;
    const Complex want = std::conj(z[static_cast<size_t>(i)]);
    int best = -1;
    double best_d = 0;
    for (int j = i + 1; j < 5; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      double d = std::abs(z[static_cast<size_t>(j)] - want);
      if (best < 0 || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    double tol = 1e-6 * std::max(1.0, std::abs(z[static_cast<size_t>(i)]));
    if (best < 0 || best_d > tol)
      throw Error(Error::Kind::numeric_ambiguity,
                  "conjugate pairing failed: non-real roots do not pair within tolerance");
    used[static_cast<size_t>(best)] = true;
    Complex mean = (z[static_cast<size_t>(i)] + std::conj(z[static_cast<size_t>(best)])) / 2.0;
    z[static_cast<size_t>(i)] = mean;
    z[static_cast<size_t>(best)] = std::conj(mean);
    pairing[static_cast<size_t>(i)] = best;
    pairing[static_cast<size_t>(best)] = i;
  }
  if (rs.real_count != 1 && rs.real_count != 3 && rs.real_count != 5)
    throw Error(Error::Kind::numeric_ambiguity,
                "real-root count is not 1, 3, or 5 after conjugate pairing");

  std::vector<double> co(6);
  for (int i = 0; i <= 5; ++i) co[static_cast<size_t>(5 - i)] = to_double_checked(f.coeff(i));
  double max_bound = 0;
  for (int i = 0; i < 5; ++i) {
    rs.roots[static_cast<size_t>(i)] = z[static_cast<size_t>(i)];
    rs.residuals[static_cast<size_t>(i)] = std::abs(horner(co, z[static_cast<size_t>(i)]));
    max_bound = std::max(
        max_bound,
        opts.residual_scale * (1.0 + eval_abs_scale(co, std::abs(z[static_cast<size_t>(i)]))));
  }
  rs.conjugate_pairing = pairing;
  rs.residual_tolerance = max_bound;
  for (int i = 0; i < 5; ++i) {
    if (!(rs.residuals[static_cast<size_t>(i)] <= max_bound))
      throw Error(Error::Kind::convergence_failure,
                  "snapped roots violate the residual tolerance");
  }
  return rs;
}

Complex theta1(std::span<const Complex, 5> r) {
  const Complex r1 = r[0], r2 = r[1], r3 = r[2], r4 = r[3], r5 = r[4];
  return r1 * r1 * r2 * r5 + r1 * r1 * r3 * r4 + r2 * r2 * r1 * r3 + r2 * r2 * r4 * r5 +
         r3 * r3 * r1 * r5 + r3 * r3 * r2 * r4 + r4 * r4 * r1 * r2 + r4 * r4 * r3 * r5 +
         r5 * r5 * r1 * r4 + r5 * r5 * r2 * r3;
}

Complex sigma1(std::span<const Complex, 5> r) {
  const Complex r1 = r[0], r2 = r[1], r3 = r[2], r4 = r[3], r5 = r[4];
  return r1 * r2 * r2 + r2 * r3 * r3 + r3 * r4 * r4 + r4 * r5 * r5 + r5 * r1 * r1;
}

Complex sigma2(std::span<const Complex, 5> r) {
  const std::array<Complex, 5> swapped{r[0], r[4], r[3], r[2], r[1]};
  return sigma1(swapped);
}

namespace {

std::array<Complex, 5> apply_perm(const RootSet& rs, const std::array<int, 5>& perm) {
  std::array<Complex, 5> out;
  for (int i = 0; i < 5; ++i) out[static_cast<size_t>(i)] = rs.roots[static_cast<size_t>(perm[static_cast<size_t>(i)])];
  return out;
}

}  // namespace

std::vector<ThetaMatch> theta_matches(const RootSet& rs, const Integer& target,
                                      double tol_theta) {
  const double t = to_double_checked(target);
  const double tol = tol_theta * std::max(1.0, std::abs(t));
  std::vector<ThetaMatch> out;
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  do {
    auto ordered = apply_perm(rs, perm);
    Complex th = theta1(ordered);
    if (std::abs(th - t) < tol) {
      ThetaMatch m;
      m.perm = perm;
      m.theta = th;
      m.sigma = sigma1(ordered);
      m.sigma_partner = sigma2(ordered);
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ThetaOrdering find_theta_ordering(const RootSet& rs, const Integer& target, double tol_theta) {
  const double t = to_double_checked(target);
  const double tol = tol_theta * std::max(1.0, std::abs(t));

  std::array<int, 5> perm{0, 1, 2, 3, 4};
  std::array<int, 5> best_perm{};
  Complex best_theta;
  double best = -1;
  bool ambiguous = false;
  do {
    auto ordered = apply_perm(rs, perm);
    Complex th = theta1(ordered);
    double d = std::abs(th - t);
    if (best < 0 || d < best) {
      // a previously-seen near-match with a genuinely different theta value
      // makes the target ambiguous, not just noisy
      if (best >= 0 && best < tol && std::abs(th - best_theta) > tol) ambiguous = true;
      best = d;
      best_perm = perm;
      best_theta = th;
    } else if (d < tol && std::abs(th - best_theta) > tol) {
      ambiguous = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (best >= tol)
    throw Error(Error::Kind::numeric_ambiguity,
                "no ordering: no root ordering matches the resolvent root within tolerance");
  if (ambiguous)
    throw Error(Error::Kind::numeric_ambiguity,
                "ambiguous ordering: two distinct theta values both match the resolvent root");

  ThetaOrdering out;
  out.perm = best_perm;
  out.theta_value = best_theta;
  out.target = target;
  out.mismatch = best;
  return out;
}

std::optional<Integer> is_near_integer(Complex z, double tol) {
  if (std::abs(z.imag()) >= tol) return std::nullopt;
  const double nearest = std::round(z.real());
  if (std::abs(z.real() - nearest) >= tol) return std::nullopt;
  return Integer(nearest);
}

}  // namespace galois
