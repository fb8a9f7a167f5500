#include "galois/classify.hpp"

#include <algorithm>
#include <cmath>

#include "galois/error.hpp"
#include "galois/exact.hpp"
#include "galois/resolvent.hpp"

namespace galois {

namespace {

Certificate base_certificate(const IntPoly& f, const ClassifyOptions& opts) {
  Certificate cert;
  cert.input = f;
  cert.normalized = f;
  cert.tolerances = opts.tol;
  return cert;
}

void require_monic_irreducible_shape(const IntPoly& f, int degree, const char* what) {
  if (f.degree() != degree || !f.is_monic())
    throw Error(Error::Kind::internal_invariant, std::string(what) + ": wrong shape of input");
}

void reject_zero_delta(const Integer& delta) {
  if (delta == 0)
    throw Error(Error::Kind::internal_invariant,
                "discriminant is zero for a supposedly irreducible polynomial; "
                "the irreducibility precondition was violated upstream");
}

bool is_trinomial(const IntPoly& f) {
  // x^n + p x + q with n >= 3 (p or q may be zero)
  for (int i = 2; i < f.degree(); ++i)
    if (f.coeff(i) != 0) return false;
  return f.degree() >= 3;
}

// Closed-form shortcut classifiers for x^n + px + q. They share the exact
// integer predicates with the general path but use the trinomial delta and
// resolvent; the caller compares the outcomes.
GaloisGroup classify_cubic_trinomial(const Integer& p, const Integer& q) {
  return is_perfect_square(disc_cubic_trinomial(p, q)) ? GaloisGroup::A3 : GaloisGroup::S3;
}

GaloisGroup classify_quartic_trinomial(const Integer& p, const Integer& q) {
  const Integer delta = disc_quartic_trinomial(p, q);
  const IntPoly r3 = resolvent_cubic_trinomial(p, q);
  const auto roots = integer_roots(r3);
  if (is_perfect_square(delta)) return roots.empty() ? GaloisGroup::A4 : GaloisGroup::V;
  if (roots.empty()) return GaloisGroup::S4;
  const Integer& r = roots.front();
  if (is_perfect_square(r * delta) && is_perfect_square((r * r - 4 * q) * delta))
    return GaloisGroup::C4;
  return GaloisGroup::D8;
}

}  // namespace

ClassifyReport classify_cubic(const IntPoly& f, const ClassifyOptions& opts) {
  require_monic_irreducible_shape(f, 3, "classify_cubic");
  ClassifyReport report;
  report.certificate = base_certificate(f, opts);
  Certificate& cert = report.certificate;

  cert.delta = disc_cubic(f.coeff(2), f.coeff(1), f.coeff(0));
  reject_zero_delta(cert.delta);
  cert.delta_sqrt = is_perfect_square(cert.delta);
  report.group = cert.delta_sqrt ? GaloisGroup::A3 : GaloisGroup::S3;

  if (opts.cross_check_trinomial && is_trinomial(f)) {
    if (classify_cubic_trinomial(f.coeff(1), f.coeff(0)) != report.group ||
        disc_cubic_trinomial(f.coeff(1), f.coeff(0)) != cert.delta)
      throw Error(Error::Kind::internal_invariant,
                  "trinomial cubic fast path disagrees with the general path");
  }
  return report;
}

ClassifyReport classify_quartic(const IntPoly& f, const ClassifyOptions& opts) {
  require_monic_irreducible_shape(f, 4, "classify_quartic");
  ClassifyReport report;
  report.certificate = base_certificate(f, opts);
  Certificate& cert = report.certificate;

  const Integer a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  QuarticAux aux = quartic_aux(a, b, c, d);
  cert.delta = aux.delta;
  reject_zero_delta(cert.delta);
  cert.delta_sqrt = is_perfect_square(cert.delta);
  cert.resolvent = aux.r3;

  const auto roots = integer_roots(aux.r3);
  const bool has_root = !roots.empty();
  if (has_root) cert.resolvent_root = roots.front();

  if (cert.delta_sqrt) {
    report.group = has_root ? GaloisGroup::V : GaloisGroup::A4;
  } else if (!has_root) {
    report.group = GaloisGroup::S4;
  } else {
    if (roots.size() > 1)
      report.warnings.push_back(
          "resolvent cubic has " + std::to_string(roots.size()) +
          " integer roots on the D8/C4 branch; theory predicts exactly one");
    const Integer& r = roots.front();
    auto [n1, n2] = kappe_warren_products(a, b, d, r, cert.delta);
    KappeWarrenEvidence kw;
    kw.n1 = n1;
    kw.n2 = n2;
    kw.n1_sqrt = is_perfect_square(n1);
    kw.n2_sqrt = is_perfect_square(n2);
    kw.both_square = kw.n1_sqrt && kw.n2_sqrt;
    cert.kappe_warren = kw;
    report.group = kw.both_square ? GaloisGroup::C4 : GaloisGroup::D8;
  }

  if (opts.cross_check_trinomial && is_trinomial(f)) {
    if (classify_quartic_trinomial(c, d) != report.group)
      throw Error(Error::Kind::internal_invariant,
                  "trinomial quartic fast path disagrees with the general path");
  }
  return report;
}

namespace {

// sigma scan outcome over every theta-matched ordering. The cyclic group is
// normal in the theta stabilizer, so for C5 every matched ordering yields an
// integer sigma; for D10 at least one matched ordering yields the genuinely
// irrational conjugate pair, even though other matched orderings can land on
// degenerate integer values.
struct SigmaDecision {
  bool is_c5 = false;
  ThetaMatch witness;
};

SigmaDecision decide_sigma(const std::vector<ThetaMatch>& matches, double tol_sigma) {
  auto int_distance = [](Complex z) {
    return std::max(std::abs(z.imag()), std::abs(z.real() - std::round(z.real())));
  };

  bool all_integral = true;
  std::vector<const ThetaMatch*> clear_non_integral;
  for (const auto& m : matches) {
    const double d = int_distance(m.sigma);
    if (d >= tol_sigma) {
      all_integral = false;
      if (d > 10 * tol_sigma) clear_non_integral.push_back(&m);
    }
  }

  SigmaDecision out;
  if (all_integral) {
    out.is_c5 = true;
    // canonical witness: lexicographically largest (Re, Im) of sigma
    out.witness = *std::max_element(matches.begin(), matches.end(),
                                    [](const ThetaMatch& x, const ThetaMatch& y) {
                                      auto kx = std::make_pair(x.sigma.real(), x.sigma.imag());
                                      auto ky = std::make_pair(y.sigma.real(), y.sigma.imag());
                                      return kx < ky;
                                    });
    return out;
  }
  if (clear_non_integral.empty())
    throw Error(Error::Kind::numeric_ambiguity,
                "sigma values fall between the integrality tolerance and its safety band; "
                "retry with a tighter residual target");
  out.is_c5 = false;
  // canonical witness: lexicographically smallest (Re, Im) of sigma
  out.witness = **std::min_element(clear_non_integral.begin(), clear_non_integral.end(),
                                   [](const ThetaMatch* x, const ThetaMatch* y) {
                                     auto kx = std::make_pair(x->sigma.real(), x->sigma.imag());
                                     auto ky = std::make_pair(y->sigma.real(), y->sigma.imag());
                                     return kx < ky;
                                   });
  return out;
}

}  // namespace

ClassifyReport classify_quintic(const IntPoly& f, const ClassifyOptions& opts) {
  require_monic_irreducible_shape(f, 5, "classify_quintic");
  if (f.coeff(4) != 0)
    throw Error(Error::Kind::internal_invariant,
                "classify_quintic expects a depressed quintic (zero x^4 term)");
  ClassifyReport report;
  report.certificate = base_certificate(f, opts);
  Certificate& cert = report.certificate;

  const Integer p = f.coeff(3), q = f.coeff(2), r = f.coeff(1), s = f.coeff(0);
  QuinticAux aux = quintic_aux(p, q, r, s);
  cert.delta = aux.delta;
  reject_zero_delta(cert.delta);
  cert.delta_sqrt = is_perfect_square(cert.delta);
  cert.resolvent = aux.r6;

  const auto roots = integer_roots(aux.r6);
  const bool has_root = !roots.empty();
  if (roots.size() > 1)
    report.warnings.push_back("resolvent sextic has " + std::to_string(roots.size()) +
                              " integer roots; theory predicts at most one linear factor");

  if (!cert.delta_sqrt) {
    report.group = has_root ? GaloisGroup::F20 : GaloisGroup::S5;
    if (has_root) cert.resolvent_root = roots.front();
  } else if (!has_root) {
    report.group = GaloisGroup::A5;
  } else {
    // D10 vs C5: order the numeric roots against the resolvent root and test
    // sigma integrality over every matched ordering.
    RootFindOptions ropts;
    ropts.max_iterations = opts.tol.max_iterations;
    ropts.residual_scale = opts.tol.residual_scale;
    ropts.pairing_scale = opts.tol.pairing_scale;
    RootSet rs = all_roots(f, ropts);

    std::vector<ThetaMatch> matches;
    Integer target = 0;
    for (const Integer& candidate : roots) {
      matches = theta_matches(rs, candidate, opts.tol.theta);
      if (!matches.empty()) {
        target = candidate;
        break;
      }
    }
    if (matches.empty())
      throw Error(Error::Kind::numeric_ambiguity,
                  "no ordering: no root ordering matches any resolvent root within tolerance");

    SigmaDecision decision = decide_sigma(matches, opts.tol.sigma);

    // Sanity invariant: the witness sigma pair is stable under the Galois
    // action, so its sum and product must be near integers before the
    // integrality of sigma itself is trusted.
    const Complex pair_sum = decision.witness.sigma + decision.witness.sigma_partner;
    const Complex pair_prod = decision.witness.sigma * decision.witness.sigma_partner;
    const double pair_tol =
        opts.tol.sigma * std::max({1.0, std::abs(pair_sum), std::abs(pair_prod)});
    if (!is_near_integer(pair_sum, pair_tol) || !is_near_integer(pair_prod, pair_tol))
      throw Error(Error::Kind::numeric_ambiguity,
                  "sigma pair invariants (sum/product integrality) failed; "
                  "root approximations are not trustworthy at this tolerance");

    cert.resolvent_root = target;
    ThetaOrdering ordering;
    ordering.perm = decision.witness.perm;
    ordering.theta_value = decision.witness.theta;
    ordering.target = target;
    ordering.mismatch = std::abs(decision.witness.theta - to_double_checked(target));
    cert.theta_ordering = ordering;
    cert.sigma1 = decision.witness.sigma;
    if (decision.is_c5) {
      report.group = GaloisGroup::C5;
      cert.sigma1_integer = is_near_integer(decision.witness.sigma, opts.tol.sigma);
    } else {
      report.group = GaloisGroup::D10;
    }
  }

  if (opts.cross_check_trinomial && is_trinomial(f)) {
    // The closed forms already cross-check inside quintic_aux; the decision
    // tree itself is shared, so only the exact inputs need agreement here.
    if (disc_quintic_trinomial(r, s) != cert.delta ||
        resolvent_sextic_trinomial(r, s) != aux.r6)
      throw Error(Error::Kind::internal_invariant,
                  "trinomial quintic fast path disagrees with the general path");
  }
  return report;
}

ClassifyReport classify(const IntPoly& f, const ClassifyOptions& opts) {
  if (f.degree() < 1 || f.degree() > 5)
    throw Error(Error::Kind::degree_out_of_range,
                "classification supports degrees 1 through 5, got degree " +
                    std::to_string(f.degree()));
  if (!f.is_monic())
    throw Error(Error::Kind::internal_invariant,
                "classify(IntPoly) expects a monic polynomial; normalize first");

  if (auto factor = find_factor(f))
    throw Error(Error::Kind::reducible_input,
                "reducible input: " + to_string(f) + " has factor " + to_string(*factor));

  switch (f.degree()) {
    case 1: {
      ClassifyReport report;
      report.group = GaloisGroup::C1;
      report.certificate = base_certificate(f, opts);
      report.certificate.delta = 1;  // empty product over zero root pairs
      report.certificate.delta_sqrt = 1;
      return report;
    }
    case 2: {
      ClassifyReport report;
      report.group = GaloisGroup::S2;
      report.certificate = base_certificate(f, opts);
      report.certificate.delta = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
      report.certificate.delta_sqrt = is_perfect_square(report.certificate.delta);
      if (report.certificate.delta_sqrt)
        throw Error(Error::Kind::internal_invariant,
                    "square discriminant on an irreducible quadratic");
      return report;
    }
    case 3:
      return classify_cubic(f, opts);
    case 4:
      return classify_quartic(f, opts);
    default: {
      DepressedQuintic dep = depress_quintic(f);
      ClassifyReport report = classify_quintic(dep.poly, opts);
      report.certificate.input = f;
      report.certificate.shift = dep.shift;
      return report;
    }
  }
}

ClassifyReport classify(const RatPoly& g, const ClassifyOptions& opts) {
  MonicIntegral normalized = normalize_to_monic_integral(g);
  ClassifyReport report = classify(normalized.poly, opts);
  report.certificate.lambda = normalized.lambda;
  return report;
}

}  // namespace galois
