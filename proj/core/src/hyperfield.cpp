#include "orc/hyperfield.hpp"

#include <stdexcept>

namespace orc {

GridProbe::GridProbe(Rational lo_, Rational hi_, Rational step_)
    : lo(std::move(lo_)), hi(std::move(hi_)), step(std::move(step_)) {
  if (!(lo < hi)) throw std::invalid_argument("GridProbe: lo must be < hi");
  if (!step.is_positive())
    throw std::invalid_argument("GridProbe: step must be positive");
  if (grid_floor(hi - lo, step) < 2)
    throw std::invalid_argument("GridProbe: span must cover >= 2 cells");
}

std::vector<Rational> GridProbe::points() const {
  std::vector<Rational> out;
  for (Rational q = lo; q <= hi; q += step) out.push_back(q);
  return out;
}

Trilean psi_member(const Rational& r, const OrientedReal& a,
                   std::uint64_t fuel) {
  if (a.exact_rational())
    return r < *a.exact_rational() ? Trilean::confirmed() : Trilean::refuted();
  if (r >= a.strict_bound()) return Trilean::refuted();
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    // alpha(n) > r gives the witness s = (r + alpha(n))/2.
    if (a.at(n) > r) return Trilean::confirmed();
  }
  if (a.has_upper() && r >= a.upper_at(fuel)) return Trilean::refuted();
  return Trilean::unknown(fuel);
}

OrientedReal add(const OrientedReal& a, const OrientedReal& b) {
  std::optional<IndexRule> upper;
  if (a.has_upper() || b.has_upper()) {
    upper = [a, b](std::uint64_t n) {
      const Rational ua = a.has_upper() ? a.upper_at(n) : a.strict_bound();
      const Rational ub = b.has_upper() ? b.upper_at(n) : b.strict_bound();
      return ua + ub;
    };
  }
  std::optional<Rational> exact;
  if (a.exact_rational() && b.exact_rational())
    exact = *a.exact_rational() + *b.exact_rational();
  return OrientedReal([a, b](std::uint64_t n) { return a.at(n) + b.at(n); },
                      a.strict_bound() + b.strict_bound(), std::move(upper),
                      std::move(exact));
}

OrientedReal mul_positive(const OrientedReal& a, const OrientedReal& b) {
  if (a.at(0).is_negative() || b.at(0).is_negative())
    throw std::invalid_argument(
        "mul_positive: both operands must start nonnegative; general "
        "multiplication needs two-sided sign data");
  std::optional<IndexRule> upper;
  if (a.has_upper() || b.has_upper()) {
    upper = [a, b](std::uint64_t n) {
      const Rational ua = a.has_upper() ? a.upper_at(n) : a.strict_bound();
      const Rational ub = b.has_upper() ? b.upper_at(n) : b.strict_bound();
      return ua * ub;
    };
  }
  std::optional<Rational> exact;
  if (a.exact_rational() && b.exact_rational())
    exact = *a.exact_rational() * *b.exact_rational();
  return OrientedReal([a, b](std::uint64_t n) { return a.at(n) * b.at(n); },
                      a.strict_bound() * b.strict_bound(), std::move(upper),
                      std::move(exact));
}

OrientedReal neg_twosided(const OrientedReal& a) {
  if (!a.has_upper())
    throw UnsupportedOperationError(
        "neg_twosided: requires an upper co-sequence (two-sided data)");
  // Spot-check that the two-sided gap does not widen.
  Rational gap = a.upper_at(0) - a.at(0);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    Rational next = a.upper_at(n) - a.at(n);
    if (next > gap)
      throw std::invalid_argument(
          "neg_twosided: two-sided gap widens at index " + std::to_string(n));
    gap = std::move(next);
  }
  // The exact-rational tag is not propagated: it would require knowing that
  // the co-sequence converges to the tagged value, which is not tracked.
  return OrientedReal(
      [a](std::uint64_t n) {
        return -a.upper_at(n) - Rational(Integer(1), Integer(n) + 1);
      },
      -a.at(0) + Rational(1),
      [a](std::uint64_t n) { return -a.at(n); });
}

namespace {

// Membership of q in {r : exists members q1 of A_alpha, q2 of A_beta with
// r < q1 + q2}; the sampled points alpha(n), beta(n) are themselves members.
Trilean sum_cut_member(const Rational& q, const OrientedReal& a,
                       const OrientedReal& b, std::uint64_t fuel) {
  if (a.exact_rational() && b.exact_rational())
    return q < *a.exact_rational() + *b.exact_rational()
               ? Trilean::confirmed()
               : Trilean::refuted();
  if (q >= a.strict_bound() + b.strict_bound()) return Trilean::refuted();
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (q < a.at(n) + b.at(n)) return Trilean::confirmed();
  }
  if (q >= a.tight_upper(fuel) + b.tight_upper(fuel))
    return Trilean::refuted();
  return Trilean::unknown(fuel);
}

// Positive-cone product cut; operands are assumed to start nonnegative so
// the sampled products are built from nonnegative members.
Trilean prod_cut_member(const Rational& q, const OrientedReal& a,
                        const OrientedReal& b, std::uint64_t fuel) {
  if (a.exact_rational() && b.exact_rational())
    return q < *a.exact_rational() * *b.exact_rational()
               ? Trilean::confirmed()
               : Trilean::refuted();
  if (q >= a.strict_bound() * b.strict_bound()) return Trilean::refuted();
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (q < a.at(n) * b.at(n)) return Trilean::confirmed();
  }
  if (q >= a.tight_upper(fuel) * b.tight_upper(fuel))
    return Trilean::refuted();
  return Trilean::unknown(fuel);
}

template <typename CutMember>
RelationCheck check_relation(const OrientedReal& a, const OrientedReal& b,
                             const OrientedReal& c, const GridProbe& probe,
                             std::uint64_t fuel, CutMember&& member) {
  RelationCheck report;
  for (const Rational& q : probe.points()) {
    ++report.cells_checked;
    const Trilean lhs = member(q, a, b, fuel);
    const Trilean rhs = psi_member(q, c, fuel);
    if ((lhs.is_confirmed() && rhs.is_refuted()) ||
        (lhs.is_refuted() && rhs.is_confirmed())) {
      report.verdict = Trilean::refuted();
      report.separating_point = q;
      return report;
    }
  }
  report.verdict = Trilean::unknown(fuel);
  return report;
}

}  // namespace

RelationCheck check_add(const OrientedReal& a, const OrientedReal& b,
                        const OrientedReal& c, const GridProbe& probe,
                        std::uint64_t fuel) {
  return check_relation(a, b, c, probe, fuel, sum_cut_member);
}

RelationCheck check_mul(const OrientedReal& a, const OrientedReal& b,
                        const OrientedReal& c, const GridProbe& probe,
                        std::uint64_t fuel) {
  if (a.at(0).is_negative() || b.at(0).is_negative())
    throw std::invalid_argument(
        "check_mul: probe is restricted to the positive cone");
  return check_relation(a, b, c, probe, fuel, prod_cut_member);
}

}  // namespace orc
