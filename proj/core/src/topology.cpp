#include "orc/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace orc {

namespace {

// Sandwich-verification prefix; the universal statements themselves are
// discharged through bounds, not by sampling.
constexpr std::uint64_t kPrefixCap = 128;

// Grid resolution for the approximation witness: the finest of "twice below
// q" and a fixed floor, so that verdicts are monotone in q over the practical
// range (the same grid serves every q above 2^-7).
std::uint64_t witness_resolution(const Rational& q) {
  std::uint64_t k = 0;
  while (Rational(2) * pow2_inverse(k) >= q) ++k;
  return std::max<std::uint64_t>(k, 8);
}

}  // namespace

DResult d_check(const OrientedReal& a, const OrientedReal& b,
                const Rational& q, std::uint64_t fuel) {
  if (!q.is_positive())
    throw std::invalid_argument("d_check: q must be positive");

  // Confirmation: pointwise-min approximation witness.
  const std::uint64_t k = witness_resolution(q);
  const AlmostRational zeta =
      ar_pointwise_min(approximate(a, k), approximate(b, k));
  const std::uint64_t prefix = std::min(fuel, kPrefixCap);
  bool sandwich = true;
  for (std::uint64_t j = 0; j <= prefix && sandwich; ++j) {
    const Rational z = zeta.at(j);
    sandwich = z <= a.at(j) && z <= b.at(j) && a.at(j) < z + q &&
               b.at(j) < z + q;
  }
  if (sandwich) {
    const Rational tail =
        zeta.at(fuel) - Rational(Integer(1), Integer(fuel) + 1) + q;
    if (a.tight_upper(fuel) <= tail && b.tight_upper(fuel) <= tail)
      return DResult{Trilean::confirmed(), MetricWitness{zeta, q}};
  }

  // Refutation: a separating rational r with alpha <= r and r + q < beta
  // (and symmetrically). The best candidate for r is the tightest sampled
  // upper bound.
  if (lt_rational(a.tight_upper(fuel) + q, b, fuel).is_confirmed())
    return DResult{Trilean::refuted(), std::nullopt};
  if (lt_rational(b.tight_upper(fuel) + q, a, fuel).is_confirmed())
    return DResult{Trilean::refuted(), std::nullopt};

  return DResult{Trilean::unknown(fuel), std::nullopt};
}

bool witness_valid(const OrientedReal& a, const OrientedReal& b,
                   const MetricWitness& w, std::uint64_t fuel) {
  if (!w.p.is_positive()) return false;
  const std::uint64_t prefix = std::min(fuel, kPrefixCap);
  for (std::uint64_t j = 0; j <= prefix; ++j) {
    const Rational z = w.zeta.at(j);
    if (!(z <= a.at(j) && z <= b.at(j))) return false;
  }
  const Rational tail =
      w.zeta.at(fuel) - Rational(Integer(1), Integer(fuel) + 1) + w.p;
  return a.tight_upper(fuel) <= tail && b.tight_upper(fuel) <= tail;
}

Trilean ball_member(const OrientedReal& x, const OrientedReal& center,
                    const Rational& p, std::uint64_t fuel) {
  return d_check(center, x, p, fuel).verdict;
}

Signature lt_signature(const OrientedReal& a,
                       const std::vector<OrientedReal>& reference,
                       std::uint64_t fuel) {
  Signature sig;
  sig.entries.reserve(reference.size());
  for (const OrientedReal& ref : reference)
    sig.entries.push_back(lt(ref, a, fuel));
  return sig;
}

Trilean oriented_nbhd_member(const OrientedReal& b, const OrientedReal& a,
                             const std::vector<OrientedReal>& reference,
                             std::uint64_t fuel) {
  const Signature sa = lt_signature(a, reference, fuel);
  const Signature sb = lt_signature(b, reference, fuel);
  bool all_decided = true;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const Trilean& ta = sa.entries[i];
    const Trilean& tb = sb.entries[i];
    if (ta.decided() && tb.decided() && !(ta == tb)) return Trilean::refuted();
    all_decided = all_decided && ta.decided() && tb.decided();
  }
  return all_decided ? Trilean::confirmed() : Trilean::unknown(fuel);
}

Trilean interval_open_member(const OrientedReal& b, const Rational& lo,
                             const Rational& hi, std::uint64_t fuel) {
  if (!(lo < hi))
    throw std::invalid_argument("interval_open_member: requires lo < hi");
  return tri_and(lt_rational(lo, b, fuel), le_rational(b, hi, fuel));
}

}  // namespace orc
