// Hyperfield arithmetic on oriented reals: the Psi membership probe, the
// pointwise constructors for the + and * relations, and the grid verifiers.
//
// Addition and multiplication are relations, not functions; the constructors
// here realize one canonical representative and the check_* verifiers probe
// the relation itself on a rational grid. Cut equality is only refutable from
// finite evidence, so the verifiers never return Confirmed.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"
#include "orc/trilean.hpp"

namespace orc {

// Rational test grid for cut-level relation checks.
struct GridProbe {
  Rational lo;
  Rational hi;
  Rational step;

  GridProbe(Rational lo_, Rational hi_, Rational step_);

  std::vector<Rational> points() const;
};

// r in Psi(alpha): exists s > r with s in A_alpha. The inner double-negated
// existence is realized as plain search (the strong-monotonicity route).
Trilean psi_member(const Rational& r, const OrientedReal& a,
                   std::uint64_t fuel);

// Canonical sum: gamma(n) = alpha(n) + beta(n).
OrientedReal add(const OrientedReal& a, const OrientedReal& b);

// Canonical product on the positive cone; requires alpha(0), beta(0) >= 0.
OrientedReal mul_positive(const OrientedReal& a, const OrientedReal& b);

// Negation needs two-sided data: rule n -> -upper(n) - 1/(n+1) with upper
// co-sequence n -> -alpha(n).
OrientedReal neg_twosided(const OrientedReal& a);

struct RelationCheck {
  Trilean verdict = Trilean::unknown(0);
  std::size_t cells_checked = 0;
  // Grid rational whose membership verdicts separated, when Refuted.
  std::optional<Rational> separating_point;
};

// Probes +(alpha, beta, gamma) by comparing, per grid rational, membership in
// the sum cut against psi_member on gamma. A decided disagreement refutes.
RelationCheck check_add(const OrientedReal& a, const OrientedReal& b,
                        const OrientedReal& c, const GridProbe& probe,
                        std::uint64_t fuel);

// Same for *(alpha, beta, gamma) on the positive cone.
RelationCheck check_mul(const OrientedReal& a, const OrientedReal& b,
                        const OrientedReal& c, const GridProbe& probe,
                        std::uint64_t fuel);

}  // namespace orc
