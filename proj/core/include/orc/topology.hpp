// The semi-metric d on oriented reals, the ordinary (metric) balls, and the
// oriented topology's finite-signature neighborhoods.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orc/almost.hpp"
#include "orc/approximation.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"
#include "orc/trilean.hpp"

namespace orc {

// Witness that d(alpha, beta, q) holds: an almost rational zeta and p <= q
// with zeta-hat <= alpha, beta <= zeta-hat + p.
struct MetricWitness {
  AlmostRational zeta;
  Rational p;
};

struct DResult {
  Trilean verdict = Trilean::unknown(0);
  std::optional<MetricWitness> witness;
};

// d(alpha, beta, q): "the distance of alpha from beta is below q".
// Confirmation runs the approximation strategy: zeta is the pointwise min of
// the two grid approximations, the sandwich is checked on a prefix, and the
// universal halves are discharged through the declared bounds / co-sequences.
// Refutation finds a separating rational: alpha <= r while r + q < beta
// (or symmetrically).
DResult d_check(const OrientedReal& a, const OrientedReal& b,
                const Rational& q, std::uint64_t fuel);

// Checks that a claimed witness actually certifies d(alpha, beta, p).
bool witness_valid(const OrientedReal& a, const OrientedReal& b,
                   const MetricWitness& w, std::uint64_t fuel);

// S_p(center) membership; alias of the d verdict.
Trilean ball_member(const OrientedReal& x, const OrientedReal& center,
                    const Rational& p, std::uint64_t fuel);

// The finite fingerprint L_alpha restricted to E: one lt verdict per entry.
struct Signature {
  std::vector<Trilean> entries;

  bool decided() const {
    for (const Trilean& t : entries)
      if (t.is_unknown()) return false;
    return true;
  }
  // Serialized over {C,R,U}, e.g. "CRR".
  std::string str() const {
    std::string s;
    s.reserve(entries.size());
    for (const Trilean& t : entries) s.push_back(t.code());
    return s;
  }
};

Signature lt_signature(const OrientedReal& a,
                       const std::vector<OrientedReal>& reference,
                       std::uint64_t fuel);

// beta in S_E(alpha): the two signatures are decided and equal. A decided
// disagreement refutes; any Unknown entry is contagious.
Trilean oriented_nbhd_member(const OrientedReal& b, const OrientedReal& a,
                             const std::vector<OrientedReal>& reference,
                             std::uint64_t fuel);

// beta in (lo, hi]: conjunction of lo < beta and beta <= hi.
Trilean interval_open_member(const OrientedReal& b, const Rational& lo,
                             const Rational& hi, std::uint64_t fuel);

}  // namespace orc
