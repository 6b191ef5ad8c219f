// Almost natural and almost rational numbers: nondecreasing capped sequences
// serving as the constructive witness codomains, plus the threshold map Phi
// from oriented reals to almost naturals.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"
#include "orc/trilean.hpp"

namespace orc {

class AlmostNatural {
 public:
  using Rule = std::function<std::uint64_t(std::uint64_t)>;

  AlmostNatural(Rule rule, std::uint64_t cap) : s_(std::make_shared<State>()) {
    s_->rule = std::move(rule);
    s_->cap = cap;
  }

  static AlmostNatural constant(std::uint64_t v) {
    return AlmostNatural([v](std::uint64_t) { return v; }, v);
  }

  // xi(n); validates nondecrease and the cap over the new prefix.
  std::uint64_t at(std::uint64_t n) const;
  std::uint64_t cap() const { return s_->cap; }

 private:
  struct State {
    Rule rule;
    std::uint64_t cap = 0;
    mutable std::vector<std::uint64_t> cache;
    mutable std::mutex mu;
  };
  std::shared_ptr<State> s_;
};

class AlmostRational {
 public:
  using Rule = std::function<Rational(std::uint64_t)>;

  // value_set must be ascending and contain the whole image of the rule.
  AlmostRational(Rule rule, std::vector<Rational> value_set);

  static AlmostRational constant(const Rational& v) {
    return AlmostRational([v](std::uint64_t) { return v; }, {v});
  }

  Rational at(std::uint64_t n) const;
  const std::vector<Rational>& value_set() const { return s_->values; }
  const Rational& max_value() const { return s_->values.back(); }

 private:
  struct State {
    Rule rule;
    std::vector<Rational> values;
    mutable std::vector<Rational> cache;
    mutable std::mutex mu;
  };
  std::shared_ptr<State> s_;
};

// xi <= nu: forall m exists n (xi(m) <= nu(n)). The cap makes the forall
// vacuous once the other side reaches it.
Trilean an_le(const AlmostNatural& xi, const AlmostNatural& nu,
              std::uint64_t fuel);
Trilean an_eq(const AlmostNatural& xi, const AlmostNatural& nu,
              std::uint64_t fuel);

struct StabilizationResult {
  std::uint64_t limit;
  std::uint64_t since_index;
  Trilean verdict;
};

// Positive surrogate of the (double-negated) stabilization lemma: Confirmed
// exactly when the cap is attained within fuel, otherwise the last observed
// value is reported as a candidate.
StabilizationResult stabilization_probe(const AlmostNatural& xi,
                                        std::uint64_t fuel);

// A non-constant total level map: Phi(beta)(0)=0 and
// Phi(beta)(n) = max({i | i<=j, d_i <= beta(n)} u {0}) for n>=1; cap j.
AlmostNatural threshold_phi(const std::vector<Rational>& thresholds,
                            const OrientedReal& beta);

Trilean ar_le(const AlmostRational& z1, const AlmostRational& z2,
              std::uint64_t fuel);
Trilean ar_eq(const AlmostRational& z1, const AlmostRational& z2,
              std::uint64_t fuel);

// zeta-hat: n -> zeta(n) - 1/(n+1), bound max(value_set), constant upper
// co-sequence at the same maximum.
OrientedReal ar_embed(const AlmostRational& z);

// Pointwise minimum; value set is the merged union. Used by the semi-metric
// triangle composition.
AlmostRational ar_pointwise_min(const AlmostRational& a,
                                const AlmostRational& b);

// Pointwise translation zeta + r.
AlmostRational ar_shift(const AlmostRational& z, const Rational& r);

}  // namespace orc
