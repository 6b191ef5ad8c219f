// Oriented reals: lazily evaluated strictly increasing bounded rational
// sequences, each one standing for a left Dedekind cut, plus the fuel-bounded
// order calculus on them.
//
// A value is a pure index rule n -> Rational together with a declared strict
// upper bound M (every sample stays below M). An optional nonincreasing
// upper co-sequence refines the bound from above; two-sided data of this kind
// is what makes negation and tight metric verdicts possible. Samples are
// memoized and the sequence invariants are validated exactly once per index.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orc/rational.hpp"
#include "orc/trilean.hpp"

namespace orc {

// A rule that violates strict increase or the declared bound is a broken
// constructor, not a recoverable state.
struct MalformedRealError : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnsupportedOperationError : std::logic_error {
  using std::logic_error::logic_error;
};

using IndexRule = std::function<Rational(std::uint64_t)>;

class OrientedReal {
 public:
  OrientedReal(IndexRule rule, Rational strict_bound,
               std::optional<IndexRule> upper_rule = std::nullopt,
               std::optional<Rational> exact = std::nullopt)
      : s_(std::make_shared<State>()) {
    s_->rule = std::move(rule);
    s_->bound = std::move(strict_bound);
    s_->upper = std::move(upper_rule);
    s_->exact = std::move(exact);
  }

  // alpha(n); validates the invariants over the newly evaluated prefix.
  Rational at(std::uint64_t n) const;

  // upper_rule(n); only callable when a co-sequence is present.
  Rational upper_at(std::uint64_t n) const;

  bool has_upper() const { return s_->upper.has_value(); }
  const Rational& strict_bound() const { return s_->bound; }

  // Set when the cut is known to be exactly {q in Q : q < r}; carried by
  // rational embeddings and propagated through the arithmetic constructors.
  const std::optional<Rational>& exact_rational() const { return s_->exact; }

  // Shared-origin certificate: copies of one construction are one value.
  bool same_origin(const OrientedReal& other) const { return s_ == other.s_; }

  // Best sampled strict upper bound for the whole sequence: any single
  // sample of the nonincreasing co-sequence bounds every alpha(n).
  Rational tight_upper(std::uint64_t fuel) const {
    if (!has_upper()) return s_->bound;
    return rat_min(s_->bound, upper_at(fuel));
  }

 private:
  struct State {
    IndexRule rule;
    Rational bound;
    std::optional<IndexRule> upper;
    std::optional<Rational> exact;
    mutable std::vector<Rational> lower_cache;
    mutable std::vector<Rational> upper_cache;
    mutable std::mutex mu;
  };

  std::shared_ptr<State> s_;
};

// q-hat: n -> q - 1/(n+1), bound q, constant upper co-sequence q.
OrientedReal embed_rational(const Rational& q);

// Lemma-style cut of an upper bounded (not necessarily monotone) sequence:
// alpha(n) = max{gamma(0..n)} - 1/(n+1). The bound is validated lazily.
OrientedReal cut_from_bounded_sequence(IndexRule gamma, Rational strict_bound);

// gamma(n) = min(alpha(n), beta(n)); specifies the cut A_alpha and A_beta.
OrientedReal cut_intersection(const OrientedReal& a, const OrientedReal& b);

// Pointwise translation alpha + r.
OrientedReal shift(const OrientedReal& a, const Rational& r);

// q < alpha: exists n (q < alpha(n)). Searches indices 0..fuel; refutes via
// the declared bound or a sampled upper co-sequence value.
Trilean lt_rational(const Rational& q, const OrientedReal& a,
                    std::uint64_t fuel);

// alpha <= q: forall n (alpha(n) < q). Confirmable only through bound or
// co-sequence shortcuts; refutable by a sampled counterexample.
Trilean le_rational(const OrientedReal& a, const Rational& q,
                    std::uint64_t fuel);

// alpha < beta: exists n forall m (alpha(m) < beta(n)).
Trilean lt(const OrientedReal& a, const OrientedReal& b, std::uint64_t fuel);

// alpha <= beta: forall m exists n (alpha(m) < beta(n)).
Trilean le(const OrientedReal& a, const OrientedReal& b, std::uint64_t fuel);

// alpha =o beta: (alpha <= beta) and (beta <= alpha), with shared-origin and
// exact-rational certificates supplying the only positive confirmations that
// do not route through lt.
Trilean eq_o(const OrientedReal& a, const OrientedReal& b, std::uint64_t fuel);

}  // namespace orc
