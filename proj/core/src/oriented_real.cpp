#include "orc/oriented_real.hpp"

namespace orc {

Rational OrientedReal::at(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(s_->mu);
  auto& cache = s_->lower_cache;
  while (cache.size() <= n) {
    const std::uint64_t k = cache.size();
    Rational v = s_->rule(k);
    if (!(v < s_->bound))
      throw MalformedRealError("oriented real: alpha(" + std::to_string(k) +
                               ")=" + v.str() + " breaches strict bound " +
                               s_->bound.str());
    if (k > 0 && !(cache.back() < v))
      throw MalformedRealError("oriented real: alpha(" + std::to_string(k) +
                               ")=" + v.str() + " does not strictly increase");
    if (s_->upper && k < s_->upper_cache.size() && !(v < s_->upper_cache[k]))
      throw MalformedRealError("oriented real: alpha(" + std::to_string(k) +
                               ") meets its upper co-sequence");
    cache.push_back(std::move(v));
  }
  return cache[n];
}

Rational OrientedReal::upper_at(std::uint64_t n) const {
  if (!s_->upper)
    throw UnsupportedOperationError(
        "oriented real: no upper co-sequence present");
  std::lock_guard<std::mutex> lock(s_->mu);
  auto& cache = s_->upper_cache;
  while (cache.size() <= n) {
    const std::uint64_t k = cache.size();
    Rational v = (*s_->upper)(k);
    if (k > 0 && !(v <= cache.back()))
      throw MalformedRealError("oriented real: upper(" + std::to_string(k) +
                               ") is not nonincreasing");
    if (k < s_->lower_cache.size() && !(s_->lower_cache[k] < v))
      throw MalformedRealError("oriented real: alpha(" + std::to_string(k) +
                               ") meets its upper co-sequence");
    cache.push_back(std::move(v));
  }
  return cache[n];
}

OrientedReal embed_rational(const Rational& q) {
  return OrientedReal(
      [q](std::uint64_t n) {
        return q - Rational(Integer(1), Integer(n) + 1);
      },
      q, [q](std::uint64_t) { return q; }, q);
}

OrientedReal cut_from_bounded_sequence(IndexRule gamma, Rational strict_bound) {
  // running_max is shared by the closure so each gamma(k) is taken once.
  auto running_max = std::make_shared<std::vector<Rational>>();
  auto mu = std::make_shared<std::mutex>();
  Rational bound = strict_bound;
  return OrientedReal(
      [gamma = std::move(gamma), running_max, mu,
       bound](std::uint64_t n) {
        std::lock_guard<std::mutex> lock(*mu);
        while (running_max->size() <= n) {
          const std::uint64_t k = running_max->size();
          Rational g = gamma(k);
          if (!(g < bound))
            throw MalformedRealError(
                "cut_from_bounded_sequence: gamma(" + std::to_string(k) +
                ")=" + g.str() + " breaches declared bound " + bound.str());
          running_max->push_back(
              k == 0 ? std::move(g) : rat_max(running_max->back(), g));
        }
        return (*running_max)[n] - Rational(Integer(1), Integer(n) + 1);
      },
      strict_bound);
}

OrientedReal cut_intersection(const OrientedReal& a, const OrientedReal& b) {
  std::optional<IndexRule> upper;
  if (a.has_upper() && b.has_upper()) {
    upper = [a, b](std::uint64_t n) {
      return rat_min(a.upper_at(n), b.upper_at(n));
    };
  } else if (a.has_upper()) {
    upper = [a](std::uint64_t n) { return a.upper_at(n); };
  } else if (b.has_upper()) {
    upper = [b](std::uint64_t n) { return b.upper_at(n); };
  }
  std::optional<Rational> exact;
  if (a.exact_rational() && b.exact_rational())
    exact = rat_min(*a.exact_rational(), *b.exact_rational());
  return OrientedReal(
      [a, b](std::uint64_t n) { return rat_min(a.at(n), b.at(n)); },
      rat_min(a.strict_bound(), b.strict_bound()), std::move(upper),
      std::move(exact));
}

OrientedReal shift(const OrientedReal& a, const Rational& r) {
  std::optional<IndexRule> upper;
  if (a.has_upper())
    upper = [a, r](std::uint64_t n) { return a.upper_at(n) + r; };
  std::optional<Rational> exact;
  if (a.exact_rational()) exact = *a.exact_rational() + r;
  return OrientedReal([a, r](std::uint64_t n) { return a.at(n) + r; },
                      a.strict_bound() + r, std::move(upper),
                      std::move(exact));
}

Trilean lt_rational(const Rational& q, const OrientedReal& a,
                    std::uint64_t fuel) {
  if (a.exact_rational())
    return q < *a.exact_rational() ? Trilean::confirmed() : Trilean::refuted();
  if (q >= a.strict_bound()) return Trilean::refuted();
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (q < a.at(n)) return Trilean::confirmed();
  }
  if (a.has_upper() && q >= a.upper_at(fuel)) return Trilean::refuted();
  return Trilean::unknown(fuel);
}

Trilean le_rational(const OrientedReal& a, const Rational& q,
                    std::uint64_t fuel) {
  if (a.exact_rational())
    return *a.exact_rational() <= q ? Trilean::confirmed()
                                    : Trilean::refuted();
  if (a.strict_bound() <= q) return Trilean::confirmed();
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (a.at(n) >= q) return Trilean::refuted();
    if (a.has_upper() && a.upper_at(n) <= q) return Trilean::confirmed();
  }
  return Trilean::unknown(fuel);
}

Trilean lt(const OrientedReal& a, const OrientedReal& b, std::uint64_t fuel) {
  if (a.exact_rational() && b.exact_rational())
    return *a.exact_rational() < *b.exact_rational() ? Trilean::confirmed()
                                                     : Trilean::refuted();
  const Rational ua = a.tight_upper(fuel);
  const Rational ub = b.tight_upper(fuel);
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    // beta(n) >= every alpha(m): confirmation.
    if (b.at(n) >= ua) return Trilean::confirmed();
    // alpha(n) >= every beta(m): no witness index can ever work.
    if (a.at(n) >= ub) return Trilean::refuted();
  }
  return Trilean::unknown(fuel);
}

Trilean le(const OrientedReal& a, const OrientedReal& b, std::uint64_t fuel) {
  if (a.same_origin(b)) return Trilean::confirmed();
  if (a.exact_rational() && b.exact_rational())
    return *a.exact_rational() <= *b.exact_rational() ? Trilean::confirmed()
                                                      : Trilean::refuted();
  const Rational ub = b.tight_upper(fuel);
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (a.at(n) >= ub) return Trilean::refuted();
  }
  Trilean strict = lt(a, b, fuel);
  if (strict.is_confirmed()) return strict;
  return Trilean::unknown(fuel);
}

Trilean eq_o(const OrientedReal& a, const OrientedReal& b,
             std::uint64_t fuel) {
  if (a.same_origin(b)) return Trilean::confirmed();
  if (a.exact_rational() && b.exact_rational())
    return *a.exact_rational() == *b.exact_rational() ? Trilean::confirmed()
                                                      : Trilean::refuted();
  return tri_and(le(a, b, fuel), le(b, a, fuel));
}

}  // namespace orc
