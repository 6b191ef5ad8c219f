#include "orc/almost.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orc {

std::uint64_t AlmostNatural::at(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(s_->mu);
  auto& cache = s_->cache;
  while (cache.size() <= n) {
    const std::uint64_t k = cache.size();
    const std::uint64_t v = s_->rule(k);
    if (v > s_->cap)
      throw std::logic_error("almost natural: xi(" + std::to_string(k) +
                             ")=" + std::to_string(v) + " exceeds cap " +
                             std::to_string(s_->cap));
    if (k > 0 && v < cache.back())
      throw std::logic_error("almost natural: xi(" + std::to_string(k) +
                             ") decreases");
    cache.push_back(v);
  }
  return cache[n];
}

AlmostRational::AlmostRational(Rule rule, std::vector<Rational> value_set)
    : s_(std::make_shared<State>()) {
  if (value_set.empty())
    throw std::invalid_argument("almost rational: empty value set");
  if (!std::is_sorted(value_set.begin(), value_set.end()))
    throw std::invalid_argument("almost rational: value set not ascending");
  s_->rule = std::move(rule);
  s_->values = std::move(value_set);
}

Rational AlmostRational::at(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(s_->mu);
  auto& cache = s_->cache;
  while (cache.size() <= n) {
    const std::uint64_t k = cache.size();
    Rational v = s_->rule(k);
    if (!std::binary_search(s_->values.begin(), s_->values.end(), v))
      throw std::logic_error("almost rational: zeta(" + std::to_string(k) +
                             ")=" + v.str() + " outside the value set");
    if (k > 0 && v < cache.back())
      throw std::logic_error("almost rational: zeta(" + std::to_string(k) +
                             ") decreases");
    cache.push_back(std::move(v));
  }
  return cache[n];
}

Trilean an_le(const AlmostNatural& xi, const AlmostNatural& nu,
              std::uint64_t fuel) {
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (nu.at(n) >= xi.cap()) return Trilean::confirmed();
    if (xi.at(n) > nu.cap()) return Trilean::refuted();
  }
  return Trilean::unknown(fuel);
}

Trilean an_eq(const AlmostNatural& xi, const AlmostNatural& nu,
              std::uint64_t fuel) {
  return tri_and(an_le(xi, nu, fuel), an_le(nu, xi, fuel));
}

StabilizationResult stabilization_probe(const AlmostNatural& xi,
                                        std::uint64_t fuel) {
  std::uint64_t last = xi.at(0);
  std::uint64_t since = 0;
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    const std::uint64_t v = xi.at(n);
    if (v != last) {
      last = v;
      since = n;
    }
    if (v == xi.cap())
      return StabilizationResult{v, since, Trilean::confirmed()};
  }
  return StabilizationResult{last, since, Trilean::unknown(fuel)};
}

AlmostNatural threshold_phi(const std::vector<Rational>& thresholds,
                            const OrientedReal& beta) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end(),
                      [](const Rational& a, const Rational& b) {
                        return a <= b;  // rejects ties as well
                      }))
    throw std::invalid_argument(
        "threshold_phi: thresholds must be strictly ascending");
  const std::uint64_t j = thresholds.size();
  return AlmostNatural(
      [thresholds, beta](std::uint64_t n) -> std::uint64_t {
        if (n == 0) return 0;
        const Rational v = beta.at(n);
        std::uint64_t level = 0;
        for (std::uint64_t i = 0; i < thresholds.size(); ++i) {
          if (thresholds[i] <= v) level = i + 1;
        }
        return level;
      },
      j);
}

Trilean ar_le(const AlmostRational& z1, const AlmostRational& z2,
              std::uint64_t fuel) {
  for (std::uint64_t n = 0; n <= fuel; ++n) {
    if (z2.at(n) >= z1.max_value()) return Trilean::confirmed();
    if (z1.at(n) > z2.max_value()) return Trilean::refuted();
  }
  return Trilean::unknown(fuel);
}

Trilean ar_eq(const AlmostRational& z1, const AlmostRational& z2,
              std::uint64_t fuel) {
  return tri_and(ar_le(z1, z2, fuel), ar_le(z2, z1, fuel));
}

OrientedReal ar_embed(const AlmostRational& z) {
  const Rational top = z.max_value();
  return OrientedReal(
      [z](std::uint64_t n) {
        return z.at(n) - Rational(Integer(1), Integer(n) + 1);
      },
      top, [top](std::uint64_t) { return top; });
}

AlmostRational ar_pointwise_min(const AlmostRational& a,
                                const AlmostRational& b) {
  std::vector<Rational> merged;
  merged.reserve(a.value_set().size() + b.value_set().size());
  std::merge(a.value_set().begin(), a.value_set().end(),
             b.value_set().begin(), b.value_set().end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return AlmostRational(
      [a, b](std::uint64_t n) { return rat_min(a.at(n), b.at(n)); },
      std::move(merged));
}

AlmostRational ar_shift(const AlmostRational& z, const Rational& r) {
  std::vector<Rational> values;
  values.reserve(z.value_set().size());
  for (const Rational& v : z.value_set()) values.push_back(v + r);
  return AlmostRational([z, r](std::uint64_t n) { return z.at(n) + r; },
                        std::move(values));
}

}  // namespace orc
