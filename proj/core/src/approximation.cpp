#include "orc/approximation.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace orc {

namespace {
constexpr std::size_t kValueSetLimit = 1u << 21;
constexpr std::uint64_t kSpotCheckDepth = 8;
}  // namespace

AlmostRational approximate(const OrientedReal& beta, std::uint64_t n) {
  const Rational step = pow2_inverse(n);
  const Rational base = beta.at(0);

  std::vector<Rational> values;
  for (Rational v = base; v < beta.strict_bound(); v += step) {
    values.push_back(v);
    if (values.size() > kValueSetLimit)
      throw std::length_error(
          "approximate: value set too large; bound is too loose for "
          "resolution 2^-" +
          std::to_string(n));
  }

  auto cache = std::make_shared<std::vector<Rational>>();
  auto mu = std::make_shared<std::mutex>();
  return AlmostRational(
      [beta, step, cache, mu](std::uint64_t k) {
        std::lock_guard<std::mutex> lock(*mu);
        while (cache->size() <= k) {
          const std::uint64_t i = cache->size();
          if (i == 0) {
            cache->push_back(beta.at(0));
            continue;
          }
          const Rational& prev = cache->back();
          Rational t(grid_floor(beta.at(i) - prev, step));
          cache->push_back(prev + step * t);
        }
        return (*cache)[k];
      },
      std::move(values));
}

OrientedReal sup_enumerated(IndexRule gamma, Rational strict_bound) {
  return cut_from_bounded_sequence(std::move(gamma), std::move(strict_bound));
}

OrientedReal inf_finite(const std::vector<Rational>& values) {
  if (values.empty())
    throw std::invalid_argument("inf_finite: empty set has no infimum");
  return embed_rational(*std::min_element(values.begin(), values.end()));
}

OrientedReal monotone_limit(RealSequence seq, const Rational& bound,
                            std::uint64_t fuel) {
  auto cache = std::make_shared<std::vector<OrientedReal>>();
  auto mu = std::make_shared<std::mutex>();
  auto member = [seq = std::move(seq), cache, mu,
                 bound](std::uint64_t i) -> OrientedReal {
    std::lock_guard<std::mutex> lock(*mu);
    while (cache->size() <= i) {
      OrientedReal next = seq(cache->size());
      if (!(next.strict_bound() <= bound))
        throw std::invalid_argument(
            "monotone_limit: member " + std::to_string(cache->size()) +
            " has strict bound " + next.strict_bound().str() +
            " above the declared limit bound " + bound.str());
      cache->push_back(std::move(next));
    }
    return (*cache)[i];
  };

  for (std::uint64_t i = 0; i < kSpotCheckDepth; ++i) {
    if (le(member(i), member(i + 1), fuel).is_refuted())
      throw std::invalid_argument(
          "monotone_limit: sequence decreases between indices " +
          std::to_string(i) + " and " + std::to_string(i + 1));
  }

  // Diagonal cache: entry k holds max{member(i)(j) : i,j <= k}. Each member
  // is strictly increasing in j, so extending the square from k-1 to k only
  // needs the column member(i)(k) for i <= k.
  auto diag = std::make_shared<std::vector<Rational>>();
  auto diag_mu = std::make_shared<std::mutex>();
  return OrientedReal(
      [member, diag, diag_mu](std::uint64_t k) {
        std::lock_guard<std::mutex> lock(*diag_mu);
        while (diag->size() <= k) {
          const std::uint64_t i = diag->size();
          Rational best = i == 0 ? member(0).at(0) : diag->back();
          for (std::uint64_t m = 0; m <= i; ++m)
            best = rat_max(best, member(m).at(i));
          diag->push_back(best);
        }
        return (*diag)[k] - Rational(Integer(1), Integer(k) + 1);
      },
      bound);
}

}  // namespace orc
