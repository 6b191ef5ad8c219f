// Approximation of oriented reals by almost rationals, suprema of enumerated
// bounded sets, finite infima, and monotone limits.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "orc/almost.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"

namespace orc {

// The grid approximation zeta at resolution 2^-n:
//   zeta(0) = beta(0),
//   zeta(k+1) = zeta(k) + 2^-n * grid_floor(beta(k+1) - zeta(k), 2^-n),
// with value set {beta(0) + 2^-n t : value < strict_bound(beta)}.
// Satisfies zeta(k) <= beta(k) < zeta(k) + 2^-n for every k.
AlmostRational approximate(const OrientedReal& beta, std::uint64_t n);

// sup of the image of gamma: the oriented real whose cut is
// {q : exists n, q < gamma(n)}.
OrientedReal sup_enumerated(IndexRule gamma, Rational strict_bound);

// inf of a finite nonempty set, which lands on the embedded minimum.
OrientedReal inf_finite(const std::vector<Rational>& values);

using RealSequence = std::function<OrientedReal(std::uint64_t)>;

// Diagonal limit of a nondecreasing bounded sequence of oriented reals:
//   alpha(k) = max{alpha_i(j) : i,j <= k} - 1/(k+1), bound M.
// The nondecrease precondition is spot-checked (le never Refuted) on a short
// prefix; a failure reports the offending index.
OrientedReal monotone_limit(RealSequence seq, const Rational& bound,
                            std::uint64_t fuel);

}  // namespace orc
