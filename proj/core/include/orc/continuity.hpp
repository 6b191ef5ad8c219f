// Executable continuity harness: modulus sets for the oriented continuity
// principle and verification of the total-function continuity theorem.
//
// Descriptors form a closed family of total, well-defined maps on the
// temporal interval (0,1]; arbitrary user code is not admitted because
// totality is not checkable from the outside.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orc/almost.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"
#include "orc/topology.hpp"

namespace orc {

// --- Total maps (0,1] -> oriented reals ------------------------------------

// delta -> delta + offset; offset 0 is the identity.
struct ShiftMap {
  Rational offset;
};

// delta -> value-hat.
struct ConstantRealMap {
  Rational value;
};

using RealMapDescriptor = std::variant<ShiftMap, ConstantRealMap>;

OrientedReal apply_real(const RealMapDescriptor& f, const OrientedReal& x);

// --- Total maps (0,1] -> almost naturals ------------------------------------

// Threshold level map Phi with thresholds d_1 < ... < d_j.
struct ThresholdMapDesc {
  std::vector<Rational> thresholds;
};

struct ConstantNatMap {
  std::uint64_t value;
};

// The 2^-n quantizer composed with a real-valued map: the level of f(delta)
// on the dyadic grid i * 2^-n.
struct GridComposition {
  std::uint64_t resolution;
  RealMapDescriptor inner;
};

using NatMapDescriptor =
    std::variant<ThresholdMapDesc, ConstantNatMap, GridComposition>;

AlmostNatural apply_nat(const NatMapDescriptor& phi, const OrientedReal& x);

// The finite modulus set E for a descriptor: level-set infima computed
// analytically (thresholds for ThresholdMapDesc, grid-line preimages for
// GridComposition, empty for constants).
std::vector<OrientedReal> ocp_modulus(const NatMapDescriptor& phi);

// E_n for a real-valued map at resolution 2^-n: the modulus of the composed
// quantizer map.
std::vector<OrientedReal> totalc_modulus(const RealMapDescriptor& f,
                                         std::uint64_t n);

// --- Verification reports ----------------------------------------------------

struct Report {
  enum class Status { Pass, Fail, Undecided };
  struct Line {
    Status status;
    std::size_t pair_index;
    std::string detail;
  };

  std::vector<Line> lines;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t undecided = 0;

  std::size_t total() const { return pass + fail + undecided; }
  // "PASS|FAIL|UNDECIDED <pair-id> <detail>" lines plus a summary line.
  std::string str() const;
};

using CorpusPairs = std::vector<std::pair<OrientedReal, OrientedReal>>;

// OCP check: signature-equal pairs must have =*-equal images (never Refuted).
Report verify_modulus(const NatMapDescriptor& phi,
                      const std::vector<OrientedReal>& modulus,
                      const CorpusPairs& corpus, std::uint64_t fuel);

// Continuity check: signature-equal pairs (w.r.t. E_n) must have images
// within 2^-n in the semi-metric (d never Refuted).
Report verify_totalc(const RealMapDescriptor& f, std::uint64_t n,
                     const std::vector<OrientedReal>& modulus,
                     const CorpusPairs& corpus, std::uint64_t fuel);

}  // namespace orc
