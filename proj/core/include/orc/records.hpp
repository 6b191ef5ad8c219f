// Line-oriented record formats for sampled prefixes, used by the CLI to dump
// and compare values bit-exactly.
//
//   oriented-real v1 bound=<p/q>      followed by "<index> <p/q>" lines
//   almost-natural v1 cap=<k>         followed by "<index> <n>" lines
//   almost-rational v1 values=<p/q,..> followed by "<index> <p/q>" lines

#pragma once

#include <cstdint>
#include <iosfwd>

#include "orc/almost.hpp"
#include "orc/oriented_real.hpp"

namespace orc {

void write_record(std::ostream& out, const OrientedReal& value,
                  std::uint64_t count);
void write_record(std::ostream& out, const AlmostNatural& value,
                  std::uint64_t count);
void write_record(std::ostream& out, const AlmostRational& value,
                  std::uint64_t count);

}  // namespace orc
