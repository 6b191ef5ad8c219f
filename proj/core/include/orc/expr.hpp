// The CLI expression language: a small constructor grammar over oriented
// reals, almost numbers and rationals.
//
//   expr     := name "(" args ")" | rational
//   rational := ["-"] digits "/" digits | ["-"] digits
//   args     := expr {"," expr} | list
//   list     := "[" [expr {"," expr}] "]"
//
// Whitespace insensitive; errors report byte offsets.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orc/almost.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"

namespace orc {

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset_, const std::string& expected_)
      : std::runtime_error("syntax error at offset " +
                           std::to_string(offset_) + ": expected " +
                           expected_),
        offset(offset_),
        expected(expected_) {}
  std::size_t offset;
  std::string expected;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Expr {
  enum class Kind { Literal, Call, List };

  Kind kind = Kind::Literal;
  Rational literal;        // Literal
  std::string name;        // Call
  std::vector<Expr> args;  // Call and List
  std::size_t offset = 0;  // byte offset in the source text

  // Structural equality; source offsets are not part of the value.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.literal == b.literal && a.name == b.name &&
           a.args == b.args;
  }
};

Expr parse(std::string_view source);
std::string render(const Expr& e);

using Value = std::variant<Rational, OrientedReal, AlmostNatural,
                           AlmostRational>;

struct EvalConfig {
  std::uint64_t fuel = 1024;
  std::uint64_t grid = 7;  // probe step 2^-grid
};

// Deterministic: the same expression and config always produce a value with
// bit-identical sampled records.
Value eval(const Expr& e, const EvalConfig& config);

// Convenience: eval and require an oriented real (rationals are coerced
// through the embedding).
OrientedReal eval_oriented(const Expr& e, const EvalConfig& config);

}  // namespace orc
