// Three-valued verdicts for fuel-bounded decision procedures.
//
// Confirmed and Refuted are final: they assert true facts about the
// mathematical objects involved and never flip under more fuel. Unknown is
// honest ignorance and records how much fuel was spent reaching it.

#pragma once

#include <cstdint>
#include <string>

namespace orc {

class Trilean {
 public:
  enum class Kind : std::uint8_t { Confirmed, Refuted, Unknown };

  static Trilean confirmed() { return Trilean(Kind::Confirmed, 0); }
  static Trilean refuted() { return Trilean(Kind::Refuted, 0); }
  static Trilean unknown(std::uint64_t fuel_spent) {
    return Trilean(Kind::Unknown, fuel_spent);
  }

  Kind kind() const { return kind_; }
  bool is_confirmed() const { return kind_ == Kind::Confirmed; }
  bool is_refuted() const { return kind_ == Kind::Refuted; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }
  bool decided() const { return kind_ != Kind::Unknown; }
  std::uint64_t fuel_spent() const { return fuel_spent_; }

  // Verdict equality ignores the fuel annotation on Unknown.
  friend bool operator==(const Trilean& a, const Trilean& b) {
    return a.kind_ == b.kind_;
  }

  const char* name() const {
    switch (kind_) {
      case Kind::Confirmed: return "Confirmed";
      case Kind::Refuted: return "Refuted";
      default: return "Unknown";
    }
  }
  char code() const {
    switch (kind_) {
      case Kind::Confirmed: return 'C';
      case Kind::Refuted: return 'R';
      default: return 'U';
    }
  }

 private:
  Trilean(Kind k, std::uint64_t fuel) : kind_(k), fuel_spent_(fuel) {}

  Kind kind_;
  std::uint64_t fuel_spent_;
};

// Conjunction: Refuted dominates, then Unknown, then Confirmed.
inline Trilean tri_and(const Trilean& a, const Trilean& b) {
  if (a.is_refuted() || b.is_refuted()) return Trilean::refuted();
  if (a.is_unknown() || b.is_unknown())
    return Trilean::unknown(a.fuel_spent() > b.fuel_spent() ? a.fuel_spent()
                                                            : b.fuel_spent());
  return Trilean::confirmed();
}

}  // namespace orc
