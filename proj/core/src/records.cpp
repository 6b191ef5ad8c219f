#include "orc/records.hpp"

#include <ostream>

namespace orc {

void write_record(std::ostream& out, const OrientedReal& value,
                  std::uint64_t count) {
  out << "oriented-real v1 bound=" << value.strict_bound().str() << "\n";
  for (std::uint64_t n = 0; n < count; ++n)
    out << n << " " << value.at(n).str() << "\n";
}

void write_record(std::ostream& out, const AlmostNatural& value,
                  std::uint64_t count) {
  out << "almost-natural v1 cap=" << value.cap() << "\n";
  for (std::uint64_t n = 0; n < count; ++n)
    out << n << " " << value.at(n) << "\n";
}

void write_record(std::ostream& out, const AlmostRational& value,
                  std::uint64_t count) {
  out << "almost-rational v1 values=";
  const auto& values = value.value_set();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ",";
    out << values[i].str();
  }
  out << "\n";
  for (std::uint64_t n = 0; n < count; ++n)
    out << n << " " << value.at(n).str() << "\n";
}

}  // namespace orc
