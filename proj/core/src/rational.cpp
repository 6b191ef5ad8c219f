#include "orc/rational.hpp"

namespace orc {

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto to_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational: sign only");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational: bad digit in '" +
                                    std::string(s) + "'");
    }
    return Integer(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(to_int(text));
  return Rational(to_int(text.substr(0, slash)),
                  to_int(text.substr(slash + 1)));
}

Rational pow2_inverse(std::uint64_t k) {
  Integer d = 1;
  d <<= k;
  return Rational(Integer(1), d);
}

Integer grid_floor(const Rational& x, const Rational& step) {
  if (!step.is_positive())
    throw std::invalid_argument("grid_floor: step must be positive");
  // floor((x.num * step.den) / (x.den * step.num)); both factors of the
  // divisor are positive.
  Integer a = x.num() * step.den();
  Integer b = x.den() * step.num();
  Integer q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace orc
