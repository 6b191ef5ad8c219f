#include "orc/continuity.hpp"

#include <algorithm>

namespace orc {

OrientedReal apply_real(const RealMapDescriptor& f, const OrientedReal& x) {
  if (const auto* s = std::get_if<ShiftMap>(&f)) return shift(x, s->offset);
  return embed_rational(std::get<ConstantRealMap>(f).value);
}

namespace {

// Quantizer thresholds q_i = i * 2^-n, i = 1..2^n.
std::vector<Rational> grid_thresholds(std::uint64_t n) {
  const Rational step = pow2_inverse(n);
  std::vector<Rational> out;
  const std::uint64_t cells = std::uint64_t(1) << n;
  out.reserve(cells);
  for (std::uint64_t i = 1; i <= cells; ++i) out.push_back(Rational(i) * step);
  return out;
}

}  // namespace

AlmostNatural apply_nat(const NatMapDescriptor& phi, const OrientedReal& x) {
  if (const auto* t = std::get_if<ThresholdMapDesc>(&phi))
    return threshold_phi(t->thresholds, x);
  if (const auto* c = std::get_if<ConstantNatMap>(&phi))
    return AlmostNatural::constant(c->value);
  const auto& comp = std::get<GridComposition>(phi);
  return threshold_phi(grid_thresholds(comp.resolution),
                       apply_real(comp.inner, x));
}

std::vector<OrientedReal> ocp_modulus(const NatMapDescriptor& phi) {
  std::vector<OrientedReal> e;
  if (const auto* t = std::get_if<ThresholdMapDesc>(&phi)) {
    // inf(T_i) lands on the thresholds themselves.
    for (const Rational& d : t->thresholds) e.push_back(embed_rational(d));
    return e;
  }
  if (std::holds_alternative<ConstantNatMap>(phi)) return e;

  // Grid composition: the stable level of q-hat is #{i >= 1 : q_i < f(q)};
  // it jumps exactly at the grid-line preimages inside the domain, and the
  // lowest inhabited level set has infimum 0.
  const auto& comp = std::get<GridComposition>(phi);
  if (std::holds_alternative<ConstantRealMap>(comp.inner)) return e;
  const Rational offset = std::get<ShiftMap>(comp.inner).offset;
  e.push_back(embed_rational(Rational(0)));
  for (const Rational& q : grid_thresholds(comp.resolution)) {
    const Rational pre = q - offset;
    if (pre.is_positive() && pre < Rational(1))
      e.push_back(embed_rational(pre));
  }
  return e;
}

std::vector<OrientedReal> totalc_modulus(const RealMapDescriptor& f,
                                         std::uint64_t n) {
  std::vector<OrientedReal> e;
  if (std::holds_alternative<ConstantRealMap>(f)) return e;
  // A shift moves the whole domain, so its image can leave [0,1]; the
  // 2^-n conclusion needs a pullback line for every grid line k*2^-n the
  // image range crosses, not just those inside the unit interval.
  const Rational offset = std::get<ShiftMap>(f).offset;
  const Rational step = pow2_inverse(n);
  e.push_back(embed_rational(Rational(0)));
  Rational pre = step - offset;
  while (!pre.is_positive()) pre += step;
  while (pre - step > Rational(0)) pre -= step;
  for (; pre < Rational(1); pre += step) e.push_back(embed_rational(pre));
  return e;
}

std::string Report::str() const {
  std::string out;
  for (const Line& line : lines) {
    switch (line.status) {
      case Status::Pass: out += "PASS "; break;
      case Status::Fail: out += "FAIL "; break;
      case Status::Undecided: out += "UNDECIDED "; break;
    }
    out += std::to_string(line.pair_index);
    out += ' ';
    out += line.detail;
    out += '\n';
  }
  out += "total=" + std::to_string(total()) + " pass=" + std::to_string(pass) +
         " fail=" + std::to_string(fail) +
         " undecided=" + std::to_string(undecided) + "\n";
  return out;
}

namespace {

void append(Report& report, Report::Status status, std::size_t index,
            std::string detail) {
  report.lines.push_back(Report::Line{status, index, std::move(detail)});
  switch (status) {
    case Report::Status::Pass: ++report.pass; break;
    case Report::Status::Fail: ++report.fail; break;
    case Report::Status::Undecided: ++report.undecided; break;
  }
}

}  // namespace

Report verify_modulus(const NatMapDescriptor& phi,
                      const std::vector<OrientedReal>& modulus,
                      const CorpusPairs& corpus, std::uint64_t fuel) {
  Report report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& [a, b] = corpus[i];
    const Trilean nbhd = oriented_nbhd_member(b, a, modulus, fuel);
    if (nbhd.is_unknown()) {
      append(report, Report::Status::Undecided, i, "signature undecided");
      continue;
    }
    if (nbhd.is_refuted()) {
      append(report, Report::Status::Pass, i,
             "different neighborhoods (vacuous)");
      continue;
    }
    const Trilean eq = an_eq(apply_nat(phi, a), apply_nat(phi, b), fuel);
    if (eq.is_refuted())
      append(report, Report::Status::Fail, i,
             "signature-equal pair with distinct images");
    else
      append(report, Report::Status::Pass, i,
             std::string("images ") + eq.name());
  }
  return report;
}

Report verify_totalc(const RealMapDescriptor& f, std::uint64_t n,
                     const std::vector<OrientedReal>& modulus,
                     const CorpusPairs& corpus, std::uint64_t fuel) {
  Report report;
  const Rational radius = pow2_inverse(n);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& [a, b] = corpus[i];
    const Trilean nbhd = oriented_nbhd_member(b, a, modulus, fuel);
    if (nbhd.is_unknown()) {
      append(report, Report::Status::Undecided, i, "signature undecided");
      continue;
    }
    if (nbhd.is_refuted()) {
      append(report, Report::Status::Pass, i,
             "different neighborhoods (vacuous)");
      continue;
    }
    const Trilean d =
        d_check(apply_real(f, a), apply_real(f, b), radius, fuel).verdict;
    if (d.is_refuted())
      append(report, Report::Status::Fail, i,
             "images separate beyond 2^-" + std::to_string(n));
    else
      append(report, Report::Status::Pass, i, std::string("d ") + d.name());
  }
  return report;
}

}  // namespace orc
