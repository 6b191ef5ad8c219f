#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "orc/approximation.hpp"
#include "orc/hyperfield.hpp"
#include "orc/oriented_real.hpp"
#include "orc/rational.hpp"

using orc::AlmostRational;
using orc::OrientedReal;
using orc::Rational;

TEST_CASE("approximate 1-hat at half resolution") {
  OrientedReal one = orc::embed_rational(Rational(1));
  AlmostRational z = orc::approximate(one, 1);
  CHECK(z.at(0) == Rational(0));
  CHECK(z.at(1) == Rational(1, 2));
  CHECK(z.at(2) == Rational(1, 2));
  CHECK(z.at(20) == Rational(1, 2));
  for (std::uint64_t k = 1; k <= 20; ++k) {
    CHECK(Rational(1, 2) <= one.at(k));
    CHECK(one.at(k) < Rational(1));
  }
}

TEST_CASE("approximate 0-hat at quarter resolution") {
  OrientedReal zero = orc::embed_rational(Rational(0));
  AlmostRational z = orc::approximate(zero, 2);
  CHECK(z.at(0) == Rational(-1));
  Rational quarter(1, 4);
  Rational prev = z.at(0);
  for (std::uint64_t k = 1; k <= 64; ++k) {
    Rational cur = z.at(k);
    CHECK(cur >= prev);
    // Steps land on the quarter grid.
    CHECK((cur - prev) * Rational(4) ==
          Rational(orc::grid_floor(cur - prev, quarter)));
    CHECK(cur <= zero.at(k));
    CHECK(zero.at(k) < cur + quarter);
    prev = cur;
  }
}

TEST_CASE("sandwich holds across the corpus at every resolution") {
  for (const OrientedReal& beta : corpus::values()) {
    for (std::uint64_t n = 1; n <= 8; ++n) {
      AlmostRational z = orc::approximate(beta, n);
      Rational step = orc::pow2_inverse(n);
      for (std::uint64_t k = 0; k <= 128; ++k) {
        Rational zk = z.at(k);
        CHECK(zk <= beta.at(k));
        CHECK(beta.at(k) < zk + step);
      }
    }
  }
}

TEST_CASE("embedded approximation brackets the real") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 50; ++i) {
    OrientedReal beta = corpus::tight_cut(corpus::random_rational(rng), 1);
    for (std::uint64_t n : {1ULL, 3ULL, 6ULL}) {
      AlmostRational z = orc::approximate(beta, n);
      OrientedReal zhat = orc::ar_embed(z);
      CHECK_FALSE(orc::le(zhat, beta, 128).is_refuted());
      CHECK_FALSE(
          orc::le(beta, orc::shift(zhat, orc::pow2_inverse(n)), 128).is_refuted());
    }
  }
}

TEST_CASE("sup of an enumerated set") {
  OrientedReal s = orc::sup_enumerated(
      [](std::uint64_t n) {
        return Rational(1) - Rational(1, static_cast<long>(n) + 2);
      },
      Rational(1));
  // Same cut as 1-hat on grid probes.
  for (int i = -4; i < 8; ++i) {
    Rational p(i, 8);
    CHECK(orc::lt_rational(p, s, 1024).is_confirmed());
  }
  CHECK(orc::le_rational(s, Rational(1), 8).is_confirmed());

  OrientedReal c = orc::sup_enumerated(
      [](std::uint64_t) { return Rational(1, 2); }, Rational(3, 4));
  CHECK(orc::lt_rational(Rational(499, 1000), c, 1024).is_confirmed());
  // The declared bound 3/4 is loose, so no finite certificate refutes
  // 1/2 < c; the checker stays honest and reports Unknown.
  CHECK_FALSE(orc::lt_rational(Rational(1, 2), c, 1024).is_confirmed());

  OrientedReal alt = orc::sup_enumerated(
      [](std::uint64_t n) {
        return n % 2 == 0 ? Rational(0) : Rational(1, 2);
      },
      Rational(1));
  CHECK(orc::lt_rational(Rational(499, 1000), alt, 1024).is_confirmed());
  CHECK_FALSE(orc::lt_rational(Rational(1, 2), alt, 1024).is_confirmed());
}

TEST_CASE("sup items 1 and 2 on random enumerations") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> values;
    Rational top(-100);
    for (int i = 0; i < 12; ++i) {
      values.push_back(corpus::random_rational(rng));
      top = orc::rat_max(top, values.back());
    }
    OrientedReal s = orc::sup_enumerated(
        [values](std::uint64_t n) { return values[n % values.size()]; },
        top + Rational(1, 1000));
    // Item 1: every member's embedding is <= sup.
    for (const Rational& q : values)
      CHECK_FALSE(orc::le(orc::embed_rational(q), s, 256).is_refuted());
    // Item 2: every confirmed p < sup is beaten by some enumerated value.
    for (int j = 0; j < 6; ++j) {
      Rational p = top - Rational(1 + j, 7);
      if (!orc::lt_rational(p, s, 256).is_confirmed()) continue;
      bool beaten = false;
      for (const Rational& q : values) beaten = beaten || p < q;
      CHECK(beaten);
    }
  }
}

TEST_CASE("inf of a finite list is the embedded minimum") {
  OrientedReal i =
      orc::inf_finite({Rational(1, 2), Rational(1, 3), Rational(3, 4)});
  CHECK(orc::eq_o(i, orc::embed_rational(Rational(1, 3)), 16).is_confirmed());
  CHECK(orc::eq_o(orc::inf_finite({Rational(5)}),
                  orc::embed_rational(Rational(5)), 16)
            .is_confirmed());
  CHECK(orc::eq_o(orc::inf_finite({Rational(-1), Rational(-1)}),
                  orc::embed_rational(Rational(-1)), 16)
            .is_confirmed());
  CHECK_THROWS(orc::inf_finite({}));
}

TEST_CASE("monotone limit worked examples") {
  OrientedReal geometric = orc::monotone_limit(
      [](std::uint64_t i) {
        return orc::embed_rational(Rational(1) - orc::pow2_inverse(i));
      },
      Rational(1), 64);
  for (int i = -4; i < 8; ++i)
    CHECK(orc::lt_rational(Rational(i, 8), geometric, 1024).is_confirmed());
  CHECK(orc::le_rational(geometric, Rational(1), 8).is_confirmed());

  OrientedReal constant = orc::monotone_limit(
      [](std::uint64_t) { return orc::embed_rational(Rational(1, 3)); },
      Rational(1, 3), 64);
  CHECK(orc::lt_rational(Rational(33, 100), constant, 1024).is_confirmed());
  CHECK(orc::le_rational(constant, Rational(1, 3), 8).is_confirmed());

  OrientedReal crawl = corpus::tight_limit(Rational(1, 2));
  CHECK(orc::lt_rational(Rational(49, 100), crawl, 1024).is_confirmed());
  CHECK(orc::le_rational(crawl, Rational(1, 2), 8).is_confirmed());
}

TEST_CASE("monotone limit rejects a decreasing prefix") {
  CHECK_THROWS(orc::monotone_limit(
                   [](std::uint64_t i) {
                     return orc::embed_rational(Rational(0) -
                                                Rational(static_cast<long>(i)));
                   },
                   Rational(1), 64)
                   .at(0));
}

TEST_CASE("monotone limit theorem items on random sequences") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    Rational target = corpus::random_rational(rng);
    long speed = 1 + trial % 4;
    OrientedReal lim = orc::monotone_limit(
        [target, speed](std::uint64_t i) {
          return orc::embed_rational(
              target - Rational(speed, static_cast<long>(i) + 2));
        },
        target, 64);
    // Item 1 on a probe prefix of members.
    for (std::uint64_t i = 0; i < 6; ++i) {
      OrientedReal member = orc::embed_rational(
          target - Rational(speed, static_cast<long>(i) + 2));
      CHECK_FALSE(orc::le(member, lim, 256).is_refuted());
    }
    // Item 2 on the 2^-6 probe grid: each confirmed p < lim is eventually
    // below every member.
    Rational step = orc::pow2_inverse(6);
    for (int g = -8; g <= 8; ++g) {
      Rational p = target + Rational(g) * step;
      if (!orc::lt_rational(p, lim, 512).is_confirmed()) continue;
      bool found = false;
      for (std::uint64_t m = 0; m < 512 && !found; ++m) {
        Rational member_value =
            target - Rational(speed, static_cast<long>(m) + 2);
        if (p < member_value) {
          // All later members only grow.
          found = true;
        }
      }
      CHECK(found);
    }
  }
}
