#include <doctest.h>

#include <random>

#include "blowup/exact/lattice_membership.hpp"
#include "blowup/period.hpp"
#include "blowup/weinstein.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {
const TauRat t = TauRat::tau();
}

TEST_CASE("blowup_lattice") {
  const PeriodLattice base = PeriodLattice::make(Rational(1));
  const PeriodLattice up = blowup_lattice(base);
  CHECK(up.generator() == 1);
  CHECK(up.includes_tau());
  CHECK(blowup_lattice(PeriodLattice::make(Rational(1, 2))).generator() == Rational(1, 2));
  CHECK_THROWS_WITH(blowup_lattice(up), "already extended");
  CHECK(PeriodLattice::make(Rational(-2, 3)).generator() == Rational(2, 3));
  CHECK_THROWS(PeriodLattice::make(Rational(0)));
  CHECK(up.describe() == "Z<1, t>");
  CHECK(base.describe() == "Z<1>");
}

TEST_CASE("class_order examples") {
  const PeriodLattice z1 = PeriodLattice::make(Rational(1));
  const PeriodLattice z1t = blowup_lattice(z1);
  CHECK(class_order({TauRat(Rational(1, 3)), z1}).str() == "3");

  // (a/n_j) V/(V - t^n) - (K/(n+1)!) t^{n+1}/(V - t^n), n = 2, a = 1, V = 2, n_j = 2, K = 1.
  const TauRat v = 2 - pow(t, 2);
  const TauRat x = TauRat(Rational(1, 2)) * 2 / v - pow(t, 3) / 6 / v;
  const ClassOrder o = class_order({x, z1t});
  CHECK(o.is_infinite());
  CHECK(o.str() == "infinite");
  for (long k = 1; k <= 100; ++k) {
    CHECK_FALSE(oracle::substitution_member(k * x, Rational(1)));
  }

  CHECK(class_order({5 + 7 * t, z1t}).str() == "1");
  CHECK(class_order({t / 4, z1t}).str() == "4");
  CHECK(class_order({t / 4, z1}).is_infinite());
  CHECK(class_order({TauRat(Rational(3, 4)), PeriodLattice::make(Rational(1, 2))}).str() == "2");
}

TEST_CASE("class_order agrees with search on finite cases") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  const Rational gens[] = {Rational(1), Rational(1, 2), Rational(2, 3)};
  for (int i = 0; i < 100; ++i) {
    const Rational a = gens[i % 3];
    const TauRat x = TauRat(Rational(num(rng), den(rng))) + t * Rational(num(rng), den(rng));
    const QuotientClass cls{x, blowup_lattice(PeriodLattice::make(a))};
    const ClassOrder o = class_order(cls);
    REQUIRE_FALSE(o.is_infinite());
    const long k = static_cast<long>(*o.order);
    CHECK(membership_in_lattice(k * x, a));
    CHECK(oracle::substitution_member(k * x, a));
    for (long j = 1; j < k; ++j) {
      CHECK_FALSE(oracle::substitution_member(j * x, a));
    }
  }
}

TEST_CASE("order is invariant under adding lattice members") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> c(-9, 9);
  const PeriodLattice lat = blowup_lattice(PeriodLattice::make(Rational(2, 3)));
  for (int i = 0; i < 60; ++i) {
    const TauRat x = oracle::random_tau_rat(rng, 2, 4);
    const TauRat shifted = x + TauRat(Rational(c(rng) * Rational(2, 3))) + c(rng) * t;
    CHECK(class_order({x, lat}).str() == class_order({shifted, lat}).str());
    CHECK(QuotientClass{x, lat} == QuotientClass{shifted, lat});
  }
}

TEST_CASE("quotient class equality") {
  const PeriodLattice z1 = PeriodLattice::make(Rational(1));
  const PeriodLattice z1t = blowup_lattice(z1);
  CHECK(QuotientClass{TauRat(Rational(1, 2)), z1} == QuotientClass{TauRat(Rational(-1, 2)), z1});
  CHECK_FALSE(QuotientClass{t, z1} == QuotientClass{TauRat(0), z1});
  CHECK(QuotientClass{t, z1t} == QuotientClass{TauRat(0), z1t});
  CHECK_FALSE(QuotientClass{TauRat(0), z1} == QuotientClass{TauRat(0), z1t});
}

TEST_CASE("lifted circle classes have infinite order") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> nd(2, 4);
  std::uniform_int_distribution<long> w(-9, 9);
  std::uniform_int_distribution<long> p(-12, 12);
  std::uniform_int_distribution<long> q(1, 12);
  int checked = 0;
  while (checked < 60) {
    const int n = nd(rng);
    CircleLoopSpec loop{"g", {}, Rational(p(rng), q(rng))};
    for (int j = 0; j < n; ++j) {
      loop.weights.push_back(w(rng));
    }
    if (loop.C == 0 && loop.weight_sum() == 0) {
      continue;
    }
    const ManifoldSpec m = ManifoldSpec::make(n, Rational(q(rng), q(rng)), Rational(1, q(rng)));
    const WeinsteinValue v = lift_value_circle(loop, m);
    CHECK(class_order(v.lifted_class()).is_infinite());
    for (long k = 1; k <= 20; ++k) {
      CHECK_FALSE(oracle::substitution_member(k * v.lifted_value, m.period()));
    }
    ++checked;
  }
}
