#include <doctest.h>

#include <random>

#include "blowup/period.hpp"
#include "blowup/weinstein.hpp"
#include "oracles.hpp"

using namespace blowup;

namespace {
const TauRat t = TauRat::tau();

ManifoldSpec manifold(int n, const Rational& V, const Rational& a) { return ManifoldSpec::make(n, V, a); }
}  // namespace

TEST_CASE("manifold spec validation") {
  CHECK_THROWS(manifold(1, Rational(1), Rational(1)));
  CHECK_THROWS(manifold(2, Rational(0), Rational(1)));
  CHECK_THROWS(manifold(2, Rational(1), Rational(0)));
  CHECK_THROWS(ManifoldSpec::make(2, Rational(1), Rational(1), -1.0));
  CHECK(manifold(2, Rational(1), Rational(-1)).period() == 1);
  CHECK(manifold(3, Rational(2), Rational(1)).blowup_volume() == 2 - pow(t, 3));
}

TEST_CASE("ball_integral_closed_form") {
  CHECK(ball_integral_closed_form({"x", {1, 2}, Rational(0)}, manifold(2, Rational(1), Rational(1))) ==
        -pow(t, 3) / 2);
  CHECK(ball_integral_closed_form({"x", {0, 0}, Rational(3, 7)}, manifold(2, Rational(1), Rational(1))) ==
        pow(t, 2) * TauRat(Rational(3, 7)));
  CHECK(ball_integral_closed_form({"x", {1, 1, 1}, Rational(1, 3)}, manifold(3, Rational(1), Rational(1))) ==
        -pow(t, 4) / 8 + pow(t, 3) / 3);
}

TEST_CASE("lift_value_general") {
  const ManifoldSpec m = manifold(2, Rational(1), Rational(1));
  CHECK(lift_value_general(TauRat(0), TauRat(0), m).lifted_value.is_zero());
  // The ball integral of weights (1,2) with C = 1/2 carries the C t^2 term.
  const WeinsteinValue v = lift_value_general(TauRat(Rational(1, 2)), -pow(t, 3) / 2 + pow(t, 2) / 2, m);
  CHECK(v.lifted_value == canonicalize(TauPoly{1, 1, 1}, TauPoly{2, 2}));
  CHECK(lift_value_general(TauRat(Rational(1, 2)), -pow(t, 3) / 2, m).lifted_value ==
        TauRat(Rational(1, 2)) - pow(t, 3) / (2 * (1 - pow(t, 2))));
  CHECK(v.lattice.includes_tau());
  for (int k : {2, 3}) {
    const Rational tk(k);
    CHECK(*oracle::substitute(v.lifted_value, tk) == (1 - tk * tk * tk) / (2 * (1 - tk * tk)));
  }
}

TEST_CASE("lift_value_circle examples") {
  const ManifoldSpec m = manifold(2, Rational(1), Rational(1));
  CHECK(lift_value_circle({"z", {0, 0}, Rational(0)}, m).lifted_value.is_zero());
  const WeinsteinValue v = lift_value_circle({"s", {1, 2}, Rational(1, 2)}, m);
  CHECK(v.base_value == TauRat(Rational(1, 2)));
  CHECK(render(v.lifted_value) == "(t^2 + t + 1)/(2*t + 2)");
  for (int k : {2, 3, 5}) {
    CHECK(*oracle::substitute(v.lifted_value, Rational(k)) ==
          oracle::circle_lift_at(2, Rational(1), Rational(1, 2), 3, Rational(k)));
  }
}

TEST_CASE("agreement with the (a/n_j) rewriting") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> nj(1, 9);
  std::uniform_int_distribution<long> w(-9, 9);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + i % 3;
    const Rational a(1, 1 + i % 3);
    const Rational V(nj(rng), nj(rng));
    CircleLoopSpec loop{"g", {}, a / nj(rng)};
    for (int j = 0; j < n; ++j) {
      loop.weights.push_back(w(rng));
    }
    const ManifoldSpec m = manifold(n, V, a);
    const TauRat vol = V - pow(t, n);
    const TauRat K(Rational(loop.weight_sum()));
    const TauRat shape =
        TauRat(loop.C) * (1 + pow(t, n) / vol) - K / TauRat(Rational(factorial(n + 1))) * pow(t, n + 1) / vol;
    CHECK(lift_value_circle(loop, m).lifted_value == shape);
  }
}

TEST_CASE("circle_loop_order") {
  CHECK(circle_loop_order({"x", {1, 2}, Rational(1, 2)}, manifold(2, Rational(1), Rational(1))) == 2);
  CHECK(circle_loop_order({"x", {1, 2}, Rational(3, 4)}, manifold(2, Rational(1), Rational(1, 2))) == 2);
  CHECK(circle_loop_order({"x", {1, 2}, Rational(0)}, manifold(2, Rational(1), Rational(1))) == 1);
  CHECK(circle_loop_order({"x", {1, 2}, Rational(-5, 6)}, manifold(2, Rational(1), Rational(1, 3))) == 2);
}

TEST_CASE("calabi_lift") {
  const ManifoldSpec m = manifold(2, Rational(1), Rational(1));
  CHECK(calabi_lift(TauRat(Rational(2, 5)), {"x", {0, 0}, Rational(0)}, m) == TauRat(Rational(2, 5)));
  CHECK(calabi_lift(TauRat(0), {"x", {1, 2}, Rational(0)}, m) == pow(t, 3) / 4);
  CHECK(calabi_lift(TauRat(1), {"x", {0, 0}, Rational(1)}, m) == 1 - pow(t, 2) / 2);
}

TEST_CASE("weights must match the manifold dimension") {
  const ManifoldSpec m = manifold(3, Rational(1), Rational(1));
  CHECK_THROWS(check_loop_matches({"x", {1, 2}, Rational(0)}, m));
  CHECK_THROWS(lift_value_circle({"x", {1, 2}, Rational(0)}, m));
  CHECK_NOTHROW(check_loop_matches({"x", {1, 2, 3}, Rational(0)}, m));
}

TEST_CASE("random-spec properties") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<long> small(1, 9);
  std::uniform_int_distribution<long> w(-9, 9);
  std::uniform_int_distribution<long> p(-12, 12);
  for (int i = 0; i < 80; ++i) {
    const int n = 2 + i % 3;
    const ManifoldSpec m =
        ManifoldSpec::make(n, Rational(small(rng), small(rng)), Rational(small(rng), small(rng)));
    CircleLoopSpec loop{"first", {}, Rational(p(rng), small(rng))};
    for (int j = 0; j < n; ++j) {
      loop.weights.push_back(w(rng));
    }
    const WeinsteinValue v = lift_value_circle(loop, m);

    // Composition with the general identity.
    CHECK(v.lifted_value == lift_value_general(TauRat(loop.C), ball_integral_closed_form(loop, m), m).lifted_value);

    // Only local data matters.
    CircleLoopSpec renamed = loop;
    renamed.name = "second";
    CHECK(lift_value_circle(renamed, m).lifted_value == v.lifted_value);

    // Denominator divides a power of V - t^n.
    const TauPoly vol = m.blowup_volume().num();
    TauPoly power{1};
    for (int k = 0; k < 4; ++k) {
      power *= vol;
    }
    CHECK(divmod(power, v.lifted_value.den()).second.is_zero());

    // Small blow-ups approach the base value.
    CHECK(std::abs(v.lifted_value.eval_at(1e-6) - v.base_value.eval_at(1e-6)) <= 1e-4);

    // With the ball integral held fixed, shifting the base by A a shifts the
    // lift by A a. Shifting C by A a also changes the integral, moving the lift
    // by A a V/(V - t^n), a lattice member only for A = 0.
    const long A = p(rng);
    const TauRat Aa(Rational(A * m.period()));
    const WeinsteinValue g = lift_value_general(TauRat(loop.C) + Aa, ball_integral_closed_form(loop, m), m);
    CHECK(g.lifted_class() == v.lifted_class());
    CircleLoopSpec shifted = loop;
    shifted.C += A * m.period();
    CHECK((lift_value_circle(shifted, m).lifted_class() == v.lifted_class()) == (A == 0));
    // A shift by B t in the lifted value itself never changes the class.
    CHECK(QuotientClass{v.lifted_value + A * t, v.lattice} == v.lifted_class());
  }
}
