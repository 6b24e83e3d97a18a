#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "blowup/checks.hpp"
#include "blowup/local_model.hpp"
#include "blowup/sampling.hpp"

using namespace blowup;
using cd = std::complex<double>;

namespace {

CVec vec(std::initializer_list<cd> xs) {
  CVec z(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) {
    z[i++] = x;
  }
  return z;
}

const LocalModelParams model03 = LocalModelParams::make(2, 0.3, 0.2, 1.0);

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(LocalModelParams::make(2, 1.0, 0.2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LocalModelParams::make(2, 0.3, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LocalModelParams::make(2, 0.3, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LocalModelParams::make(2, -0.1, 0.2, 1.0), std::invalid_argument);
  // A steep band: the pointwise slope condition fails.
  CHECK_THROWS_AS(LocalModelParams::make(2, 0.9, 0.01, 1.0), std::invalid_argument);
  CHECK_NOTHROW(LocalModelParams::make(2, 0.4, 0.2, 1.0));
  CHECK(LocalModelParams::make(2, 0.4, 0.2, 1.0).uniform_slope_margin() < 0.0);
  CHECK(LocalModelParams::make(2, 0.1, 0.2, 1.0).uniform_slope_margin() > 0.0);
  CHECK(model03.tau() == doctest::Approx(std::numbers::pi * 0.09));
}

TEST_CASE("beta profile examples") {
  CHECK(beta_profile(0.0, model03).value == 0.3);
  CHECK(beta_profile(1.0, model03).value == 1.0);
  CHECK(beta_profile(0.1, model03).value == doctest::Approx(std::sqrt(0.10)).epsilon(1e-15));
  CHECK(beta_profile(0.9, model03).value == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(beta_profile(0.9, model03).derivative == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(beta_profile(-0.01, model03), std::domain_error);
  CHECK_THROWS_AS(beta_profile(1.01, model03), std::domain_error);
}

TEST_CASE("beta derivative matches finite differences") {
  for (double s = 0.01; s < 0.99; s += 0.0137) {
    const double h = 1e-6;
    const double fd = (beta_profile(s + h, model03).value - beta_profile(s - h, model03).value) / (2 * h);
    CHECK(beta_profile(s, model03).derivative == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("beta is monotone with slope in (0, 1]") {
  for (const auto& p : {model03, LocalModelParams::make(3, 0.4, 0.2, 1.0), LocalModelParams::make(2, 0.5, 0.3, 2.0)}) {
    for (const auto& r : beta_profile_check(p)) {
      CHECK_MESSAGE(r.pass, r.check);
    }
  }
}

TEST_CASE("f_rho examples") {
  const CVec outer = vec({0.6, cd(0.0, 0.6)});
  CHECK((f_rho(outer, model03) - outer).norm() == 0.0);
  const CVec inner = vec({0.1, 0.0});
  const CVec img = f_rho(inner, model03);
  CHECK(img[0].real() == doctest::Approx(std::sqrt(0.10)).epsilon(1e-15));
  CHECK(std::abs(img[0].imag()) == 0.0);
  CHECK(std::abs(img[1]) == 0.0);
  CHECK_THROWS_WITH(f_rho(vec({0.0, 0.0}), model03), "exceptional divisor has no chart image");
  CHECK_THROWS_AS(f_rho(vec({1.0, 1.0}), model03), std::domain_error);
}

TEST_CASE("annulus bijectivity: |F| increases and covers (rho, r]") {
  double prev = 0.3;
  for (int i = 1; i <= 2000; ++i) {
    const double s = i / 2000.0;
    const double img = f_rho(vec({s, 0.0}), model03).norm();
    CHECK(img > prev);
    prev = img;
  }
  CHECK(prev == 1.0);
  CHECK(f_rho(vec({1e-9, 0.0}), model03).norm() == doctest::Approx(0.3));
}

TEST_CASE("unitary equivariance of F") {
  SampleRng rng(7, 0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const CMat A = random_unitary(rng, 3);
    const LocalModelParams p = LocalModelParams::make(3, 0.4, 0.2, 1.0);
    const CVec z = random_ball_point(rng, 3, 1.0);
    worst = std::max(worst, (f_rho(A * z, p) - A * f_rho(z, p)).norm());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("lifted hamiltonian") {
  const LocalHamiltonian h{{1, 2}, 0.0, {}};
  const CVec z = vec({0.05, cd(0.03, -0.04)});
  const double s2 = z.squaredNorm();
  const double expected = -std::numbers::pi * (0.09 + s2) / s2 * (std::norm(z[0]) + 2 * std::norm(z[1]));
  CHECK(lifted_hamiltonian(h, z, model03) == doctest::Approx(expected).epsilon(1e-13));

  const LocalHamiltonian h10{{1, 0}, 0.0, {}};
  CHECK(lifted_hamiltonian(h10, DivisorPoint::make(vec({1.0, 0.0})), model03) ==
        doctest::Approx(-std::numbers::pi * 0.09).epsilon(1e-15));
  CHECK_THROWS_AS(DivisorPoint::make(vec({0.0, 0.0})), std::invalid_argument);

  // Time-dependent constant: the mean over a period is used for averaging.
  const LocalHamiltonian ht{{1, 1}, 0.0, [](double t) { return std::sin(2 * std::numbers::pi * t) + 0.5; }};
  CHECK(ht.time_averaged_constant() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ht(z, 0.25) == doctest::Approx(-std::numbers::pi * s2 + 1.5));
}

TEST_CASE("near-divisor identity and divisor branch") {
  const LocalModelParams p = LocalModelParams::make(2, 0.3, 0.2, 1.0);
  const LocalHamiltonian h{{1, 2}, 0.0, {}};
  CHECK(near_divisor_identity_check(h, p, 1000, 5).pass);
  for (const auto& r : divisor_branch_check(h, p, 200, 5)) {
    CHECK_MESSAGE(r.pass, r.check);
  }
  const LocalHamiltonian h3{{3, -1, 2}, 0.7, {}};
  const LocalModelParams p3 = LocalModelParams::make(3, 0.25, 0.2, 1.0);
  CHECK(near_divisor_identity_check(h3, p3, 500, 6).pass);
}

TEST_CASE("s1 invariance") {
  const LocalHamiltonian h{{1, 2}, 0.0, {}};
  const CheckResult r = s1_invariance_check([&](const CVec& z) { return h(z, 0.0); }, 2, 1.0, 1000, 3);
  CHECK(r.pass);
  CHECK(r.max_deviation <= 1e-12);
  CHECK(s1_invariance_check([](const CVec&) { return 4.0; }, 2, 1.0, 100, 3).max_deviation == 0.0);
  const CheckResult bad = s1_invariance_check([](const CVec& z) { return z[0].real(); }, 2, 1.0, 1000, 3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_deviation > 0.1);
}

TEST_CASE("symplectic pullback") {
  PullbackOptions options;
  const ChartMap identity = [](const CVec& z) -> CVec { return z; };
  const PullbackResult id = symplectic_pullback_check(identity, model03, options);
  CHECK(id.pass());
  CHECK(id.conjugation.max_deviation == 0.0);

  const CMat psi = UnitaryLoop::diagonal({1, 2}).at(0.37);
  const PullbackResult diag = symplectic_pullback_check([&](const CVec& z) -> CVec { return psi * z; }, model03, options);
  CHECK(diag.pass());
  CHECK(diag.form.max_deviation <= 1e-8);
  CHECK(diag.conjugation.max_deviation <= 1e-12);

  options.reference = ReferenceForm::blowup;
  options.form_tolerance = 1e-4;
  CHECK(symplectic_pullback_check([&](const CVec& z) -> CVec { return psi * z; }, model03, options).pass());

  options.reference = ReferenceForm::standard;
  options.form_tolerance = 1e-8;
  const ChartMap shear = [](const CVec& z) -> CVec {
    CVec w = z;
    w[0] = z[0] + std::conj(z[1]);
    return w;
  };
  const PullbackResult sh = symplectic_pullback_check(shear, model03, options);
  CHECK_FALSE(sh.pass());
  CHECK(sh.form.max_deviation > 0.5);
}

TEST_CASE("vector field relation") {
  VectorFieldOptions options;
  CHECK(vector_field_relation_check(UnitaryLoop::diagonal({0, 0}), model03, options).max_deviation == 0.0);
  const CheckResult ok = vector_field_relation_check(UnitaryLoop::diagonal({1, 0}), model03, options);
  CHECK(ok.pass);
  CHECK(ok.max_deviation <= 1e-6);
  options.lifted_scale = 1.1;
  const CheckResult bad = vector_field_relation_check(UnitaryLoop::diagonal({1, 0}), model03, options);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_deviation > 0.05 * bad.reference_magnitude);
}

TEST_CASE("unitary loops") {
  const UnitaryLoop d = UnitaryLoop::diagonal({1, -2});
  CHECK((d.at(0.0) - CMat::Identity(2, 2)).norm() == 0.0);
  CHECK((d.at(1.0) - CMat::Identity(2, 2)).norm() <= 1e-14);
  CHECK(std::abs(d.at(0.25)(0, 0) - std::exp(cd(0, -std::numbers::pi / 2))) <= 1e-15);
  CHECK_THROWS_AS(UnitaryLoop::from_path(2, [](double t) -> CMat { return CMat::Identity(2, 2) * (1.0 + t); }),
                  std::invalid_argument);
  CHECK_THROWS_AS(UnitaryLoop::from_path(2, [](double) -> CMat { return -CMat::Identity(2, 2); }),
                  std::invalid_argument);
  const UnitaryLoop rot = UnitaryLoop::from_path(2, [](double t) -> CMat {
    CMat m(2, 2);
    const double a = 2 * std::numbers::pi * t;
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return m;
  });
  CHECK(vector_field_relation_check(rot, model03).pass);
}
