#include <doctest.h>

#include <cstring>

#include <omp.h>

#include "blowup/checks.hpp"
#include "blowup/quadrature.hpp"

using namespace blowup;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

QuadratureOptions with(Exec exec) {
  QuadratureOptions o;
  o.exec = exec;
  return o;
}

}  // namespace

TEST_CASE("quadrature is bit-identical across execution modes and thread counts") {
  const LocalHamiltonian h{{1, 2}, 0.25, {}};
  const LocalModelParams p = LocalModelParams::make(2, 0.4, 0.2, 1.0);
  for (Scheme s : {Scheme::product_gauss, Scheme::monte_carlo}) {
    const IntegralResult serial = integrate_ball(h, 0.5, 2, s, with(Exec::serial));
    for (int threads : {1, 3, 8}) {
      omp_set_num_threads(threads);
      const IntegralResult par = integrate_ball(h, 0.5, 2, s, with(Exec::parallel));
      CHECK(same_bits(serial.value, par.value));
      CHECK(same_bits(serial.error_estimate, par.error_estimate));
      CHECK(serial.samples_or_order == par.samples_or_order);
    }
    const AnnulusComparison a = verify_annulus_pushforward(h, p, s, with(Exec::serial));
    const AnnulusComparison b = verify_annulus_pushforward(h, p, s, with(Exec::parallel));
    CHECK(same_bits(a.pulled_back.value, b.pulled_back.value));
    CHECK(same_bits(a.direct.value, b.direct.value));
  }
}

TEST_CASE("sampled checks agree across execution modes") {
  const LocalModelParams p = LocalModelParams::make(2, 0.3, 0.2, 1.0);
  const LocalHamiltonian h{{1, 2}, 0.0, {}};

  PullbackOptions po;
  const CMat psi = UnitaryLoop::diagonal({1, 2}).at(0.2);
  const ChartMap map = [&](const CVec& z) -> CVec { return psi * z; };
  po.exec = Exec::serial;
  const PullbackResult ps = symplectic_pullback_check(map, p, po);
  po.exec = Exec::parallel;
  const PullbackResult pp = symplectic_pullback_check(map, p, po);
  CHECK(same_bits(ps.form.max_deviation, pp.form.max_deviation));
  CHECK(same_bits(ps.conjugation.max_deviation, pp.conjugation.max_deviation));

  VectorFieldOptions vo;
  vo.exec = Exec::serial;
  const CheckResult vs = vector_field_relation_check(UnitaryLoop::diagonal({1, 2}), p, vo);
  vo.exec = Exec::parallel;
  const CheckResult vp = vector_field_relation_check(UnitaryLoop::diagonal({1, 2}), p, vo);
  CHECK(same_bits(vs.max_deviation, vp.max_deviation));

  const CheckResult ns = near_divisor_identity_check(h, p, 500, 9, 1e-10, Exec::serial);
  const CheckResult np = near_divisor_identity_check(h, p, 500, 9, 1e-10, Exec::parallel);
  CHECK(same_bits(ns.max_deviation, np.max_deviation));

  const ScalarField f = [&](const CVec& z) { return h(z, 0.0); };
  CHECK(same_bits(s1_invariance_check(f, 2, 1.0, 500, 4, 1e-12, Exec::serial).max_deviation,
                  s1_invariance_check(f, 2, 1.0, 500, 4, 1e-12, Exec::parallel).max_deviation));
}

TEST_CASE("pairwise sum") {
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  CHECK(pairwise_sum(std::vector<double>{1.0, 2.0, 3.0}) == 6.0);
  std::vector<double> v(1000, 0.1);
  CHECK(std::abs(pairwise_sum(v) - 100.0) < 1e-12);
}
