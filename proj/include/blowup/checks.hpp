#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blowup/local_model.hpp"
#include "blowup/parallel.hpp"

namespace blowup {

/// One line of a verification report.
struct CheckResult {
  std::string check;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::size_t skipped = 0;
  /// Largest magnitude of the reference quantity, for relative readings.
  double reference_magnitude = 0.0;
};

CheckResult make_result(std::string name, const MaxReduction& r, double tolerance);

/// beta(0) = rho and beta(r) = r exactly; 0 < beta' <= 1 on a uniform grid of
/// (0, r]. Returns {endpoints, slope}.
std::vector<CheckResult> beta_profile_check(const LocalModelParams& params, std::size_t grid = 10000);

using ScalarField = std::function<double(const CVec&)>;
using ChartMap = std::function<CVec(const CVec&)>;

/// max |H(z) - H(lambda z)| over random z in B_radius and lambda in S^1.
CheckResult s1_invariance_check(const ScalarField& h, int n, double radius, std::size_t samples, std::uint64_t seed,
                                double tolerance = 1e-12, Exec exec = Exec::parallel);

enum class ReferenceForm {
  standard,  // D psi^T J D psi = J at F-image points
  blowup,    // psi~ preserves F^* omega_0 at chart points
};

struct PullbackOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  ReferenceForm reference = ReferenceForm::standard;
  double step = 1e-5;
  double conjugation_tolerance = 1e-12;
  double form_tolerance = 1e-8;  // use 1e-4 for ReferenceForm::blowup
  Exec exec = Exec::parallel;
};

struct PullbackResult {
  CheckResult conjugation;  // |F(psi z) - psi(F z)|, psi~ acting as psi in the chart
  CheckResult form;         // entrywise deviation of the pulled-back form
  std::size_t divisor_skipped = 0;
  double max_deviation() const;
  bool pass() const { return conjugation.pass && form.pass; }
};

/// Checks that psi commutes with F (so psi~ = psi in the chart) and that it
/// preserves the chosen reference form, using central differences.
PullbackResult symplectic_pullback_check(const ChartMap& psi, const LocalModelParams& params,
                                         const PullbackOptions& options = {});

struct VectorFieldOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  double step = 1e-5;
  double tolerance = 1e-6;
  /// Multiplies the lifted field; anything but 1 injects a fault.
  double lifted_scale = 1.0;
  Exec exec = Exec::parallel;
};

/// F_* X~_t(z) = (beta(|z|)/|z|) X_t(z) = X_t(F(z)) at random (t, z).
CheckResult vector_field_relation_check(const UnitaryLoop& loop, const LocalModelParams& params,
                                        const VectorFieldOptions& options = {});

/// H o F = H + rho^2 H' on 0 < |z| <= delta.
CheckResult near_divisor_identity_check(const LocalHamiltonian& h, const LocalModelParams& params,
                                        std::size_t samples, std::uint64_t seed, double tolerance = 1e-10,
                                        Exec exec = Exec::parallel);

/// Radial limits H~(eps w) -> H~([w]) and independence of the representative
/// of [w] (H~([lambda w]) = H~([w]) for lambda in C^*).
std::vector<CheckResult> divisor_branch_check(const LocalHamiltonian& h, const LocalModelParams& params,
                                              std::size_t samples, std::uint64_t seed, double tolerance = 1e-8,
                                              Exec exec = Exec::parallel);

}  // namespace blowup
