#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace blowup {

/// Counter-based generator: stream (seed, index) is reproducible and
/// independent of which thread draws it.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::uint64_t state_;
};

/// Uniform direction in C^n with radius uniform in [r_min, r_max].
Eigen::VectorXcd random_shell_point(SampleRng& rng, int n, double r_min, double r_max);

/// Uniformly distributed in the ball B_r of C^n = R^{2n}.
Eigen::VectorXcd random_ball_point(SampleRng& rng, int n, double r);

/// Haar-random diagonal unitary.
Eigen::MatrixXcd random_diagonal_unitary(SampleRng& rng, int n);

/// Haar-random unitary via QR of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(SampleRng& rng, int n);

}  // namespace blowup
