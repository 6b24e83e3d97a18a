#include "blowup/sampling.hpp"

#include <cmath>
#include <numbers>

#include "blowup/parallel.hpp"

namespace blowup {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  state_ = splitmix64(s) ^ (stream * 0xD1B54A32D192ED03ULL);
  splitmix64(state_);
}

std::uint64_t SampleRng::next() { return splitmix64(state_); }

double SampleRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SampleRng::normal() {
  // Box-Muller; the second variate is discarded to keep the stream stateless.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXcd random_shell_point(SampleRng& rng, int n, double r_min, double r_max) {
  Eigen::VectorXcd z(n);
  double norm = 0.0;
  do {
    for (int j = 0; j < n; ++j) {
      z[j] = {rng.normal(), rng.normal()};
    }
    norm = z.norm();
  } while (norm == 0.0);
  return z * (rng.uniform(r_min, r_max) / norm);
}

Eigen::VectorXcd random_ball_point(SampleRng& rng, int n, double r) {
  Eigen::VectorXcd z = random_shell_point(rng, n, 1.0, 1.0);
  return z * (r * std::pow(rng.uniform(), 1.0 / (2.0 * n)));
}

Eigen::MatrixXcd random_diagonal_unitary(SampleRng& rng, int n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    a(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  }
  return a;
}

Eigen::MatrixXcd random_unitary(SampleRng& rng, int n) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = {rng.normal(), rng.normal()};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0.0) {
      q.col(j) *= r(j, j) / m;
    }
  }
  return q;
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) {
      s += x;
    }
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace blowup
