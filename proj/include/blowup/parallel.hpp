#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace blowup {

/// Serial is the reference path; parallel must agree with it bit for bit.
enum class Exec { serial, parallel };

struct MaxReduction {
  double max = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
};

/// max_i fn(i) over i < count; fn returns nullopt for a skipped sample.
/// A max is order independent, so both paths give identical results.
template <class Fn>
MaxReduction reduce_max(std::size_t count, Fn&& fn, Exec exec) {
  double m = 0.0;
  std::size_t skipped = 0;
  const auto n = static_cast<std::int64_t>(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(max : m) reduction(+ : skipped)
    for (std::int64_t i = 0; i < n; ++i) {
      const std::optional<double> d = fn(static_cast<std::size_t>(i));
      if (d) {
        m = *d > m ? *d : m;
      } else {
        ++skipped;
      }
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      const std::optional<double> d = fn(static_cast<std::size_t>(i));
      if (d) {
        m = *d > m ? *d : m;
      } else {
        ++skipped;
      }
    }
  }
  return {m, count - skipped, skipped};
}

/// Runs fn(p) for every partition p and returns the results in partition
/// order, so any later merge is independent of the worker count.
template <class T, class Fn>
std::vector<T> map_partitions(std::size_t partitions, Fn&& fn, Exec exec) {
  std::vector<T> out(partitions);
  const auto n = static_cast<std::int64_t>(partitions);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t p = 0; p < n; ++p) {
      out[static_cast<std::size_t>(p)] = fn(static_cast<std::size_t>(p));
    }
  } else {
    for (std::int64_t p = 0; p < n; ++p) {
      out[static_cast<std::size_t>(p)] = fn(static_cast<std::size_t>(p));
    }
  }
  return out;
}

/// Pairwise (cascade) summation in a fixed order.
double pairwise_sum(std::span<const double> xs);

}  // namespace blowup
