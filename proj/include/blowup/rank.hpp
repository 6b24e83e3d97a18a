#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blowup/exact/integer_lattice.hpp"
#include "blowup/weinstein.hpp"

namespace blowup {

/// Exact description of the relations among lifted circle-loop classes in
/// R / Z<a, tau>.
struct RankCertificate {
  std::vector<std::string> names;
  std::vector<BigInt> orders;  // n_j
  /// The two rational linear forms whose common integer zeros are the
  /// relations: C_j / a (equal to 1/n_j when C_j = a/n_j) and K_j.
  RationalVector constant_form;
  std::vector<BigInt> weight_form;
  std::vector<IntVector> kernel_basis;  // Hermite basis
  std::size_t rank = 0;

  bool orders_pairwise_coprime = false;
  // Filled in by certify_rank.
  bool generators_infinite_order = false;
  bool matches_direct_computation = false;
  std::string report;

  std::size_t k() const { return names.size(); }
  /// Orders pairwise coprime yet rank < k: a relation exists that no single
  /// generator's unit-coefficient expression captures.
  bool deficient_under_coprime_orders() const { return orders_pairwise_coprime && rank < k(); }
  std::string summary() const;  // "rank 1, kernel basis (2,-3)"
};

/// Kernel of Z^k -> R/Z<a, tau>, c -> sum c_j [lift_j], from the coefficient
/// comparison: sum c_j C_j = 0 and sum c_j K_j = 0.
RankCertificate relation_kernel(const std::vector<CircleLoopSpec>& loops, const ManifoldSpec& manifold);

/// Relation lattice {c in Z^k : sum c_j x_j in lattice} for arbitrary exact
/// values, by clearing a common denominator and solving for (c, A, B) over Z.
std::vector<IntVector> relation_lattice(const std::vector<TauRat>& values, const PeriodLattice& lattice);

/// relation_kernel plus independent verification (direct relation lattice of
/// the lifted values, infinite order of each generator) and a text report.
RankCertificate certify_rank(const std::vector<CircleLoopSpec>& loops, const ManifoldSpec& manifold);

/// 1/n_1 - sum_{j>=1} alpha_j / n_{j+1}, asserted nonzero. Throws
/// std::invalid_argument("hypothesis violated") unless n_1 >= 2, every other
/// n_j >= 1 is coprime to n_1 and alpha has one fewer entry than n.
Rational lemma_num_check(const std::vector<BigInt>& n_list, const std::vector<BigInt>& alpha);

}  // namespace blowup
