#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "blowup/exact/rational.hpp"

namespace blowup {

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

/// Scales each row by the lcm of its denominators; the row space over Q and
/// the integer kernel are unchanged.
std::vector<IntVector> clear_denominators(const std::vector<RationalVector>& rows);

/// Z-basis of {x in Z^cols : rows * x = 0}, computed by unimodular column
/// reduction; the result is returned in Hermite normal form.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols);
std::vector<IntVector> integer_kernel(const std::vector<RationalVector>& rows, std::size_t cols);

/// Row Hermite normal form of the lattice generated by `generators`: pivots
/// positive and strictly moving right, entries above a pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is a Z-basis.
std::vector<IntVector> hermite_basis(std::vector<IntVector> generators, std::size_t dim);

/// Membership of v in the lattice spanned by a basis in hermite_basis form.
bool hermite_contains(const std::vector<IntVector>& basis, IntVector v);

/// The lattice {x[keep...]} obtained by projecting a lattice onto a subset
/// of coordinates, as a Hermite basis.
std::vector<IntVector> project_lattice(const std::vector<IntVector>& basis, const std::vector<std::size_t>& keep);

/// Unique solution of rows * x = rhs over Q, if the system is consistent.
/// Throws std::invalid_argument if the solution is not unique.
std::optional<RationalVector> solve_unique(std::vector<RationalVector> rows, RationalVector rhs);

}  // namespace blowup
