#pragma once

#include <cstddef>
#include <vector>

#include "dimlift/rational.hpp"

namespace dimlift {

/// Coordinatewise maximum of the lowers. Throws PreconditionError (infeasible)
/// unless every lower is below every upper. lowers must be nonempty.
RatVector interpolate(const std::vector<RatVector>& lowers, const std::vector<RatVector>& uppers);

/// c[k][l] >= 0 with sum_l c[k][l] = u[k] and sum_k c[k][l] = v[l].
/// Greedy northwest-corner fill, row-major, each coordinate on its own.
/// Throws PreconditionError on negative parts or unequal totals.
std::vector<std::vector<RatVector>> riesz_refine(const std::vector<RatVector>& u, const std::vector<RatVector>& v);

/// Table over tuples phi in T_0 x ... x T_{k-1}, stored lexicographically
/// with the first index most significant.
struct MultTable {
  std::vector<std::size_t> sizes;
  std::vector<RatVector> values;

  [[nodiscard]] std::size_t index(const std::vector<std::size_t>& phi) const;
  [[nodiscard]] std::vector<std::size_t> tuple(std::size_t index) const;
};

/// decomps[i] lists the parts a_{i,j} (j in T_i) of one common total.
/// Returns x with sum_{phi(i) = j} x_phi = a_{i,j}. Built by folding
/// riesz_refine over the indices. Needs at least one decomposition.
MultTable mult_refine(const std::vector<std::vector<RatVector>>& decomps);

/// b_X (X a subset of the index positions, binary-counter order) with
/// a_i = sum_{i not in X} b_X + lambda sum_{i in X} b_X.
/// Needs lambda >= 1, a nonempty, a_i >= 0 and a_i <= lambda a_j for all i, j.
std::vector<RatVector> lamas_decompose(const std::vector<RatVector>& a, const Rational& lambda);

bool check_riesz(const std::vector<RatVector>& u, const std::vector<RatVector>& v,
                 const std::vector<std::vector<RatVector>>& c);
bool check_mult(const std::vector<std::vector<RatVector>>& decomps, const MultTable& x);
bool check_lamas(const std::vector<RatVector>& a, const Rational& lambda, const std::vector<RatVector>& b);

}  // namespace dimlift
