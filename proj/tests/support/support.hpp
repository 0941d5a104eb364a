#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dimlift/oracle.hpp"
#include "dimlift/poset.hpp"

namespace dimlift::testing {

/// Every poset from all_posets(1..max_n) that is dismantlable and has height <= max_height.
std::vector<Poset> dismantlable_posets(std::size_t max_n, int max_height);

/// Tries every permutation of the elements as a removal sequence. Covers are
/// recomputed from leq directly, independently of the library's search.
bool dismantlable_by_permutations(const Poset& p);

/// Searches the grid { k / d : |k| <= bound * d, 1 <= d <= max_den } for a point
/// satisfying every constraint. Intended for at most three variables.
std::optional<RatVector> grid_search(const LinSystem& sys, int bound, int max_den);

/// A random system over n variables with small integer coefficients.
LinSystem random_system(std::size_t n, Rng& rng);

/// Random square matrix block shapes and contents for pss homs.
PssSpace random_space(Rng& rng, std::size_t max_components, std::size_t max_comp_dim, const std::string& prefix);
/// Random valid hom a -> b; each block is zero with probability 1/3.
PssHom random_hom(const PssSpace& a, const PssSpace& b, Rng& rng);

}  // namespace dimlift::testing
