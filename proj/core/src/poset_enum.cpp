#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dimlift/error.hpp"
#include "dimlift/poset.hpp"

namespace dimlift {

namespace {

using Mask = Poset::Mask;

// Strict-order relation on n <= 6 elements, packed as bit (i*n + j) for i < j in the order.
using Code = std::uint64_t;

Code encode(const std::vector<Mask>& strict_up, const std::vector<std::size_t>& perm, std::size_t n) {
  Code c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (Mask m = strict_up[i]; m; m &= m - 1) {
      auto j = static_cast<std::size_t>(__builtin_ctzll(m));
      c |= Code{1} << (perm[i] * n + perm[j]);
    }
  return c;
}

Code canonical_code(const std::vector<Mask>& strict_up, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code best = ~Code{0};
  do {
    best = std::min(best, encode(strict_up, perm, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Extends naturally labelled posets one element at a time; the new element's
// strict down-set must be an order ideal of the existing elements.
void extend(std::vector<Mask>& down, std::size_t n, std::vector<std::vector<Mask>>& out) {
  const std::size_t k = down.size();
  if (k == n) {
    out.push_back(down);
    return;
  }
  for (Mask d = 0; d < (Mask{1} << k); ++d) {
    bool ideal = true;
    for (Mask m = d; m && ideal; m &= m - 1) {
      auto y = static_cast<std::size_t>(__builtin_ctzll(m));
      if ((down[y] & ~d) != 0) ideal = false;
    }
    if (!ideal) continue;
    down.push_back(d);
    extend(down, n, out);
    down.pop_back();
  }
}

}  // namespace

std::vector<Poset> all_posets(std::size_t n) {
  if (n > 6) throw ResourceError("all_posets is limited to 6 elements");
  std::vector<std::vector<Mask>> labelled;
  std::vector<Mask> down;
  extend(down, n, labelled);

  std::unordered_map<Code, bool> seen;
  std::vector<Poset> out;
  for (const auto& strict_down : labelled) {
    std::vector<Mask> strict_up(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (Mask m = strict_down[j]; m; m &= m - 1) strict_up[static_cast<std::size_t>(__builtin_ctzll(m))] |= Mask{1} << j;
    if (!seen.emplace(canonical_code(strict_up, n), true).second) continue;
    std::vector<std::string> names;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
      leq[i][i] = true;
      for (std::size_t j = 0; j < n; ++j)
        if ((strict_up[i] >> j) & 1U) leq[i][j] = true;
    }
    out.emplace_back(std::move(names), leq);
  }
  return out;
}

}  // namespace dimlift
