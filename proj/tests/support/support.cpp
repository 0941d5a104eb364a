#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace dimlift::testing {

std::vector<Poset> dismantlable_posets(std::size_t max_n, int max_height) {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& p : all_posets(n))
      if (p.height() <= max_height && dismantling_order(p)) out.push_back(std::move(p));
  return out;
}

namespace {

// Upper and lower cover counts of x inside the remaining set, straight from leq.
bool irreducible_in(const Poset& p, const std::vector<bool>& alive, std::size_t x) {
  const std::size_t n = p.size();
  std::size_t up = 0, down = 0;
  for (std::size_t y = 0; y < n; ++y) {
    if (!alive[y] || y == x) continue;
    auto between = [&](std::size_t a, std::size_t b) {
      for (std::size_t z = 0; z < n; ++z)
        if (alive[z] && z != a && z != b && p.leq(a, z) && p.leq(z, b)) return true;
      return false;
    };
    if (p.leq(x, y) && !between(x, y)) ++up;
    if (p.leq(y, x) && !between(y, x)) ++down;
  }
  return up <= 1 && down <= 1;
}

}  // namespace

bool dismantlable_by_permutations(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<bool> alive(p.size(), true);
    bool ok = true;
    for (auto x : perm) {
      if (!irreducible_in(p, alive, x)) {
        ok = false;
        break;
      }
      alive[x] = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p.size() == 0;
}

std::optional<RatVector> grid_search(const LinSystem& sys, int bound, int max_den) {
  std::vector<Rational> values;
  for (int d = 1; d <= max_den; ++d)
    for (int k = -bound * d; k <= bound * d; ++k) values.emplace_back(static_cast<long>(k), static_cast<long>(d));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t n = sys.vars.size();
  std::vector<std::size_t> idx(n, 0);
  RatVector x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = values[idx[i]];
    if (sys.satisfied_by(x)) return x;
    std::size_t i = 0;
    while (i < n && ++idx[i] == values.size()) idx[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

LinSystem random_system(std::size_t n, Rng& rng) {
  LinSystem sys;
  for (std::size_t i = 0; i < n; ++i) sys.add_var("x" + std::to_string(i));
  auto form = [&] {
    LinForm f = sys.form();
    for (auto& c : f.coeffs) c = Rational(static_cast<long>(rng.between(-2, 2)));
    f.constant = Rational(static_cast<long>(rng.between(-3, 3)));
    return f;
  };
  if (rng.chance(1, 3)) sys.eq.push_back(form());
  for (std::uint64_t k = rng.below(4); k > 0; --k) sys.ge.push_back(form());
  for (std::uint64_t k = rng.below(3); k > 0; --k) sys.gt.push_back(form());
  return sys;
}

PssSpace random_space(Rng& rng, std::size_t max_components, std::size_t max_comp_dim, const std::string& prefix) {
  std::vector<std::vector<std::string>> comps(1 + rng.below(max_components));
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::size_t d = 1 + rng.below(max_comp_dim);
    for (std::size_t i = 0; i < d; ++i) comps[k].push_back(prefix + std::to_string(k) + "_" + std::to_string(i));
  }
  return PssSpace(std::move(comps));
}

PssHom random_hom(const PssSpace& a, const PssSpace& b, Rng& rng) {
  RatMatrix m(b.total_dim(), a.total_dim());
  for (std::size_t i = 0; i < a.component_count(); ++i)
    for (std::size_t j = 0; j < b.component_count(); ++j) {
      if (rng.chance(1, 3)) continue;
      const RatMatrix blk = random_positive_block(b.component_size(j), a.component_size(i), rng);
      m.set_block(b.offset(j), a.offset(i), blk);
    }
  return PssHom(a, b, std::move(m));
}

}  // namespace dimlift::testing
