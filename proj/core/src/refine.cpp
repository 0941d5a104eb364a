#include "dimlift/refine.hpp"

#include <algorithm>

#include "dimlift/bitset.hpp"
#include "dimlift/error.hpp"

namespace dimlift {

namespace {

std::size_t common_dim(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  std::size_t d = a.empty() ? (b.empty() ? 0 : b[0].size()) : a[0].size();
  for (const auto& x : a)
    if (x.size() != d) throw ShapeError("vectors of different lengths");
  for (const auto& x : b)
    if (x.size() != d) throw ShapeError("vectors of different lengths");
  return d;
}

RatVector total(const std::vector<RatVector>& parts, std::size_t d) {
  RatVector t(d);
  for (const auto& p : parts) t = t + p;
  return t;
}

}  // namespace

RatVector interpolate(const std::vector<RatVector>& lowers, const std::vector<RatVector>& uppers) {
  if (lowers.empty()) throw PreconditionError("interpolate needs at least one lower bound");
  const std::size_t d = common_dim(lowers, uppers);
  RatVector x = lowers[0];
  for (const auto& l : lowers)
    for (std::size_t k = 0; k < d; ++k) x[k] = max(x[k], l[k]);
  for (std::size_t u = 0; u < uppers.size(); ++u)
    if (!leq_coordinatewise(x, uppers[u]))
      throw PreconditionError("no interpolant: a lower bound exceeds upper bound " + std::to_string(u));
  return x;
}

std::vector<std::vector<RatVector>> riesz_refine(const std::vector<RatVector>& u, const std::vector<RatVector>& v) {
  const std::size_t d = common_dim(u, v);
  for (const auto& x : u)
    if (!is_nonnegative(x)) throw PreconditionError("riesz_refine: negative part");
  for (const auto& x : v)
    if (!is_nonnegative(x)) throw PreconditionError("riesz_refine: negative part");
  if (total(u, d) != total(v, d)) throw PreconditionError("riesz_refine: totals differ");

  std::vector<std::vector<RatVector>> c(u.size(), std::vector<RatVector>(v.size(), RatVector(d)));
  for (std::size_t coord = 0; coord < d; ++coord) {
    std::vector<Rational> col_left;
    for (const auto& x : v) col_left.push_back(x[coord]);
    for (std::size_t k = 0; k < u.size(); ++k) {
      Rational row_left = u[k][coord];
      for (std::size_t l = 0; l < v.size() && !row_left.is_zero(); ++l) {
        Rational take = min(row_left, col_left[l]);
        c[k][l][coord] = take;
        row_left -= take;
        col_left[l] -= take;
      }
    }
  }
  return c;
}

std::size_t MultTable::index(const std::vector<std::size_t>& phi) const {
  if (phi.size() != sizes.size()) throw ShapeError("tuple length mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (phi[i] >= sizes[i]) throw ShapeError("tuple entry out of range");
    idx = idx * sizes[i] + phi[i];
  }
  return idx;
}

std::vector<std::size_t> MultTable::tuple(std::size_t index) const {
  std::vector<std::size_t> phi(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    phi[i] = index % sizes[i];
    index /= sizes[i];
  }
  return phi;
}

MultTable mult_refine(const std::vector<std::vector<RatVector>>& decomps) {
  if (decomps.empty()) throw PreconditionError("mult_refine needs at least one decomposition");
  for (const auto& d : decomps)
    if (d.empty()) throw PreconditionError("mult_refine: empty decomposition");
  MultTable x;
  x.sizes.push_back(decomps[0].size());
  x.values = decomps[0];
  for (std::size_t i = 1; i < decomps.size(); ++i) {
    auto c = riesz_refine(x.values, decomps[i]);
    std::vector<RatVector> next;
    next.reserve(x.values.size() * decomps[i].size());
    for (auto& row : c)
      for (auto& cell : row) next.push_back(std::move(cell));
    x.values = std::move(next);
    x.sizes.push_back(decomps[i].size());
  }
  return x;
}

std::vector<RatVector> lamas_decompose(const std::vector<RatVector>& a, const Rational& lambda) {
  if (a.empty()) throw PreconditionError("lamas_decompose needs a nonempty family");
  if (lambda < Rational(1)) throw PreconditionError("lamas_decompose needs lambda >= 1");
  const std::size_t d = common_dim(a, {});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_nonnegative(a[i])) throw PreconditionError("lamas_decompose: a_" + std::to_string(i) + " is negative");
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (a[i][k] > lambda * a[j][k])
          throw PreconditionError("lamas_decompose: a_" + std::to_string(i) + " > lambda a_" + std::to_string(j) +
                                  " at coordinate " + std::to_string(k));
  }
  const auto subsets = powerset(a.size());
  std::vector<RatVector> b(subsets.size(), RatVector(d));
  if (lambda == Rational(1)) {
    b[0] = a[0];
    return b;
  }
  std::vector<RatVector> scaled;
  for (const auto& x : a) scaled.push_back(lambda.inverse() * x);
  const RatVector mid = interpolate(scaled, a);
  const Rational lm1 = lambda - 1;
  std::vector<std::vector<RatVector>> decomps;
  for (const auto& x : a) {
    RatVector lo = x - mid;               // part 0: chosen when i is in X
    RatVector hi = lm1 * mid - lo;        // part 1
    decomps.push_back({std::move(lo), std::move(hi)});
  }
  MultTable x = mult_refine(decomps);
  for (std::size_t idx = 0; idx < x.values.size(); ++idx) {
    auto phi = x.tuple(idx);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (phi[i] == 0) mask |= std::uint64_t{1} << i;
    b[mask] = lm1.inverse() * x.values[idx];
  }
  return b;
}

bool check_riesz(const std::vector<RatVector>& u, const std::vector<RatVector>& v,
                 const std::vector<std::vector<RatVector>>& c) {
  if (c.size() != u.size()) return false;
  const std::size_t d = u.empty() ? 0 : u[0].size();
  std::vector<RatVector> cols(v.size(), RatVector(d));
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (c[k].size() != v.size()) return false;
    RatVector row(d);
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (!is_nonnegative(c[k][l])) return false;
      row = row + c[k][l];
      cols[l] = cols[l] + c[k][l];
    }
    if (row != u[k]) return false;
  }
  return u.empty() ? std::all_of(v.begin(), v.end(), [](const RatVector& x) { return is_zero(x); }) : cols == v;
}

bool check_mult(const std::vector<std::vector<RatVector>>& decomps, const MultTable& x) {
  std::size_t n = 1;
  for (const auto& d : decomps) n *= d.size();
  if (x.values.size() != n || x.sizes.size() != decomps.size()) return false;
  const std::size_t d = decomps[0][0].size();
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    std::vector<RatVector> marg(decomps[i].size(), RatVector(d));
    for (std::size_t idx = 0; idx < n; ++idx) {
      if (!is_nonnegative(x.values[idx])) return false;
      auto phi = x.tuple(idx);
      marg[phi[i]] = marg[phi[i]] + x.values[idx];
    }
    if (marg != decomps[i]) return false;
  }
  return true;
}

bool check_lamas(const std::vector<RatVector>& a, const Rational& lambda, const std::vector<RatVector>& b) {
  if (b.size() != (std::size_t{1} << a.size())) return false;
  const std::size_t d = a[0].size();
  for (const auto& x : b)
    if (!is_nonnegative(x)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector s(d);
    for (std::size_t mask = 0; mask < b.size(); ++mask)
      s = s + (((mask >> i) & 1U) ? lambda * b[mask] : b[mask]);
    if (s != a[i]) return false;
  }
  return true;
}

}  // namespace dimlift
