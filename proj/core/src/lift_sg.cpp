#include <set>

#include "dimlift/error.hpp"
#include "dimlift/lift.hpp"

namespace dimlift {

void validate_join_table(const JoinTable& s) {
  const std::size_t n = s.size();
  if (n == 0) throw PreconditionError("join table is empty");
  if (n > BitSet::kMaxWidth) throw ResourceError("join table larger than 64 elements");
  if (s.zero >= n) throw PreconditionError("join table: zero out of range");
  for (const auto& row : s.join) {
    if (row.size() != n) throw PreconditionError("join table is not square");
    for (auto v : row)
      if (v >= n) throw PreconditionError("join table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (s.join[a][a] != a) throw PreconditionError("join is not idempotent at " + std::to_string(a));
    if (s.join[s.zero][a] != a) throw PreconditionError("zero is not neutral at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (s.join[a][b] != s.join[b][a]) throw PreconditionError("join is not commutative");
      for (std::size_t c = 0; c < n; ++c)
        if (s.join[s.join[a][b]][c] != s.join[a][s.join[b][c]]) throw PreconditionError("join is not associative");
    }
  }
}

std::optional<JoinTable> join_table(const Poset& p) {
  const std::size_t n = p.size();
  JoinTable t;
  t.join.assign(n, std::vector<std::size_t>(n));
  std::optional<std::size_t> bottom;
  for (std::size_t x = 0; x < n; ++x)
    if (p.down_set(x) == (Poset::Mask{1} << x)) {
      if (bottom) return std::nullopt;
      bottom = x;
    }
  if (!bottom) return std::nullopt;
  t.zero = *bottom;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Poset::Mask ub = p.up_set(a) & p.up_set(b);
      std::optional<std::size_t> least;
      for (std::size_t c = 0; c < n; ++c)
        if (((ub >> c) & 1U) && (p.up_set(c) & ub) == ub) least = c;
      if (!least) return std::nullopt;
      t.join[a][b] = *least;
    }
  return t;
}

std::vector<JoinTable> all_join_semilattices(std::size_t n) {
  std::vector<JoinTable> out;
  for (const auto& p : all_posets(n))
    if (auto t = join_table(p)) out.push_back(std::move(*t));
  return out;
}

bool LiftSgResult::in_cone(const RatVector& v) const {
  if (v.size() != table.size()) throw ShapeError("vector does not belong to Q^S");
  if (!is_nonnegative(v)) return false;
  BitSet supp(table.size());
  for (std::size_t x = 0; x < v.size(); ++x)
    if (!v[x].is_zero()) supp.set(x);
  for (const auto& s : support)
    if (s == supp) return true;
  return false;
}

bool LiftSgResult::ideal_leq(const RatVector& a, const RatVector& b) const {
  if (!in_cone(a) || !in_cone(b)) throw PreconditionError("ideal_leq needs cone elements");
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!a[x].is_zero() && b[x].is_zero()) return false;
  return true;
}

bool LiftSgResult::is_embedding() const {
  const std::size_t n = table.size();
  if (!support[table.zero].empty()) return false;
  std::set<std::uint64_t> seen;
  for (std::size_t a = 0; a < n; ++a) {
    if (!seen.insert(support[a].bits()).second) return false;
    for (std::size_t b = 0; b < n; ++b)
      if (support[table.join[a][b]] != (support[a] | support[b])) return false;
  }
  return true;
}

bool LiftSgResult::reproduces_order() const {
  const std::size_t n = table.size();
  auto gen = [&](std::size_t s) {
    RatVector v(n);
    for (auto x : support[s].members()) v[x] = 1;
    return v;
  };
  for (std::size_t a = 0; a < n; ++a) {
    const RatVector ga = gen(a);
    if (!in_cone(ga)) return false;
    for (std::size_t b = 0; b < n; ++b)
      if (ideal_leq(ga, gen(b)) != table.leq(a, b)) return false;
  }
  return true;
}

LiftSgResult lift_sg(const JoinTable& s) {
  validate_join_table(s);
  LiftSgResult r;
  r.table = s;
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    BitSet j(n);
    for (std::size_t x = 0; x < n; ++x)
      if (!s.leq(a, x)) j.set(x);
    r.support.push_back(j);
  }
  if (!r.is_embedding() || !r.reproduces_order())
    throw InvariantViolation("lift_sg: support map is not an order embedding");
  return r;
}

}  // namespace dimlift
