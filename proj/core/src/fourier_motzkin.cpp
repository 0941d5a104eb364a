#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dimlift/error.hpp"
#include "dimlift/oracle.hpp"

namespace dimlift {

Rational LinForm::eval(const RatVector& x) const {
  if (x.size() != coeffs.size()) throw ShapeError("form evaluated at a point of the wrong dimension");
  Rational v = constant;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!coeffs[i].is_zero()) v += coeffs[i] * x[i];
  return v;
}

std::size_t LinSystem::add_var(std::string name) {
  vars.push_back(std::move(name));
  for (auto* group : {&eq, &ge, &gt})
    for (auto& f : *group) f.coeffs.emplace_back();
  return vars.size() - 1;
}

LinForm LinSystem::form() const { return LinForm{RatVector(vars.size()), Rational(0)}; }

void LinSystem::check_shape() const {
  for (const auto* group : {&eq, &ge, &gt})
    for (const auto& f : *group)
      if (f.coeffs.size() != vars.size()) throw ShapeError("linear form does not match the variable list");
}

bool LinSystem::satisfied_by(const RatVector& x) const {
  if (x.size() != vars.size()) return false;
  for (const auto& f : eq)
    if (!f.eval(x).is_zero()) return false;
  for (const auto& f : ge)
    if (f.eval(x).is_negative()) return false;
  for (const auto& f : gt)
    if (!f.eval(x).is_positive()) return false;
  return true;
}

namespace {

struct Row {
  RatVector a;  // coefficients over all variables
  Rational c;
  bool strict = false;
  std::set<std::size_t> origin;  // indices of the input inequalities it combines
  std::set<std::size_t> touched;  // variables present in any of those inputs
};

bool all_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

// Scale so the first nonzero coefficient is +-1.
void normalize(Row& r) {
  for (const auto& x : r.a)
    if (!x.is_zero()) {
      const Rational s = x.abs().inverse();
      for (auto& y : r.a) y *= s;
      r.c *= s;
      return;
    }
}

std::string key(const Row& r) {
  std::string k;
  for (const auto& x : r.a) k += x.str() + ",";
  return k;
}

// Keeps the tightest row per coefficient vector.
std::vector<Row> dedupe(std::vector<Row> rows) {
  std::map<std::string, Row> best;
  for (auto& r : rows) {
    auto [it, fresh] = best.try_emplace(key(r), r);
    if (fresh) continue;
    Row& b = it->second;
    if (r.c < b.c || (r.c == b.c && r.strict && !b.strict)) b = std::move(r);
  }
  std::vector<Row> out;
  for (auto& [k, r] : best) out.push_back(std::move(r));
  return out;
}

struct Stage {
  std::size_t var;
  std::vector<Row> rows;  // rows mentioning var at the time it was eliminated
};

constexpr std::size_t kMaxRows = 200000;

// How combined rows are discarded. Dropping rows only relaxes the projection,
// so an infeasible verdict stands under any mode; witnesses are re-checked.
enum class Prune { kGlobal, kPerRow, kNone };

// Solves { a.x + c (>|>=) 0 } over the listed variables. Returns nullopt if infeasible.
std::optional<RatVector> solve_group(std::vector<Row> rows, const std::vector<std::size_t>& group, std::size_t dim,
                                     Prune prune) {
  std::vector<Stage> stages;
  std::vector<std::size_t> left = group;
  std::size_t eliminated = 0;
  for (auto& r : rows)
    for (auto k : group)
      if (!r.a[k].is_zero()) r.touched.insert(k);
  while (true) {
    std::vector<Row> kept;
    for (auto& r : rows) {
      if (all_zero(r.a)) {
        if (r.c.is_negative() || (r.c.is_zero() && r.strict)) return std::nullopt;
        continue;
      }
      kept.push_back(std::move(r));
    }
    rows = dedupe(std::move(kept));
    if (left.empty()) break;

    // Fewest occurrences first.
    std::size_t best = 0, best_count = SIZE_MAX;
    for (std::size_t k = 0; k < left.size(); ++k) {
      std::size_t cnt = 0;
      for (const auto& r : rows)
        if (!r.a[left[k]].is_zero()) ++cnt;
      if (cnt < best_count) {
        best_count = cnt;
        best = k;
      }
    }
    const std::size_t v = left[best];
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(best));
    ++eliminated;

    Stage st{v, {}};
    std::vector<Row> pos, neg, rest;
    for (auto& r : rows) {
      const int s = r.a[v].sign();
      if (s != 0) st.rows.push_back(r);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    stages.push_back(std::move(st));
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Row r;
        r.origin = p.origin;
        r.origin.insert(n.origin.begin(), n.origin.end());
        r.touched = p.touched;
        r.touched.insert(n.touched.begin(), n.touched.end());
        const Rational wp = -n.a[v], wn = p.a[v];
        r.a.resize(dim);
        for (std::size_t k = 0; k < dim; ++k)
          if (!p.a[k].is_zero() || !n.a[k].is_zero()) r.a[k] = wp * p.a[k] + wn * n.a[k];
        r.a[v] = 0;
        if (prune == Prune::kGlobal && r.origin.size() > eliminated + 1) continue;
        if (prune == Prune::kPerRow) {
          // Redundant once it combines more inputs than one plus the variables it has lost.
          const auto gone = static_cast<std::size_t>(
              std::count_if(r.touched.begin(), r.touched.end(), [&](std::size_t k) { return r.a[k].is_zero(); }));
          if (r.origin.size() > gone + 1) continue;
        }
        r.c = wp * p.c + wn * n.c;
        r.strict = p.strict || n.strict;
        normalize(r);
        rest.push_back(std::move(r));
        if (rest.size() > kMaxRows) throw ResourceError("Fourier-Motzkin elimination produced too many constraints");
      }
    rows = std::move(rest);
  }

  RatVector x(dim);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t v = it->var;
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : it->rows) {
      Rational rest = r.c;
      for (std::size_t k = 0; k < dim; ++k)
        if (k != v && !r.a[k].is_zero()) rest += r.a[k] * x[k];
      const Rational bound = -rest / r.a[v];
      if (r.a[v].is_positive()) {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || r.strict) : r.strict;
          lo = bound;
        }
      } else if (!hi || bound < *hi || (bound == *hi && r.strict)) {
        hi_strict = (hi && bound == *hi) ? (hi_strict || r.strict) : r.strict;
        hi = bound;
      }
    }
    if (lo && hi)
      x[v] = (*lo == *hi) ? *lo : (*lo + *hi) / Rational(2);
    else if (lo)
      x[v] = *lo + 1;
    else if (hi)
      x[v] = *hi - 1;
    else
      x[v] = 0;
  }
  return x;
}

}  // namespace

FeasibilityResult fm_solve(const LinSystem& sys, std::size_t max_vars) {
  sys.check_shape();
  const std::size_t dim = sys.vars.size();

  // Substitute equalities: pivot variable = -(rest) / pivot coefficient.
  std::vector<LinForm> eqs = sys.eq;
  std::vector<std::pair<std::size_t, LinForm>> subst;  // var, expression with var's coefficient zero
  std::vector<Row> rows;
  std::size_t origin = 0;
  for (const auto& f : sys.ge) rows.push_back({f.coeffs, f.constant, false, {origin++}, {}});
  for (const auto& f : sys.gt) rows.push_back({f.coeffs, f.constant, true, {origin++}, {}});

  auto apply = [](RatVector& a, Rational& c, std::size_t v, const LinForm& e) {
    if (a[v].is_zero()) return;
    const Rational k = a[v];
    a[v] = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!e.coeffs[i].is_zero()) a[i] += k * e.coeffs[i];
    c += k * e.constant;
  };

  for (std::size_t i = 0; i < eqs.size(); ++i) {
    LinForm& f = eqs[i];
    std::optional<std::size_t> piv;
    for (std::size_t k = 0; k < dim; ++k)
      if (!f.coeffs[k].is_zero()) {
        piv = k;
        break;
      }
    if (!piv) {
      if (!f.constant.is_zero()) return {Verdict::kInfeasible, {}};
      continue;
    }
    const Rational p = f.coeffs[*piv];
    LinForm e{RatVector(dim), -f.constant / p};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != *piv && !f.coeffs[k].is_zero()) e.coeffs[k] = -f.coeffs[k] / p;
    for (std::size_t j = i + 1; j < eqs.size(); ++j) apply(eqs[j].coeffs, eqs[j].constant, *piv, e);
    for (auto& r : rows) apply(r.a, r.c, *piv, e);
    for (auto& [w, ex] : subst) apply(ex.coeffs, ex.constant, *piv, e);
    subst.emplace_back(*piv, std::move(e));
  }

  std::vector<bool> pivot(dim, false);
  for (const auto& [w, ex] : subst) pivot[w] = true;

  // Independent groups of free variables linked by shared rows.
  std::vector<std::size_t> parent(dim);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : rows) {
    std::optional<std::size_t> first;
    for (std::size_t k = 0; k < dim; ++k)
      if (!r.a[k].is_zero()) {
        if (first)
          parent[find(k)] = find(*first);
        else
          first = k;
      }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < dim; ++k)
    if (!pivot[k]) groups[find(k)].push_back(k);

  RatVector x(dim);
  std::vector<Row> constant_rows;
  std::map<std::size_t, std::vector<Row>> group_rows;
  for (auto& r : rows) {
    std::optional<std::size_t> g;
    for (std::size_t k = 0; k < dim; ++k)
      if (!r.a[k].is_zero()) {
        g = find(k);
        break;
      }
    if (g)
      group_rows[*g].push_back(std::move(r));
    else
      constant_rows.push_back(std::move(r));
  }
  for (const auto& r : constant_rows)
    if (r.c.is_negative() || (r.c.is_zero() && r.strict)) return {Verdict::kInfeasible, {}};

  for (auto& [root, vars] : groups) {
    if (vars.size() > max_vars)
      throw ResourceError("Fourier-Motzkin: " + std::to_string(vars.size()) + " coupled variables exceed the cap of " +
                          std::to_string(max_vars));
    auto& gr = group_rows[root];
    auto ok = [&](const RatVector& s) {
      for (const auto& r : gr) {
        Rational v = r.c;
        for (auto k : vars) v += r.a[k] * s[k];
        if (v.is_negative() || (v.is_zero() && r.strict)) return false;
      }
      return true;
    };
    std::optional<RatVector> sol;
    for (Prune mode : {Prune::kGlobal, Prune::kPerRow, Prune::kNone}) {
      sol = solve_group(gr, vars, dim, mode);
      if (!sol) return {Verdict::kInfeasible, {}};
      if (ok(*sol)) break;
      if (mode == Prune::kNone) throw InvariantViolation("Fourier-Motzkin: back-substituted point violates a constraint");
    }
    for (auto k : vars) x[k] = (*sol)[k];
  }

  for (auto it = subst.rbegin(); it != subst.rend(); ++it) x[it->first] = it->second.eval(x);
  if (!sys.satisfied_by(x)) throw InvariantViolation("Fourier-Motzkin: witness fails the original system");
  return {Verdict::kFeasible, std::move(x)};
}

}  // namespace dimlift
