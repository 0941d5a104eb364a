#include "dimlift/lift.hpp"

#include <algorithm>
#include <bit>

#include "dimlift/error.hpp"

namespace dimlift {

PssDiagram::PssDiagram(Poset poset, std::vector<PssSpace> objects, std::vector<std::optional<PssHom>> arrows)
    : poset_(std::move(poset)), objects_(std::move(objects)), arrows_(std::move(arrows)) {
  const std::size_t n = poset_.size();
  if (objects_.size() != n || arrows_.size() != n * n) throw ShapeError("PssDiagram: wrong number of objects or arrows");
}

const PssHom& PssDiagram::arrow(std::size_t x, std::size_t y) const {
  const std::size_t n = poset_.size();
  if (x >= n || y >= n || !poset_.leq(x, y) || !arrows_[x * n + y])
    throw PreconditionError("PssDiagram: no arrow " + std::to_string(x) + " -> " + std::to_string(y));
  return *arrows_[x * n + y];
}

std::optional<PssHom>& PssDiagram::arrow_slot(std::size_t x, std::size_t y) {
  return arrows_.at(x * poset_.size() + y);
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

Report verify_lifting(const SemDiagram& phi, const PssDiagram& psi, const std::vector<SemIso>& iota) {
  Report rep;
  const Poset& p = phi.poset();
  const std::size_t n = p.size();
  if (!(psi.poset() == p) || iota.size() != n) {
    rep.add("shape", false, "lifting is indexed by a different poset");
    return rep;
  }
  auto pname = [&](std::size_t x, std::size_t y) { return p.name(x) + "<" + p.name(y); };

  for (std::size_t x = 0; x < n; ++x) {
    const bool arity_ok = iota[x].arity() == phi.arity(x) && psi.object(x).component_count() == phi.arity(x);
    rep.add("iso " + p.name(x), arity_ok,
            arity_ok ? "" : "2^" + std::to_string(phi.arity(x)) + " vs " +
                                std::to_string(psi.object(x).component_count()) + " components");
    const PssHom& id = psi.arrow(x, x);
    rep.add("identity " + p.name(x), id.matrix() == RatMatrix::identity(psi.object(x).total_dim()));
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.lt(x, y)) continue;
      const PssHom& a = psi.arrow(x, y);
      const bool spaces_ok = a.src() == psi.object(x) && a.tgt() == psi.object(y);
      auto viol = spaces_ok ? find_positivity_violation(a.matrix(), a.src(), a.tgt()) : std::nullopt;
      rep.add("positive " + pname(x, y), spaces_ok && !viol,
              !spaces_ok ? "arrow spaces differ from the objects" : (viol ? viol->str() : ""));
      if (!spaces_ok || iota[x].arity() != phi.arity(x) || iota[y].arity() != phi.arity(y)) continue;
      const BoolMap lhs = bool_compose(iota[y].as_map(), phi.arrow(x, y));
      const BoolMap rhs = bool_compose(idc_hom(a), iota[x].as_map());
      rep.add("square " + pname(x, y), lhs == rhs, lhs == rhs ? "" : lhs.str() + " vs " + rhs.str());
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.lt(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!p.lt(y, z)) continue;
        const RatMatrix& xy = psi.arrow(x, y).matrix();
        const RatMatrix& yz = psi.arrow(y, z).matrix();
        const bool ok = yz.cols() == xy.rows() && yz * xy == psi.arrow(x, z).matrix();
        rep.add("functor " + p.name(x) + "<" + p.name(y) + "<" + p.name(z), ok);
      }
    }
  return rep;
}

namespace {

using Mask = Poset::Mask;

std::optional<std::size_t> single(Mask m) {
  if (m == 0) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(m));
}

}  // namespace

LiftResult dislift(const SemDiagram& phi, const LiftOptions& options) {
  const Poset& p = phi.poset();
  const std::size_t n = p.size();
  LiftResult res;
  if (options.order) {
    if (!is_valid_dismantling(p, *options.order)) throw PreconditionError("dislift: given order is not a dismantling");
    res.order = *options.order;
  } else {
    DismantleResult d = dismantle(p, options.preference);
    if (!d.order) throw UnsupportedInput("dislift: the index poset is not dismantlable");
    res.order = *d.order;
  }

  std::vector<PssSpace> obj(n);
  std::vector<std::optional<PssHom>> arr(n * n);
  res.iota.assign(n, SemIso());
  res.mu.assign(n, Rational(1));
  auto at = [&](std::size_t x, std::size_t y) -> std::optional<PssHom>& { return arr[x * n + y]; };

  Mask placed = 0;
  auto reinsertion = res.order.removal_sequence;
  std::reverse(reinsertion.begin(), reinsertion.end());
  for (auto x : reinsertion) {
    const Mask within = placed | (Mask{1} << x);
    const auto u = single(p.lower_covers(x, within));
    const auto v = single(p.upper_covers(x, within));
    const std::size_t ar = phi.arity(x);

    if (!u) {
      obj[x] = PssSpace::simplicial(ar);
      res.iota[x] = SemIso::identity(ar);
      if (v) at(x, *v) = rev_lift(bool_compose(res.iota[*v].as_map(), phi.arrow(x, *v)), obj[*v], obj[x]);
    } else {
      const BoolMap fb = bool_compose(phi.arrow(*u, x), res.iota[*u].inverse().as_map());
      Rational mu(1), lambda(1);
      if (v) {
        lambda = flatness_constant(*at(*u, *v)).lambda_min;
        mu = Rational(static_cast<long>(q_bound(phi.arity(*u), ar))) * lambda;
      }
      Generic g = gen(obj[*u], fb, mu, options.max_dim);
      obj[x] = g.space;
      res.iota[x] = g.iota;
      res.mu[x] = mu;
      at(*u, x) = g.map;
      if (v) {
        const BoolMap gg =
            bool_compose(res.iota[*v].as_map(), bool_compose(phi.arrow(x, *v), res.iota[x].inverse().as_map()));
        at(x, *v) = factor_general(g, *at(*u, *v), gg, lambda);
      }
    }
    at(x, x) = PssHom::identity(obj[x]);
    for (std::size_t t = 0; t < n; ++t) {
      if (!((placed >> t) & 1U)) continue;
      if (u && t != *u && p.lt(t, x)) at(t, x) = compose(*at(*u, x), *at(t, *u));
      if (v && t != *v && p.lt(x, t)) at(x, t) = compose(*at(*v, t), *at(x, *v));
    }
    placed = within;
  }
  res.psi = PssDiagram(p, std::move(obj), std::move(arr));
  res.report = verify_lifting(phi, res.psi, res.iota);
  return res;
}

}  // namespace dimlift
