#include "dimlift/genfact.hpp"

#include <algorithm>

#include "dimlift/error.hpp"
#include "dimlift/refine.hpp"

namespace dimlift {

std::size_t GenComponent::tuple_count() const {
  std::size_t n = 1;
  for (auto s : factor_sizes) n *= s;
  return n;
}

std::vector<std::size_t> GenComponent::tuple(std::size_t tuple_index) const {
  std::vector<std::size_t> phi(factor_sizes.size());
  for (std::size_t k = factor_sizes.size(); k-- > 0;) {
    phi[k] = tuple_index % factor_sizes[k];
    tuple_index /= factor_sizes[k];
  }
  return phi;
}

std::vector<std::string> GenComponent::labels(const std::string& prefix) const {
  std::vector<std::string> out;
  out.reserve(dim());
  for (std::size_t x = 0; x < subset_count(); ++x) {
    std::string xs = "{";
    for (std::size_t k = 0; k < support.size(); ++k)
      if ((x >> k) & 1U) xs += (xs.size() > 1 ? "," : "") + std::to_string(support[k]);
    xs += "}";
    for (std::size_t t = 0; t < tuple_count(); ++t) {
      std::string ts = "(";
      auto phi = tuple(t);
      for (std::size_t k = 0; k < phi.size(); ++k) ts += (k ? "," : "") + std::to_string(phi[k]);
      out.push_back(prefix + xs + ts + ")");
    }
  }
  return out;
}

namespace {

void require_mu(const Rational& mu) {
  if (mu < Rational(1)) throw PreconditionError("generic parameter must be >= 1, got " + mu.str());
}

RatMatrix rows_of(const RatMatrix& m, std::size_t r0, std::size_t nr) { return m.block(r0, nr, 0, m.cols()); }

PssHom restrict_target(const PssHom& h, std::size_t k) {
  const auto& b = h.tgt();
  return PssHom(h.src(), PssSpace({b.component(k)}), rows_of(h.matrix(), b.offset(k), b.component_size(k)));
}

void verify_factor(const PssHom& g, const Generic& f, const PssHom& h, const BoolMap& gg, const char* who) {
  if (g.matrix() * f.map.matrix() != h.matrix())
    throw InvariantViolation(std::string(who) + ": composite does not reproduce the target map");
  if (idc_hom(g) != gg) throw InvariantViolation(std::string(who) + ": compact-ideal map differs from the request");
}

}  // namespace

Generic gen(const PssSpace& a, const BoolMap& f, const Rational& mu, std::size_t max_dim,
            const std::string& label_prefix) {
  require_mu(mu);
  if (f.src_arity() != a.component_count())
    throw ShapeError("gen: Boolean map has arity " + std::to_string(f.src_arity()) + ", space has " +
                     std::to_string(a.component_count()) + " components");
  Generic out;
  out.src = a;
  out.mu = mu;
  const std::size_t n = f.tgt_arity();
  std::size_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    GenComponent part;
    for (std::size_t i = 0; i < a.component_count(); ++i)
      if (f.atom_image(i).test(j)) {
        part.support.push_back(i);
        part.factor_sizes.push_back(a.component_size(i));
      }
    if (part.support.size() > kPowersetCap)
      throw ResourceError("generic space over " + std::to_string(part.support.size()) + " components");
    long double est = static_cast<long double>(part.subset_count());
    for (auto s : part.factor_sizes) est *= static_cast<long double>(s);
    if (est + static_cast<long double>(total) > static_cast<long double>(max_dim))
      throw ResourceError("generic space would exceed the dimension cap of " + std::to_string(max_dim));
    total += part.dim();
    out.parts.push_back(std::move(part));
  }
  std::vector<std::vector<std::string>> comps;
  for (std::size_t j = 0; j < n; ++j) comps.push_back(out.parts[j].labels(label_prefix + std::to_string(j)));
  out.space = PssSpace(std::move(comps));

  RatMatrix m(out.space.total_dim(), a.total_dim());
  for (std::size_t j = 0; j < n; ++j) {
    const auto& part = out.parts[j];
    const std::size_t r0 = out.space.offset(j);
    for (std::size_t t = 0; t < part.tuple_count(); ++t) {
      auto phi = part.tuple(t);
      for (std::size_t x = 0; x < part.subset_count(); ++x) {
        const std::size_t row = r0 + part.index(x, t);
        for (std::size_t k = 0; k < part.support.size(); ++k)
          m.at(row, a.offset(part.support[k]) + phi[k]) = ((x >> k) & 1U) ? mu : Rational(1);
      }
    }
  }
  out.map = PssHom(a, out.space, std::move(m));
  out.iota = SemIso::identity(n);
  if (bool_compose(out.iota.as_map(), f) != idc_hom(out.map))
    throw InvariantViolation("gen: compact-ideal image of the generic map differs from the Boolean map");
  return out;
}

Generic gen_simple(const PssSpace& a, const BoolMap& f, const Rational& mu, std::size_t max_dim) {
  if (f.tgt_arity() != 1) throw ShapeError("gen_simple needs a map into 2");
  return gen(a, f, mu, max_dim);
}

Generic generic_part(const Generic& f, std::size_t j) {
  Generic out;
  out.src = f.src;
  out.space = PssSpace({f.space.component(j)});
  out.map = PssHom(f.src, out.space, rows_of(f.map.matrix(), f.space.offset(j), f.space.component_size(j)));
  out.iota = SemIso::identity(1);
  out.mu = f.mu;
  out.parts = {f.parts.at(j)};
  return out;
}

FlatnessReport flatness_constant(const PssHom& f) {
  FlatnessReport rep;
  const auto& a = f.src();
  const auto& b = f.tgt();
  for (std::size_t k = 0; k < b.component_count(); ++k) {
    std::vector<std::pair<std::size_t, RatVector>> images;
    for (std::size_t i = 0; i < a.component_count(); ++i) {
      if (f.block_is_zero(k, i)) continue;
      RatVector v(b.component_size(k));
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < a.component_size(i); ++c) v[r] += f.matrix().at(b.offset(k) + r, a.offset(i) + c);
      images.emplace_back(i, std::move(v));
    }
    for (const auto& [i, vi] : images)
      for (const auto& [j, vj] : images) {
        if (i == j) continue;
        for (std::size_t c = 0; c < vi.size(); ++c) {
          Rational r = vi[c] / vj[c];
          if (r > rep.lambda_min) {
            rep.lambda_min = r;
            rep.target = k;
            rep.numerator = i;
            rep.denominator = j;
            rep.coordinate = c;
          }
        }
      }
  }
  return rep;
}

std::size_t q_bound(std::size_t m, std::size_t p) {
  if (m == 0 || p == 0) return 1;
  if (m - 1 >= 63) return p;
  return std::min(std::size_t{1} << (m - 1), p);
}

PssHom rev_lift(const BoolMap& f, const PssSpace& e, const std::optional<PssSpace>& src) {
  if (f.tgt_arity() != e.component_count())
    throw ShapeError("rev_lift: Boolean map targets 2^" + std::to_string(f.tgt_arity()) + ", space has " +
                     std::to_string(e.component_count()) + " components");
  PssSpace s = src ? *src : PssSpace::simplicial(f.src_arity());
  if (s.component_count() != f.src_arity() || s.total_dim() != f.src_arity())
    throw ShapeError("rev_lift: source must be Q^m");
  RatMatrix m(e.total_dim(), s.total_dim());
  for (std::size_t i = 0; i < f.src_arity(); ++i)
    for (auto j : f.atom_image(i).members())
      for (std::size_t r = 0; r < e.component_size(j); ++r) m.at(e.offset(j) + r, i) = 1;
  return PssHom(std::move(s), e, std::move(m));
}

PssHom factor_simple(const Generic& f, const PssHom& g) {
  if (f.parts.size() != 1) throw PreconditionError("factor_simple needs a simple generic space");
  if (g.tgt().component_count() != 1) throw PreconditionError("factor_simple: target must be simple");
  if (!(g.src() == f.src)) throw ShapeError("factor_simple: maps have different sources");
  const GenComponent& part = f.parts[0];
  const PssSpace& a = f.src;
  const Rational& mu = f.mu;

  BitSet want(a.component_count());
  for (auto i : part.support) want.set(i);
  BitSet have(a.component_count());
  const BoolMap ig = idc_hom(g);
  for (std::size_t i = 0; i < a.component_count(); ++i)
    if (!ig.atom_image(i).empty()) have.set(i);
  if (have != want)
    throw PreconditionError("factor_simple: map is nonzero on components " + have.str() + ", generic support is " +
                            want.str());
  const FlatnessReport fl = flatness_constant(g);
  if (fl.lambda_min > mu)
    throw PreconditionError("factor_simple: map is only " + fl.lambda_min.str() + "-flat, generic parameter is " +
                            mu.str());

  const std::size_t dc = g.tgt().total_dim();
  if (part.support.empty()) return PssHom::zero(f.space, g.tgt());

  const std::size_t ni = part.support.size();
  std::vector<std::vector<RatVector>> cols(ni);  // a_(t) per position
  std::vector<RatVector> totals;                  // a_i = g(1_{A_i})
  for (std::size_t k = 0; k < ni; ++k) {
    RatVector tot(dc);
    for (std::size_t t = 0; t < part.factor_sizes[k]; ++t) {
      cols[k].push_back(g.matrix().column(a.offset(part.support[k]) + t));
      tot = tot + cols[k].back();
    }
    totals.push_back(std::move(tot));
  }

  const auto b = lamas_decompose(totals, mu);
  if (!check_lamas(totals, mu, b)) throw InvariantViolation("factor_simple: lambda-decomposition check failed");

  // c[k][X][t], with sum_X weight_X c = a_(t) and sum_t c = b_X.
  std::vector<std::vector<std::vector<RatVector>>> c(ni);
  for (std::size_t k = 0; k < ni; ++k) {
    std::vector<RatVector> v;
    for (std::size_t x = 0; x < b.size(); ++x) v.push_back(((x >> k) & 1U) ? mu * b[x] : b[x]);
    auto cp = riesz_refine(cols[k], v);
    if (!check_riesz(cols[k], v, cp)) throw InvariantViolation("factor_simple: refinement check failed");
    c[k].assign(b.size(), {});
    const Rational inv = mu.inverse();
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t t = 0; t < cols[k].size(); ++t)
        c[k][x].push_back(((x >> k) & 1U) ? inv * cp[t][x] : cp[t][x]);
  }

  RatMatrix hm(dc, part.dim());
  RatVector unit_image(dc);
  for (std::size_t x = 0; x < b.size(); ++x) {
    std::vector<std::vector<RatVector>> decomps;
    for (std::size_t k = 0; k < ni; ++k) decomps.push_back(c[k][x]);
    MultTable d = mult_refine(decomps);
    if (!check_mult(decomps, d)) throw InvariantViolation("factor_simple: multiple refinement check failed");
    for (std::size_t t = 0; t < d.values.size(); ++t) hm.set_column(part.index(x, t), d.values[t]);
    unit_image = unit_image + b[x];
  }
  PssHom h(f.space, g.tgt(), std::move(hm));
  if (h.apply(f.space.order_unit()) != unit_image)
    throw InvariantViolation("factor_simple: image of the order-unit is not the sum of the decomposition");
  if (h.matrix() * f.map.matrix() != g.matrix())
    throw InvariantViolation("factor_simple: composite does not reproduce the map");
  return h;
}

PssHom factor_idc(const Generic& f, const PssHom& h, const BoolMap& gg) {
  if (f.parts.size() != 1 || h.tgt().component_count() != 1)
    throw PreconditionError("factor_idc needs simple generic and target spaces");
  if (gg.src_arity() != 1 || gg.tgt_arity() != 1) throw ShapeError("factor_idc: Boolean map must be 2 -> 2");
  if (idc_hom(h) != bool_compose(gg, idc_hom(f.map)))
    throw PreconditionError("factor_idc: compact-ideal maps do not commute");
  PssHom g;
  if (h.is_zero()) {
    RatMatrix m(h.tgt().total_dim(), f.space.total_dim());
    if (!gg.is_zero())
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = 1;
    g = PssHom(f.space, h.tgt(), std::move(m));
  } else {
    g = factor_simple(f, h);
  }
  verify_factor(g, f, h, gg, "factor_idc");
  return g;
}

PssHom factor_general(const Generic& f, const PssHom& h, const BoolMap& gg, const std::optional<Rational>& lambda) {
  if (!(h.src() == f.src)) throw ShapeError("factor_general: maps have different sources");
  const std::size_t m = f.src.component_count();
  const std::size_t p = f.space.component_count();
  const PssSpace& bsp = h.tgt();
  if (gg.src_arity() != p || gg.tgt_arity() != bsp.component_count())
    throw ShapeError("factor_general: Boolean map has the wrong arities");
  if (idc_hom(h) != bool_compose(gg, idc_hom(f.map)))
    throw PreconditionError("factor_general: compact-ideal maps do not commute");
  const Rational flat = flatness_constant(h).lambda_min;
  const Rational lam = lambda ? *lambda : flat;
  if (lam < flat) throw PreconditionError("factor_general: map is not " + lam.str() + "-flat");
  const std::size_t q = q_bound(m, p);
  if (f.mu < Rational(static_cast<long>(q)) * lam)
    throw PreconditionError("factor_general: generic parameter " + f.mu.str() + " is below q*lambda = " +
                            (Rational(static_cast<long>(q)) * lam).str());

  std::vector<Generic> parts;
  for (std::size_t j = 0; j < p; ++j) parts.push_back(generic_part(f, j));

  RatMatrix out(bsp.total_dim(), f.space.total_dim());
  for (std::size_t k = 0; k < bsp.component_count(); ++k) {
    const PssHom hk = restrict_target(h, k);
    // H_j: source components seen by the j-th part after mapping to component k.
    std::vector<std::vector<std::size_t>> hsets(p);
    for (std::size_t j = 0; j < p; ++j)
      if (gg.atom_image(j).test(k)) hsets[j] = f.parts[j].support;
    std::vector<std::vector<std::size_t>> distinct;
    for (const auto& s : hsets)
      if (!s.empty() && std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    std::vector<std::size_t> n(m, 0);
    for (const auto& s : distinct)
      for (auto i : s) ++n[i];

    for (std::size_t j = 0; j < p; ++j) {
      const auto pj = static_cast<long>(std::count(hsets.begin(), hsets.end(), hsets[j]));
      RatMatrix hj(hk.tgt().total_dim(), f.src.total_dim());
      for (auto i : hsets[j]) {
        const Rational scale = Rational(1) / Rational(static_cast<long>(n[i]) * pj);
        for (std::size_t r = 0; r < hj.rows(); ++r)
          for (std::size_t c = 0; c < f.src.component_size(i); ++c)
            hj.at(r, f.src.offset(i) + c) = scale * hk.matrix().at(r, f.src.offset(i) + c);
      }
      const BoolMap gjk(1, 1, {gg.atom_image(j).test(k) ? BitSet(1, {0}) : BitSet(1)});
      PssHom gj = factor_idc(parts[j], PssHom(f.src, hk.tgt(), std::move(hj)), gjk);
      out.set_block(bsp.offset(k), f.space.offset(j), gj.matrix());
    }
  }
  PssHom g(f.space, bsp, std::move(out));
  verify_factor(g, f, h, gg, "factor_general");
  return g;
}

}  // namespace dimlift

namespace dimlift {

namespace {

PssSpace random_space(Rng& rng, std::size_t max_components, std::size_t max_comp_dim, const std::string& prefix) {
  std::vector<std::vector<std::string>> comps(1 + rng.below(max_components));
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::size_t d = 1 + rng.below(max_comp_dim);
    for (std::size_t i = 0; i < d; ++i)
      comps[k].push_back(prefix + std::to_string(k) + (d > 1 ? "_" + std::to_string(i) : ""));
  }
  return PssSpace(std::move(comps));
}

}  // namespace

FactorInstance random_factor_instance(Rng& rng, std::size_t max_components, std::size_t max_comp_dim,
                                      std::size_t max_arity, std::size_t max_dim) {
  if (max_components == 0 || max_comp_dim == 0 || max_arity == 0)
    throw PreconditionError("random_factor_instance needs positive bounds");
  const PssSpace a = random_space(rng, max_components, max_comp_dim, "a");
  const PssSpace b = random_space(rng, max_components, max_comp_dim, "b");
  const BoolMap fb = random_bool_map(a.component_count(), 1 + rng.below(max_arity), rng);
  const BoolMap gg = random_bool_map(fb.tgt_arity(), b.component_count(), rng);
  const BoolMap hb = bool_compose(gg, fb);

  RatMatrix hm(b.total_dim(), a.total_dim());
  for (std::size_t i = 0; i < a.component_count(); ++i)
    for (auto k : hb.atom_image(i).members())
      for (std::size_t r = 0; r < b.component_size(k); ++r) {
        const std::size_t c = rng.below(a.component_size(i));
        for (std::size_t cc = 0; cc < a.component_size(i); ++cc)
          if (cc == c || rng.chance(1, 2)) hm.at(b.offset(k) + r, a.offset(i) + cc) = rng.positive_rational(5, 3);
      }
  PssHom h(a, b, std::move(hm));
  const Rational lambda = flatness_constant(h).lambda_min;
  const Rational mu = Rational(static_cast<long>(q_bound(a.component_count(), fb.tgt_arity()))) * lambda;
  return {gen(a, fb, mu, max_dim), std::move(h), gg, lambda};
}

}  // namespace dimlift
