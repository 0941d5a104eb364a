#include <algorithm>

#include "dimlift/error.hpp"
#include "dimlift/lift.hpp"
#include "dimlift/random.hpp"

namespace dimlift {

void validate_chain_spec(const ChainSpec& spec) {
  const std::size_t len = spec.length();
  if (spec.arity.empty()) throw PreconditionError("chain spec: no stages");
  if (spec.s.size() != len || spec.t.size() != len || spec.h.size() != len + 1 || spec.f.size() != len + 1)
    throw PreconditionError("chain spec: inconsistent number of stages");
  for (std::size_t i = 0; i <= len; ++i) {
    const auto& h = spec.h[i];
    if (h.component_count() != h.total_dim())
      throw PreconditionError("chain spec: H_" + std::to_string(i) + " is not simplicial");
    if (spec.f[i].src_arity() != spec.arity[i] || spec.f[i].tgt_arity() != h.component_count())
      throw PreconditionError("chain spec: f_" + std::to_string(i) + " has the wrong arities");
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (spec.s[i].src_arity() != spec.arity[i] || spec.s[i].tgt_arity() != spec.arity[i + 1])
      throw PreconditionError("chain spec: s_" + std::to_string(i) + " has the wrong arities");
    if (!(spec.t[i].src() == spec.h[i]) || !(spec.t[i].tgt() == spec.h[i + 1]))
      throw PreconditionError("chain spec: t_" + std::to_string(i) + " has the wrong spaces");
    if (bool_compose(idc_hom(spec.t[i]), spec.f[i]) != bool_compose(spec.f[i + 1], spec.s[i]))
      throw PreconditionError("chain spec: square " + std::to_string(i) + " does not commute");
  }
}

ChainLifting lift_chain(const ChainSpec& spec, std::size_t max_dim) {
  validate_chain_spec(spec);
  ChainLifting out;
  const std::size_t len = spec.length();
  out.g.push_back(PssSpace::simplicial(spec.arity[0]));
  out.alpha.push_back(SemIso::identity(spec.arity[0]));
  out.f.push_back(rev_lift(spec.f[0], spec.h[0], out.g[0]));
  out.mu.push_back(Rational(1));
  for (std::size_t i = 0; i < len; ++i) {
    const PssHom tf = compose(spec.t[i], out.f[i]);
    const Rational lambda = flatness_constant(tf).lambda_min;
    const Rational mu = Rational(static_cast<long>(q_bound(spec.arity[i], spec.arity[i + 1]))) * lambda;
    Generic g = gen(out.g[i], bool_compose(spec.s[i], out.alpha[i].inverse().as_map()), mu, max_dim);
    const BoolMap want = bool_compose(spec.f[i + 1], g.iota.inverse().as_map());
    PssHom next = factor_general(g, tf, want, lambda);
    out.g.push_back(g.space);
    out.s.push_back(g.map);
    out.alpha.push_back(g.iota);
    out.f.push_back(std::move(next));
    out.mu.push_back(mu);
  }
  for (std::size_t i = 0; i <= len; ++i) {
    const bool ok = bool_compose(idc_hom(out.f[i]), out.alpha[i].as_map()) == spec.f[i];
    out.report.add("lift " + std::to_string(i), ok);
  }
  for (std::size_t i = 0; i < len; ++i) {
    const bool sq = out.f[i + 1].matrix() * out.s[i].matrix() == spec.t[i].matrix() * out.f[i].matrix();
    out.report.add("square " + std::to_string(i), sq);
    const bool al = bool_compose(idc_hom(out.s[i]), out.alpha[i].as_map()) ==
                    bool_compose(out.alpha[i + 1].as_map(), spec.s[i]);
    out.report.add("ideals " + std::to_string(i), al);
  }
  return out;
}

namespace {

PssHom random_simplicial_map(const PssSpace& a, const PssSpace& b, Rng& rng) {
  RatMatrix m(b.total_dim(), a.total_dim());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (rng.chance(2, 3)) m.at(r, c) = rng.positive_rational(4, 3);
  return PssHom(a, b, std::move(m));
}

// Pattern of f_{i+1} forced by the square, or nullopt if no Boolean map fits.
std::optional<BoolMap> close_square(const BoolMap& s, const BoolMap& tf, std::size_t width, Rng& rng) {
  std::vector<BitSet> pattern;
  for (std::size_t c = 0; c < s.tgt_arity(); ++c) {
    BitSet p = BitSet::full(width);
    bool hit = false;
    for (std::size_t a = 0; a < s.src_arity(); ++a)
      if (s.atom_image(a).test(c)) {
        p &= tf.atom_image(a);
        hit = true;
      }
    if (!hit) {
      p = BitSet(width);
      for (std::size_t k = 0; k < width; ++k)
        if (rng.chance(1, 2)) p.set(k);
    }
    pattern.push_back(p);
  }
  BoolMap f(s.tgt_arity(), width, pattern);
  if (bool_compose(f, s) != tf) return std::nullopt;
  return f;
}

}  // namespace

ChainSpec random_chain_spec(std::size_t length, std::size_t max_arity, std::size_t max_h_dim, std::uint64_t seed) {
  if (max_arity == 0 || max_h_dim == 0) throw PreconditionError("random_chain_spec needs positive bounds");
  Rng rng(seed);
  ChainSpec spec;
  for (std::size_t i = 0; i <= length; ++i) {
    spec.arity.push_back(1 + rng.below(max_arity));
    spec.h.push_back(PssSpace::simplicial(1 + rng.below(max_h_dim), "h"));
  }
  spec.f.push_back(random_bool_map(spec.arity[0], spec.h[0].component_count(), rng));
  for (std::size_t i = 0; i < length; ++i) {
    std::optional<BoolMap> next;
    for (int attempt = 0; attempt < 32 && !next; ++attempt) {
      BoolMap s = random_bool_map(spec.arity[i], spec.arity[i + 1], rng);
      PssHom t = random_simplicial_map(spec.h[i], spec.h[i + 1], rng);
      next = close_square(s, bool_compose(idc_hom(t), spec.f[i]), spec.h[i + 1].component_count(), rng);
      if (next) {
        spec.s.push_back(std::move(s));
        spec.t.push_back(std::move(t));
      }
    }
    if (!next) {
      // A zero transition map always closes the square.
      spec.s.push_back(random_bool_map(spec.arity[i], spec.arity[i + 1], rng));
      spec.t.push_back(PssHom::zero(spec.h[i], spec.h[i + 1]));
      next = close_square(spec.s.back(), BoolMap::zero(spec.arity[i], spec.h[i + 1].component_count()),
                          spec.h[i + 1].component_count(), rng);
    }
    spec.f.push_back(*next);
  }
  validate_chain_spec(spec);
  return spec;
}

}  // namespace dimlift
