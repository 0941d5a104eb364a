#include "dimlift/oracle.hpp"

#include <algorithm>

#include "dimlift/error.hpp"

namespace dimlift {

RatMatrix FactorSystem::assemble(const RatVector& x) const {
  if (x.size() != entries.size()) throw ShapeError("assignment does not match the factor system");
  RatMatrix g(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) g.at(entries[k].first, entries[k].second) = x[k];
  return g;
}

RatVector FactorSystem::encode(const RatMatrix& g) const {
  if (g.rows() != rows || g.cols() != cols) throw ShapeError("matrix does not match the factor system");
  RatVector x(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) x[k] = g.at(entries[k].first, entries[k].second);
  return x;
}

FactorSystem encode_factor_system(const PssHom& f, const PssHom& h, const BoolMap& gg) {
  const PssSpace& gs = f.tgt();
  const PssSpace& bs = h.tgt();
  if (!(f.src() == h.src())) throw ShapeError("encode_factor_system: f and h have different sources");
  if (gg.src_arity() != gs.component_count() || gg.tgt_arity() != bs.component_count())
    throw ShapeError("encode_factor_system: Boolean map has the wrong arities");

  FactorSystem fs;
  fs.rows = bs.total_dim();
  fs.cols = gs.total_dim();
  std::vector<std::vector<std::size_t>> row_vars(fs.rows);  // variable indices per row
  for (std::size_t r = 0; r < fs.rows; ++r) {
    const std::size_t k = bs.component_of(r);
    for (std::size_t c = 0; c < fs.cols; ++c)
      if (gg.atom_image(gs.component_of(c)).test(k)) {
        row_vars[r].push_back(fs.entries.size());
        fs.entries.emplace_back(r, c);
        fs.system.vars.push_back("g" + std::to_string(r) + "_" + std::to_string(c));
      }
  }
  LinSystem& sys = fs.system;
  const std::size_t n = sys.vars.size();
  const RatMatrix& fm = f.matrix();
  const RatMatrix& hm = h.matrix();
  for (std::size_t r = 0; r < fs.rows; ++r)
    for (std::size_t a = 0; a < fm.cols(); ++a) {
      LinForm e{RatVector(n), -hm.at(r, a)};
      for (auto v : row_vars[r]) e.coeffs[v] = fm.at(fs.entries[v].second, a);
      sys.eq.push_back(std::move(e));
    }
  for (std::size_t v = 0; v < n; ++v) {
    LinForm e{RatVector(n), Rational(0)};
    e.coeffs[v] = 1;
    sys.ge.push_back(std::move(e));
  }
  // One strict row-sum constraint per row and required source component.
  for (std::size_t r = 0; r < fs.rows; ++r)
    for (std::size_t j = 0; j < gs.component_count(); ++j) {
      LinForm e{RatVector(n), Rational(0)};
      bool any = false;
      for (auto v : row_vars[r])
        if (gs.component_of(fs.entries[v].second) == j) {
          e.coeffs[v] = 1;
          any = true;
        }
      if (any) sys.gt.push_back(std::move(e));
    }
  return fs;
}

LinSystem nonsimpl_square_system(const SquareParams& p, bool relaxed) {
  for (const auto* x : {&p.alpha, &p.beta, &p.xi, &p.eta, &p.alpha1, &p.beta1, &p.xi1, &p.eta1})
    if (!x->is_positive()) throw PreconditionError("square parameters must be strictly positive");
  LinSystem sys;
  enum { A, B, C, U, W, A1, B1, C1, V1, W1 };
  for (const char* name : {"a", "b", "c", "u", "w", "a'", "b'", "c'", "v'", "w'"}) sys.add_var(name);
  auto eq = [&](std::initializer_list<std::pair<int, Rational>> terms) {
    LinForm f = sys.form();
    for (const auto& [v, k] : terms) f.coeffs[static_cast<std::size_t>(v)] += k;
    sys.eq.push_back(std::move(f));
  };
  eq({{A, p.alpha}, {A1, -p.alpha1}});
  eq({{B, p.beta}, {B1, -p.beta1}});
  eq({{C, p.xi}, {C1, -p.xi1}});
  eq({{C, p.eta}, {C1, -p.eta1}});
  if (!relaxed) {
    eq({{U, p.alpha}, {W, p.xi}, {W1, -p.xi1}});
    eq({{W, p.eta}, {V1, -p.beta1}, {W1, -p.eta1}});
  }
  for (std::size_t v = 0; v < sys.vars.size(); ++v) {
    LinForm f = sys.form();
    f.coeffs[v] = 1;
    sys.gt.push_back(std::move(f));
  }
  return sys;
}

FeasibilityResult check_nonsimpl_square(const SquareParams& p, bool relaxed) {
  return fm_solve(nonsimpl_square_system(p, relaxed));
}

SquareParams random_square_params(Rng& rng, bool ratio_matched) {
  SquareParams p;
  for (auto* x : {&p.alpha, &p.beta, &p.xi, &p.eta, &p.alpha1, &p.beta1, &p.xi1, &p.eta1}) *x = rng.positive_rational();
  if (ratio_matched) p.eta1 = p.xi1 * p.eta / p.xi;
  return p;
}

QExample q_example(const Rational& mu) {
  const PssSpace a = PssSpace::simplicial(2);
  const BoolMap f = BoolMap::from_lists(2, 2, {{0}, {0, 1}});
  Generic g = gen(a, f, mu);
  PssHom h(a, PssSpace::simplicial(1), RatMatrix{{1, 1}});
  return {std::move(g), std::move(h), BoolMap::from_lists(2, 1, {{0}, {0}})};
}

IdempotentResidual idempotent_identity(const RatMatrix& alpha, const RatMatrix& beta, const RatMatrix& gamma) {
  if (alpha.rows() != alpha.cols() || gamma.rows() != gamma.cols() || beta.rows() != alpha.rows() ||
      beta.cols() != gamma.rows())
    throw ShapeError("idempotent_identity: shapes are not conformable");
  IdempotentResidual r;
  r.r1 = alpha * alpha;
  r.r1 -= alpha;
  r.r2 = gamma * gamma;
  r.r2 -= gamma;
  r.r3 = alpha * beta;
  r.r3 += beta * gamma;
  r.r3 -= beta;
  r.lhs = Rational(2) * (alpha * beta * gamma);
  r.rhs = alpha * r.r3;
  r.rhs += r.r3 * gamma;
  r.rhs -= r.r1 * beta;
  r.rhs -= beta * r.r2;
  return r;
}

bool is_nonzero_positive_block(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_negative()) return false;
      s += m.at(r, c);
    }
    if (!s.is_positive()) return false;
  }
  return true;
}

bool check_positive_product_nonzero(const RatMatrix& alpha, const RatMatrix& beta, const RatMatrix& gamma) {
  if (alpha.rows() != alpha.cols() || gamma.rows() != gamma.cols() || beta.rows() != alpha.rows() ||
      beta.cols() != gamma.rows())
    throw ShapeError("check_positive_product_nonzero: shapes are not conformable");
  if (!is_nonzero_positive_block(alpha) || !is_nonzero_positive_block(beta) || !is_nonzero_positive_block(gamma))
    throw PreconditionError("check_positive_product_nonzero: every factor must be a nonzero positive block");
  return is_nonzero_positive_block(Rational(2) * (alpha * beta * gamma));
}

RatMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.rational();
  return m;
}

RatMatrix random_positive_block(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows == 0 || cols == 0) throw PreconditionError("random_positive_block needs positive dimensions");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.chance(1, 2)) m.at(r, c) = rng.positive_rational();
    const std::size_t c = rng.below(cols);
    if (m.at(r, c).is_zero()) m.at(r, c) = rng.positive_rational();
  }
  return m;
}

std::optional<LexViolation> check_lex_candidate(const PssSpace& h, const RatVector& small, const RatVector& large,
                                                const SemIso& alpha) {
  using Kind = LexViolation::Kind;
  if (h.component_count() != 2) throw PreconditionError("check_lex_candidate: H must have exactly 2 components");
  if (small.size() != h.total_dim() || large.size() != h.total_dim())
    throw ShapeError("check_lex_candidate: images do not belong to H");
  if (alpha.arity() != 2) throw ShapeError("check_lex_candidate: alpha must be an automorphism of 2^2");

  if (!h.in_cone(small)) return LexViolation{Kind::kSmallNotPositive, std::nullopt, std::nullopt, to_string(small)};
  if (!h.in_cone(large)) return LexViolation{Kind::kLargeNotPositive, std::nullopt, std::nullopt, to_string(large)};

  for (std::size_t k = 0; k < 2; ++k) {
    const std::size_t off = h.offset(k), dim = h.component_size(k);
    if (small[off].is_zero()) continue;  // cone element: the whole block is zero
    std::optional<Rational> ratio;
    for (std::size_t i = off; i < off + dim; ++i) {
      const Rational q = large[i] / small[i];
      if (!ratio || q < *ratio) ratio = q;
    }
    std::int64_t n = std::max<std::int64_t>(1, ratio->ceil_int64());
    auto diff = [&](std::int64_t m) { return large - Rational(static_cast<long long>(m)) * small; };
    for (int step = 0; step < 2 && h.in_cone(diff(n)); ++step) ++n;
    if (h.in_cone(diff(n))) throw InvariantViolation("check_lex_candidate: no witness multiple found");
    return LexViolation{Kind::kNotInfinitesimal, k, n,
                        "component " + std::to_string(k) + ": large - " + std::to_string(n) + " small leaves the cone"};
  }

  const BoolMap am = alpha.as_map();
  const BitSet sa = am.image(h.support(small));
  const BitSet sb = am.image(h.support(large));
  if (sa != BitSet(2, {0}) || sb != BitSet::full(2))
    return LexViolation{Kind::kSquare, std::nullopt, std::nullopt,
                        "ideal images " + sa.str() + ", " + sb.str() + " instead of {0}, {0,1}"};
  return std::nullopt;
}

LexCandidate random_lex_candidate(Rng& rng, std::size_t max_dim) {
  if (max_dim == 0) throw PreconditionError("random_lex_candidate needs max_dim >= 1");
  std::vector<std::vector<std::string>> comps(2);
  for (std::size_t k = 0; k < 2; ++k) {
    const std::size_t d = 1 + rng.below(max_dim);
    for (std::size_t i = 0; i < d; ++i) comps[k].push_back("h" + std::to_string(k) + "_" + std::to_string(i));
  }
  PssSpace h(comps);
  auto draw = [&]() {
    RatVector v(h.total_dim());
    for (std::size_t k = 0; k < 2; ++k) {
      const std::uint64_t kind = rng.below(6);
      for (std::size_t i = h.offset(k); i < h.offset(k) + h.component_size(k); ++i) {
        if (kind < 2)
          v[i] = 0;
        else if (kind < 5)
          v[i] = rng.positive_rational();
        else
          v[i] = rng.rational();
      }
    }
    return v;
  };
  RatVector small = draw();
  RatVector large = draw();
  SemIso alpha = rng.chance(1, 2) ? SemIso::identity(2) : SemIso(std::vector<std::size_t>{1, 0});
  return {std::move(h), std::move(small), std::move(large), std::move(alpha)};
}

}  // namespace dimlift
