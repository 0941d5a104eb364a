#include "doctest.h"
#include "dimlift/error.hpp"
#include "dimlift/oracle.hpp"
#include "support.hpp"

using namespace dimlift;

namespace {

LinForm form(const LinSystem& s, std::initializer_list<Rational> coeffs, const Rational& c) {
  LinForm f = s.form();
  std::size_t i = 0;
  for (const auto& k : coeffs) f.coeffs[i++] = k;
  f.constant = c;
  return f;
}

}  // namespace

TEST_CASE("fm_solve on tiny systems") {
  LinSystem s;
  s.add_var("x");
  s.gt.push_back(form(s, {1}, 0));            // x > 0
  s.gt.push_back(form(s, {-1}, 1));           // x < 1
  const auto r = fm_solve(s);
  REQUIRE(r.feasible());
  CHECK(s.satisfied_by(r.witness));

  s.gt.push_back(form(s, {-1}, 0));           // x < 0
  CHECK_FALSE(fm_solve(s).feasible());

  LinSystem t;
  t.add_var("x");
  t.add_var("y");
  t.eq.push_back(form(t, {1, 1}, -2));        // x + y = 2
  t.ge.push_back(form(t, {1, -1}, 0));        // x >= y
  t.gt.push_back(form(t, {0, 1}, 0));         // y > 0
  const auto rt = fm_solve(t);
  REQUIRE(rt.feasible());
  CHECK(t.satisfied_by(rt.witness));

  LinSystem u;
  u.add_var("x");
  u.ge.push_back(form(u, {1}, 0));
  u.ge.push_back(form(u, {-1}, 0));
  const auto ru = fm_solve(u);
  REQUIRE(ru.feasible());
  CHECK(ru.witness[0] == 0);
  u.gt.push_back(form(u, {1}, 0));
  CHECK_FALSE(fm_solve(u).feasible());

  LinSystem v;
  v.add_var("x");
  v.eq.push_back(form(v, {0}, 1));
  CHECK_FALSE(fm_solve(v).feasible());

  LinSystem bad;
  bad.add_var("x");
  bad.ge.push_back(LinForm{RatVector(2), Rational(0)});
  CHECK_THROWS_AS(fm_solve(bad), ShapeError);
}

TEST_CASE("fm_solve enforces the variable cap") {
  LinSystem s;
  for (int i = 0; i < 4; ++i) s.add_var("x" + std::to_string(i));
  s.gt.push_back(form(s, {1, 1, 1, 1}, 0));
  CHECK_THROWS_AS(fm_solve(s, 3), ResourceError);
  CHECK(fm_solve(s, 4).feasible());
}

TEST_CASE("fm_solve agrees with a grid search") {
  Rng rng(61);
  std::size_t feasible = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(3);
    const LinSystem s = testing::random_system(n, rng);
    const auto r = fm_solve(s);
    if (r.feasible()) {
      ++feasible;
      CHECK(s.satisfied_by(r.witness));
    }
    const auto g = testing::grid_search(s, 4, 4);
    if (g) CHECK(r.feasible());
  }
  CHECK(feasible > 0);
  CHECK(feasible < 100);
}

TEST_CASE("factor system encoding") {
  const PssSpace q2 = PssSpace::simplicial(2);
  const PssHom id = PssHom::identity(q2);
  const FactorSystem fs = encode_factor_system(id, id, BoolMap::identity(2));
  CHECK(fs.system.vars.size() == 2);
  const auto r = fm_solve(fs.system);
  REQUIRE(r.feasible());
  CHECK(fs.assemble(r.witness) == RatMatrix::identity(2));
  CHECK(fs.encode(RatMatrix::identity(2)) == r.witness);
  CHECK_THROWS_AS(fs.assemble(RatVector(5)), ShapeError);
}

TEST_CASE("q example dichotomy") {
  const QExample one = q_example(1);
  const FactorSystem f1 = encode_factor_system(one.f.map, one.h, one.gg);
  CHECK_FALSE(fm_solve(f1.system, 64).feasible());

  const QExample two = q_example(2);
  const FactorSystem f2 = encode_factor_system(two.f.map, two.h, two.gg);
  const auto r = fm_solve(f2.system, 64);
  REQUIRE(r.feasible());
  const RatMatrix g = f2.assemble(r.witness);
  CHECK(g * two.f.map.matrix() == two.h.matrix());
}

TEST_CASE("non-simplicial square") {
  SquareParams ones;
  for (auto* x : {&ones.alpha, &ones.beta, &ones.xi, &ones.eta, &ones.alpha1, &ones.beta1, &ones.xi1, &ones.eta1})
    *x = 1;
  CHECK_FALSE(check_nonsimpl_square(ones).feasible());
  CHECK(check_nonsimpl_square(ones, true).feasible());

  Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    CHECK_FALSE(check_nonsimpl_square(random_square_params(rng)).feasible());
    const auto r = check_nonsimpl_square(random_square_params(rng, true), true);
    CHECK(r.feasible());
  }
  SquareParams bad = ones;
  bad.xi = 0;
  CHECK_THROWS_AS(nonsimpl_square_system(bad), PreconditionError);
}

TEST_CASE("idempotent identity") {
  const RatMatrix one{{1}};
  const IdempotentResidual r = idempotent_identity(one, one, one);
  CHECK(r.lhs == RatMatrix{{2}});
  CHECK(r.holds());

  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    const std::size_t e = 1 + rng.below(3), f = 1 + rng.below(3);
    CHECK(idempotent_identity(random_matrix(e, e, rng), random_matrix(e, f, rng), random_matrix(f, f, rng)).holds());
    CHECK(check_positive_product_nonzero(random_positive_block(e, e, rng), random_positive_block(e, f, rng),
                                         random_positive_block(f, f, rng)));
  }
  CHECK_THROWS_AS(check_positive_product_nonzero(RatMatrix{{0}}, one, one), PreconditionError);
  CHECK_THROWS_AS(idempotent_identity(RatMatrix{{1, 2}}, one, one), ShapeError);
}

TEST_CASE("lex candidates") {
  const PssSpace h({{"p"}, {"q"}});
  // small = (0, 1), large = (1, 1): the infinitesimal requirement fails on component 1.
  const auto v = check_lex_candidate(h, RatVector{0, 1}, RatVector{1, 1}, SemIso::identity(2));
  REQUIRE(v.has_value());
  CHECK(v->kind == LexViolation::Kind::kNotInfinitesimal);
  CHECK(v->component == std::optional<std::size_t>(1));
  CHECK(v->n == std::optional<std::int64_t>(2));

  // small = (1, 0), large = (5, 3): infinitesimal fails on component 0 at n = 6.
  const auto w = check_lex_candidate(h, RatVector{1, 0}, RatVector{5, 3}, SemIso::identity(2));
  REQUIRE(w.has_value());
  CHECK(w->kind == LexViolation::Kind::kNotInfinitesimal);
  CHECK(w->n == std::optional<std::int64_t>(6));

  const auto neg = check_lex_candidate(h, RatVector{-1, 0}, RatVector{1, 1}, SemIso::identity(2));
  REQUIRE(neg.has_value());
  CHECK(neg->kind == LexViolation::Kind::kSmallNotPositive);

  const auto zero = check_lex_candidate(h, RatVector{0, 0}, RatVector{0, 1}, SemIso::identity(2));
  REQUIRE(zero.has_value());
  CHECK(zero->kind == LexViolation::Kind::kSquare);

  Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    const LexCandidate c = random_lex_candidate(rng);
    CHECK(check_lex_candidate(c.h, c.small, c.large, c.alpha).has_value());
  }
}

TEST_CASE("lex pairs") {
  CHECK(LexPair{1, -5}.nonnegative());
  CHECK(LexPair{0, 0}.nonnegative());
  CHECK_FALSE(LexPair{0, -1}.nonnegative());
  CHECK_FALSE(LexPair{-1, 9}.nonnegative());
}
