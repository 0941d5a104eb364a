#include "doctest.h"
#include "dimlift/error.hpp"
#include "dimlift/genfact.hpp"
#include "dimlift/oracle.hpp"
#include "support.hpp"

using namespace dimlift;

namespace {

const PssSpace kTU({{"t"}, {"u"}});
const BoolMap kOnes = BoolMap::from_lists(2, 1, {{0}, {0}});

}  // namespace

TEST_CASE("gen_simple on two one-dimensional components") {
  const Generic g = gen_simple(kTU, kOnes, 2);
  REQUIRE(g.space.total_dim() == 4);
  CHECK(g.map.matrix().column(0) == RatVector{1, 2, 1, 2});
  CHECK(g.map.matrix().column(1) == RatVector{1, 1, 2, 2});
  CHECK(flatness_constant(g.map).lambda_min == Rational(2));

  const Generic one = gen_simple(kTU, kOnes, 1);
  CHECK(one.map.matrix().column(0) == RatVector{1, 1, 1, 1});
  CHECK(one.map.apply(kTU.order_unit()) == RatVector{2, 2, 2, 2});

  const Generic zero = gen_simple(kTU, BoolMap::zero(2, 1), 3);
  CHECK(zero.space.total_dim() == 1);
  CHECK(zero.map.is_zero());

  CHECK_THROWS_AS(gen_simple(kTU, kOnes, Rational(1, 2)), PreconditionError);
}

TEST_CASE("labels follow subset then tuple order") {
  const Generic g = gen_simple(PssSpace({{"a", "b"}, {"c"}}), kOnes, 2);
  const auto labels = g.space.labels();
  REQUIRE(labels.size() == 8);
  CHECK(labels.front().find("{}") != std::string::npos);
  CHECK(labels.back().find("{0,1}") != std::string::npos);
}

TEST_CASE("gen with several target atoms") {
  const PssSpace q2 = PssSpace::simplicial(2);
  const BoolMap f = BoolMap::from_lists(2, 2, {{0}, {0, 1}});
  const Generic g = gen(q2, f, 1);
  REQUIRE(g.space.component_count() == 2);
  CHECK(g.space.component_size(0) == 4);
  CHECK(g.space.component_size(1) == 2);
  CHECK(bool_compose(g.iota.as_map(), f) == idc_hom(g.map));

  const Generic empty = gen(q2, BoolMap::zero(2, 0), 2);
  CHECK(empty.space.total_dim() == 0);
  CHECK(empty.map.is_zero());

  CHECK_THROWS_AS(gen(PssSpace({{"a", "b", "c"}, {"d", "e", "f"}}), kOnes, 1, 10), ResourceError);
}

TEST_CASE("generic maps are flat with the expected constant") {
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const PssSpace a = testing::random_space(rng, 3, 2, "a");
    const BoolMap f = random_bool_map(a.component_count(), 1, rng);
    const Rational lambda = Rational(1) + rng.positive_rational(3, 2);
    const Generic g = gen_simple(a, f, lambda);
    const std::size_t support = g.parts[0].support.size();
    std::size_t expected = std::size_t{1} << support;
    for (auto i2 : g.parts[0].support) expected *= a.component_size(i2);
    CHECK(g.space.total_dim() == expected);
    for (std::size_t r = 0; r < g.map.matrix().rows(); ++r)
      for (std::size_t c = 0; c < g.map.matrix().cols(); ++c) {
        const Rational& v = g.map.matrix().at(r, c);
        CHECK((v.is_zero() || v == Rational(1) || v == lambda));
      }
    const Rational flat = flatness_constant(g.map).lambda_min;
    CHECK(flat <= lambda);
    if (support >= 2) CHECK(flat == lambda);
  }
}

TEST_CASE("flatness examples") {
  CHECK(flatness_constant(PssHom(PssSpace::simplicial(2), PssSpace::simplicial(1), RatMatrix{{1, 1}})).lambda_min == 1);
  CHECK(flatness_constant(PssHom(PssSpace::simplicial(2), PssSpace::simplicial(1), RatMatrix{{3, 0}})).lambda_min == 1);
  const auto r = flatness_constant(PssHom(PssSpace::simplicial(2), PssSpace::simplicial(1), RatMatrix{{1, 3}}));
  CHECK(r.lambda_min == 3);
  CHECK(r.target == std::optional<std::size_t>(0));
}

TEST_CASE("q bound") {
  CHECK(q_bound(0, 5) == 1);
  CHECK(q_bound(3, 0) == 1);
  CHECK(q_bound(1, 5) == 1);
  CHECK(q_bound(2, 2) == 2);
  CHECK(q_bound(4, 3) == 3);
  CHECK(q_bound(3, 9) == 4);
}

TEST_CASE("rev_lift") {
  const PssSpace q3 = PssSpace::simplicial(3);
  CHECK(rev_lift(BoolMap::identity(3), q3).matrix() == RatMatrix::identity(3));
  const PssHom both = rev_lift(BoolMap::from_lists(2, 1, {{0}, {0}}), PssSpace::simple({"a", "b"}));
  CHECK(both.matrix() == RatMatrix{{1, 1}, {1, 1}});
  CHECK(rev_lift(BoolMap::zero(2, 3), q3).is_zero());
  CHECK_THROWS_AS(rev_lift(BoolMap::identity(2), q3), ShapeError);
}

TEST_CASE("factor_simple") {
  const Generic f = gen_simple(kTU, kOnes, 1);
  REQUIRE(f.parts.size() == 1);
  const PssHom g(kTU, PssSpace::simplicial(1), RatMatrix{{1, 1}});
  const PssHom h = factor_simple(f, g);
  CHECK(h.matrix() * f.map.matrix() == g.matrix());

  const PssHom steep(kTU, PssSpace::simplicial(1), RatMatrix{{1, 3}});
  CHECK_THROWS_AS(factor_simple(gen_simple(kTU, kOnes, 2), steep), PreconditionError);
}

TEST_CASE("factor_idc degenerate cases") {
  const Generic f = gen_simple(kTU, kOnes, 2);
  const PssSpace b = PssSpace::simple({"x", "y"});
  const PssHom zero = PssHom::zero(kTU, b);
  CHECK(factor_idc(f, zero, BoolMap::zero(1, 1)).is_zero());

  const Generic f0 = gen_simple(kTU, BoolMap::zero(2, 1), 2);
  const PssHom g = factor_idc(f0, zero, BoolMap::identity(1));
  CHECK(idc_hom(g) == BoolMap::identity(1));
  CHECK(g.matrix() * f0.map.matrix() == zero.matrix());

  const PssHom h(kTU, b, RatMatrix{{1, 1}, {2, 1}});
  const PssHom k = factor_idc(f, h, BoolMap::identity(1));
  CHECK(k.matrix() * f.map.matrix() == h.matrix());
  CHECK_THROWS_AS(factor_idc(f, h, BoolMap::zero(1, 1)), PreconditionError);
}

TEST_CASE("q example: mu = 2 factors, mu = 1 is rejected") {
  const QExample two = q_example(2);
  const PssHom g = factor_general(two.f, two.h, two.gg, Rational(1));
  CHECK(g.matrix() * two.f.map.matrix() == two.h.matrix());
  CHECK(idc_hom(g) == two.gg);
  const QExample one = q_example(1);
  CHECK_THROWS_AS(factor_general(one.f, one.h, one.gg, Rational(1)), PreconditionError);
}

TEST_CASE("factor_general on random instances agrees with the oracle") {
  Rng rng(59);
  for (int i = 0; i < 150; ++i) {
    const FactorInstance in = random_factor_instance(rng, 3, 2, 3);
    const PssHom g = factor_general(in.f, in.h, in.gg, in.lambda);
    CHECK(g.matrix() * in.f.map.matrix() == in.h.matrix());
    CHECK(idc_hom(g) == in.gg);
    const FactorSystem fs = encode_factor_system(in.f.map, in.h, in.gg);
    CHECK(fs.system.satisfied_by(fs.encode(g.matrix())));
  }
}

TEST_CASE("single generic component reduces to factor_idc") {
  const Generic f = gen(kTU, kOnes, 2);
  const PssHom h(kTU, PssSpace::simplicial(1), RatMatrix{{1, 2}});
  const PssHom a = factor_general(f, h, BoolMap::identity(1));
  const PssHom b = factor_idc(f, h, BoolMap::identity(1));
  CHECK(a.matrix() * f.map.matrix() == h.matrix());
  CHECK(b.matrix() * f.map.matrix() == h.matrix());
}
