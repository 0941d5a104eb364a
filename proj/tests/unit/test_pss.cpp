#include "doctest.h"
#include "dimlift/error.hpp"
#include "dimlift/pss.hpp"
#include "support.hpp"

using namespace dimlift;

TEST_CASE("hom_validate examples") {
  const PssSpace ab = PssSpace::simple({"a", "b"});
  const PssSpace q = PssSpace::simplicial(1);
  CHECK_NOTHROW(hom_validate(RatMatrix::identity(2), ab, ab));
  CHECK_THROWS_AS(hom_validate(RatMatrix{{1}, {-1}}, q, ab), PreconditionError);
  const auto v = find_positivity_violation(RatMatrix{{1}, {-1}}, q, ab);
  REQUIRE(v);
  CHECK(v->witness == RatVector{1});
  CHECK(v->image == RatVector{1, -1});
  CHECK_NOTHROW(hom_validate(RatMatrix{{1, 1}}, ab, q));
  // Nonnegative but a zero row inside a nonzero block.
  CHECK_THROWS_AS(hom_validate(RatMatrix{{1}, {0}}, q, ab), PreconditionError);
  CHECK_THROWS_AS(hom_validate(RatMatrix(1, 1), ab, q), ShapeError);
}

TEST_CASE("compact ideals") {
  CHECK(idc_space(PssSpace::simple({"x", "y"})) == 1);
  CHECK(idc_space(PssSpace(std::vector<std::vector<std::string>>{})) == 0);
  CHECK(idc_space(PssSpace({{"t"}, {"u"}})) == 2);
  const PssSpace q2 = PssSpace::simplicial(2);
  CHECK(idc_hom(PssHom::zero(q2, q2)) == BoolMap::zero(2, 2));
  CHECK(idc_hom(PssHom::identity(q2)) == BoolMap::identity(2));
  const PssHom diag(PssSpace::simplicial(1), q2, RatMatrix{{1}, {1}});
  CHECK(idc_hom(diag) == BoolMap::from_lists(1, 2, {{0, 1}}));
}

TEST_CASE("archimedean order") {
  const PssSpace ab = PssSpace::simple({"a", "b"});
  CHECK(arch_leq(ab, {0, 0}, {1, 0}));
  CHECK_FALSE(ab.in_cone({1, 0}));
  CHECK(arch_leq(ab, {1, 2}, {1, 2}));
  CHECK_FALSE(arch_leq(ab, {1, 2}, {2, 1}));
}

TEST_CASE("lambda relations") {
  const PssSpace q2 = PssSpace::simplicial(2);
  const PssSpace ab = PssSpace::simple({"a", "b"});
  CHECK(rel_lambda(ab, {1, 1}, {1, 1}, 1, Relation::kArchBoth));
  CHECK(rel_lambda(q2, {1, 2}, {2, 1}, 2, Relation::kArchBoth));
  CHECK_FALSE(rel_lambda(q2, {1, 2}, {2, 1}, Rational(3, 2), Relation::kArchBoth));
  CHECK(rel_lambda(ab, {0, 0}, {1, 3}, Rational(1, 100), Relation::kArchBelow));
  CHECK(rel_lambda(ab, {1, 1}, {2, 2}, 1, Relation::kBelow));
  CHECK_FALSE(rel_lambda(ab, {1, 1}, {1, 2}, 1, Relation::kBelow));
  CHECK_FALSE(rel_lambda(ab, {1, 2}, {1, 1}, 1, Relation::kBelow));
  CHECK_THROWS_AS(rel_lambda(ab, {1, -1}, {1, 1}, 1, Relation::kBelow), PreconditionError);
}

TEST_CASE("compact-ideal map is functorial") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const PssSpace a = testing::random_space(rng, 3, 3, "a");
    const PssSpace b = testing::random_space(rng, 3, 3, "b");
    const PssSpace c = testing::random_space(rng, 3, 3, "c");
    const PssHom f = testing::random_hom(a, b, rng), g = testing::random_hom(b, c, rng);
    CHECK(idc_hom(compose(g, f)) == bool_compose(idc_hom(g), idc_hom(f)));
  }
}

TEST_CASE("sampling never contradicts the block test") {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const PssSpace a = testing::random_space(rng, 2, 3, "a");
    const PssSpace b = testing::random_space(rng, 2, 3, "b");
    RatMatrix m(b.total_dim(), a.total_dim());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng.chance(3, 4) ? rng.positive_rational() : rng.rational();
    const bool valid = !find_positivity_violation(m, a, b).has_value();
    bool sampled_ok = true;
    for (int s = 0; s < 1000 && sampled_ok; ++s) {
      RatVector v(a.total_dim());
      for (std::size_t k = 0; k < a.component_count(); ++k) {
        if (rng.chance(1, 3)) continue;
        for (std::size_t x = 0; x < a.component_size(k); ++x) v[a.offset(k) + x] = rng.positive_rational();
      }
      if (!b.in_cone(m.apply(v))) sampled_ok = false;
    }
    if (valid) CHECK(sampled_ok);
  }
}

TEST_CASE("order units of components hit by nonzero blocks are strictly positive") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const PssSpace a = testing::random_space(rng, 3, 3, "a");
    const PssSpace b = testing::random_space(rng, 3, 3, "b");
    const PssHom f = testing::random_hom(a, b, rng);
    const RatVector img = f.apply(a.order_unit());
    const BoolMap ideals = idc_hom(f);
    for (std::size_t i2 = 0; i2 < a.component_count(); ++i2)
      for (auto j : ideals.atom_image(i2).members())
        for (std::size_t x = 0; x < b.component_size(j); ++x) CHECK(img[b.offset(j) + x].is_positive());
  }
}

TEST_CASE("the strict order refines the archimedean one") {
  Rng rng(43);
  const PssSpace s({{"a", "b"}, {"c"}});
  for (int i = 0; i < 500; ++i) {
    RatVector x(3), y(3);
    for (std::size_t k = 0; k < 3; ++k) {
      x[k] = rng.rational(3, 1);
      y[k] = rng.rational(3, 1);
    }
    if (s.in_cone(y - x)) CHECK(arch_leq(s, x, y));
  }
}

TEST_CASE("space validation") {
  CHECK_THROWS(PssSpace({{"a"}, {}}));
  CHECK_THROWS(PssSpace({{"a"}, {"a"}}));
  CHECK(PssSpace({{"a", "b"}, {"c"}}).order_unit() == RatVector{1, 1, 1});
}
