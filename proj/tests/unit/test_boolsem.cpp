#include "doctest.h"
#include "dimlift/boolsem.hpp"
#include "dimlift/error.hpp"
#include "dimlift/random.hpp"
#include "support.hpp"

using namespace dimlift;

TEST_CASE("bool_compose examples") {
  Rng rng(3);
  const BoolMap g = random_bool_map(2, 3, rng);
  CHECK(bool_compose(g, BoolMap::identity(2)) == g);
  const BoolMap same = BoolMap::from_lists(2, 2, {{0}, {0}});
  CHECK(bool_compose(same, BoolMap::identity(2)) == same);
  // (x, y) -> (x or y, y) is idempotent.
  const BoolMap t = BoolMap::from_lists(2, 2, {{0}, {0, 1}});
  CHECK(bool_compose(t, t) == t);
  CHECK_THROWS_AS(bool_compose(BoolMap::identity(3), t), ShapeError);
}

TEST_CASE("composition is associative with neutral identities") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t a = rng.below(4), b = rng.below(4), c = rng.below(4), d = rng.below(4);
    const BoolMap f = random_bool_map(a, b, rng), g = random_bool_map(b, c, rng), h = random_bool_map(c, d, rng);
    CHECK(bool_compose(h, bool_compose(g, f)) == bool_compose(bool_compose(h, g), f));
    CHECK(bool_compose(BoolMap::identity(b), f) == f);
  }
}

TEST_CASE("maps preserve joins, exhaustively for arity <= 4") {
  Rng rng(23);
  for (std::size_t m = 0; m <= 4; ++m)
    for (int k = 0; k < 5; ++k) {
      const BoolMap f = random_bool_map(m, 3, rng);
      CHECK(f.image(BitSet(m)).empty());
      for (const auto& x : powerset(m))
        for (const auto& y : powerset(m)) CHECK(f.image(x | y) == (f.image(x) | f.image(y)));
    }
}

TEST_CASE("semilattice isomorphisms") {
  const SemIso s(std::vector<std::size_t>{2, 0, 1});
  CHECK(bool_compose(s.as_map(), s.inverse().as_map()) == BoolMap::identity(3));
  CHECK_THROWS(SemIso(std::vector<std::size_t>{0, 0}));
}

TEST_CASE("diagram_from_covers") {
  const Poset chain = Poset::chain(2);
  const BoolMap f = BoolMap::from_lists(1, 2, {{0, 1}});
  const SemDiagram d = diagram_from_covers(chain, {1, 2}, {{{0, 1}, f}});
  CHECK(d.arrow(0, 1) == f);
  CHECK(d.arrow(0, 0) == BoolMap::identity(1));
  CHECK(d.arrow(1, 1) == BoolMap::identity(2));

  const Poset sq = Poset::from_named_covers({"b", "l", "r", "t"}, {{"b", "l"}, {"b", "r"}, {"l", "t"}, {"r", "t"}});
  const BoolMap fb = BoolMap::from_lists(2, 3, {{0, 2}, {1, 2}});
  const BoolMap g = BoolMap::from_lists(3, 4, {{0, 3}, {1}, {2, 3}});
  const BoolMap h = BoolMap::from_lists(3, 4, {{0}, {1, 3}, {2, 3}});
  const SemDiagram ok = diagram_from_covers(sq, {2, 3, 3, 4}, {{{0, 1}, fb}, {{0, 2}, fb}, {{1, 3}, g}, {{2, 3}, h}});
  CHECK(ok.arrow(0, 3) == bool_compose(g, fb));
  const BoolMap bad = BoolMap::from_lists(3, 4, {{0}, {1}, {2}});
  CHECK_THROWS_AS(diagram_from_covers(sq, {2, 3, 3, 4}, {{{0, 1}, fb}, {{0, 2}, fb}, {{1, 3}, g}, {{2, 3}, bad}}),
                  CoherenceError);
}

TEST_CASE("random diagrams are deterministic, coherent and bounded") {
  for (const auto& p : testing::dismantlable_posets(5, 4)) {
    const SemDiagram a = random_diagram(p, 3, 42);
    const SemDiagram b = random_diagram(p, 3, 42);
    for (std::size_t x = 0; x < p.size(); ++x) {
      CHECK(a.arity(x) <= 3);
      CHECK(a.arity(x) == b.arity(x));
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) CHECK(a.arrow(x, y) == b.arrow(x, y));
    }
    // Re-validation through the checking constructor.
    std::vector<std::optional<BoolMap>> arrows(p.size() * p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) arrows[x * p.size() + y] = a.arrow(x, y);
    CHECK_NOTHROW(SemDiagram(p, a.arities(), arrows));
  }
}

TEST_CASE("zero arity is allowed") {
  const SemDiagram d = diagram_from_covers(Poset::chain(2), {0, 2}, {{{0, 1}, BoolMap::zero(0, 2)}});
  CHECK(d.arity(0) == 0);
}
