#include "doctest.h"
#include "dimlift/error.hpp"
#include "dimlift/poset.hpp"
#include "support.hpp"

using namespace dimlift;

namespace {

Poset square() {
  return Poset::from_named_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

}  // namespace

TEST_CASE("covers") {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(covers(Poset::chain(3)) == Pairs{{0, 1}, {1, 2}});
  CHECK(covers(Poset::antichain(2)).empty());
  CHECK(covers(square()) == Pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("doubly irreducible elements") {
  CHECK(doubly_irreducible(Poset::chain(3)) == std::vector<std::size_t>{0, 1, 2});
  CHECK(doubly_irreducible(Poset::boolean_lattice(3)).empty());
  CHECK(doubly_irreducible(square()) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("dismantling examples") {
  const Poset sq = square();
  const auto o = dismantling_order(sq);
  REQUIRE(o);
  CHECK(is_valid_dismantling(sq, *o));
  CHECK_FALSE(dismantling_order(Poset::boolean_lattice(3)));
  const auto cube = dismantle(Poset::boolean_lattice(3));
  REQUIRE(cube.stuck_sets.size() == 1);
  CHECK(cube.stuck_sets[0] == 0xFFU);
  const auto empty = dismantling_order(Poset());
  REQUIRE(empty);
  CHECK(empty->removal_sequence.empty());
}

TEST_CASE("preferences give valid orders") {
  for (const auto& p : testing::dismantlable_posets(5, 10)) {
    for (auto pref : {DismantlePreference::kAscendingIndex, DismantlePreference::kMinimalFirst}) {
      const auto o = dismantling_order(p, pref);
      REQUIRE(o);
      CHECK(is_valid_dismantling(p, *o));
    }
  }
}

TEST_CASE("chains and small posets are dismantlable") {
  for (std::size_t n = 0; n <= 10; ++n) CHECK(dismantling_order(Poset::chain(n)));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : all_posets(n)) CHECK(dismantling_order(p));
}

TEST_CASE("number of posets up to isomorphism") {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(all_posets(n).size() == expected[n]);
}

TEST_CASE("validation rejects cycles and bad input") {
  CHECK_THROWS_AS(Poset::from_named_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ParseError);
  CHECK_THROWS_AS(Poset::from_named_covers({"a"}, {{"a", "z"}}), ParseError);
  CHECK_THROWS_AS(Poset::from_named_covers({"a", "a"}, {}), ParseError);
  CHECK_THROWS_AS(dismantle(Poset::antichain(25)), ResourceError);
}

TEST_CASE("height and linear extension") {
  CHECK(Poset().height() == -1);
  CHECK(Poset::chain(4).height() == 3);
  CHECK(Poset::boolean_lattice(3).height() == 3);
  const Poset p = Poset::boolean_lattice(3);
  const auto ext = p.linear_extension();
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = i + 1; j < ext.size(); ++j) CHECK_FALSE(p.lt(ext[j], ext[i]));
}

TEST_CASE("dot export") {
  CHECK(to_dot(Poset()) == "digraph poset {\n}\n");
  const std::string d = to_dot(square());
  CHECK(d.find("n0 -> n1;") != std::string::npos);
  CHECK(d.find("n2 -> n3;") != std::string::npos);
}
