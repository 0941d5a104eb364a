#include "doctest.h"
#include "dimlift/error.hpp"
#include "dimlift/random.hpp"
#include "dimlift/refine.hpp"

using namespace dimlift;

TEST_CASE("interpolate") {
  CHECK(interpolate({{1, 3}, {2, 2}}, {{3, 4}}) == RatVector{2, 3});
  CHECK(interpolate({{5, 7}}, {{5, 7}}) == RatVector{5, 7});
  CHECK_THROWS_AS(interpolate({{2}}, {{1}}), PreconditionError);
}

TEST_CASE("riesz_refine examples") {
  const auto c = riesz_refine({{2}, {3}}, {{4}, {1}});
  CHECK(c[0][0] == RatVector{2});
  CHECK(c[0][1] == RatVector{0});
  CHECK(c[1][0] == RatVector{2});
  CHECK(c[1][1] == RatVector{1});

  const std::vector<RatVector> u{{1}, {2}, {3}};
  const auto d = riesz_refine(u, u);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) CHECK(d[k][l] == (k == l ? u[k] : RatVector{0}));

  const auto e = riesz_refine({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
  CHECK(e[0][0] == RatVector{0, 0});
  CHECK(e[0][1] == RatVector{1, 0});
  CHECK(e[1][0] == RatVector{0, 1});
  CHECK(e[1][1] == RatVector{0, 0});

  CHECK_THROWS_AS(riesz_refine({{1}}, {{2}}), PreconditionError);
  CHECK_THROWS_AS(riesz_refine({{-1}, {2}}, {{1}}), PreconditionError);
}

TEST_CASE("mult_refine examples") {
  const auto one = mult_refine({{{1}, {2}}});
  CHECK(one.values == std::vector<RatVector>{{1}, {2}});

  const auto single = mult_refine({{{3, 1}}, {{3, 1}}});
  CHECK(single.values == std::vector<RatVector>{{3, 1}});

  const auto x = mult_refine({{{1}, {1}}, {{2}, {0}}});
  CHECK(x.values[x.index({0, 0})] == RatVector{1});
  CHECK(x.values[x.index({1, 0})] == RatVector{1});
  CHECK(x.values[x.index({0, 1})] == RatVector{0});
  CHECK(x.values[x.index({1, 1})] == RatVector{0});
  CHECK(check_mult({{{1}, {1}}, {{2}, {0}}}, x));
}

TEST_CASE("lamas_decompose examples") {
  const auto b = lamas_decompose({{2}, {2}}, 2);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == RatVector{0});
  CHECK(b[1] == RatVector{0});
  CHECK(b[2] == RatVector{0});
  CHECK(b[3] == RatVector{1});

  const auto c = lamas_decompose({{3, 1}, {3, 1}, {3, 1}}, 1);
  CHECK(c[0] == RatVector{3, 1});
  for (std::size_t x = 1; x < c.size(); ++x) CHECK(c[x] == RatVector{0, 0});

  const auto d = lamas_decompose({{5, 0}}, 2);
  CHECK(d[0] + Rational(2) * d[1] == RatVector{5, 0});

  CHECK_THROWS_AS(lamas_decompose({{1}, {3}}, 2), PreconditionError);
  CHECK_THROWS_AS(lamas_decompose({{1}}, Rational(1, 2)), PreconditionError);
}

namespace {

RatVector random_nonneg(std::size_t d, Rng& rng) {
  RatVector v(d);
  for (auto& x : v) x = rng.chance(1, 4) ? Rational(0) : rng.positive_rational();
  return v;
}

// Parts of a random split of total into k pieces.
std::vector<RatVector> split(const RatVector& total, std::size_t k, Rng& rng) {
  std::vector<RatVector> parts(k, RatVector(total.size()));
  for (std::size_t c = 0; c < total.size(); ++c) {
    Rational left = total[c];
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const Rational piece = left * Rational(static_cast<long>(rng.below(5)), 4);
      parts[i][c] = min(piece, left);
      left -= parts[i][c];
    }
    parts[k - 1][c] = left;
  }
  return parts;
}

}  // namespace

TEST_CASE("randomized refinement identities") {
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    const std::size_t d = 1 + rng.below(5);
    const RatVector total = random_nonneg(d, rng);
    const auto u = split(total, 1 + rng.below(6), rng);
    const auto v = split(total, 1 + rng.below(6), rng);
    const auto c = riesz_refine(u, v);
    CHECK(check_riesz(u, v, c));

    std::vector<std::vector<RatVector>> decomps;
    for (std::uint64_t k = 1 + rng.below(3); k > 0; --k) decomps.push_back(split(total, 1 + rng.below(3), rng));
    const auto x = mult_refine(decomps);
    std::size_t expected = 1;
    for (const auto& dd : decomps) expected *= dd.size();
    CHECK(x.values.size() == expected);
    CHECK(check_mult(decomps, x));

    const Rational lambda = rng.chance(1, 4) ? Rational(1) : Rational(1) + rng.positive_rational(3, 3);
    std::vector<RatVector> a;
    const RatVector base = random_nonneg(d, rng);
    for (std::uint64_t k = 1 + rng.below(3); k > 0; --k) {
      RatVector ai = base;
      if (lambda > Rational(1))
        for (auto& y : ai) y *= Rational(1) + (lambda - 1) * Rational(static_cast<long>(rng.below(5)), 4);
      a.push_back(ai);
    }
    const auto b = lamas_decompose(a, lambda);
    CHECK(b.size() == (std::size_t{1} << a.size()));
    CHECK(check_lamas(a, lambda, b));
  }
}
