#include <doctest.h>

#include "kr/errors.hpp"
#include "kr/krset.hpp"
#include "listings.hpp"

using namespace kr;

namespace {

Weight w(int rank, int node, int mult = 1) { return listing::w(rank, node, mult); }

std::vector<LieType> sweep(int max_rank) {
  std::vector<LieType> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(Family::C, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(Family::D, n);
  return out;
}

std::vector<std::int64_t> poly(const RootSystem& rs, int i, int m) {
  return graded_character(rs, i, m).dimension_polynomial(rs);
}

}  // namespace

TEST_SUITE("krset") {
  TEST_CASE("base sets reproduce the listings") {
    for (const auto& t : sweep(5)) {
      const auto rs = RootSystem::build(t);
      for (int i = 1; i <= t.rank(); ++i)
        for (int m0 = 1; m0 <= rs.dcheck()[i - 1]; ++m0) {
          CAPTURE(t.name());
          CAPTURE(i);
          CAPTURE(m0);
          CHECK(base_set(rs, i, m0) == listing::untwisted(t.family(), t.rank(), i, m0));
        }
    }
  }

  TEST_CASE("C3 node 2 at level 2") {
    const auto rs = RootSystem::build(LieType(Family::C, 3));
    const auto gc = graded_character(rs, 2, 2);
    REQUIRE(gc.by_grade.size() == 3);
    CHECK(gc.by_grade.at(0) == DominantCharacter({{w(3, 2, 2), 1}}));
    CHECK(gc.by_grade.at(1) == DominantCharacter({{w(3, 1, 2), 1}}));
    CHECK(gc.by_grade.at(2) == DominantCharacter({{Weight(3), 1}}));
    CHECK(poly(rs, 2, 2) == std::vector<std::int64_t>{90, 21, 1});
  }

  TEST_CASE("dimension polynomials at level dcheck_i") {
    auto check = [](Family f, int n, int i, std::vector<std::int64_t> expected) {
      const auto rs = RootSystem::build(LieType(f, n));
      CHECK(poly(rs, i, rs.dcheck()[i - 1]) == expected);
    };
    check(Family::C, 2, 1, {10, 1});
    check(Family::B, 4, 3, {84, 9});
    check(Family::B, 3, 3, {35, 7});
    check(Family::B, 3, 2, {21, 1});
    check(Family::D, 4, 2, {28, 1});
    check(Family::D, 5, 2, {45, 1});
    check(Family::D, 5, 3, {120, 10});
  }

  TEST_CASE("higher levels combine chain elements with minimal indices") {
    const auto rs = RootSystem::build(LieType(Family::C, 2));
    const auto gc = graded_character(rs, 1, 4);
    CHECK(gc.by_grade.at(0) == DominantCharacter({{w(2, 1, 4), 1}}));
    CHECK(gc.by_grade.at(1) == DominantCharacter({{w(2, 1, 2), 1}}));
    CHECK(gc.by_grade.at(2) == DominantCharacter({{Weight(2), 1}}));
    CHECK(reduced_expression(rs, 1, 4, w(2, 1, 2)) == std::vector<int>{0, 1});
    CHECK(grade(rs, 1, 4, Weight(2)) == 2);

    const auto odd = graded_character(rs, 1, 3);
    CHECK(odd.by_grade.at(0) == DominantCharacter({{w(2, 1, 3), 1}}));
    CHECK(odd.by_grade.at(1) == DominantCharacter({{w(2, 1, 1), 1}}));
  }

  TEST_CASE("type A is concentrated in grade zero") {
    for (int n = 1; n <= 4; ++n) {
      const auto rs = RootSystem::build(LieType(Family::A, n));
      for (int i = 1; i <= n; ++i)
        for (int m = 0; m <= 5; ++m) {
          const auto gc = graded_character(rs, i, m);
          REQUIRE(gc.by_grade.size() == 1);
          CHECK(gc.by_grade.at(0) == DominantCharacter({{w(n, i, m), 1}}));
        }
    }
  }

  TEST_CASE("graded characters are multiplicity-free with the top weight in grade zero") {
    for (const auto& t : sweep(4)) {
      const auto rs = RootSystem::build(t);
      for (int i = 1; i <= t.rank(); ++i)
        for (int m = 0; m <= 5; ++m) {
          const auto gc = graded_character(rs, i, m);
          CHECK(gc.multiplicity_free());
          CHECK(gc.by_grade.at(0)(w(t.rank(), i, m)) == 1);
          CHECK(gc.total().entries().size() == pplus(rs, i, m).size());
        }
    }
  }

  TEST_CASE("reduced expressions sum back to the weight") {
    const auto rs = RootSystem::build(LieType(Family::B, 4));
    const int i = 4, m = 5;
    const auto chain = enumerate_chain(rs, i);
    for (const auto& mu : pplus(rs, i, m)) {
      Weight sum = w(4, i, m % rs.dcheck()[i - 1]);
      for (int j : reduced_expression(rs, i, m, mu)) sum += chain[j];
      CHECK(sum == mu);
    }
  }

  TEST_CASE("chains satisfy the root conditions") {
    for (const auto& t : sweep(6)) {
      const auto rs = RootSystem::build(t);
      for (int i = 1; i <= t.rank(); ++i) {
        const auto chain = enumerate_chain(rs, i);
        for (std::size_t s = 0; s + 1 < chain.weights.size(); ++s)
          CHECK(is_positive_root(rs, chain[s] - chain[s + 1]));
        for (std::size_t s = 0; s + 2 < chain.weights.size(); ++s) {
          CHECK(in_positive_cone(rs, chain[s] - chain[s + 2]));
          CHECK_FALSE(is_positive_root(rs, chain[s] - chain[s + 2]));
        }
      }
    }
  }

  TEST_CASE("graded tensor bound") {
    for (auto [f, n] : {std::pair{Family::C, 3}, {Family::B, 3}, {Family::D, 4}}) {
      const auto rs = RootSystem::build(LieType(f, n));
      for (int i = 1; i <= n; ++i)
        for (int m = 1; m <= 4; ++m) CHECK(tensor_bound_check(rs, i, m));
    }
  }

  TEST_CASE("invalid arguments") {
    const auto rs = RootSystem::build(LieType(Family::C, 3));
    CHECK_THROWS_AS(graded_character(rs, 0, 1), InvalidInput);
    CHECK_THROWS_AS(graded_character(rs, 4, 1), InvalidInput);
    CHECK_THROWS_AS(graded_character(rs, 1, -1), InvalidInput);
    CHECK_THROWS_AS(base_set(rs, 1, 3), InvalidInput);
    CHECK_THROWS_AS(reduced_expression(rs, 1, 2, w(3, 3)), InvalidInput);
  }

  TEST_CASE("level zero is the trivial module") {
    const auto rs = RootSystem::build(LieType(Family::B, 3));
    const auto gc = graded_character(rs, 2, 0);
    CHECK(gc.dimension_polynomial(rs) == std::vector<std::int64_t>{1});
  }
}
