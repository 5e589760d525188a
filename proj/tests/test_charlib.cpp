#include <doctest.h>

#include "generators.hpp"
#include "kr/charlib.hpp"
#include "kr/errors.hpp"
#include "oracles.hpp"

using namespace kr;

namespace {

WeightCharacter from_map(const std::map<Weight, std::int64_t>& m) {
  WeightCharacter out;
  for (const auto& [w, k] : m) out.add(w, k);
  return out;
}

WeightCharacter difference(const WeightCharacter& a, const WeightCharacter& b) {
  WeightCharacter out = a;
  for (const auto& [w, k] : b.entries()) out.add(w, -k);
  return out;
}

Weight w1(int rank, int node, int mult = 1) { return Weight::fundamental(rank, node, mult); }

}  // namespace

TEST_SUITE("charlib") {
  TEST_CASE("Weyl dimensions agree with the epsilon-basis product formula") {
    gen::Source src(21);
    for (int trial = 0; trial < 300; ++trial) {
      const auto t = src.lie_type(6);
      const auto rs = RootSystem::build(t);
      const Weight lam = src.dominant(t.rank(), 3);
      CAPTURE(t.name());
      CAPTURE(lam);
      CHECK(weyl_dim(rs, lam) == oracle::weyl_dim(t.family(), t.rank(), lam));
    }
  }

  TEST_CASE("known dimensions") {
    const auto c3 = RootSystem::build(LieType(Family::C, 3));
    CHECK(weyl_dim(c3, w1(3, 2, 2)) == 90);
    CHECK(weyl_dim(c3, w1(3, 1, 2)) == 21);
    const auto b4 = RootSystem::build(LieType(Family::B, 4));
    CHECK(weyl_dim(b4, w1(4, 3)) == 84);
    CHECK(weyl_dim(b4, w1(4, 4)) == 16);
    const auto b3 = RootSystem::build(LieType(Family::B, 3));
    CHECK(weyl_dim(b3, w1(3, 3, 2)) == 35);
  }

  TEST_CASE("Freudenthal mass equals the Weyl dimension") {
    gen::Source src(22);
    for (int trial = 0; trial < 120; ++trial) {
      const auto rs = RootSystem::build(src.lie_type(4));
      const Weight lam = src.dominant(rs.rank(), 2);
      if (weyl_dim(rs, lam) > 20000) continue;
      CHECK(weight_mults(rs, lam).total() == weyl_dim(rs, lam));
    }
  }

  TEST_CASE("fundamental characters agree with exterior powers of the defining representation") {
    for (int n = 1; n <= 5; ++n) {
      const auto rs = RootSystem::build(LieType(Family::A, n));
      for (int k = 1; k <= n; ++k)
        CHECK(weight_mults(rs, w1(n, k)) == from_map(oracle::wedge_character(Family::A, n, k)));
    }
    for (int n = 2; n <= 5; ++n) {
      const auto rs = RootSystem::build(LieType(Family::C, n));
      for (int k = 1; k <= n; ++k) {
        const auto top = from_map(oracle::wedge_character(Family::C, n, k));
        const auto low = from_map(oracle::wedge_character(Family::C, n, k - 2));
        CHECK(weight_mults(rs, w1(n, k)) == difference(top, low));
      }
    }
    for (int n = 2; n <= 5; ++n) {
      const auto rs = RootSystem::build(LieType(Family::B, n));
      for (int k = 1; k < n; ++k)
        CHECK(weight_mults(rs, w1(n, k)) == from_map(oracle::wedge_character(Family::B, n, k)));
      CHECK(weight_mults(rs, w1(n, n, 2)) == from_map(oracle::wedge_character(Family::B, n, n)));
    }
    for (int n = 3; n <= 5; ++n) {
      const auto rs = RootSystem::build(LieType(Family::D, n));
      for (int k = 1; k <= n - 2; ++k)
        CHECK(weight_mults(rs, w1(n, k)) == from_map(oracle::wedge_character(Family::D, n, k)));
    }
  }

  TEST_CASE("defining representation of B3 has a one-dimensional zero weight space") {
    const auto rs = RootSystem::build(LieType(Family::B, 3));
    const auto chi = weight_mults(rs, w1(3, 1));
    CHECK(chi.total() == 7);
    CHECK(chi(Weight(3)) == 1);
  }

  TEST_CASE("A1 tensor products follow Clebsch-Gordan") {
    const auto rs = RootSystem::build(LieType(Family::A, 1));
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        DominantCharacter expected;
        for (const auto& [c, k] : oracle::clebsch_gordan(a, b)) expected.add(Weight{c}, k);
        CHECK(tensor_decompose(rs, Weight{a}, Weight{b}) == expected);
      }
  }

  TEST_CASE("Klimyk and brute-force products agree on random pairs") {
    gen::Source src(23);
    int tested = 0;
    while (tested < 80) {
      const auto rs = RootSystem::build(src.lie_type(4));
      const Weight lam = src.dominant(rs.rank(), 2), mu = src.dominant(rs.rank(), 2);
      if (weyl_dim(rs, lam) * weyl_dim(rs, mu) > 4000) continue;
      ++tested;
      const auto klimyk = tensor_decompose(rs, lam, mu);
      const auto brute = decompose_character(rs, product(weight_mults(rs, lam), weight_mults(rs, mu)));
      CHECK(klimyk == brute);
      for (const auto& [nu, k] : klimyk.entries()) CHECK(hom_dim_bruteforce(rs, {lam, mu}, nu) == k);
    }
  }

  TEST_CASE("tensor products are commutative and dimension-additive") {
    gen::Source src(24);
    for (int trial = 0; trial < 50; ++trial) {
      const auto rs = RootSystem::build(src.lie_type(4));
      const Weight lam = src.dominant(rs.rank(), 2), mu = src.dominant(rs.rank(), 1);
      const auto ab = tensor_decompose(rs, lam, mu);
      CHECK(ab == tensor_decompose(rs, mu, lam));
      CHECK(dimension(rs, ab) == weyl_dim(rs, lam) * weyl_dim(rs, mu));
    }
  }

  TEST_CASE("wedge and symmetric squares add up to the full square") {
    const auto rs = RootSystem::build(LieType(Family::C, 3));
    const auto chi = weight_mults(rs, w1(3, 2));
    const auto sq = product(chi, chi);
    WeightCharacter sum = ext_square(chi);
    const auto sym = sym_square(chi);
    for (const auto& [w, k] : sym.entries()) sum.add(w, k);
    CHECK(sum == sq);
    CHECK(ext_square(chi).total() == 14 * 13 / 2);
  }

  TEST_CASE("adjoint characters") {
    for (auto [fam, n, dim] : {std::tuple{Family::A, 3, 15}, {Family::B, 3, 21}, {Family::C, 3, 21},
                               {Family::D, 4, 28}, {Family::B, 4, 36}}) {
      const auto rs = RootSystem::build(LieType(fam, n));
      CHECK(adjoint_char(rs).total() == dim);
      CHECK(adjoint_char(rs) == weight_mults(rs, adjoint_highest_weight(rs)));
    }
  }

  TEST_CASE("expanded characters are Weyl-invariant") {
    gen::Source src(25);
    for (int trial = 0; trial < 40; ++trial) {
      const auto rs = RootSystem::build(src.lie_type(4));
      const Weight lam = src.dominant(rs.rank(), 2);
      if (weyl_dim(rs, lam) > 20000) continue;
      const auto chi = weight_mults(rs, lam);
      CHECK(is_weyl_invariant(rs, chi));
      for (int r = 0; r < 10; ++r) {
        const int i = src.uniform(1, rs.rank());
        for (const auto& [w, k] : chi.entries()) CHECK(chi(reflect(rs, w, i)) == k);
      }
    }
  }

  TEST_CASE("hom_dim is Schur's lemma on irreducibles") {
    const auto rs = RootSystem::build(LieType(Family::B, 3));
    CHECK(hom_dim(rs, {w1(3, 1)}, w1(3, 1)) == 1);
    CHECK(hom_dim(rs, {w1(3, 1)}, w1(3, 2)) == 0);
    CHECK(hom_dim(rs, {w1(3, 1), w1(3, 1)}, Weight(3)) == 1);
    CHECK(hom_dim(rs, {w1(3, 1), adjoint_char(rs)}, w1(3, 1)) == 1);
  }

  TEST_CASE("stripping rejects characters of no module") {
    const auto rs = RootSystem::build(LieType(Family::A, 2));
    WeightCharacter lone;
    lone.add(w1(2, 1), 1);
    CHECK_THROWS_AS(decompose_character(rs, lone), TheoremCheckFailure);
    const auto negative = difference(weight_mults(rs, Weight(2)), weight_mults(rs, w1(2, 1)));
    CHECK_THROWS_AS(decompose_character(rs, negative), TheoremCheckFailure);
  }

  TEST_CASE("non-dominant highest weights are rejected") {
    const auto rs = RootSystem::build(LieType(Family::A, 2));
    CHECK_THROWS_AS(weight_mults(rs, Weight{-1, 0}), InvalidInput);
    CHECK_THROWS_AS(weyl_dim(rs, Weight{1, -1}), InvalidInput);
    DominantCharacter chi;
    CHECK_THROWS_AS(chi.add(Weight{0, -2}, 1), InvalidInput);
  }

  TEST_CASE("the dimension guard stops oversized expansions") {
    const auto rs = RootSystem::build(LieType(Family::C, 3));
    const DimGuard tiny{50};
    CHECK_THROWS_AS(weight_mults(rs, w1(3, 2, 2), tiny), GuardExceeded);
    CHECK(weight_mults(rs, w1(3, 1), tiny).total() == 6);
  }
}
