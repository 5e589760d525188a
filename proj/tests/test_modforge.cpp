#include <doctest.h>

#include "kr/errors.hpp"
#include "kr/modforge.hpp"

using namespace kr;

namespace {

RootSystem rs_of(Family f, int n) { return RootSystem::build(LieType(f, n)); }

}  // namespace

TEST_SUITE("modforge") {
  TEST_CASE("the defining and adjoint representations satisfy the relations") {
    for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::B, 2}}) {
      const auto rs = rs_of(f, n);
      const LieBasis basis(rs);
      CAPTURE(rs.type().name());
      CHECK(basis.dim() == weyl_dim(rs, adjoint_highest_weight(rs)));
      CHECK(check_rep(basis, defining_rep(rs)).empty());
      const auto adj = adjoint_rep(basis);
      CHECK(check_rep(basis, adj).empty());
      CHECK(adj.character() == adjoint_char(rs).entries());
    }
  }

  TEST_CASE("brackets are antisymmetric") {
    const LieBasis basis(rs_of(Family::C, 3));
    for (int a = 0; a < basis.dim(); ++a)
      for (int b = 0; b < basis.dim(); ++b) {
        Vec sum = basis.bracket(a, b);
        axpy(sum, Rational(1), basis.bracket(b, a));
        CHECK(sum.empty());
      }
  }

  TEST_CASE("highest-weight modules have the Weyl character") {
    for (auto [f, n, lam] : {std::tuple{Family::C, 3, Weight{0, 2, 0}}, {Family::B, 3, Weight{0, 0, 2}},
                             {Family::D, 4, Weight{0, 0, 1, 1}}, {Family::A, 2, Weight{2, 1}},
                             {Family::B, 2, Weight{1, 2}}}) {
      const auto rs = rs_of(f, n);
      const auto rep = highest_module(rs, lam);
      CAPTURE(lam);
      CHECK(rep.highest_weight == lam);
      CHECK(rep.character() == weight_mults(rs, lam).entries());
      CHECK(check_rep(LieBasis(rs), rep).empty());
    }
  }

  TEST_CASE("spin weights are out of scope") {
    CHECK_THROWS_AS(highest_module(rs_of(Family::B, 3), Weight{0, 0, 1}), OutOfScope);
    CHECK_THROWS_AS(highest_module(rs_of(Family::D, 4), Weight{0, 0, 0, 1}), OutOfScope);
  }

  TEST_CASE("intertwiner spaces match tensor multiplicities") {
    const auto rs = rs_of(Family::C, 2);
    const LieBasis basis(rs);
    const auto adj = adjoint_rep(basis);
    const auto v = highest_module(rs, Weight{2, 0});
    const auto source = tensor(adj, v);
    const auto parts = tensor_decompose(rs, adjoint_highest_weight(rs), Weight{2, 0});
    for (const auto& [nu, k] : parts.entries()) {
      const auto maps = intertwiner(rs, source, highest_module(rs, nu));
      CAPTURE(nu);
      CHECK(static_cast<Multiplicity>(maps.size()) == k);
    }
    CHECK(intertwiner(rs, source, highest_module(rs, Weight{0, 3})).empty());
  }

  TEST_CASE("KR fundamental modules satisfy the current relations") {
    for (auto [f, n, i, dims] : {std::tuple{Family::C, 2, 1, std::vector<int>{10, 1}},
                                 {Family::C, 3, 2, std::vector<int>{90, 21, 1}},
                                 {Family::B, 3, 2, std::vector<int>{21, 1}},
                                 {Family::D, 4, 2, std::vector<int>{28, 1}}}) {
      const auto rs = rs_of(f, n);
      const auto cm = build_kr_fundamental(rs, i);
      std::vector<int> got;
      for (const auto& p : cm.pieces) got.push_back(p.dim);
      CAPTURE(rs.type().name());
      CHECK(got == dims);
      const auto report = verify_current_relations(cm, i, rs.dcheck()[i - 1]);
      for (const auto& [what, ok] : report.checks) {
        CAPTURE(what);
        CHECK(ok);
      }
      CHECK(report.span_dim == cm.total_dim);
      for (std::size_t s = 0; s < cm.pieces.size(); ++s) CHECK(cm.grade_of(cm.top(s)) == static_cast<int>(s));
    }
  }

  TEST_CASE("KR fundamental modules require epsilon_i(theta) = 2") {
    CHECK_THROWS_AS(build_kr_fundamental(rs_of(Family::C, 3), 3), InvalidInput);
  }

  TEST_CASE("tensor submodules reproduce the graded characters") {
    for (auto [f, n, i, m, ambient, sub] : {std::tuple{Family::C, 2, 1, 2, 11, 11},
                                           {Family::C, 2, 1, 3, 44, 24},
                                           {Family::B, 3, 2, 1, 22, 22},
                                           {Family::A, 2, 1, 2, 9, 6}}) {
      const auto rs = rs_of(f, n);
      const auto ts = kr_tensor_submodule(rs, i, m);
      CHECK(ts.ambient_dim == ambient);
      CHECK(ts.submodule_dim == sub);
      CHECK(ts.character == graded_character(rs, i, m));
    }
  }

  TEST_CASE("the guard stops oversized constructions") {
    CHECK_THROWS_AS(build_kr_fundamental(rs_of(Family::C, 3), 2, DimGuard{50}), GuardExceeded);
  }
}
