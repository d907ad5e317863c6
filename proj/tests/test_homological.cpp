#include "doctest.h"
#include "quivhom/homological.hpp"
#include "test_helpers.hpp"

using namespace quivhom;
using quivhom::testing::fixture;

TEST_CASE("indecomposable projectives") {
  CHECK(projective_rep(fixture("dualnumbers").table, 0).total_dim() == 2);
  Fixture a2 = fixture("a2");
  Rep p1 = projective_rep(a2.table, 0);
  CHECK(p1.dims() == std::vector<size_t>{1, 1});
  CHECK(projective_rep(a2.table, 1).dims() == std::vector<size_t>{0, 1});
  CHECK(projective_rep(fixture("fpx3").table, 0).total_dim() == 3);
  CHECK_THROWS_AS(projective_rep(a2.table, 5), Error);
}

TEST_CASE("projective covers and syzygies") {
  SUBCASE("a projective is its own cover") {
    Fixture fx = fixture("a2");
    Rep p1 = projective_rep(fx.table, 0);
    SyzygyData syz = projective_cover(p1);
    CHECK(syz.cover == p1);
    CHECK(syz.omega.total_dim() == 0);
  }
  SUBCASE("dual numbers: Omega S = S") {
    Fixture fx = fixture("dualnumbers");
    SyzygyData syz = projective_cover(simple_rep(fx.table, 0));
    CHECK(syz.cover.total_dim() == 2);
    CHECK(syz.omega.total_dim() == 1);
  }
  SUBCASE("A2: Omega S(1) = S(2)") {
    Fixture fx = fixture("a2");
    SyzygyData syz = projective_cover(simple_rep(fx.table, 0));
    CHECK(syz.omega.dims() == std::vector<size_t>{0, 1});
  }
  SUBCASE("the zero module has a zero cover") {
    Fixture fx = fixture("a2");
    SyzygyData syz = projective_cover(Rep::zero(fx.table));
    CHECK(syz.cover.total_dim() == 0);
    CHECK(syz.omega.total_dim() == 0);
  }
}

TEST_CASE("Ext^1 frozen examples") {
  SUBCASE("vanishing on projectives") {
    Fixture fx = fixture("a2");
    CHECK(ext1(projective_rep(fx.table, 0), simple_rep(fx.table, 0)).dim == 0);
  }
  SUBCASE("dual numbers: Ext^1(S,S) = 1") {
    Fixture fx = fixture("dualnumbers");
    Rep s = simple_rep(fx.table, 0);
    CHECK(ext1(s, s).dim == 1);
  }
  SUBCASE("A2: Ext^1(S1,S2) = 1 and Ext^1(S1,S1) = 0") {
    Fixture fx = fixture("a2");
    Rep s1 = simple_rep(fx.table, 0);
    Rep s2 = simple_rep(fx.table, 1);
    CHECK(ext1(s1, s2).dim == 1);
    CHECK(ext1(s1, s1).dim == 0);
  }
  SUBCASE("algebra mismatch") {
    CHECK_THROWS_AS(
        ext1(simple_rep(fixture("a2").table, 0), simple_rep(fixture("dualnumbers").table, 0)),
        Error);
  }
}

TEST_CASE("lifting through covers") {
  Fixture fx = fixture("dualnumbers");
  Rep s = simple_rep(fx.table, 0);
  SyzygyData syz = projective_cover(s);
  SUBCASE("identity lifts to an isomorphism pair") {
    CoverLift lift = lift_through_covers(syz, syz, RepMap::identity(s));
    CHECK(compose(syz.pi, lift.on_covers) == compose(RepMap::identity(s), syz.pi));
    CHECK(compose(syz.iota, lift.on_omegas) == compose(lift.on_covers, syz.iota));
    CHECK_FALSE(lift.on_omegas.block(0).is_zero());  // Omega id acts as a unit on the socle
  }
  SUBCASE("zero lifts to something restricting into the syzygy") {
    CoverLift lift = lift_through_covers(syz, syz, RepMap::zero(s, s));
    CHECK(compose(syz.pi, lift.on_covers) == RepMap::zero(syz.cover, s));
  }
}

TEST_CASE("factoring through projectives") {
  Fixture fx = fixture("dualnumbers");
  Rep s = simple_rep(fx.table, 0);
  Rep lambda = projective_rep(fx.table, 0);
  SUBCASE("maps into a projective always factor") {
    for (const RepMap& f : hom_basis(s, lambda)) CHECK(factors_through_projective(f));
  }
  SUBCASE("the identity of S does not factor") {
    CHECK_FALSE(factors_through_projective(RepMap::identity(s)));
  }
  SUBCASE("zero factors") { CHECK(factors_through_projective(RepMap::zero(s, s))); }
  SUBCASE("a witness is produced") {
    SyzygyData syz = projective_cover(lambda);
    auto w = factors_through_projective(syz, RepMap::identity(lambda));
    REQUIRE(w);
    CHECK(compose(syz.pi, *w) == RepMap::identity(lambda));
  }
}

TEST_CASE("stable Hom frozen examples") {
  Fixture fx = fixture("dualnumbers");
  Rep s = simple_rep(fx.table, 0);
  Rep lambda = projective_rep(fx.table, 0);
  SUBCASE("into a projective everything dies") { CHECK(stable_hom(s, lambda).dim == 0); }
  SUBCASE("stable Hom(S,S) is one-dimensional") { CHECK(stable_hom(s, s).dim == 1); }
  SUBCASE("stable End(Lambda + S) is one-dimensional, End is five-dimensional") {
    DirectSum ds = direct_sum(lambda, s);
    CHECK(hom_basis(ds.rep, ds.rep).size() == 5);
    CHECK(stable_hom(ds.rep, ds.rep).dim == 1);
  }
}

TEST_CASE("solve_through and solve_past are exact witnesses") {
  Fixture fx = fixture("a3");
  Rep p1 = projective_rep(fx.table, 0);
  Rep s1 = simple_rep(fx.table, 0);
  SyzygyData syz = projective_cover(s1);
  RepMap proj = syz.pi;
  // factor proj through itself
  auto x = solve_through(proj, proj);
  REQUIRE(x);
  CHECK(compose(proj, *x) == proj);
  // extend the cokernel projection over the cover
  CokernelResult ck = cokernel(syz.iota);
  auto y = solve_past(syz.iota, RepMap::zero(syz.omega, ck.rep));
  REQUIRE(y);
  (void)p1;
}
