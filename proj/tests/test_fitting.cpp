#include "doctest.h"
#include "quivhom/fitting.hpp"
#include "test_helpers.hpp"

using namespace quivhom;
using quivhom::testing::fixture;
using quivhom::testing::mat;

namespace {

AlgebraPtr ground_field_algebra() {
  // one vertex, no arrows: modules are plain vector spaces
  return std::make_shared<const AlgebraTable>(
      build_algebra(Quiver{{"v"}, {}}, RelationSet{{}, 2}, FieldPrime(101)));
}

}  // namespace

TEST_CASE("an isomorphism has Fitting index 0") {
  Fixture fx = fixture("dualnumbers");
  Rep lambda = projective_rep(fx.table, 0);
  FittingResult fr = fitting_decomposition(RepMap::identity(lambda));
  CHECK(fr.n == 0);
  CHECK(fr.kernel_rep.total_dim() == 0);
  CHECK(fr.image_rep.total_dim() == 2);
}

TEST_CASE("the 3x3 vector space example has index 1") {
  AlgebraPtr alg = ground_field_algebra();
  Rep v3(alg, {3}, {});
  RepMap f(v3, v3, {mat({{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}, 101)});
  CHECK(fitting_index(f) == 1);
  FittingResult fr = fitting_decomposition(f);
  CHECK(fr.kernel_rep.total_dim() == 1);
  CHECK(fr.image_rep.total_dim() == 2);
  CHECK(is_iso(fr.q));
}

TEST_CASE("multiplication by the loop on the dual numbers has index 2") {
  Fixture fx = fixture("dualnumbers");
  Rep lambda = projective_rep(fx.table, 0);
  RepMap f(lambda, lambda, {lambda.arrow(0)});
  CHECK(fitting_index(f) == 2);
  FittingResult fr = fitting_decomposition(f);
  CHECK(fr.kernel_rep.total_dim() == 2);  // f is nilpotent
  CHECK(fr.image_rep.total_dim() == 0);
}

TEST_CASE("projection onto a summand has index 1") {
  Fixture fx = fixture("dualnumbers");
  DirectSum ds = direct_sum(projective_rep(fx.table, 0), simple_rep(fx.table, 0));
  RepMap f = compose(ds.injections[1], ds.projections[1]);
  FittingResult fr = fitting_decomposition(f);
  CHECK(fr.n == 1);
  CHECK(fr.kernel_rep.total_dim() == 2);
  CHECK(fr.image_rep.total_dim() == 1);
  CHECK(is_iso(fr.f_on_image));
  // f restricted to the kernel part vanishes at the index
  RepMap fk = power(fr.f_on_kernel, fr.n);
  for (const MatrixModP& b : fk.blocks()) CHECK(b.is_zero());
}

TEST_CASE("non-endomorphisms are rejected") {
  Fixture fx = fixture("a2");
  Rep s1 = simple_rep(fx.table, 0);
  Rep s2 = simple_rep(fx.table, 1);
  RepMap f = RepMap::zero(s1, s2);
  CHECK_THROWS_AS(fitting_index(f), Error);
  CHECK_THROWS_AS(fitting_decomposition(f), Error);
}

TEST_CASE("index never exceeds the total dimension") {
  AlgebraPtr alg = ground_field_algebra();
  Rep v4(alg, {4}, {});
  // a full Jordan block is the worst case
  RepMap f(v4, v4, {mat({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}, 101)});
  CHECK(fitting_index(f) == 4);
  FittingResult fr = fitting_decomposition(f);
  CHECK(fr.kernel_rep.total_dim() == 4);
  CHECK(fr.n <= v4.total_dim());
}
