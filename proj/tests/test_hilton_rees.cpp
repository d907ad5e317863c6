#include "doctest.h"
#include "quivhom/hilton_rees.hpp"
#include "quivhom/sampling.hpp"
#include "test_helpers.hpp"

using namespace quivhom;
using quivhom::testing::fixture;

namespace {

// independent oracle: walk m = 1, 2, ... comparing the stable classes of
// u^m and u^{2m} directly
uint64_t naive_stable_power_index(HomCache& cache, const RepMap& u, uint64_t cap) {
  const StableHomSpace& s = cache.stable(u.from(), u.from());
  RepMap um = u;
  for (uint64_t m = 1; m <= cap; ++m) {
    RepMap u2m = compose(um, um);
    if (stable_class(s, u2m - um).is_zero()) return m;
    um = compose(um, u);
  }
  return 0;
}

}  // namespace

TEST_CASE("induced Ext map of the identity is the identity") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep s = simple_rep(fx.table, 0);
  InducedExtMap ind = induced_ext_map(cache, RepMap::identity(s), s);
  CHECK(ind.matrix == MatrixModP::identity(1, fx.table->field()));
}

TEST_CASE("maps factoring through projectives induce zero") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep s = simple_rep(fx.table, 0);
  Rep lambda = projective_rep(fx.table, 0);
  // S -> Lambda -> S through the projective cover
  RepMap down = compose(cache.syzygy(s).pi, hom_basis(s, lambda)[0]);
  InducedExtMap ind = induced_ext_map(cache, down, s);
  CHECK(ind.matrix.is_zero());
}

TEST_CASE("connecting classes") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep s = simple_rep(fx.table, 0);
  SUBCASE("zero map") {
    CHECK(connecting_class(cache, RepMap::zero(s, s)).value.is_zero());
  }
  SUBCASE("theta of the identity is the nonsplit extension class") {
    ConnectingClass theta = connecting_class(cache, RepMap::identity(s));
    CHECK(theta.value.rows() == 1);
    CHECK_FALSE(theta.value.is_zero());
  }
  SUBCASE("factoring maps have zero theta") {
    Rep lambda = projective_rep(fx.table, 0);
    RepMap down = compose(cache.syzygy(s).pi, hom_basis(s, lambda)[0]);
    CHECK(connecting_class(cache, down).value.is_zero());
  }
}

TEST_CASE("stable idempotency") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep lambda = projective_rep(fx.table, 0);
  Rep s = simple_rep(fx.table, 0);
  DirectSum ds = direct_sum(lambda, s);
  SUBCASE("honest idempotents") {
    RepMap f = compose(ds.injections[1], ds.projections[1]);
    CHECK(is_stably_idempotent(cache, f));
  }
  SUBCASE("every endomorphism of a projective is stably idempotent") {
    RepMap f(lambda, lambda, {lambda.arrow(0)});
    CHECK(is_stably_idempotent(cache, f));  // f is stably zero
  }
  SUBCASE("a non-idempotent scalar is rejected") {
    RepMap two = RepMap::identity(s).scaled(2);
    CHECK_FALSE(is_stably_idempotent(cache, two));
  }
}

TEST_CASE("stable power idempotents") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep lambda = projective_rep(fx.table, 0);
  Rep s = simple_rep(fx.table, 0);
  DirectSum ds = direct_sum(lambda, s);
  SUBCASE("already idempotent gives m = 1") {
    RepMap f = compose(ds.injections[1], ds.projections[1]);
    StablePower sp = stable_power_idempotent(cache, f);
    CHECK(sp.m == 1);
    CHECK(sp.e == f);
  }
  SUBCASE("stably nilpotent powers to stable zero") {
    RepMap f(lambda, lambda, {lambda.arrow(0)});
    StablePower sp = stable_power_idempotent(cache, f);
    const StableHomSpace& st = cache.stable(lambda, lambda);
    CHECK(stable_class(st, sp.e).is_zero());
  }
  SUBCASE("projection plus projective noise lands on the projection") {
    RepMap f = compose(ds.injections[1], ds.projections[1]);
    // noise through the projective summand
    RepMap noise = compose(ds.injections[0], ds.projections[0]).scaled(5);
    StablePower sp = stable_power_idempotent(cache, f + noise);
    const StableHomSpace& st = cache.stable(ds.rep, ds.rep);
    CHECK(is_stably_idempotent(cache, sp.e));
    CHECK(stable_class(st, sp.e - f).is_zero());
  }
}

TEST_CASE("stable power index agrees with the naive search") {
  for (const char* name : {"dualnumbers", "fpx3", "a2", "a3"}) {
    Fixture fx = fixture(name);
    HomCache cache(fx.table);
    Sampler smp(17);
    for (int t = 0; t < 12; ++t) {
      Rep a = random_rep(smp, fx.table, 5);
      RepMap u = random_endo(smp, a);
      StablePower sp = stable_power_idempotent(cache, u);
      uint64_t naive = naive_stable_power_index(cache, u, 40000);
      if (naive == 0) continue;  // period beyond the naive cap; skip comparison
      CHECK(sp.m == naive);
      const StableHomSpace& st = cache.stable(a, a);
      RepMap um = power(u, sp.m);
      RepMap u2m = power(u, 2 * sp.m);
      CHECK(stable_class(st, u2m - um).is_zero());
    }
  }
}

TEST_CASE("a stably invertible endomorphism powers to the stable identity") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep s = simple_rep(fx.table, 0);
  DirectSum ds = direct_sum(s, s);
  Sampler smp(5);
  for (int t = 0; t < 10; ++t) {
    RepMap u = random_endo(smp, ds.rep);
    if (!is_iso(u)) continue;
    StablePower sp = stable_power_idempotent(cache, u);
    const StableHomSpace& st = cache.stable(ds.rep, ds.rep);
    CHECK(stable_class(st, sp.e - RepMap::identity(ds.rep)).is_zero());
  }
}
