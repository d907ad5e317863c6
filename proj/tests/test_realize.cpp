#include "doctest.h"
#include "quivhom/sampling.hpp"
#include "test_helpers.hpp"

using namespace quivhom;
using quivhom::testing::fixture;

TEST_CASE("the identity realizes the whole module with an empty chain") {
  Fixture fx = fixture("a2");
  HomCache cache(fx.table);
  Rep p1 = projective_rep(fx.table, 0);
  SummandCertificate cert = realize_summand(cache, p1, RepMap::identity(p1), BackendTag::kExt1Cov);
  CHECK(cert.steps.empty());
  CHECK(cert.b == p1);
  CHECK(is_iso(cert.inclusion));
  validate_certificate(cache, cert);
}

TEST_CASE("dual numbers: the two worked summands") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep lambda = projective_rep(fx.table, 0);
  Rep s = simple_rep(fx.table, 0);
  DirectSum ds = direct_sum(lambda, s);
  auto backend = make_ext1_backend(cache);
  std::vector<BatteryEntry> battery{{"S", s}, {"Lambda", lambda}, {"A", ds.rep}};

  SUBCASE("0 (+) id realizes B = S carrying Ext^1(S,-)") {
    RepMap f = compose(ds.injections[1], ds.projections[1]);
    SummandCertificate cert = realize_summand(cache, ds.rep, f, BackendTag::kExt1Cov);
    validate_certificate(cache, cert);
    CHECK(cert.steps.size() == 1);
    CHECK(cert.b.total_dim() == 1);
    CHECK(is_mono(cert.inclusion));
    VerifyReport report = verify_certificate(*backend, cert, battery);
    CHECK(report.pass);
    CHECK(report.rows[0].dim_g_a == 1);  // Ext^1(Lambda+S, S)
    CHECK(report.rows[0].rank_e == 1);
    CHECK(report.rows[0].dim_g_b == 1);  // Ext^1(S, S)
  }
  SUBCASE("id (+) 0 realizes B = Lambda carrying the zero summand") {
    RepMap f = compose(ds.injections[0], ds.projections[0]);
    SummandCertificate cert = realize_summand(cache, ds.rep, f, BackendTag::kExt1Cov);
    validate_certificate(cache, cert);
    CHECK(cert.b.total_dim() == 2);
    VerifyReport report = verify_certificate(*backend, cert, battery);
    CHECK(report.pass);
    CHECK(report.rows[0].rank_e == 0);
    CHECK(report.rows[0].dim_g_b == 0);
  }
}

TEST_CASE("preconditions are enforced") {
  Fixture fx = fixture("dualnumbers");
  HomCache cache(fx.table);
  Rep s = simple_rep(fx.table, 0);
  SUBCASE("not stably idempotent") {
    RepMap two = RepMap::identity(s).scaled(2);
    CHECK_THROWS_AS(realize_summand(cache, s, two, BackendTag::kExt1Cov), Error);
    try {
      realize_summand(cache, s, two, BackendTag::kExt1Cov);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kPrecondition);
    }
  }
  SUBCASE("not an endomorphism of A") {
    Rep lambda = projective_rep(fx.table, 0);
    CHECK_THROWS_AS(realize_summand(cache, lambda, RepMap::identity(s), BackendTag::kExt1Cov),
                    Error);
  }
  SUBCASE("empty battery") {
    SummandCertificate cert =
        realize_summand(cache, s, RepMap::identity(s), BackendTag::kExt1Cov);
    auto backend = make_ext1_backend(cache);
    CHECK_THROWS_AS(verify_certificate(*backend, cert, {}), Error);
  }
}

TEST_CASE("all three backends verify a descending chain") {
  Fixture fx = fixture("a3");
  HomCache cache(fx.table);
  Rep p1 = projective_rep(fx.table, 0);
  Rep s1 = simple_rep(fx.table, 0);
  DirectSum ds = direct_sum(p1, s1);
  RepMap f = compose(ds.injections[1], ds.projections[1]);

  std::vector<BatteryEntry> battery = default_battery(fx.table, 3);
  std::vector<BatteryEntry> tor_battery = default_battery(fx.opposite, 3);

  SummandCertificate cert = realize_summand(cache, ds.rep, f, BackendTag::kExt1Cov);
  CHECK_FALSE(cert.steps.empty());
  auto ext_b = make_ext1_backend(cache);
  auto st_b = make_stable_hom_backend(cache);
  auto tor_b = make_tor1_backend(cache, fx.opposite);
  CHECK(verify_certificate(*ext_b, cert, battery).pass);
  CHECK(verify_certificate(*st_b, cert, battery).pass);
  CHECK(verify_certificate(*tor_b, cert, tor_battery).pass);
}

TEST_CASE("backend names round-trip") {
  for (BackendTag tag : {BackendTag::kExt1Cov, BackendTag::kStableHomCov, BackendTag::kTor1})
    CHECK(backend_from_name(backend_name(tag)) == tag);
  CHECK_THROWS_AS(backend_from_name("nope"), Error);
}
