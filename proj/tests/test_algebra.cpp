#include "doctest.h"
#include "quivhom/algebra.hpp"
#include "test_helpers.hpp"

using namespace quivhom;
using quivhom::testing::fixture;

TEST_CASE("dual numbers: one loop with a^2 = 0") {
  Fixture fx = fixture("dualnumbers");
  const AlgebraTable& a = *fx.table;
  CHECK(a.dim() == 2);
  CHECK(a.basis(0).word.empty());
  CHECK(a.basis(1).word == std::vector<size_t>{0});
  // a * a = 0
  CHECK(a.mult(1, 1) == std::vector<uint32_t>{0, 0});
  // e * a = a
  CHECK(a.mult(0, 1) == std::vector<uint32_t>{0, 1});
}

TEST_CASE("A2 without relations has dimension 3") {
  Fixture fx = fixture("a2");
  CHECK(fx.table->dim() == 3);
  CHECK(path_basis(*fx.table, "1", "2").size() == 1);
  CHECK(path_basis(*fx.table, "2", "1").empty());
  CHECK(path_basis(*fx.table, "1", "1").size() == 1);
}

TEST_CASE("F_p[x]/(x^3) has basis e, x, x^2") {
  Fixture fx = fixture("fpx3");
  const AlgebraTable& a = *fx.table;
  CHECK(a.dim() == 3);
  CHECK(a.basis(2).word == std::vector<size_t>{0, 0});
  // x * x = x^2, x^2 * x = 0
  std::vector<uint32_t> xsq{0, 0, 1};
  CHECK(a.mult(1, 1) == xsq);
  CHECK(a.mult(2, 1) == std::vector<uint32_t>{0, 0, 0});
}

TEST_CASE("dual numbers via path_basis frozen examples") {
  Fixture fx = fixture("dualnumbers");
  CHECK(path_basis(*fx.table, "v", "v").size() == 2);
  CHECK_THROWS_AS(path_basis(*fx.table, "w", "v"), Error);
}

TEST_CASE("opposite algebra") {
  SUBCASE("dual numbers are commutative") {
    Fixture fx = fixture("dualnumbers");
    AlgebraTable opp = opposite_algebra(*fx.table);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) CHECK(opp.mult(i, j) == fx.table->mult(i, j));
  }
  SUBCASE("A2 reverses the arrow") {
    Fixture fx = fixture("a2");
    AlgebraTable opp = opposite_algebra(*fx.table);
    CHECK(opp.dim() == 3);
    CHECK(opp.quiver().arrows[0].source == 1);
    CHECK(opp.quiver().arrows[0].target == 0);
    CHECK(opposite_algebra(opp) == *fx.table);
  }
}

TEST_CASE("relation validation") {
  Quiver q{{"1", "2"}, {Arrow{"a", 0, 1}, Arrow{"b", 0, 1}}};
  SUBCASE("non-composable term is rejected") {
    RelationSet r{{Relation{RelationTerm{1, {0, 0}}}}, 6};  // a then a does not compose
    CHECK_THROWS_AS(build_algebra(q, r, FieldPrime(101)), Error);
  }
  SUBCASE("length-one terms are rejected") {
    RelationSet r{{Relation{RelationTerm{1, {0}}}}, 6};
    CHECK_THROWS_AS(build_algebra(q, r, FieldPrime(101)), Error);
  }
  SUBCASE("mixed endpoints are rejected") {
    Quiver q2{{"1"}, {Arrow{"a", 0, 0}}};
    RelationSet r{{Relation{RelationTerm{1, {0, 0}}, RelationTerm{1, {0, 0, 0}}}}, 6};
    CHECK_NOTHROW(build_algebra(q2, r, FieldPrime(101)));  // same endpoints, fine
  }
  SUBCASE("nilpotency bound below 2 is rejected") {
    RelationSet r{{}, 1};
    CHECK_THROWS_AS(build_algebra(q, r, FieldPrime(101)), Error);
  }
}

TEST_CASE("inhomogeneous admissible relation builds a consistent table") {
  // one vertex, two loops, y^2 = z^3 in the truncated algebra
  Quiver q{{"v"}, {Arrow{"y", 0, 0}, Arrow{"z", 0, 0}}};
  RelationSet r{{Relation{RelationTerm{1, {0, 0}}, RelationTerm{100, {1, 1, 1}}}}, 4};
  AlgebraTable a = build_algebra(q, r, FieldPrime(101));
  const FieldPrime p = a.field();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      for (size_t k = 0; k < a.dim(); ++k) {
        std::vector<uint32_t> left(a.dim(), 0), right(a.dim(), 0);
        const std::vector<uint32_t>& ij = a.mult(i, j);
        for (size_t t = 0; t < a.dim(); ++t)
          if (ij[t])
            for (size_t u = 0; u < a.dim(); ++u)
              left[u] = p.add(left[u], p.mul(ij[t], a.mult(t, k)[u]));
        const std::vector<uint32_t>& jk = a.mult(j, k);
        for (size_t t = 0; t < a.dim(); ++t)
          if (jk[t])
            for (size_t u = 0; u < a.dim(); ++u)
              right[u] = p.add(right[u], p.mul(jk[t], a.mult(i, t)[u]));
        CHECK(left == right);
      }
}

TEST_CASE("duplicate labels are rejected") {
  CHECK_THROWS_AS(build_algebra(Quiver{{"1", "1"}, {}}, RelationSet{{}, 4}, FieldPrime(101)),
                  Error);
  CHECK_THROWS_AS(
      build_algebra(Quiver{{"1"}, {Arrow{"a", 0, 0}, Arrow{"a", 0, 0}}}, RelationSet{{}, 4},
                    FieldPrime(101)),
      Error);
}
