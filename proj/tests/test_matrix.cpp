#include "doctest.h"
#include "quivhom/matrix.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace quivhom;
using quivhom::testing::mat;

TEST_CASE("field primes are validated by trial division") {
  CHECK_THROWS_AS(FieldPrime(1), Error);
  CHECK_THROWS_AS(FieldPrime(4), Error);
  CHECK_THROWS_AS(FieldPrime(91), Error);  // 7 * 13
  CHECK(FieldPrime(2).modulus() == 2);
  CHECK(FieldPrime(101).modulus() == 101);
  FieldPrime p(101);
  for (uint32_t a = 1; a < 101; ++a) CHECK(p.mul(a, p.inv(a)) == 1);
  CHECK(p.reduce(-1) == 100);
  CHECK(p.reduce(202) == 0);
}

TEST_CASE("rref frozen examples") {
  SUBCASE("identity is fixed") {
    MatrixModP id = MatrixModP::identity(2, FieldPrime(5));
    RrefResult r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<size_t>{0, 1});
    CHECK(r.rank == 2);
  }
  SUBCASE("[[2,4],[1,2]] mod 5 reduces to [[1,2],[0,0]]") {
    RrefResult r = rref(mat({{2, 4}, {1, 2}}, 5));
    CHECK(r.reduced == mat({{1, 2}, {0, 0}}, 5));
    CHECK(r.rank == 1);
  }
  SUBCASE("zero matrix") {
    MatrixModP z(3, 3, FieldPrime(5));
    RrefResult r = rref(z);
    CHECK(r.reduced == z);
    CHECK(r.rank == 0);
  }
}

TEST_CASE("kernel basis frozen examples") {
  SUBCASE("identity has empty kernel") {
    CHECK(kernel_basis(MatrixModP::identity(3, FieldPrime(5))).cols() == 0);
  }
  SUBCASE("[[1,2]] mod 5 has kernel spanned by (3,1)") {
    MatrixModP k = kernel_basis(mat({{1, 2}}, 5));
    CHECK(k == mat({{3}, {1}}, 5));
  }
  SUBCASE("zero map has the standard basis") {
    CHECK(kernel_basis(MatrixModP(2, 3, FieldPrime(5))) == MatrixModP::identity(3, FieldPrime(5)));
  }
}

TEST_CASE("solve frozen examples") {
  SUBCASE("identity") {
    MatrixModP b = mat({{2}, {3}}, 5);
    auto x = solve(MatrixModP::identity(2, FieldPrime(5)), b);
    REQUIRE(x);
    CHECK(*x == b);
  }
  SUBCASE("2x = 1 mod 5 gives x = 3") {
    auto x = solve(mat({{2}}, 5), mat({{1}}, 5));
    REQUIRE(x);
    CHECK(*x == mat({{3}}, 5));
  }
  SUBCASE("0x = 1 is inconsistent") { CHECK_FALSE(solve(mat({{0}}, 5), mat({{1}}, 5))); }
  SUBCASE("row mismatch is a contract violation") {
    CHECK_THROWS_AS(solve(mat({{1}}, 5), mat({{1}, {1}}, 5)), Error);
  }
}

TEST_CASE("randomized rref properties") {
  std::mt19937_64 rng(7);
  FieldPrime p(101);
  for (int t = 0; t < 100; ++t) {
    size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    MatrixModP m(rows, cols, p);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<uint32_t>(rng() % 101));
    RrefResult rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);
    MatrixModP k = kernel_basis(m);
    CHECK(rr.rank + k.cols() == cols);
    CHECK((m * k).is_zero());
    MatrixModP x(cols, 1, p);
    for (size_t c = 0; c < cols; ++c) x.set(c, 0, static_cast<uint32_t>(rng() % 101));
    auto sol = solve(m, m * x);
    REQUIRE(sol);
    CHECK(m * *sol == m * x);
  }
}

TEST_CASE("canonical subspaces and quotients") {
  FieldPrime p(101);
  MatrixModP span = mat({{1, 2}, {2, 4}, {0, 1}}, 101);
  MatrixModP canon = column_space_canonical(span);
  CHECK(canon.cols() == 2);
  CHECK(column_space_canonical(canon) == canon);
  CHECK(span_contains(canon, span));

  QuotientSpace q = quotient_by_span(3, span, p);
  CHECK(q.dim == 1);
  CHECK(q.projection * q.section == MatrixModP::identity(1, p));
  // every span column projects to zero
  CHECK((q.projection * span).is_zero());
}
