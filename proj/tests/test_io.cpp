#include "doctest.h"
#include "quivhom/io.hpp"
#include "test_helpers.hpp"

#include <cstdio>
#include <fstream>

using namespace quivhom;

namespace {

const std::string kFixtures = QUIVHOM_FIXTURES_DIR;

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("io_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("loading the fixture corpus") {
  FileCache files;
  SUBCASE("dual numbers algebra and modules") {
    AlgebraPtr alg = files.load_algebra(kFixtures + "/dualnumbers/algebra.json");
    CHECK(alg->dim() == 2);
    auto s = files.load_rep(kFixtures + "/dualnumbers/S.json");
    CHECK(s.rep.total_dim() == 1);
    auto lp = files.load_rep(kFixtures + "/dualnumbers/LambdaPlusS.json");
    CHECK(lp.rep.total_dim() == 3);
    auto f = files.load_rep_map(kFixtures + "/dualnumbers/f_proj_S.json");
    CHECK(f.map.is_endo());
  }
  SUBCASE("the opposite flag loads the opposite table") {
    auto sr = files.load_rep(kFixtures + "/dualnumbers/S_right.json");
    CHECK(sr.opposite);
    auto s = files.load_rep(kFixtures + "/dualnumbers/S.json");
    CHECK(tables_opposite(s.rep.algebra(), sr.rep.algebra()));
  }
  SUBCASE("empty matrices for zero-dimensional vertices") {
    auto s1 = files.load_rep(kFixtures + "/a2/S1.json");
    CHECK(s1.rep.dims() == std::vector<size_t>{1, 0});
    auto s2 = files.load_rep(kFixtures + "/a2/S2.json");
    CHECK(s2.rep.dims() == std::vector<size_t>{0, 1});
  }
}

TEST_CASE("serialization round-trips bit-exactly") {
  FileCache files;
  for (const std::string rel :
       {std::string("/dualnumbers/LambdaPlusS.json"), std::string("/a2/P1.json"),
        std::string("/commsquare/S4.json")}) {
    auto loaded = files.load_rep(kFixtures + rel);
    std::string once = rep_to_json(loaded.rep, loaded.algebra_path, loaded.opposite);
    Rep again = rep_from_json_text(once, loaded.rep.algebra_ptr());
    CHECK(again == loaded.rep);
    CHECK(rep_to_json(again, loaded.algebra_path, loaded.opposite) == once);
  }
}

TEST_CASE("format errors name the offending field") {
  FileCache files;
  SUBCASE("unknown field in an algebra file") {
    std::string path = temp_file(
        "unknown.json",
        R"({"prime": 101, "nilpotency_bound": 4, "vertices": ["v"], "arrows": [], "relations": [], "extra": 1})");
    try {
      files.load_algebra(path);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("extra") != std::string::npos);
    }
    std::remove(path.c_str());
  }
  SUBCASE("composite prime") {
    std::string path = temp_file(
        "composite.json",
        R"({"prime": 91, "nilpotency_bound": 4, "vertices": ["v"], "arrows": [], "relations": []})");
    CHECK_THROWS_AS(files.load_algebra(path), Error);
    std::remove(path.c_str());
  }
  SUBCASE("wrong matrix shape names the arrow") {
    std::string path = temp_file(
        "badshape.json",
        std::string(R"({"algebra": ")") + kFixtures +
            R"(/dualnumbers/algebra.json", "dims": {"v": 2}, "arrows": {"a": [[0, 0]]}})");
    try {
      files.load_rep(path);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("a") != std::string::npos);
    }
    std::remove(path.c_str());
  }
  SUBCASE("module violating a relation is rejected on load") {
    std::string path = temp_file(
        "badrel.json",
        std::string(R"({"algebra": ")") + kFixtures +
            R"(/dualnumbers/algebra.json", "dims": {"v": 1}, "arrows": {"a": [[1]]}})");
    CHECK_THROWS_AS(files.load_rep(path), Error);
    std::remove(path.c_str());
  }
  SUBCASE("missing dims entry") {
    std::string path = temp_file(
        "missingdim.json", std::string(R"({"algebra": ")") + kFixtures +
                               R"(/a2/algebra.json", "dims": {"1": 1}, "arrows": {"a": []}})");
    try {
      files.load_rep(path);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    std::remove(path.c_str());
  }
}

TEST_CASE("negative coefficients reduce mod p") {
  FileCache files;
  // the commutative square relation uses coeff -1
  AlgebraPtr alg = files.load_algebra(kFixtures + "/commsquare/algebra.json");
  CHECK(alg->dim() == 9);
}

TEST_CASE("certificates serialize with sorted keys and integers") {
  FileCache files;
  auto a = files.load_rep(kFixtures + "/dualnumbers/LambdaPlusS.json");
  auto f = files.load_rep_map(kFixtures + "/dualnumbers/f_proj_S.json");
  HomCache cache(a.rep.algebra_ptr());
  SummandCertificate cert = realize_summand(cache, a.rep, f.map, BackendTag::kExt1Cov);
  std::string text = certificate_to_json(cert, nullptr, a.algebra_path, a.opposite);
  CHECK(text.find("\"backend\": \"ext1\"") != std::string::npos);
  CHECK(text.find("\"terminal_flag\": \"final_endomorphism_epi\"") != std::string::npos);
  CHECK(text.find('.') == std::string::npos || text.find(".json") != std::string::npos);
}
