#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "affschur/json_io.hpp"
#include "affschur/verify.hpp"

using namespace affschur;

namespace {
OrbitMatrix mat(std::vector<std::vector<int>> rows) {
  OrbitMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return M;
}
LaurentPoly mono(int n, ExpVec e, long c = 1) { return LaurentPoly::monomial(n, e, BigInt(c)); }
}  // namespace

TEST_CASE("matrix round-trip and text parsing") {
  auto M = mat({{1, 0, 2}, {0, 3, 0}});
  CHECK(matrix_from_json(matrix_to_json(M)) == M);
  CHECK(parse_matrix_text("1,0,2;0,3,0") == M);
  CHECK(parse_matrix_text(" 1 , 0 , 2 ; 0 , 3 , 0 ") == M);
  CHECK(matrix_to_json(M).dump() == "[[1,0,2],[0,3,0]]");

  CHECK_THROWS_AS((void)parse_matrix_text("1,2;3"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_matrix_text("1,-2;3,4"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_matrix_text(""), std::invalid_argument);
  CHECK_THROWS_AS((void)matrix_from_json(Json::parse("[[1,2],[3]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)matrix_from_json(Json::parse("[[1,2],[3,-1]]")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)matrix_from_json(Json::parse("{\"a\":1}")),
                  std::invalid_argument);
}

TEST_CASE("composition text parsing") {
  CHECK(parse_composition_text("1,0,2") == Composition{1, 0, 2});
  CHECK(parse_composition_text(" 3 ") == Composition{3});
  CHECK_THROWS_AS((void)parse_composition_text("1,-1"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_composition_text("a,b"), std::invalid_argument);
}

TEST_CASE("polynomial round-trip keeps exact big coefficients") {
  // 3*x1^2*x2^-1 - 5 + x3^4, then blown up by a large factor.
  LaurentPoly f = mono(3, {2, -1, 0}, 3) + mono(3, {0, 0, 0}, -5) + mono(3, {0, 0, 4});
  BigInt big("123456789012345678901234567890");
  LaurentPoly g = f.scaled(big);
  CHECK(poly_from_json(poly_to_json(f)) == f);
  CHECK(poly_from_json(poly_to_json(g)) == g);
  CHECK(poly_from_json(poly_to_json(LaurentPoly::zero(2))) == LaurentPoly::zero(2));

  // Integer (non-string) coefficients are accepted on input.
  Json j = Json::parse(R"({"nvars":1,"terms":[{"coeff":7,"exp":[-2]}]})");
  CHECK(poly_from_json(j) == mono(1, {-2}, 7));

  CHECK_THROWS_AS((void)poly_from_json(Json::parse(R"({"nvars":2,"terms":[{"coeff":"1","exp":[1]}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)poly_from_json(Json::parse(R"({"terms":[]})")),
                  std::invalid_argument);
}

TEST_CASE("block-symmetric class round-trip validates blocks") {
  LaurentPoly f = complete_h(2, {1, 2}, false, 2);  // symmetric in x1,x2
  SymClass c{f, {2}};
  Json j = symclass_to_json(c);
  CHECK(j["blocks"].dump() == "[[1,2]]");
  SymClass back = symclass_from_json(j);
  CHECK(back.poly == c.poly);
  CHECK(back.blocks == c.blocks);

  // Zero-size blocks survive the interval encoding.
  SymClass z{LaurentPoly::one(1), {0, 1, 0}};
  CHECK(symclass_from_json(symclass_to_json(z)).blocks == Composition{0, 1, 0});

  // Blocks that do not cover nvars are rejected.
  Json bad = symclass_to_json(c);
  bad["blocks"] = Json::parse("[[1,1]]");
  CHECK_THROWS_AS((void)symclass_from_json(bad), std::invalid_argument);
  Json nothing = Json::parse(R"({"nvars":2,"terms":[]})");
  CHECK_THROWS_AS((void)symclass_from_json(nothing), std::invalid_argument);
}

TEST_CASE("supported class round-trip") {
  auto M = mat({{1, 0}, {1, 1}});
  // cell blocks of M: one variable per nonzero cell in row-major order.
  KClass c{M, SymClass{LaurentPoly::one(3), cell_blocks(M)}};
  Json j = kclass_to_json(c);
  KClass back = kclass_from_json(j);
  CHECK(back == c);

  // A class whose blocks disagree with the matrix cells is rejected.
  j["class"]["blocks"] = Json::parse("[[1,3]]");
  CHECK_THROWS_AS((void)kclass_from_json(j), std::invalid_argument);
}

TEST_CASE("word round-trip; local records are rejected with guidance") {
  Word w{gen_E(1, 2), gen_F(2, -1), gen_H(1, 0), gen_Hcf(3, 5)};
  Json j = word_to_json(w);
  Word back = word_from_json(j);
  REQUIRE(back.size() == w.size());
  for (size_t t = 0; t < w.size(); ++t) {
    CHECK(back[t].kind == w[t].kind);
    CHECK(back[t].k == w[t].k);
    CHECK(back[t].p == w[t].p);
  }
  CHECK(word_from_json(Json::array()).empty());

  Json local = Json::parse(R"([{"kind":"E","mu":[1,1],"k":1,"p":0}])");
  bool threw = false;
  try {
    (void)word_from_json(local);
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("local classes") != std::string::npos);
  }
  CHECK(threw);
  CHECK_THROWS_AS((void)word_from_json(Json::parse(R"([{"kind":"X","k":1,"p":0}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)word_from_json(Json::parse(R"([{"kind":"E","k":0,"p":0}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)word_from_json(Json::parse(R"([{"kind":"E","k":1,"p":0,"x":1}])")),
                  std::invalid_argument);
}

TEST_CASE("component-function round-trip drops zero classes and sorts") {
  FlagFun f;
  flagfun_add(f, {1, 1}, mono(2, {1, 0}, 2));
  flagfun_add(f, {0, 2}, complete_h(1, {1, 2}, false, 2));
  Json j = flagfun_to_json(f);
  CHECK(j.size() == 2);
  CHECK(j[0]["component"].dump() == "[0,2]");  // deterministic map order
  FlagFun back = flagfun_from_json(j);
  CHECK(flagfun_equal(back, f));

  // Zero classes are dropped on parse; duplicates are rejected.
  Json withzero = Json::parse(
      R"([{"component":[1,1],"class":{"nvars":2,"terms":[],"blocks":[[1,1],[2,2]]}}])");
  CHECK(flagfun_from_json(withzero).empty());
  Json dup = Json::array({j[0], j[0]});
  CHECK_THROWS_AS((void)flagfun_from_json(dup), std::invalid_argument);

  CHECK(flagfun_from_json(flagfun_to_json(FlagFun{})).empty());
}

TEST_CASE("factor records and reports serialize with stable fields") {
  AlmostDiag D{'F', {1, 2, 3}, 2};
  Json j = almost_diag_to_json(D);
  CHECK(j["kind"] == "F");
  CHECK(j["base"].dump() == "[1,2,3]");
  CHECK(j["k"] == 2);

  Report r = verify_relation("1.1", 2, 1, 1);
  Json rj = report_to_json(r);
  CHECK(rj["tag"] == "1.1");
  CHECK(rj["pass"] == true);
  CHECK(rj["instances"].get<long>() > 0);
  CHECK(rj["n"] == 2);
  CHECK(rj["d"] == 1);
  CHECK(rj["window"] == 1);
}
