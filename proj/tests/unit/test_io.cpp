#include "doctest.h"

#include <cstdio>
#include <random>

#include "grw/io.hpp"
#include "support.hpp"

using namespace grw;

namespace {

LinearCode cyclic_3_1(const FieldSpec& fs) {
  return cyclic_code(fs, 3, {fs.parse("a^2+a"), fs.parse("a^2+a+1"), fs.parse("1")});
}

}  // namespace

TEST_CASE("code documents round-trip") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  auto j = code_to_json(c);
  CHECK(j["p"] == 2);
  CHECK(j["e"] == 1);
  CHECK(j["m"] == 4);
  CHECK(j["ext_modulus"] == OrderedJson::array({1, 1, 0, 0, 1}));
  auto back = code_from_json(Json::parse(j.dump()));
  CHECK(back == c);
}

TEST_CASE("code documents round-trip through a tower with e = 2") {
  auto fs = test::f4_tower();
  std::mt19937_64 rng(41);
  auto c = test::random_code(fs, 2, 1, rng);
  auto j = code_to_json(c);
  CHECK(j.contains("base_modulus"));
  auto back = code_from_json(Json::parse(j.dump()));
  CHECK(back == c);
}

TEST_CASE("raw generator rows are emitted verbatim") {
  auto fs = test::f81();
  Vec<ExtField> pts = {fs.parse("1"), fs.parse("a"), fs.parse("a^2"), fs.parse("a^3")};
  auto rows = gabidulin_generator_rows(fs, 4, 2, pts);
  auto j = code_document_json(fs, rows);
  // second row starts (1, a^3, ...): a^3 has coefficient vector [0,0,0,1]
  CHECK(j["generator"][1][1] == OrderedJson::array({0, 0, 0, 1}));
  CHECK(code_from_json(Json::parse(j.dump())) == gabidulin_code(fs, 4, 2, pts));
}

TEST_CASE("malformed code documents are rejected") {
  auto good = code_to_json(cyclic_3_1(test::f16()));
  auto parse = [&](OrderedJson j) { return code_from_json(Json::parse(j.dump())); };

  auto miss = good;
  miss.erase("ext_modulus");
  CHECK_THROWS_AS((void)parse(miss), ParseError);

  auto reducible = good;
  reducible["ext_modulus"] = {1, 0, 0, 0, 1};  // x^4 + 1 = (x+1)^4 over F_2
  CHECK_THROWS_AS((void)parse(reducible), InvalidInput);

  auto nonmonic = good;
  nonmonic["ext_modulus"] = {1, 1, 0, 0, 0};
  CHECK_THROWS_AS((void)parse(nonmonic), InvalidInput);

  auto badrow = good;
  badrow["generator"][0] = {{1, 0, 0, 0}};  // wrong length
  CHECK_THROWS_AS((void)parse(badrow), ParseError);

  auto dependent = good;
  dependent["generator"].push_back(dependent["generator"][0]);
  CHECK_THROWS_AS((void)parse(dependent), InvalidInput);

  auto notprime = good;
  notprime["p"] = 6;
  CHECK_THROWS_AS((void)parse(notprime), InvalidInput);
}

TEST_CASE("distribution tables round-trip with decimal-string counts") {
  auto t = mrd_distribution(4, 3, 3, 4);
  auto j = distribution_to_json(t);
  CHECK(j["rows"][1][2] == "130");
  CHECK(distribution_from_json(Json::parse(j.dump())) == t);

  // counts well beyond 64 bits survive the trip
  DistributionTable big = t;
  big.rows[1][2] = Count("123456789012345678901234567890123456789");
  auto jb = distribution_to_json(big);
  auto back = distribution_from_json(Json::parse(jb.dump()));
  CHECK(back.rows[1][2] == big.rows[1][2]);
}

TEST_CASE("B-tables round-trip") {
  auto fs = test::f16();
  auto b = b_table_transversal(cyclic_3_1(fs));
  CHECK(btable_from_json(Json::parse(btable_to_json(b).dump())) == b);
}

TEST_CASE("enumerator JSON carries coefficients and the rendered polynomial") {
  auto fs = test::f16();
  auto e = enumerator(cyclic_3_1(fs), 1);
  auto j = enumerator_to_json(e);
  CHECK(j["polynomial"] == "X^2*Y");
  CHECK(j["coefficients"] == OrderedJson::array({"0", "0", "1", "0"}));
}

TEST_CASE("csv and latex renderings") {
  auto fs = test::f16();
  auto t = brute_force_distribution(cyclic_3_1(fs));
  auto csv = distribution_to_csv(t);
  CHECK(csv.find("r,w,count\n") == 0);
  CHECK(csv.find("1,2,1\n") != std::string::npos);
  auto tex = distribution_to_latex(t);
  CHECK(tex.find("0 & 1 & 0 & 0 & 0 \\\\") != std::string::npos);
}

TEST_CASE("file save and load") {
  auto fs = test::f16();
  auto c = cyclic_3_1(fs);
  const std::string path = "grw_test_code.json";
  save_code_file(c, path);
  CHECK(load_code_file(path) == c);
  std::remove(path.c_str());
  CHECK_THROWS_AS((void)load_code_file("does_not_exist.json"), ParseError);
}
