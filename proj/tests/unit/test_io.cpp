#include "doctest.h"

#include "json.hpp"
#include "polyalg/io.hpp"

using namespace polyalg;

TEST_CASE("polytope JSON round trip") {
  for (const auto& p : {permutahedron(3), typeB_permutahedron(2), cube(3), dilate(simplex0(Arrangement::type_b(2), {1, -2}), Rational(1, 2))}) {
    const auto text = polytope_to_json(p);
    CHECK(polytope_from_json(text) == p);
  }
  auto j = nlohmann::json::parse(polytope_to_json(cube(2)));
  CHECK(j["arrangement"] == "C");
  CHECK(j["d"] == 2);
  CHECK(j["points"].size() == 4);
  auto q = polytope_from_json(R"({"arrangement":"A","d":3,"points":[[1,0,0],[0,"1",0],["0",0,"1/1"]]})");
  CHECK(q == simplex(Arrangement::braid(3), {1, 2, 3}));
}

TEST_CASE("malformed polytope JSON") {
  CHECK_THROWS_AS(polytope_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(polytope_from_json(R"({"arrangement":"A","d":3})"), InvalidArgument);
  CHECK_THROWS_AS(polytope_from_json(R"({"arrangement":"Q","d":3,"points":[[0,0,0]]})"), InvalidArgument);
  CHECK_THROWS_AS(polytope_from_json(R"({"arrangement":"A","d":3,"points":[[0,0]]})"), InvalidArgument);
  CHECK_THROWS_AS(polytope_from_json(R"({"arrangement":"A","d":3,"points":[[0,0,"x"]]})"), InvalidArgument);
  CHECK_THROWS_AS(polytope_from_json(R"({"arrangement":"A","d":3,"points":[[0,0,1.5]]})"), InvalidArgument);
  // x1 - x2 slice piece of a braid triangle is not a deformation.
  CHECK_THROWS_AS(polytope_from_json(R"({"arrangement":"A","d":3,"points":[[0,0,0],[1,1,-2],[1,-1,0]]})"),
                  InvalidArgument);
}

TEST_CASE("Tits element and weights JSON") {
  auto fam = adams_family(3);
  auto arr = fam.arr;
  const auto& e = fam.elements.at(arr->bottom());
  CHECK(tits_from_json(arr, tits_to_json(e)) == e);
  auto j = nlohmann::json::parse(tits_to_json(TitsElement::basis(arr, 0) * Rational(2, 3)));
  CHECK(j.size() == 1);
  CHECK(j[0]["face"] == "123");
  CHECK(j[0]["coeff"] == "2/3");
  auto w = nlohmann::json::parse(cone_weights_to_json(phi(PiElement::of(permutahedron(3)))));
  CHECK(w.size() == 13);
  CHECK_THROWS_AS(tits_from_json(arr, R"([{"face":"12"}])"), InvalidArgument);
}

TEST_CASE("eta table output") {
  auto c3 = Arrangement::coordinate(3);
  const int x = c3->flat_index(c3->parse_flat("X_{1,3}"));
  std::vector<EtaTable> tables{eta_mobius(c3), eta_permutations(c3)};
  auto rows = nlohmann::json::parse(eta_to_json(tables, x));
  CHECK(rows.size() == 8);
  for (const auto& row : rows) {
    CHECK(row["flat"] == "X_{1,3}");
    CHECK(row["value"] == (row["r"] == 2 ? 1 : 0));
  }
  const auto csv = eta_to_csv(tables, x);
  CHECK(csv.rfind("flat,r,value,method\n", 0) == 0);
  CHECK(csv.find("\"X_{1,3}\",2,1,mobius_formula") != std::string::npos);
  CHECK(eta_to_json(tables) == eta_to_json(tables));
}

TEST_CASE("decomposition JSON") {
  auto dec = a_decompose(permutahedron(3));
  auto j = nlohmann::json::parse(decomposition_to_json(dec));
  CHECK(j["coefficients"]["Delta_{1,2}"] == "1");
  CHECK(j["coefficients"]["Delta_{1,2,3}"] == "0");
  CHECK(j["reconstructed"] == true);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), InvalidArgument);
}
