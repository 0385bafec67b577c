#include "doctest.h"

#include "polyalg/linalg.hpp"
#include "polyalg/ratpoly.hpp"
#include "polyalg/rational.hpp"

using namespace polyalg;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(ratio(6, 4)) == "3/2");
  CHECK(ratio(6, 4) == Rational(3, 2));
  CHECK(to_string(ratio(-4, 2)) == "-2");
  CHECK_THROWS_AS(ratio(1, 0), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(hash_value(Rational(1, 3)) == hash_value(parse_rational("2/6")));
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(Rational(5), 2) == 10);
  CHECK(binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binomial(Rational(2), 3) == 0);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(-1) == 1);
  CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rank, determinant and nullspace") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational dot = 0;
    for (int k = 0; k < 3; ++k) dot += row[k] * ns[0][k];
    CHECK(dot == 0);
  }
  CHECK(determinant(Matrix{{2, 1}, {1, 3}}) == 5);
}

TEST_CASE("solve distinguishes unique, underdetermined and inconsistent systems") {
  auto r = solve(Matrix{{1, 1}, {1, -1}}, {Rational(3), Rational(1)}, 2);
  CHECK(r.consistent);
  CHECK(r.unique);
  CHECK(r.solution == std::vector<Rational>{2, 1});
  auto u = solve(Matrix{{1, 1}}, {Rational(1)}, 2);
  CHECK(u.consistent);
  CHECK_FALSE(u.unique);
  auto bad = solve(Matrix{{1, 1}, {1, 1}}, {Rational(1), Rational(2)}, 2);
  CHECK_FALSE(bad.consistent);
}

TEST_CASE("echelon basis tracks span") {
  EchelonBasis b;
  CHECK(b.insert({{0, 1}, {2, 1}}));
  CHECK(b.insert({{1, 1}}));
  CHECK_FALSE(b.insert({{0, 2}, {1, 3}, {2, 2}}));
  CHECK(b.contains({{0, -1}, {2, -1}}));
  CHECK(b.rank() == 2);
}

TEST_CASE("lattice determinant") {
  std::vector<std::vector<Integer>> rows{{2, 0}, {0, 2}, {1, 1}};
  CHECK(lattice_determinant(rows, 2) == 2);
  CHECK(lattice_determinant({{Integer(6)}, {Integer(4)}}, 1) == 2);
}

TEST_CASE("polynomials") {
  RatPoly z = RatPoly::variable();
  RatPoly p = z * z + Rational(4) * z + Rational(1);
  CHECK(p(Rational(1)) == 6);
  CHECK(p.shifted(-1) == z * z + Rational(2) * z - Rational(2));
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "1 + 4*z + z^2");
}
