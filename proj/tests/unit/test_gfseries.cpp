#include "doctest.h"

#include "polyalg/gfseries.hpp"

using namespace polyalg;

namespace {

RatPoly poly(std::vector<int> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return RatPoly(std::move(r));
}

}  // namespace

TEST_CASE("Eulerian polynomials") {
  CHECK(eulerian_A(3) == poly({1, 4, 1}));
  CHECK(eulerian_A(4) == poly({1, 11, 11, 1}));
  CHECK(eulerian_B(2) == poly({1, 6, 1}));
  CHECK(eulerian_B(3) == poly({1, 23, 23, 1}));
  for (int d = 1; d <= 6; ++d) {
    CHECK(eulerian_A(d) == eulerian_A_enumerated(d));
    CHECK(eulerian_A(d)(Rational(1)) == Rational(factorial(d)));
    CHECK(eulerian_B(d)(Rational(1)) == Rational(factorial(d)) * (1 << d));
    for (int k = 0; k < d; ++k) CHECK(eulerian_A(d).coeff(k) == eulerian_A(d).coeff(d - 1 - k));
    for (int k = 0; k <= d; ++k) CHECK(eulerian_B(d).coeff(k) == eulerian_B(d).coeff(d - k));
  }
  for (int d = 1; d <= 5; ++d) CHECK(eulerian_B(d) == eulerian_B_enumerated(d));
}

TEST_CASE("series arithmetic") {
  const int n = 8;
  auto x = TruncSeries2::x(n);
  auto e = x.exp();
  CHECK(e.with_convention(Convention::Egf).coeff(5) == RatPoly(Rational(1)));
  CHECK((e * (x * RatPoly(Rational(-1))).exp()) == TruncSeries2::constant(n, RatPoly(Rational(1))));
  CHECK(e.log() == x);
  auto f = TruncSeries2::constant(n, RatPoly(Rational(1))) + x * RatPoly::variable();
  CHECK((f * f.inverse()) == TruncSeries2::constant(n, RatPoly(Rational(1))));
  CHECK(f.pow(Rational(1, 2)) * f.pow(Rational(1, 2)) == f);

  auto g = x * RatPoly(Rational(2)) + x * x * RatPoly::variable();
  auto h = x * x * RatPoly(Rational(-1, 3)) + x * x * x;
  CHECK((g + h).exp() == g.exp() * h.exp());
  CHECK(x.compose(g) == g);
  CHECK_THROWS_AS(f.exp(), InvalidArgument);
}

TEST_CASE("generating functions of Eulerian polynomials") {
  auto a = eulerian_series_A(8);
  for (int n = 1; n <= 8; ++n) CHECK(a.coeff(n) == eulerian_A(n));
  auto b = eulerian_series_B(6);
  for (int n = 0; n <= 6; ++n) CHECK(b.coeff(n) == eulerian_B(n));
  CHECK(a.coeff(0) == RatPoly(Rational(1)));
}

TEST_CASE("all generating-function identities hold") {
  Report r = verify_identities(8, 6);
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  CHECK(r.checks.size() >= 9);
}

TEST_CASE("type B partition sum with unit weights counts signed partitions") {
  std::vector<RatPoly> one(5, RatPoly(Rational(1)));
  // signed partitions of [+-d]: 1, 2, 6, 24 ... (Dowling numbers 1, 2, 6, 24, 108)
  CHECK(type_b_partition_sum(1, one, one, one) == RatPoly(Rational(2)));
  CHECK(type_b_partition_sum(2, one, one, one) == RatPoly(Rational(6)));
  CHECK(type_b_partition_sum(3, one, one, one) == RatPoly(Rational(24)));
}
