#include "doctest.h"

#include "polyalg/arrangement.hpp"

using namespace polyalg;

namespace {

std::vector<std::string> formatted_faces(const Arrangement& arr) {
  std::vector<std::string> out;
  for (const auto& f : arr.faces()) out.push_back(arr.format(f));
  return out;
}

}  // namespace

TEST_CASE("face and flat counts") {
  CHECK(formatted_faces(*Arrangement::braid(2)) == std::vector<std::string>{"12", "1|2", "2|1"});
  CHECK(Arrangement::braid(3)->num_faces() == 13);
  CHECK(Arrangement::braid(4)->num_faces() == 75);
  CHECK(Arrangement::coordinate(2)->num_faces() == 9);
  CHECK(Arrangement::braid(3)->num_flats() == 5);
  CHECK(Arrangement::type_b(2)->num_flats() == 6);
  CHECK(Arrangement::type_b(2)->num_faces() == 17);
  CHECK(Arrangement::type_b(3)->chambers().size() == 48);
  CHECK(Arrangement::coordinate(3)->num_flats() == 8);
}

TEST_CASE("faces and flats round-trip through their string forms") {
  for (auto arr : {Arrangement::braid(3), Arrangement::type_b(2), Arrangement::type_b(3), Arrangement::coordinate(3)}) {
    for (std::size_t i = 0; i < arr->num_faces(); ++i)
      CHECK(arr->face_index(arr->parse_face(arr->format_face(static_cast<int>(i)))) == static_cast<int>(i));
    for (std::size_t i = 0; i < arr->num_flats(); ++i)
      CHECK(arr->flat_index(arr->parse_flat(arr->format_flat(static_cast<int>(i)))) == static_cast<int>(i));
  }
}

TEST_CASE("refinement order and support on partitions of [8]") {
  auto arr = Arrangement::braid(8);
  auto x = arr->parse_flat("{13,2568,4,7}");
  auto y = arr->parse_flat("{1,28,3,4,56,7}");
  auto bottom = arr->parse_flat("{12345678}");
  CHECK(arr->leq(bottom, x));
  CHECK(arr->leq(x, y));
  CHECK_FALSE(arr->leq(y, x));
  CHECK(arr->support(arr->parse_face("13|4|2568|7")) == x);
  CHECK(arr->mobius(bottom, x) == -6);
}

TEST_CASE("signed support in type B") {
  auto arr = Arrangement::type_b(7);
  auto f = arr->parse_face("67|-2 4 -5|0:1 -1 3 -3|2 -4 5|-6 -7");
  CHECK(arr->format(arr->support(f)) == arr->format(arr->parse_flat("{0:1 -1 3 -3,2 -4 5,67}")));
  CHECK(arr->format(f) == "67|-2 4 -5|0:1 -1 3 -3|2 -4 5|-6 -7");
}

TEST_CASE("Tits product examples") {
  auto a3 = Arrangement::braid(3);
  CHECK(a3->format(a3->tits_product(a3->parse_face("13|2"), a3->parse_face("2|13"))) == "13|2");
  auto c2 = Arrangement::coordinate(2);
  CHECK(c2->format(c2->tits_product(c2->parse_face("0+"), c2->parse_face("--"))) == "-+");
  for (std::size_t f = 0; f < a3->num_faces(); ++f) {
    CHECK(a3->product(0, static_cast<int>(f)) == static_cast<int>(f));
    CHECK(a3->product(static_cast<int>(f), 0) == static_cast<int>(f));
  }
}

TEST_CASE("left regular band laws") {
  for (auto arr : {Arrangement::braid(4), Arrangement::type_b(3), Arrangement::coordinate(3)}) {
    const int n = static_cast<int>(arr->num_faces());
    bool ok = true;
    for (int f = 0; f < n && ok; ++f) {
      ok = ok && arr->product(f, f) == f;
      for (int g = 0; g < n && ok; ++g) {
        const int fg = arr->product(f, g);
        ok = ok && arr->product(f, arr->product(g, f)) == fg;
        ok = ok && arr->support(fg) == arr->join(arr->support(f), arr->support(g));
      }
    }
    CHECK(ok);
  }
  auto b2 = Arrangement::type_b(2);
  const int n = static_cast<int>(b2->num_faces());
  bool assoc = true;
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        assoc = assoc && b2->product(b2->product(f, g), h) == b2->product(f, b2->product(g, h));
  CHECK(assoc);
}

TEST_CASE("combinatorial product matches the geometric definition") {
  for (auto arr : {Arrangement::braid(3), Arrangement::type_b(3), Arrangement::coordinate(3)}) {
    bool ok = true;
    for (const auto& f : arr->faces())
      for (const auto& g : arr->faces()) ok = ok && arr->tits_product(f, g) == arr->geometric_product(f, g);
    CHECK(ok);
  }
}

TEST_CASE("interior points") {
  auto a3 = Arrangement::braid(3);
  CHECK(a3->interior_point(a3->parse_face("13|2")) == std::vector<Rational>{1, 0, 1});
  CHECK(a3->interior_point(a3->face(0)) == std::vector<Rational>{0, 0, 0});
  auto b2 = Arrangement::type_b(2);
  CHECK(b2->interior_point(b2->parse_face("2|0:1 -1|-2")) == std::vector<Rational>{0, 1});
  for (auto arr : {a3, b2, Arrangement::type_b(3)})
    for (const auto& f : arr->faces()) {
      CHECK(arr->face_of_point(arr->interior_point(f)) == f);
      CHECK(arr->face_of_point(arr->alternate_interior_point(f)) == f);
    }
}

TEST_CASE("Möbius function: product formulas against the recursion") {
  for (auto arr : {Arrangement::braid(4), Arrangement::type_b(3), Arrangement::coordinate(3)}) {
    const int n = static_cast<int>(arr->num_flats());
    bool ok = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (arr->leq(x, y)) ok = ok && arr->mobius(x, y) == arr->mobius_recursive(x, y);
    CHECK(ok);
    CHECK_THROWS_AS(arr->mobius(arr->top(), arr->bottom()), InvalidArgument);
  }
  auto b2 = Arrangement::type_b(2);
  CHECK(b2->mobius(b2->bottom(), b2->top()) == 3);
}

TEST_CASE("characteristic polynomials") {
  RatPoly t = RatPoly::variable();
  CHECK(Arrangement::braid(3)->characteristic_polynomial() == t * t * t - Rational(3) * t * t + Rational(2) * t);
  CHECK(Arrangement::coordinate(1)->characteristic_polynomial() == t - Rational(1));
  auto a4 = Arrangement::braid(4);
  // under the bottom flat nothing is left: t^{dim bottom}
  CHECK(a4->characteristic_polynomial(a4->bottom()) == t);
  CHECK(a4->characteristic_polynomial(a4->top()) == a4->characteristic_polynomial());
  auto x = a4->flat_index(a4->parse_flat("{12,34}"));
  CHECK(a4->characteristic_polynomial(x) == t * t - t);
  auto b2 = Arrangement::type_b(2);
  CHECK(b2->characteristic_polynomial() == t * t - Rational(4) * t + Rational(3));
}

TEST_CASE("chambers under a flat") {
  for (int d = 2; d <= 5; ++d) {
    auto arr = Arrangement::braid(d);
    for (int x = 0; x < static_cast<int>(arr->num_flats()); ++x) {
      // chambers of the arrangement under X correspond to faces with support X
      long long count = 0;
      for (std::size_t f = 0; f < arr->num_faces(); ++f)
        if (arr->support(static_cast<int>(f)) == x) ++count;
      long long fact = 1;
      for (int k = 2; k <= arr->flat_dim(x); ++k) fact *= k;
      CHECK(count == fact);
    }
  }
}

TEST_CASE("malformed input is rejected") {
  auto a3 = Arrangement::braid(3);
  CHECK_THROWS_AS(a3->parse_face("12|1"), InvalidArgument);
  CHECK_THROWS_AS(a3->parse_flat("{12}"), InvalidArgument);
  CHECK_THROWS_AS(Arrangement::braid(0), InvalidArgument);
  CHECK_THROWS_AS(Arrangement::braid(9)->num_faces(), ResourceLimit);
}
