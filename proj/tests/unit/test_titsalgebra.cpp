#include "doctest.h"

#include "polyalg/titsalgebra.hpp"

using namespace polyalg;

TEST_CASE("Tits algebra products") {
  auto arr = Arrangement::braid(3);
  auto f = TitsElement::basis(arr, arr->face_index(arr->parse_face("13|2")));
  auto g = TitsElement::basis(arr, arr->face_index(arr->parse_face("2|13")));
  CHECK(f * g == f);
  CHECK(TitsElement::unit(arr) * g == g);
  auto s = f + g * Rational(2);
  CHECK(s * s == f * Rational(1) + f * Rational(2) + g * Rational(2) + g * Rational(4));
  CHECK((s - s).is_zero());
}

TEST_CASE("Q basis of the flats algebra") {
  for (auto arr : {Arrangement::braid(4), Arrangement::type_b(3), Arrangement::coordinate(3)}) {
    const int n = static_cast<int>(arr->num_flats());
    FlatsElement sum(arr);
    bool ok = true;
    for (int x = 0; x < n; ++x) {
      auto qx = FlatsElement::Q(arr, x);
      sum += qx;
      ok = ok && qx * qx == qx;
      for (int y = 0; y < n; ++y)
        if (y != x) ok = ok && (qx * FlatsElement::Q(arr, y)).is_zero();
      FlatsElement hx(arr);
      for (int y = 0; y < n; ++y)
        if (arr->leq(x, y)) hx += FlatsElement::Q(arr, y);
      ok = ok && hx == FlatsElement::H(arr, x);
    }
    CHECK(ok);
    CHECK(sum == FlatsElement::H(arr, arr->bottom()));
  }
}

TEST_CASE("first-orthant family in the plane") {
  auto [gamma, family] = gamma_family(2, Rational(2));
  auto arr = family.arr;
  auto face = [&](const char* s) { return TitsElement::basis(arr, arr->face_index(arr->parse_face(s))); };
  auto e_bottom = family.elements.at(arr->bottom());
  CHECK(e_bottom == face("00") - face("+0") - face("0+") + face("++"));
  CHECK(family.elements.at(arr->top()) == face("++"));
  CHECK_THROWS_AS(gamma_family(2, Rational(1)), InvalidArgument);
}

TEST_CASE("Adams and first-orthant families are Eulerian families") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& family : {adams_family(d), gamma_family(d, Rational(3)).second}) {
      Report r = check_family(family);
      for (const auto& c : r.checks) {
        INFO("d=" << d << " " << c.name << " " << c.detail);
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("characteristic elements decompose along the families") {
  for (int d = 1; d <= 4; ++d) {
    auto adams = adams_family(d);
    for (int t : {2, 3, 5, -1}) {
      auto alpha = adams_element(d, Rational(t));
      CHECK(is_characteristic(alpha, Rational(t)));
      CHECK(decomposes_characteristic(alpha, adams, Rational(t)));
      auto [gamma, family] = gamma_family(d, Rational(t));
      CHECK(is_characteristic(gamma, Rational(t)));
      CHECK(decomposes_characteristic(gamma, family, Rational(t)));
    }
  }
  auto arr = Arrangement::braid(3);
  CHECK(is_noncritical(*arr, Rational(5)));
  CHECK_FALSE(is_noncritical(*arr, Rational(1)));
}

TEST_CASE("support map") {
  auto family = adams_family(3);
  for (const auto& [x, e] : family.elements) CHECK(support(e) == FlatsElement::Q(family.arr, x));
}
