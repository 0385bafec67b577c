#include "doctest.h"

#include <random>

#include "polyalg/polyclass.hpp"

using namespace polyalg;

namespace {

Point pt(std::vector<Rational> v) { return v; }

PiElement cls(const VPolytope& p) { return PiElement::of(p); }

}  // namespace

TEST_CASE("classes are translation invariant") {
  auto p = permutahedron(3);
  PiElement x = cls(p) - cls(p.translated(pt({1, -2, 5})));
  CHECK(x.is_zero());
  CHECK(PiElement::one(p.arrangement()).augmentation() == 1);
}

TEST_CASE("Phi of a segment") {
  auto c1 = Arrangement::coordinate(1);
  auto x = cls(segment(c1, pt({5}))) - PiElement::one(c1);
  auto w = phi(x);
  CHECK(w.weight(c1->central_face()) == 5);
  for (int f : c1->faces_of_dim(1)) CHECK(w.weight(f) == 0);
}

TEST_CASE("Phi of log of a type B simplex with the origin") {
  auto b2 = Arrangement::type_b(2);
  auto w = phi(log_class(simplex0(b2, {1})));
  auto flat = b2->parse_flat("{0:1 -1,2}");
  int count = 0;
  for (const auto& [f, c] : w.weights()) {
    CHECK(c == 1);
    CHECK(b2->support(b2->face(f)) == flat);
    ++count;
  }
  CHECK(count == 2);
  CHECK(w == psi1(simplex0(b2, {1})));
}

TEST_CASE("log and exp") {
  auto a3 = Arrangement::braid(3);
  CHECK(log_class(simplex(a3, {2})).is_zero());
  auto l = segment(Arrangement::coordinate(2), pt({1, 0}));
  CHECK(log_class(l) == cls(l) - PiElement::one(l.arrangement()));
  auto p = permutahedron(3);
  CHECK(phi(exp_class(log_class(p))) == phi(p));
  CHECK(phi(log_class(exp_class(log_class(p)))) == phi(log_class(p)));
  auto q = simplex(a3, {1, 2, 3});
  CHECK(phi(log_class(minkowski_sum(p, q))) == phi(log_class(p) + log_class(q)));
  CHECK_THROWS_AS(exp_class(cls(p)), InvalidArgument);
}

TEST_CASE("grading by dilation") {
  auto a3 = Arrangement::braid(3);
  auto x = log_class(simplex(a3, {1, 2}));
  CHECK(phi(dilate(x, 2)) == phi(x) * Rational(2));
  auto p = permutahedron(3);
  PiElement total(a3);
  for (int r = 0; r <= 3; ++r) {
    auto xr = graded_component(cls(p), r);
    total += xr;
    CHECK(phi(dilate(xr, Rational(3, 2))) == phi(xr) * power(Rational(3, 2), r));
    for (const auto& [f, c] : phi(xr).weights()) CHECK(a3->face_dim(f) == 3 - r);
  }
  CHECK(phi(total) == phi(p));
  CHECK(phi(graded_component(cls(p), 1)) == phi(log_class(p)));
}

TEST_CASE("the square parallelogram class is homogeneous of degree 2") {
  auto c2 = Arrangement::coordinate(2);
  auto y = log_class(segment(c2, pt({1, 0}))) * log_class(segment(c2, pt({0, 1})));
  CHECK(phi(dilate(y, 2)) == phi(y) * Rational(4));
  CHECK(phi(y).weight(c2->central_face()) == 1);
}

TEST_CASE("products of interval logs vanish exactly on dependent segments") {
  auto b2 = Arrangement::type_b(2);
  auto l1 = log_class(segment(b2, pt({1, 0})));
  auto l2 = log_class(segment(b2, pt({1, 1})));
  auto l3 = log_class(segment(b2, pt({0, 1})));
  CHECK(phi(l1 * l2 * l3).is_zero());
  CHECK_FALSE(phi(l1 * l2).is_zero());
  CHECK(phi(l1 * l1).is_zero());
}

TEST_CASE("valuation relations from slices vanish under Phi") {
  std::mt19937 rng(7);
  for (auto p : {permutahedron(3), typeB_permutahedron(2), cube(3), minkowski_sum(permutahedron(3), simplex(Arrangement::braid(3), {1, 3}))}) {
    const auto& arr = p.arrangement();
    int done = 0;
    for (const auto& form : slice_forms(arr->kind())) {
      Rational lo = 0, hi = 0;
      bool first = true;
      for (const auto& v : p.vertices()) {
        Rational s = 0;
        for (std::size_t k = 0; k < v.size(); ++k) s += form[k] * v[k];
        if (first || s < lo) lo = s;
        if (first || s > hi) hi = s;
        first = false;
      }
      if (lo == hi) continue;
      Rational c = lo + (hi - lo) * ratio(static_cast<long>(rng() % 7 + 1), 8);
      try {
        auto s = slice(p, form, c);
        CHECK(phi(cls(s.le) + cls(s.ge) - cls(p) - cls(s.eq)).is_zero());
        ++done;
      } catch (const InvalidArgument&) {
      }
    }
    CHECK(done > 0);
  }
}

TEST_CASE("module action of the Tits algebra") {
  for (auto p : {permutahedron(3), typeB_permutahedron(2)}) {
    const auto& arr = p.arrangement();
    const int n = static_cast<int>(arr->num_faces());
    auto x = log_class(p);
    bool ok = true;
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g)
        ok = ok && module_act(module_act(x, f), g) == module_act(x, arr->product(f, g));
    CHECK(ok);
    CHECK(module_act(x, TitsElement::unit(arr)) == x);
  }
  auto a3 = Arrangement::braid(3);
  auto d = simplex(a3, {1, 3});
  int f = a3->face_index(a3->parse_face("2|3|1"));
  CHECK(module_act(log_class(d), f) == log_class(face_max(d, f)));
  auto x = cls(permutahedron(3));
  auto y = cls(d);
  for (int g = 0; g < static_cast<int>(a3->num_faces()); ++g) {
    CHECK(phi(module_act(x * y, g)) == phi(module_act(x, g) * module_act(y, g)));
    CHECK(phi(module_act(dilate(x, 2), g)) == phi(dilate(module_act(x, g), 2)));
  }
}
