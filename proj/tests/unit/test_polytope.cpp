#include "doctest.h"

#include "polyalg/gfseries.hpp"
#include "polyalg/polytope.hpp"

using namespace polyalg;

namespace {

RatPoly poly(std::vector<int> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return RatPoly(std::move(r));
}

Point pt(std::vector<Rational> v) { return v; }

}  // namespace

TEST_CASE("vertex counts of standard polytopes") {
  for (int d = 1; d <= 4; ++d) {
    CHECK(permutahedron(d).num_vertices() == static_cast<std::size_t>(factorial(d).get_ui()));
    CHECK(typeB_permutahedron(d).num_vertices() == (static_cast<std::size_t>(factorial(d).get_ui()) << d));
    CHECK(cube(d).num_vertices() == (std::size_t{1} << d));
  }
  CHECK(permutahedron(4).dim() == 3);
  CHECK(typeB_permutahedron(3).dim() == 3);
}

TEST_CASE("vertex extraction drops interior candidates") {
  auto arr = Arrangement::coordinate(2);
  auto sq = VPolytope::from_points(arr, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({Rational(1, 2), Rational(1, 2)}),
                                         pt({1, Rational(1, 3)})});
  CHECK(sq == cube(2));
  // a triangle with a slanted edge is not a deformation of the square
  CHECK_THROWS_AS(VPolytope::from_points(arr, {pt({0, 0}), pt({1, 0}), pt({0, 1})}), InvalidArgument);
}

TEST_CASE("Minkowski sums and dilations") {
  auto a2 = Arrangement::braid(2);
  auto d12 = simplex(a2, {1, 2});
  CHECK(minkowski_sum(d12, d12) == dilate(d12, 2));
  CHECK(dilate(d12, 0).num_vertices() == 1);

  auto a3 = Arrangement::braid(3);
  auto sum = minkowski_sum(minkowski_sum(simplex(a3, {1, 2}), simplex(a3, {1, 3})), simplex(a3, {2, 3}));
  CHECK(sum.is_translate_of(permutahedron(3)));
  CHECK(face_lattice(sum).f_vector() == face_lattice(permutahedron(3)).f_vector());
  CHECK(zonotope_of(a3).is_translate_of(permutahedron(3)));
  CHECK(is_deformation(sum));
  CHECK(is_deformation(dilate(permutahedron(3), Rational(3, 2))));
}

TEST_CASE("segment sums realize their linear span") {
  auto b2 = Arrangement::type_b(2);
  auto l1 = segment(b2, pt({1, 0}));
  auto l2 = segment(b2, pt({1, 1}));
  auto l3 = segment(b2, pt({0, 1}));
  CHECK(minkowski_sum(l1, l2).dim() == 2);
  CHECK(minkowski_sum(minkowski_sum(l1, l2), l3).dim() == 2);
  CHECK(minkowski_sum(l1, dilate(l1, 3)).dim() == 1);
}

TEST_CASE("face maximization") {
  auto a3 = Arrangement::braid(3);
  auto p = permutahedron(3);
  CHECK(face_max(p, a3->central_face()) == p);
  // simplices restrict to the first block they meet
  auto a4 = Arrangement::braid(4);
  auto delta = simplex(a4, {1, 2, 4});
  int f = a4->face_index(a4->parse_face("3|24|1"));
  CHECK(face_max(delta, f) == simplex(a4, {2, 4}));
  const int n = static_cast<int>(a3->num_faces());
  bool ok = true;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) ok = ok && face_max(face_max(p, g), h) == face_max(p, a3->product(g, h));
  CHECK(ok);
}

TEST_CASE("f- and h-polynomials") {
  CHECK(face_lattice(permutahedron(3)).f_vector() == std::vector<long long>{6, 6, 1});
  CHECK(h_polynomial(permutahedron(3)) == poly({1, 4, 1}));
  CHECK(h_polynomial(typeB_permutahedron(2)) == poly({1, 6, 1}));
  CHECK(h_polynomial(VPolytope::point(Arrangement::braid(3))) == poly({1}));
  CHECK(h_polynomial(cube(3)) == poly({1, 3, 3, 1}));
  for (int d = 2; d <= 4; ++d) CHECK(h_polynomial(permutahedron(d)) == eulerian_A(d));
  CHECK(h_polynomial(typeB_permutahedron(3)) == eulerian_B(3));
}

TEST_CASE("lattice-normalized volumes") {
  auto c2 = Arrangement::coordinate(2);
  auto b2 = Arrangement::type_b(2);
  CHECK(lattice_volume(segment(b2, pt({1, 1}))) == 1);
  CHECK(lattice_volume(segment(b2, pt({2, 2}))) == 2);
  CHECK(lattice_volume(cube(2)) == 1);
  CHECK(lattice_volume(dilate(cube(2), 3)) == 9);
  CHECK(lattice_volume(VPolytope::point(c2)) == 1);
  CHECK(lattice_volume(simplex0(b2, {1, 2})) == Rational(1, 2));
  // the hexagon in x1 + x2 + x3 = 6 is three unit rhombi of the plane lattice
  CHECK(lattice_volume(permutahedron(3)) == 3);
  CHECK(lattice_volume(permutahedron(4)) == 16);
  CHECK(lattice_volume(cube(4)) == 1);
}

TEST_CASE("slices") {
  auto c2 = cube(2);
  auto s = slice(c2, {1, 0}, Rational(1, 2));
  CHECK(s.le.num_vertices() == 4);
  CHECK(lattice_volume(s.le) + lattice_volume(s.ge) == lattice_volume(c2));
  CHECK(lattice_volume(s.eq) == 1);
  CHECK_THROWS_AS(slice(c2, {1, 0}, Rational(1)), InvalidArgument);

  auto p = permutahedron(3);
  auto cut = slice(p, {0, 0, 1}, Rational(2));
  CHECK(cut.le.num_vertices() == 4);
  CHECK(cut.ge.num_vertices() == 4);
  CHECK(cut.eq.num_vertices() == 2);
  CHECK(lattice_volume(cut.le) + lattice_volume(cut.ge) == lattice_volume(p));
  // cuts along x1 = x2 produce edges outside the braid directions
  CHECK_THROWS_AS(slice(p, {1, -1, 0}, Rational(0)), InvalidArgument);
}
