#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polyalg/arrangement.hpp"
#include "polyalg/ratpoly.hpp"

namespace polyalg {

using Point = std::vector<Rational>;

// Deformation of the zonotope of an arrangement, stored by its vertices in
// lexicographic order. Vertices are the unique maximizers at chamber
// interior points.
class VPolytope {
 public:
  // Extracts the vertex set of conv(candidates). Throws InvalidArgument if
  // some chamber has no unique maximizer (not a deformation).
  static VPolytope from_points(ArrangementPtr arr, std::vector<Point> candidates);
  // Uses the given points as the vertex set without extraction.
  static VPolytope from_vertices(ArrangementPtr arr, std::vector<Point> vertices);
  static VPolytope point(ArrangementPtr arr);  // the origin

  const ArrangementPtr& arrangement() const { return arr_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  int ambient_dim() const { return arr_->d(); }
  int dim() const;

  VPolytope translated(const Point& t) const;
  // Lexicographically least vertex moved to the origin.
  VPolytope normalized() const;
  bool is_translate_of(const VPolytope& o) const;

  // Index of the vertex maximizing the chamber's interior point.
  int chamber_vertex(int chamber) const;
  // Vertex indices maximizing the interior point of an arrangement face.
  std::vector<int> argmax(int face) const;
  std::vector<int> argmax(std::span<const Rational> direction) const;

  friend bool operator==(const VPolytope& a, const VPolytope& b) {
    return a.arr_->kind() == b.arr_->kind() && a.vertices_ == b.vertices_;
  }

 private:
  VPolytope(ArrangementPtr arr, std::vector<Point> vertices);
  ArrangementPtr arr_;
  std::vector<Point> vertices_;
};

// Standard polytopes.
VPolytope permutahedron(int d);                 // orbit of (1,...,d), BraidA(d)
VPolytope typeB_permutahedron(int d);            // signed orbit of (1,...,d), TypeB(d)
VPolytope cube(int d);                           // [0,1]^d, Coordinate(d)
// Conv{e_i : i in S}; S signed for type B (negative i gives -e_|i|).
VPolytope simplex(ArrangementPtr arr, const std::vector<int>& S);
// Conv({0} u {e_i : i in S}), type B.
VPolytope simplex0(ArrangementPtr arr, const std::vector<int>& S);
VPolytope segment(ArrangementPtr arr, const Point& v);
// Sum of segments Conv{0, v_H} over the hyperplanes.
VPolytope zonotope_of(ArrangementPtr arr);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);
VPolytope dilate(const VPolytope& p, const Rational& lambda);
VPolytope face_max(const VPolytope& p, int face);

// Faces of p, collected as p_F over all arrangement faces F.
class FaceLattice {
 public:
  explicit FaceLattice(const VPolytope& p);

  std::size_t size() const { return faces_.size(); }
  const std::vector<int>& face(int id) const { return faces_[id]; }  // vertex indices
  int dim(int id) const { return dims_[id]; }
  int face_of(int arrangement_face) const { return face_of_[arrangement_face]; }
  int whole() const { return whole_; }
  const std::vector<int>& facets(int id) const;
  std::vector<long long> f_vector() const;
  // f_vector of the face with the given id (its faces are the faces below it).
  std::vector<long long> f_vector_of(int id) const;

  // Lattice-normalized volume of a face.
  Rational volume(int id) const;

 private:
  std::vector<Point> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> dims_;
  std::vector<int> face_of_;
  int whole_ = 0;
  mutable std::vector<std::optional<std::vector<int>>> facets_;
  mutable std::vector<std::optional<std::vector<std::vector<int>>>> triangulation_;
  const std::vector<std::vector<int>>& triangulation(int id) const;
};

FaceLattice face_lattice(const VPolytope& p);
RatPoly f_polynomial(const std::vector<long long>& f);
// h(z) = f(z - 1)
RatPoly h_polynomial(const VPolytope& p);
RatPoly h_polynomial_of_face(const FaceLattice& lattice, int id);

// Lattice-normalized volume of the polytope within its affine span.
Rational lattice_volume(const VPolytope& q);
// Volume of conv(points) for points forming a simplex-free list; points
// must be the vertices of a deformation.
Rational lattice_volume(ArrangementPtr arr, const std::vector<Point>& vertices);

struct SliceResult {
  VPolytope le;
  VPolytope ge;
  VPolytope eq;
};

// Cuts p by {form = c}; c must lie strictly between min and max of the
// form on p. Throws InvalidArgument if a piece is not a deformation.
SliceResult slice(const VPolytope& p, const std::vector<Rational>& form, const Rational& c);
// Linear forms whose level sets cut deformations into deformations for the
// given arrangement (coordinate forms x_i; for type B also x_i -+ x_j, which
// may fail on some inputs and are then rejected by slice).
std::vector<std::vector<Rational>> slice_forms(ArrangementKind kind);

// Debug check: unique chamber maximizers at two interior points per
// chamber, identical argmax sets at two interior points per face, and each
// p_F spanned by the vertices p_C of the chambers C containing F.
bool is_deformation(const VPolytope& p);

}  // namespace polyalg
