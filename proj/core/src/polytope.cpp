#include "polyalg/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "polyalg/linalg.hpp"

namespace polyalg {

namespace {

// Integer interior points per face, shared per arrangement kind.
struct FaceDirections {
  std::vector<std::vector<long>> primary;
  std::vector<std::vector<long>> alternate;
};

std::vector<long> to_integer_direction(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  std::vector<long> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer n = x.get_num() * (den / x.get_den());
    if (!n.fits_slong_p()) throw ResourceLimit("interior point coordinate too large");
    out.push_back(n.get_si());
  }
  return out;
}

const FaceDirections& directions(const Arrangement& arr) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<FaceDirections>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(static_cast<int>(arr.type()), arr.d());
  auto& slot = cache[key];
  if (!slot) {
    slot = std::make_unique<FaceDirections>();
    for (const auto& f : arr.faces()) {
      slot->primary.push_back(to_integer_direction(arr.interior_point(f)));
      slot->alternate.push_back(to_integer_direction(arr.alternate_interior_point(f)));
    }
  }
  return *slot;
}

// Vertex coordinates scaled to integers by a common denominator, so that
// comparisons of linear functionals avoid rational arithmetic.
class ScaledPoints {
 public:
  explicit ScaledPoints(const std::vector<Point>& pts) {
    Integer den = 1;
    for (const auto& p : pts)
      for (const auto& x : p) den = lcm(den, Integer(x.get_den()));
    rows_.reserve(pts.size());
    for (const auto& p : pts) {
      std::vector<Integer> row;
      row.reserve(p.size());
      for (const auto& x : p) row.push_back(x.get_num() * (den / x.get_den()));
      rows_.push_back(std::move(row));
    }
  }

  std::vector<int> argmax(const std::vector<long>& v) const {
    std::vector<int> best;
    Integer best_value, value;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      value = 0;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) value += rows_[i][k] * v[k];
      if (best.empty() || value > best_value) {
        best.assign(1, static_cast<int>(i));
        best_value = value;
      } else if (value == best_value) {
        best.push_back(static_cast<int>(i));
      }
    }
    return best;
  }

 private:
  std::vector<std::vector<Integer>> rows_;
};

void check_same_arrangement(const VPolytope& p, const VPolytope& q) {
  if (!(p.arrangement()->kind() == q.arrangement()->kind()))
    throw InvalidArgument("polytopes belong to different arrangements");
}

int affine_rank(const std::vector<Point>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  Matrix m;
  m.reserve(idx.size() - 1);
  const Point& base = pts[idx[0]];
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::vector<Rational> row(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) row[k] = pts[idx[i]][k] - base[k];
    m.push_back(std::move(row));
  }
  return static_cast<int>(rank(std::move(m)));
}

struct LatticeFrame {
  std::vector<int> pivots;
  Integer index = 1;  // [Z^r : projection of the lattice]
};

// Coordinates on span(q - q) by the pivot columns of its reduced echelon
// basis. The projection to those columns maps span(q - q) ∩ Z^d onto a
// sublattice of Z^r; its index corrects the Euclidean volume.
LatticeFrame lattice_frame(const std::vector<Point>& pts, const std::vector<int>& idx) {
  LatticeFrame frame;
  Matrix m;
  const Point& base = pts[idx[0]];
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::vector<Rational> row(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) row[k] = pts[idx[i]][k] - base[k];
    m.push_back(std::move(row));
  }
  frame.pivots = rref(m);
  const std::size_t r = frame.pivots.size();
  std::vector<int> free_cols;
  for (int k = 0; k < static_cast<int>(base.size()); ++k)
    if (std::find(frame.pivots.begin(), frame.pivots.end(), k) == frame.pivots.end())
      free_cols.push_back(k);
  Integer den = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (int k : free_cols) den = lcm(den, Integer(m[i][k].get_den()));
  if (den == 1 || free_cols.empty()) return frame;
  const std::size_t mcols = free_cols.size();
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> row(mcols);
    for (std::size_t j = 0; j < mcols; ++j) {
      const Rational& x = m[i][free_cols[j]];
      row[j] = x.get_num() * (den / x.get_den());
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < mcols; ++j) {
    std::vector<Integer> row(mcols, Integer(0));
    row[j] = den;
    rows.push_back(std::move(row));
  }
  Integer covolume = lattice_determinant(std::move(rows), mcols);
  Integer full = 1;
  for (std::size_t j = 0; j < mcols; ++j) full *= den;
  frame.index = full / covolume;
  return frame;
}

}  // namespace

// ---------------------------------------------------------------------------
// VPolytope

VPolytope::VPolytope(ArrangementPtr arr, std::vector<Point> vertices)
    : arr_(std::move(arr)), vertices_(std::move(vertices)) {}

VPolytope VPolytope::from_vertices(ArrangementPtr arr, std::vector<Point> vertices) {
  if (vertices.empty()) throw InvalidArgument("polytope needs at least one vertex");
  for (auto& v : vertices) {
    if (static_cast<int>(v.size()) != arr->d()) throw InvalidArgument("vertex has wrong dimension");
    for (auto& c : v) c.canonicalize();
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return VPolytope(std::move(arr), std::move(vertices));
}

VPolytope VPolytope::from_points(ArrangementPtr arr, std::vector<Point> candidates) {
  VPolytope all = from_vertices(arr, std::move(candidates));
  if (all.vertices_.size() == 1) return all;
  const auto& dirs = directions(*arr);
  ScaledPoints scaled(all.vertices_);
  std::vector<char> keep(all.vertices_.size(), 0);
  for (int c : arr->chambers()) {
    auto best = scaled.argmax(dirs.primary[c]);
    if (best.size() != 1)
      throw InvalidArgument("point set is not a deformation: chamber " + arr->format_face(c) +
                            " has no unique maximizer");
    keep[best[0]] = 1;
  }
  std::vector<Point> verts;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) verts.push_back(std::move(all.vertices_[i]));
  return VPolytope(std::move(arr), std::move(verts));
}

VPolytope VPolytope::point(ArrangementPtr arr) {
  const int d = arr->d();
  return VPolytope(std::move(arr), {Point(d, Rational(0))});
}

int VPolytope::dim() const {
  std::vector<int> idx(vertices_.size());
  std::iota(idx.begin(), idx.end(), 0);
  return affine_rank(vertices_, idx);
}

VPolytope VPolytope::translated(const Point& t) const {
  if (static_cast<int>(t.size()) != arr_->d()) throw InvalidArgument("translation has wrong dimension");
  Point shift = t;
  for (auto& c : shift) c.canonicalize();
  auto verts = vertices_;
  for (auto& v : verts)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += shift[k];
  return VPolytope(arr_, std::move(verts));  // translation keeps the order
}

VPolytope VPolytope::normalized() const {
  Point t = vertices_.front();
  for (auto& x : t) x = -x;
  return translated(t);
}

bool VPolytope::is_translate_of(const VPolytope& o) const {
  return arr_->kind() == o.arr_->kind() && normalized().vertices_ == o.normalized().vertices_;
}

int VPolytope::chamber_vertex(int chamber) const {
  if (arr_->face_dim(chamber) != arr_->max_face_dim()) throw InvalidArgument("not a chamber");
  auto best = argmax(chamber);
  if (best.size() != 1) throw InvalidArgument("polytope is not a deformation");
  return best[0];
}

std::vector<int> VPolytope::argmax(int face) const {
  const auto& dirs = directions(*arr_);
  if (face < 0 || face >= static_cast<int>(dirs.primary.size())) throw InvalidArgument("face index out of range");
  return ScaledPoints(vertices_).argmax(dirs.primary[face]);
}

std::vector<int> VPolytope::argmax(std::span<const Rational> direction) const {
  std::vector<int> best;
  Rational best_value;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Rational value = 0;
    for (std::size_t k = 0; k < direction.size(); ++k) value += vertices_[i][k] * direction[k];
    if (best.empty() || value > best_value) {
      best.assign(1, static_cast<int>(i));
      best_value = value;
    } else if (value == best_value) {
      best.push_back(static_cast<int>(i));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Standard polytopes

VPolytope permutahedron(int d) {
  auto arr = Arrangement::braid(d);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Point> pts;
  do {
    pts.emplace_back(perm.begin(), perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return VPolytope::from_vertices(arr, std::move(pts));
}

VPolytope typeB_permutahedron(int d) {
  auto arr = Arrangement::type_b(d);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Point> pts;
  do {
    for (unsigned signs = 0; signs < (1u << d); ++signs) {
      Point p(d);
      for (int i = 0; i < d; ++i) p[i] = (signs >> i & 1u) ? -perm[i] : perm[i];
      pts.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return VPolytope::from_vertices(arr, std::move(pts));
}

VPolytope cube(int d) {
  auto arr = Arrangement::coordinate(d);
  std::vector<Point> pts;
  for (unsigned s = 0; s < (1u << d); ++s) {
    Point p(d);
    for (int i = 0; i < d; ++i) p[i] = (s >> i) & 1u;
    pts.push_back(std::move(p));
  }
  return VPolytope::from_vertices(arr, std::move(pts));
}

namespace {

Point signed_unit(int d, int i) {
  if (i == 0 || std::abs(i) > d) throw InvalidArgument("element out of range: " + std::to_string(i));
  Point p(d, Rational(0));
  p[std::abs(i) - 1] = i > 0 ? 1 : -1;
  return p;
}

void check_simplex_set(const Arrangement& arr, const std::vector<int>& S) {
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b)
      if (std::abs(S[a]) == std::abs(S[b]))
        throw InvalidArgument("simplex index set must not repeat an absolute value");
  if (arr.type() == ArrangementType::BraidA)
    for (int i : S)
      if (i < 0) throw InvalidArgument("braid simplices take positive indices");
}

}  // namespace

VPolytope simplex(ArrangementPtr arr, const std::vector<int>& S) {
  if (S.empty()) throw InvalidArgument("simplex needs a nonempty index set");
  check_simplex_set(*arr, S);
  std::vector<Point> pts;
  for (int i : S) pts.push_back(signed_unit(arr->d(), i));
  return VPolytope::from_points(std::move(arr), std::move(pts));
}

VPolytope simplex0(ArrangementPtr arr, const std::vector<int>& S) {
  if (arr->type() == ArrangementType::BraidA) throw InvalidArgument("simplex0 is not defined for braid arrangements");
  check_simplex_set(*arr, S);
  std::vector<Point> pts{Point(arr->d(), Rational(0))};
  for (int i : S) pts.push_back(signed_unit(arr->d(), i));
  return VPolytope::from_points(std::move(arr), std::move(pts));
}

VPolytope segment(ArrangementPtr arr, const Point& v) {
  Point zero(arr->d(), Rational(0));
  return VPolytope::from_points(std::move(arr), {zero, v});
}

VPolytope zonotope_of(ArrangementPtr arr) {
  const int d = arr->d();
  std::vector<Point> normals;
  auto unit = [d](int i) { return signed_unit(d, i); };
  auto add = [](Point a, const Point& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  auto neg = [](Point a) {
    for (auto& x : a) x = -x;
    return a;
  };
  switch (arr->type()) {
    case ArrangementType::BraidA:
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) normals.push_back(add(unit(i), neg(unit(j))));
      break;
    case ArrangementType::TypeB:
      for (int i = 1; i <= d; ++i) normals.push_back(unit(i));
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
          normals.push_back(add(unit(i), neg(unit(j))));
          normals.push_back(add(unit(i), unit(j)));
        }
      break;
    case ArrangementType::Coordinate:
      for (int i = 1; i <= d; ++i) normals.push_back(unit(i));
      break;
  }
  // The sum of the segments [0, n] is maximized at a chamber by the sum of
  // the normals that are positive there; no normal vanishes on a chamber.
  const auto& dirs = directions(*arr);
  std::vector<Point> pts;
  for (int c : arr->chambers()) {
    Point v(d, Rational(0));
    for (const auto& n : normals) {
      Integer s = 0;
      for (int k = 0; k < d; ++k) s += n[k].get_num() * dirs.primary[c][k];
      if (s > 0) v = add(std::move(v), n);
    }
    pts.push_back(std::move(v));
  }
  return VPolytope::from_vertices(arr, std::move(pts));
}

// ---------------------------------------------------------------------------
// Operations

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  check_same_arrangement(p, q);
  const auto& arr = p.arrangement();
  if (p.num_vertices() == 1 || q.num_vertices() == 1) {
    const VPolytope& big = p.num_vertices() == 1 ? q : p;
    const VPolytope& small = p.num_vertices() == 1 ? p : q;
    return big.translated(small.vertices()[0]);
  }
  // Both summands are deformations: the maximizer of a chamber on p + q is
  // the sum of the maximizers on p and on q.
  const auto& dirs = directions(*arr);
  ScaledPoints sp(p.vertices()), sq(q.vertices());
  std::vector<Point> pts;
  for (int c : arr->chambers()) {
    auto a = sp.argmax(dirs.primary[c]);
    auto b = sq.argmax(dirs.primary[c]);
    if (a.size() != 1 || b.size() != 1) throw InvalidArgument("summand is not a deformation");
    Point v = p.vertices()[a[0]];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += q.vertices()[b[0]][k];
    pts.push_back(std::move(v));
  }
  return VPolytope::from_vertices(arr, std::move(pts));
}

VPolytope dilate(const VPolytope& p, const Rational& lambda) {
  if (lambda < 0) throw InvalidArgument("dilation factor must be nonnegative");
  if (lambda == 0) return VPolytope::point(p.arrangement());
  std::vector<Point> verts = p.vertices();
  for (auto& v : verts)
    for (auto& x : v) x *= lambda;
  return VPolytope::from_vertices(p.arrangement(), std::move(verts));
}

VPolytope face_max(const VPolytope& p, int face) {
  std::vector<Point> verts;
  for (int i : p.argmax(face)) verts.push_back(p.vertices()[i]);
  return VPolytope::from_vertices(p.arrangement(), std::move(verts));
}

// ---------------------------------------------------------------------------
// Face lattice and volumes

FaceLattice::FaceLattice(const VPolytope& p) : vertices_(p.vertices()) {
  const auto& arr = *p.arrangement();
  const auto& dirs = directions(arr);
  ScaledPoints scaled(vertices_);
  std::map<std::vector<int>, int> ids;
  face_of_.resize(arr.num_faces());
  for (std::size_t f = 0; f < arr.num_faces(); ++f) {
    auto best = scaled.argmax(dirs.primary[f]);
    auto [it, inserted] = ids.emplace(best, static_cast<int>(faces_.size()));
    if (inserted) {
      dims_.push_back(affine_rank(vertices_, best));
      faces_.push_back(std::move(best));
    }
    face_of_[f] = it->second;
  }
  whole_ = face_of_[arr.central_face()];
  facets_.resize(faces_.size());
  triangulation_.resize(faces_.size());
}

const std::vector<int>& FaceLattice::facets(int id) const {
  auto& slot = facets_[id];
  if (!slot) {
    std::vector<int> out;
    const auto& g = faces_[id];
    for (std::size_t h = 0; h < faces_.size(); ++h)
      if (dims_[h] == dims_[id] - 1 &&
          std::includes(g.begin(), g.end(), faces_[h].begin(), faces_[h].end()))
        out.push_back(static_cast<int>(h));
    slot = std::move(out);
  }
  return *slot;
}

// Pulling triangulation: cone from the smallest vertex over the facets
// that avoid it. Simplices are lists of vertex indices.
const std::vector<std::vector<int>>& FaceLattice::triangulation(int id) const {
  auto& slot = triangulation_[id];
  if (!slot) {
    std::vector<std::vector<int>> out;
    const auto& g = faces_[id];
    if (dims_[id] == 0) {
      out.push_back({g[0]});
    } else {
      const int apex = g[0];
      for (int h : facets(id)) {
        const auto& hv = faces_[h];
        if (std::binary_search(hv.begin(), hv.end(), apex)) continue;
        for (const auto& s : triangulation(h)) {
          std::vector<int> simplex{apex};
          simplex.insert(simplex.end(), s.begin(), s.end());
          out.push_back(std::move(simplex));
        }
      }
    }
    slot = std::move(out);
  }
  return *slot;
}

Rational FaceLattice::volume(int id) const {
  const int r = dims_[id];
  if (r == 0) return 1;
  LatticeFrame frame = lattice_frame(vertices_, faces_[id]);
  Rational total = 0;
  for (const auto& s : triangulation(id)) {
    Matrix m(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        m[i][j] = vertices_[s[i + 1]][frame.pivots[j]] - vertices_[s[0]][frame.pivots[j]];
    total += abs(determinant(std::move(m)));
  }
  total /= Rational(factorial(r));
  total /= Rational(frame.index);
  return total;
}

std::vector<long long> FaceLattice::f_vector() const { return f_vector_of(whole_); }

std::vector<long long> FaceLattice::f_vector_of(int id) const {
  std::vector<long long> f(dims_[id] + 1, 0);
  const auto& g = faces_[id];
  for (std::size_t h = 0; h < faces_.size(); ++h)
    if (dims_[h] <= dims_[id] && std::includes(g.begin(), g.end(), faces_[h].begin(), faces_[h].end()))
      ++f[dims_[h]];
  return f;
}

FaceLattice face_lattice(const VPolytope& p) { return FaceLattice(p); }

RatPoly f_polynomial(const std::vector<long long>& f) {
  std::vector<Rational> c;
  for (long long x : f) c.emplace_back(static_cast<long>(x));
  return RatPoly(std::move(c));
}

RatPoly h_polynomial(const VPolytope& p) {
  FaceLattice lattice(p);
  return h_polynomial_of_face(lattice, lattice.whole());
}

RatPoly h_polynomial_of_face(const FaceLattice& lattice, int id) {
  return f_polynomial(lattice.f_vector_of(id)).shifted(-1);
}

Rational lattice_volume(const VPolytope& q) {
  FaceLattice lattice(q);
  return lattice.volume(lattice.whole());
}

Rational lattice_volume(ArrangementPtr arr, const std::vector<Point>& vertices) {
  return lattice_volume(VPolytope::from_points(std::move(arr), vertices));
}

// ---------------------------------------------------------------------------
// Slicing

SliceResult slice(const VPolytope& p, const std::vector<Rational>& form, const Rational& c) {
  if (static_cast<int>(form.size()) != p.ambient_dim()) throw InvalidArgument("linear form has wrong dimension");
  const auto& verts = p.vertices();
  std::vector<Rational> values;
  for (const auto& v : verts) {
    Rational s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += form[k] * v[k];
    values.push_back(s);
  }
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!(*lo < c && c < *hi)) throw InvalidArgument("slice level must lie strictly inside the range of the form");

  std::vector<Point> le, ge, eq;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (values[i] <= c) le.push_back(verts[i]);
    if (values[i] >= c) ge.push_back(verts[i]);
    if (values[i] == c) eq.push_back(verts[i]);
  }
  FaceLattice lattice(p);
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    if (lattice.dim(static_cast<int>(e)) != 1) continue;
    const int a = lattice.face(static_cast<int>(e))[0];
    const int b = lattice.face(static_cast<int>(e))[1];
    if ((values[a] < c && values[b] > c) || (values[a] > c && values[b] < c)) {
      Rational t = (c - values[a]) / (values[b] - values[a]);
      Point x(verts[a].size());
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = verts[a][k] + t * (verts[b][k] - verts[a][k]);
      le.push_back(x);
      ge.push_back(x);
      eq.push_back(std::move(x));
    }
  }
  const auto& arr = p.arrangement();
  SliceResult out{VPolytope::from_points(arr, std::move(le)), VPolytope::from_points(arr, std::move(ge)),
                  VPolytope::from_points(arr, std::move(eq))};
  if (!is_deformation(out.le) || !is_deformation(out.ge) || !is_deformation(out.eq))
    throw InvalidArgument("slice pieces are not deformations");
  return out;
}

std::vector<std::vector<Rational>> slice_forms(ArrangementKind kind) {
  const int d = kind.d;
  std::vector<std::vector<Rational>> forms;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> f(d, Rational(0));
    f[i] = 1;
    forms.push_back(std::move(f));
  }
  if (kind.type == ArrangementType::TypeB)
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int s : {-1, 1}) {
          std::vector<Rational> f(d, Rational(0));
          f[i] = 1;
          f[j] = s;
          forms.push_back(std::move(f));
        }
  return forms;
}

bool is_deformation(const VPolytope& p) {
  const auto& arr = *p.arrangement();
  const auto& dirs = directions(arr);
  ScaledPoints scaled(p.vertices());
  const auto chambers = arr.chambers();
  std::vector<int> chamber_vertex(arr.num_faces(), -1);
  for (int c : chambers) {
    auto a = scaled.argmax(dirs.primary[c]);
    auto b = scaled.argmax(dirs.alternate[c]);
    if (a.size() != 1 || a != b) return false;
    chamber_vertex[c] = a[0];
  }
  for (std::size_t f = 0; f < arr.num_faces(); ++f) {
    auto a = scaled.argmax(dirs.primary[f]);
    if (a != scaled.argmax(dirs.alternate[f])) return false;
    std::vector<int> spanned;
    for (int c : chambers)
      if (arr.face_leq(static_cast<int>(f), c)) spanned.push_back(chamber_vertex[c]);
    std::sort(spanned.begin(), spanned.end());
    spanned.erase(std::unique(spanned.begin(), spanned.end()), spanned.end());
    if (spanned != a) return false;
  }
  return true;
}

}  // namespace polyalg
