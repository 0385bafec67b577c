#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyalg/polyclass.hpp"
#include "polyalg/report.hpp"

namespace polyalg {

// Generalized permutahedron in R^I. Labels are sorted and distinct; the
// coordinates of the polytope over BraidA(|I|) follow the label order. The
// empty label set carries the one-point polytope in R^0.
class LabeledGP {
 public:
  LabeledGP() = default;  // unit over the empty set
  LabeledGP(std::vector<int> labels, VPolytope p);
  // Extracts vertices; throws InvalidArgument for non-deformations.
  static LabeledGP from_points(std::vector<int> labels, std::vector<Point> points);
  static LabeledGP permutahedron(std::vector<int> labels);
  // Conv{e_i : i in S}, S a nonempty subset of the labels.
  static LabeledGP simplex(std::vector<int> labels, const std::vector<int>& S);

  const std::vector<int>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  bool is_unit() const { return labels_.empty(); }
  // Throws InvalidArgument for the empty label set.
  const VPolytope& polytope() const;
  // Vertices in R^I; the unit has one empty vertex.
  std::vector<Point> vertices() const;
  // Relabels through a bijection defined on every label.
  LabeledGP relabeled(const std::map<int, int>& bijection) const;

  friend bool operator==(const LabeledGP& a, const LabeledGP& b) {
    return a.labels_ == b.labels_ && a.vertices() == b.vertices();
  }

 private:
  std::vector<int> labels_;
  std::optional<VPolytope> poly_;
};

// Cartesian product over the disjoint union of the label sets.
LabeledGP gp_product(const LabeledGP& p, const LabeledGP& q);
// (p|_S, p/_S): the face maximizing the indicator of S, projected to R^S
// and R^T. S must be a subset of the labels; the empty and full subsets give
// a unit factor.
std::pair<LabeledGP, LabeledGP> gp_coproduct(const LabeledGP& p, const std::vector<int>& S);
LabeledGP gp_minkowski_sum(const LabeledGP& p, const LabeledGP& q);

// Classes over a label set; the empty set carries scalars.
struct LabeledClass {
  std::vector<int> labels;
  std::optional<PiElement> element;  // absent for the empty label set
  Rational scalar;                   // used only for the empty label set

  static LabeledClass of(const LabeledGP& p);
  static LabeledClass zero(const std::vector<int>& labels);
  LabeledClass& operator+=(const LabeledClass& o);
  LabeledClass& operator*=(const Rational& s);
};

// Bilinear extension of the Cartesian product.
LabeledClass class_product(const LabeledClass& a, const LabeledClass& b);
// [p]^* = sum over nonempty faces q of p of (-1)^{dim q} [q].
LabeledClass euler_map(const LabeledClass& x);
// s_I = (-1)^{|I|} [.]^*
LabeledClass antipode_class(const LabeledClass& x);
PiElement euler_map(const PiElement& x);
PiElement antipode_class(const PiElement& x);

// Phi of a class, with the scalar at face 0 for the empty label set.
SparseVector phi_labeled(const LabeledClass& x);
// (Phi (x) Phi) as weights on pairs of faces.
using TensorWeights = std::map<std::pair<int, int>, Rational>;
void add_tensor(TensorWeights& t, const SparseVector& a, const SparseVector& b, const Rational& c);

// Deterministic samples over [n]: all simplices, pi_n and sums of up to
// three simplices.
std::vector<LabeledGP> hopf_samples(int n, unsigned seed = 2024);

// Coassociativity, bimonoid compatibility with the product, Minkowski
// compatibility, naturality, translation coideal and, for n <= 3, the
// antipode axiom and s(s(x)) = x under Phi.
Report hopf_axiom_check(int n);
// Slice-generated valuation elements: their coproducts vanish in Phi (x) Phi
// and their products with samples vanish under Phi.
Report mc_coideal_check(int n, int trials);
// (p1 + p2) x (q1 + q2) = p1 x q1 + p2 x q2 and additivity of the coproduct.
Report two_one_monoid_check(int n);

}  // namespace polyalg
