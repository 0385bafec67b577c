#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "polyalg/linalg.hpp"
#include "polyalg/polytope.hpp"
#include "polyalg/titsalgebra.hpp"

namespace polyalg {

// Formal combination of polytope classes [p]. Terms are keyed by the
// translation-normalized vertex list, so translates share a term.
class PiElement {
 public:
  using Key = std::vector<Point>;
  struct Term {
    VPolytope poly;  // normalized representative
    Rational coeff;
  };

  explicit PiElement(ArrangementPtr arr) : arr_(std::move(arr)) {}
  static PiElement one(ArrangementPtr arr);  // class of a point
  static PiElement of(const VPolytope& p);

  const ArrangementPtr& arrangement() const { return arr_; }
  const std::map<Key, Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const VPolytope& p, const Rational& c);
  Rational coeff(const VPolytope& p) const;
  // Degree-0 part: the sum of the coefficients.
  Rational augmentation() const;

  PiElement& operator+=(const PiElement& o);
  PiElement& operator-=(const PiElement& o);
  PiElement& operator*=(const Rational& s);
  friend PiElement operator+(PiElement a, const PiElement& b) { return a += b; }
  friend PiElement operator-(PiElement a, const PiElement& b) { return a -= b; }
  friend PiElement operator*(PiElement a, const Rational& s) { return a *= s; }
  friend PiElement operator*(const Rational& s, PiElement a) { return a *= s; }
  // Minkowski product [p][q] = [p + q].
  friend PiElement operator*(const PiElement& a, const PiElement& b);
  // Formal equality of the combinations (not equality of classes).
  friend bool operator==(const PiElement& a, const PiElement& b);

 private:
  void check_same(const PiElement& o) const;
  ArrangementPtr arr_;
  std::map<Key, Term> terms_;
};

PiElement pi_multiply(const PiElement& x, const PiElement& y);
PiElement pi_power(const PiElement& x, int k);
// delta_lambda on every term.
PiElement dilate(const PiElement& x, const Rational& lambda);
// x . H_F = sum c [p_F], extended linearly over Tits elements.
PiElement module_act(const PiElement& x, int face);
PiElement module_act(const PiElement& x, const TitsElement& e);

PiElement log_class(const VPolytope& p);
PiElement log_class(const PiElement& x);  // requires augmentation 1
PiElement exp_class(const PiElement& x);  // requires augmentation 0
// Component of degree r of the dilation grading.
PiElement graded_component(const PiElement& x, int r);

// Weights on arrangement faces; the image of Phi.
class ConeWeights {
 public:
  explicit ConeWeights(ArrangementPtr arr) : arr_(std::move(arr)) {}
  const ArrangementPtr& arrangement() const { return arr_; }
  const std::map<int, Rational>& weights() const { return w_; }
  Rational weight(int face) const;
  void add(int face, const Rational& c);
  bool is_zero() const { return w_.empty(); }
  SparseVector to_vector() const { return SparseVector(w_.begin(), w_.end()); }

  ConeWeights& operator+=(const ConeWeights& o);
  ConeWeights& operator-=(const ConeWeights& o);
  ConeWeights& operator*=(const Rational& s);
  friend ConeWeights operator+(ConeWeights a, const ConeWeights& b) { return a += b; }
  friend ConeWeights operator-(ConeWeights a, const ConeWeights& b) { return a -= b; }
  friend ConeWeights operator*(ConeWeights a, const Rational& s) { return a *= s; }
  friend ConeWeights operator*(const Rational& s, ConeWeights a) { return a *= s; }
  friend bool operator==(const ConeWeights& a, const ConeWeights& b) { return a.w_ == b.w_; }

 private:
  ArrangementPtr arr_;
  std::map<int, Rational> w_;
};

// Phi(p): weight vol(p_F) at every face F with dim p_F = d - dim F.
// Injective on classes; memoizes single polytopes by normalized vertices.
class PhiEvaluator {
 public:
  ConeWeights operator()(const VPolytope& p) const;
  ConeWeights operator()(const PiElement& x) const;
  std::size_t cache_size() const;

 private:
  using CacheKey = std::tuple<int, int, PiElement::Key>;  // type, d, vertices
  mutable std::mutex mutex_;
  mutable std::map<CacheKey, ConeWeights> cache_;
};

// Process-wide evaluator.
PhiEvaluator& phi_evaluator();
ConeWeights phi(const VPolytope& p);
ConeWeights phi(const PiElement& x);

// Phi(x . e) from w = Phi(x). Since dim p_{FG} <= d - dim FG and
// dim FG >= dim G, the face p_{FG} contributes at G only when
// dim FG = dim G, and then with weight w(FG).
ConeWeights phi_act(const ConeWeights& w, const TitsElement& e);

// Lattice lengths of the edges p_F over faces F of dimension d - 1; equals
// Phi(log[p]).
ConeWeights psi1(const VPolytope& p);

}  // namespace polyalg
