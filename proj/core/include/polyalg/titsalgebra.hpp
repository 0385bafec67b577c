#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polyalg/arrangement.hpp"
#include "polyalg/report.hpp"

namespace polyalg {

// Sparse face sum sum_F w^F H_F over an arrangement; faces by index.
class TitsElement {
 public:
  explicit TitsElement(ArrangementPtr arr) : arr_(std::move(arr)) {}
  static TitsElement basis(ArrangementPtr arr, int face);
  static TitsElement unit(ArrangementPtr arr) { return basis(arr, arr->central_face()); }

  const ArrangementPtr& arrangement() const { return arr_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int face) const;
  void add_term(int face, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  TitsElement& operator+=(const TitsElement& o);
  TitsElement& operator-=(const TitsElement& o);
  TitsElement& operator*=(const Rational& s);
  friend TitsElement operator+(TitsElement a, const TitsElement& b) { return a += b; }
  friend TitsElement operator-(TitsElement a, const TitsElement& b) { return a -= b; }
  friend TitsElement operator*(TitsElement a, const Rational& s) { return a *= s; }
  friend TitsElement operator*(const Rational& s, TitsElement a) { return a *= s; }
  // Bilinear extension of the Tits product.
  friend TitsElement operator*(const TitsElement& a, const TitsElement& b);
  friend bool operator==(const TitsElement& a, const TitsElement& b);

 private:
  void check_same(const TitsElement& o) const;
  ArrangementPtr arr_;
  std::map<int, Rational> terms_;
};

// Sparse combination of flats; product H_X H_Y = H_{X v Y}.
class FlatsElement {
 public:
  explicit FlatsElement(ArrangementPtr arr) : arr_(std::move(arr)) {}
  static FlatsElement H(ArrangementPtr arr, int flat);
  // Q_X = sum_{Y >= X} mu(X, Y) H_Y
  static FlatsElement Q(ArrangementPtr arr, int flat);

  const ArrangementPtr& arrangement() const { return arr_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int flat) const;
  void add_term(int flat, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  FlatsElement& operator+=(const FlatsElement& o);
  FlatsElement& operator-=(const FlatsElement& o);
  friend FlatsElement operator+(FlatsElement a, const FlatsElement& b) { return a += b; }
  friend FlatsElement operator-(FlatsElement a, const FlatsElement& b) { return a -= b; }
  friend FlatsElement operator*(const FlatsElement& a, const FlatsElement& b);
  friend bool operator==(const FlatsElement& a, const FlatsElement& b);

 private:
  ArrangementPtr arr_;
  std::map<int, Rational> terms_;
};

// Coefficientwise support map.
FlatsElement support(const TitsElement& w);

struct EulerianFamily {
  ArrangementPtr arr;
  std::map<int, TitsElement> elements;  // flat index -> E_X
};

// chi_X(w) = sum over faces F with supp F <= X of w^F.
Rational char_on_simple(const TitsElement& w, int flat);
bool is_characteristic(const TitsElement& w, const Rational& t);
bool is_noncritical(const Arrangement& arr, const Rational& t);

// alpha_t = sum_F binom(t, dim F) H_F on BraidA(d).
TitsElement adams_element(int d, const Rational& t);
EulerianFamily adams_family(int d);

// gamma_t = sum over first-orthant faces of (t-1)^{dim F} H_F on
// Coordinate(d), and E_{X_S} = sum_{T subset S} (-1)^{|S-T|} H_{F_T}.
std::pair<TitsElement, EulerianFamily> gamma_family(int d, const Rational& t);

// Idempotency, orthogonality, completeness, supp(E_X) = Q_X and the
// triangular support condition.
Report check_family(const EulerianFamily& family);
// w = sum_X t^{dim X} E_X.
bool decomposes_characteristic(const TitsElement& w, const EulerianFamily& family, const Rational& t);

}  // namespace polyalg
