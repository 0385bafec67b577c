#pragma once

#include <vector>

#include "polyalg/ratpoly.hpp"
#include "polyalg/report.hpp"

namespace polyalg {

// Coefficient conventions: Ordinary x^n, Egf x^n/n!, TypeBEgf x^n/(2n)!!.
enum class Convention { Ordinary, Egf, TypeBEgf };

Rational convention_weight(Convention c, int n);  // 1, n!, or 2^n n!

// Power series in x truncated after x^order, with coefficients in Q[z].
// Stored by ordinary coefficients; the convention only affects coeff().
class TruncSeries2 {
 public:
  explicit TruncSeries2(int order, Convention conv = Convention::Ordinary);
  // coeffs[n] is the coefficient in convention conv.
  static TruncSeries2 from_coeffs(int order, const std::vector<RatPoly>& coeffs, Convention conv);
  static TruncSeries2 constant(int order, const RatPoly& c, Convention conv = Convention::Ordinary);
  static TruncSeries2 x(int order, Convention conv = Convention::Ordinary);

  int order() const { return order_; }
  Convention convention() const { return conv_; }
  RatPoly coeff(int n) const;  // in this series' convention
  const RatPoly& ordinary(int n) const { return c_[n]; }
  void set_coeff(int n, const RatPoly& p);  // in this series' convention
  TruncSeries2 with_convention(Convention conv) const;

  TruncSeries2& operator+=(const TruncSeries2& o);
  TruncSeries2& operator-=(const TruncSeries2& o);
  TruncSeries2& operator*=(const TruncSeries2& o);
  TruncSeries2& operator*=(const RatPoly& s);
  friend TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b) { return a += b; }
  friend TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b) { return a -= b; }
  friend TruncSeries2 operator*(TruncSeries2 a, const TruncSeries2& b) { return a *= b; }
  friend TruncSeries2 operator*(TruncSeries2 a, const RatPoly& s) { return a *= s; }
  friend bool operator==(const TruncSeries2& a, const TruncSeries2& b) { return a.c_ == b.c_; }

  // f(g) with g(0) = 0.
  TruncSeries2 compose(const TruncSeries2& inner) const;
  TruncSeries2 exp() const;                      // requires f(0) = 0
  TruncSeries2 log() const;                      // requires f(0) = 1
  TruncSeries2 inverse() const;                  // requires f(0) a nonzero constant
  TruncSeries2 pow(const Rational& alpha) const;  // requires f(0) = 1
  TruncSeries2 scale_x(const Rational& c) const;  // f(c x)
  TruncSeries2 eval_z(const Rational& z) const;

 private:
  void check_compatible(const TruncSeries2& o) const;
  int order_;
  Convention conv_;
  std::vector<RatPoly> c_;
};

// Eulerian polynomials by the classical recurrences.
RatPoly eulerian_A(int d);
RatPoly eulerian_B(int d);
// By enumeration of S_d and B_d (bounded).
RatPoly eulerian_A_enumerated(int d);
RatPoly eulerian_B_enumerated(int d);

// (z-1)/(z-e^{x(z-1)}) as an Egf series.
TruncSeries2 eulerian_series_A(int order);
// (1-z)e^{x(1-z)/2}/(1-z e^{x(1-z)}) as a TypeBEgf series.
TruncSeries2 eulerian_series_B(int order);

// Type B compositional formula h = f g(a): f, g in TypeBEgf, a in Egf
// with a(0) = 0. Result in TypeBEgf.
TruncSeries2 type_b_compositional(const TruncSeries2& f, const TruncSeries2& g, const TruncSeries2& a);
// Brute force sum over signed partitions of [+-d] of f_{|S0|/2} g_k prod a_{|Si|}.
RatPoly type_b_partition_sum(int d, const std::vector<RatPoly>& f, const std::vector<RatPoly>& g,
                             const std::vector<RatPoly>& a);

// Checks every generating-function identity to the given orders.
Report verify_identities(int order_a = 8, int order_b = 6);

}  // namespace polyalg
