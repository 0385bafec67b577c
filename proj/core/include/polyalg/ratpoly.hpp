#pragma once

#include <string>
#include <vector>

#include "polyalg/rational.hpp"

namespace polyalg {

// Univariate polynomial with rational coefficients; coefficient i is the
// coefficient of z^i. Trailing zeros are always trimmed.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& constant);  // NOLINT(implicit)
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly monomial(const Rational& c, int degree);
  static RatPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& z) const;
  // p(z + shift)
  RatPoly shifted(const Rational& shift) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  RatPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace polyalg
