#include "polyalg/ratpoly.hpp"

#include <algorithm>

namespace polyalg {

RatPoly::RatPoly(const Rational& constant) : c_{constant} { trim(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational RatPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RatPoly RatPoly::shifted(const Rational& shift) const {
  RatPoly result;
  const RatPoly base(std::vector<Rational>{shift, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    result *= base;
    result += RatPoly(*it);
  }
  return result;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) {
      if (a != 1) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace polyalg
