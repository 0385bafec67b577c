#include "polyalg/titsalgebra.hpp"

#include <bit>

namespace polyalg {

TitsElement TitsElement::basis(ArrangementPtr arr, int face) {
  TitsElement e(std::move(arr));
  e.add_term(face, 1);
  return e;
}

Rational TitsElement::coeff(int face) const {
  auto it = terms_.find(face);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TitsElement::add_term(int face, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(face, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TitsElement::check_same(const TitsElement& o) const {
  if (arr_->kind() != o.arr_->kind()) throw InvalidArgument("Tits elements over different arrangements");
}

TitsElement& TitsElement::operator+=(const TitsElement& o) {
  check_same(o);
  for (const auto& [f, c] : o.terms_) add_term(f, c);
  return *this;
}

TitsElement& TitsElement::operator-=(const TitsElement& o) {
  check_same(o);
  for (const auto& [f, c] : o.terms_) add_term(f, -c);
  return *this;
}

TitsElement& TitsElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, c] : terms_) c *= s;
  return *this;
}

TitsElement operator*(const TitsElement& a, const TitsElement& b) {
  a.check_same(b);
  TitsElement r(a.arr_);
  for (const auto& [f, cf] : a.terms_)
    for (const auto& [g, cg] : b.terms_) r.add_term(a.arr_->product(f, g), cf * cg);
  return r;
}

bool operator==(const TitsElement& a, const TitsElement& b) {
  return a.arr_->kind() == b.arr_->kind() && a.terms_ == b.terms_;
}

FlatsElement FlatsElement::H(ArrangementPtr arr, int flat) {
  FlatsElement e(std::move(arr));
  e.add_term(flat, 1);
  return e;
}

FlatsElement FlatsElement::Q(ArrangementPtr arr, int flat) {
  FlatsElement e(arr);
  for (std::size_t y = 0; y < arr->num_flats(); ++y)
    if (arr->leq(flat, static_cast<int>(y))) e.add_term(static_cast<int>(y), Rational(static_cast<long>(arr->mobius(flat, static_cast<int>(y)))));
  return e;
}

Rational FlatsElement::coeff(int flat) const {
  auto it = terms_.find(flat);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FlatsElement::add_term(int flat, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(flat, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FlatsElement& FlatsElement::operator+=(const FlatsElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

FlatsElement& FlatsElement::operator-=(const FlatsElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

FlatsElement operator*(const FlatsElement& a, const FlatsElement& b) {
  if (a.arr_->kind() != b.arr_->kind()) throw InvalidArgument("flats elements over different arrangements");
  FlatsElement r(a.arr_);
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) r.add_term(a.arr_->join(x, y), cx * cy);
  return r;
}

bool operator==(const FlatsElement& a, const FlatsElement& b) {
  return a.arr_->kind() == b.arr_->kind() && a.terms_ == b.terms_;
}

FlatsElement support(const TitsElement& w) {
  FlatsElement r(w.arrangement());
  for (const auto& [f, c] : w.terms()) r.add_term(w.arrangement()->support(f), c);
  return r;
}

Rational char_on_simple(const TitsElement& w, int flat) {
  Rational s = 0;
  for (const auto& [f, c] : w.terms())
    if (w.arrangement()->leq(w.arrangement()->support(f), flat)) s += c;
  return s;
}

bool is_characteristic(const TitsElement& w, const Rational& t) {
  const auto& arr = *w.arrangement();
  for (std::size_t x = 0; x < arr.num_flats(); ++x)
    if (char_on_simple(w, static_cast<int>(x)) != power(t, arr.flat_dim(static_cast<int>(x)))) return false;
  return true;
}

bool is_noncritical(const Arrangement& arr, const Rational& t) {
  for (std::size_t x = 0; x < arr.num_flats(); ++x)
    if (arr.characteristic_polynomial(static_cast<int>(x))(t) == 0) return false;
  return true;
}

TitsElement adams_element(int d, const Rational& t) {
  auto arr = Arrangement::braid(d);
  TitsElement w(arr);
  for (std::size_t f = 0; f < arr->num_faces(); ++f)
    w.add_term(static_cast<int>(f), binomial(t, arr->face_dim(static_cast<int>(f))));
  return w;
}

EulerianFamily adams_family(int d) {
  auto arr = Arrangement::braid(d);
  EulerianFamily fam{arr, {}};
  const int n = static_cast<int>(arr->num_faces());
  for (std::size_t x = 0; x < arr->num_flats(); ++x) {
    const int xi = static_cast<int>(x);
    TitsElement e(arr);
    const Rational scale = Rational(1) / Rational(factorial(arr->flat_dim(xi)));
    for (int f = 0; f < n; ++f) {
      if (arr->support(f) != xi) continue;
      const Face& F = arr->face(f);
      for (int g = 0; g < n; ++g) {
        if (!arr->face_leq(f, g)) continue;
        const Face& G = arr->face(g);
        Integer deg = 1;
        for (Block s : F.blocks) {
          int k = 0;
          for (Block b : G.blocks)
            if ((b & ~s) == 0) ++k;
          deg *= k;
        }
        const int codim = arr->face_dim(g) - arr->face_dim(f);
        Rational c(Integer(codim % 2 ? -1 : 1), deg);
        e.add_term(g, c * scale);
      }
    }
    fam.elements.emplace(xi, std::move(e));
  }
  return fam;
}

std::pair<TitsElement, EulerianFamily> gamma_family(int d, const Rational& t) {
  if (t == 1) throw InvalidArgument("gamma_t requires t != 1");
  auto arr = Arrangement::coordinate(d);
  // First-orthant face with zero set T (as a mask over [d]).
  auto orthant_face = [&](Block T) {
    Face f;
    for (int i = 0; i < d; ++i) {
      if (T >> i & 1u) f.zero |= (Block{1} << i) | (Block{1} << (d + i));
      else f.blocks.push_back(Block{1} << i);
    }
    return arr->face_index(f);
  };
  const Block all = (Block{1} << d) - 1;
  TitsElement gamma(arr);
  for (Block T = 0; T <= all; ++T) {
    const int f = orthant_face(T);
    gamma.add_term(f, power(t - 1, arr->face_dim(f)));
  }
  EulerianFamily fam{arr, {}};
  for (Block S = 0; S <= all; ++S) {
    Flat x;
    x.zero = S | (S << d);
    for (int i = 0; i < d; ++i)
      if (!(S >> i & 1u)) x.blocks.push_back(Block{1} << i);
    TitsElement e(arr);
    // T ranges over subsets of S.
    for (Block T = S;; T = (T - 1) & S) {
      const int sign = (std::popcount(S & ~T) % 2) ? -1 : 1;
      e.add_term(orthant_face(T), sign);
      if (T == 0) break;
    }
    fam.elements.emplace(arr->flat_index(x), std::move(e));
  }
  return {gamma, fam};
}

Report check_family(const EulerianFamily& family) {
  Report r;
  r.suite = "eulerian_family";
  const auto& arr = family.arr;
  bool idem = true, orth = true, supp_q = true, tri = true;
  std::string idem_fail, orth_fail, supp_fail, tri_fail;
  TitsElement total(arr);
  for (const auto& [x, e] : family.elements) {
    total += e;
    if (!(e * e == e) && idem) {
      idem = false;
      idem_fail = arr->format_flat(x);
    }
    for (const auto& [y, f] : family.elements) {
      if (x == y) continue;
      if (!(e * f).is_zero() && orth) {
        orth = false;
        orth_fail = arr->format_flat(x) + " * " + arr->format_flat(y);
      }
    }
    if (!(support(e) == FlatsElement::Q(arr, x)) && supp_q) {
      supp_q = false;
      supp_fail = arr->format_flat(x);
    }
    bool at_x = false;
    for (const auto& [f, c] : e.terms()) {
      const int s = arr->support(f);
      if (!arr->leq(x, s)) tri = false;
      if (s == x) at_x = true;
    }
    if (!at_x) tri = false;
    if (!tri && tri_fail.empty()) tri_fail = arr->format_flat(x);
  }
  const bool complete = total == TitsElement::unit(arr) && family.elements.size() == arr->num_flats();
  auto add = [&](const char* name, bool ok, const std::string& where) {
    auto& c = r.add(name, ok);
    if (!ok) c.first_mismatch = where;
  };
  add("idempotent", idem, idem_fail);
  add("orthogonal", orth, orth_fail);
  add("complete", complete, "sum differs from the unit");
  add("support_is_Q", supp_q, supp_fail);
  add("triangular_support", tri, tri_fail);
  return r;
}

bool decomposes_characteristic(const TitsElement& w, const EulerianFamily& family, const Rational& t) {
  TitsElement sum(family.arr);
  for (const auto& [x, e] : family.elements) sum += e * power(t, family.arr->flat_dim(x));
  return sum == w;
}

}  // namespace polyalg
