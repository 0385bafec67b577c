#include "polyalg/polyclass.hpp"

namespace polyalg {

// ---------------------------------------------------------------------------
// PiElement

PiElement PiElement::one(ArrangementPtr arr) {
  PiElement x(arr);
  x.add_term(VPolytope::point(arr), 1);
  return x;
}

PiElement PiElement::of(const VPolytope& p) {
  PiElement x(p.arrangement());
  x.add_term(p, 1);
  return x;
}

void PiElement::add_term(const VPolytope& p, const Rational& c) {
  if (!(p.arrangement()->kind() == arr_->kind())) throw InvalidArgument("polytope belongs to another arrangement");
  if (c == 0) return;
  VPolytope n = p.normalized();
  auto it = terms_.find(n.vertices());
  if (it == terms_.end()) {
    Key key = n.vertices();
    terms_.emplace(std::move(key), Term{std::move(n), c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

Rational PiElement::coeff(const VPolytope& p) const {
  auto it = terms_.find(p.normalized().vertices());
  return it == terms_.end() ? Rational(0) : it->second.coeff;
}

Rational PiElement::augmentation() const {
  Rational s = 0;
  for (const auto& [key, term] : terms_) s += term.coeff;
  return s;
}

void PiElement::check_same(const PiElement& o) const {
  if (!(arr_->kind() == o.arr_->kind())) throw InvalidArgument("classes belong to different arrangements");
}

PiElement& PiElement::operator+=(const PiElement& o) {
  check_same(o);
  for (const auto& [key, term] : o.terms_) add_term(term.poly, term.coeff);
  return *this;
}

PiElement& PiElement::operator-=(const PiElement& o) {
  check_same(o);
  for (const auto& [key, term] : o.terms_) add_term(term.poly, -term.coeff);
  return *this;
}

PiElement& PiElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, term] : terms_) term.coeff *= s;
  return *this;
}

PiElement operator*(const PiElement& a, const PiElement& b) {
  a.check_same(b);
  PiElement out(a.arr_);
  for (const auto& [ka, ta] : a.terms_)
    for (const auto& [kb, tb] : b.terms_) out.add_term(minkowski_sum(ta.poly, tb.poly), ta.coeff * tb.coeff);
  return out;
}

bool operator==(const PiElement& a, const PiElement& b) {
  if (!(a.arr_->kind() == b.arr_->kind()) || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [key, term] : a.terms_) {
    if (key != ib->first || term.coeff != ib->second.coeff) return false;
    ++ib;
  }
  return true;
}

PiElement pi_multiply(const PiElement& x, const PiElement& y) { return x * y; }

PiElement pi_power(const PiElement& x, int k) {
  if (k < 0) throw InvalidArgument("negative power");
  PiElement out = PiElement::one(x.arrangement());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

PiElement dilate(const PiElement& x, const Rational& lambda) {
  PiElement out(x.arrangement());
  for (const auto& [key, term] : x.terms()) out.add_term(dilate(term.poly, lambda), term.coeff);
  return out;
}

PiElement module_act(const PiElement& x, int face) {
  PiElement out(x.arrangement());
  for (const auto& [key, term] : x.terms()) out.add_term(face_max(term.poly, face), term.coeff);
  return out;
}

PiElement module_act(const PiElement& x, const TitsElement& e) {
  if (!(x.arrangement()->kind() == e.arrangement()->kind()))
    throw InvalidArgument("class and Tits element belong to different arrangements");
  PiElement out(x.arrangement());
  for (const auto& [face, c] : e.terms()) out += module_act(x, face) * c;
  return out;
}

// ---------------------------------------------------------------------------
// log, exp, grading

PiElement log_class(const VPolytope& p) {
  // log[p] = sum_{r=1}^{k} (-1)^{r-1}/r ([p] - 1)^r with k = dim p, and
  // ([p] - 1)^r = sum_i C(r, i) (-1)^{r-i} [i p].
  const int k = p.dim();
  PiElement out(p.arrangement());
  for (int i = 0; i <= k; ++i) {
    Rational c = 0;
    for (int r = std::max(1, i); r <= k; ++r) {
      Rational term = binomial(Rational(r), i) / r;
      if ((r - 1 + r - i) % 2 != 0) term = -term;
      c += term;
    }
    out.add_term(dilate(p, Rational(i)), c);
  }
  return out;
}

PiElement log_class(const PiElement& x) {
  if (x.augmentation() != 1) throw InvalidArgument("log needs a class with augmentation 1");
  const auto& arr = x.arrangement();
  PiElement y = x - PiElement::one(arr);
  PiElement out(arr), power = y;
  for (int r = 1; r <= arr->d() && !power.is_zero(); ++r) {
    out += power * Rational(r % 2 == 1 ? 1 : -1, r);
    if (r < arr->d()) power = power * y;
  }
  return out;
}

PiElement exp_class(const PiElement& x) {
  if (x.augmentation() != 0) throw InvalidArgument("exp needs a class with zero degree-0 part");
  const auto& arr = x.arrangement();
  PiElement out = PiElement::one(arr), power = PiElement::one(arr);
  for (int k = 1; k <= arr->d(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    out += power * Rational(1, factorial(k));
  }
  return out;
}

PiElement graded_component(const PiElement& x, int r) {
  const auto& arr = x.arrangement();
  const int n = arr->d() + 1;  // degrees 0..d
  if (r < 0 || r >= n) return PiElement(arr);
  // delta_l x = sum_s l^s x_s for l = 1..n; invert the Vandermonde system.
  Matrix v(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < n; ++s) v[j][s] = power(Rational(j + 1), s);
  PiElement out(arr);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    auto col = solve(v, e, n);  // column j of the inverse
    const Rational& w = col.solution[r];
    if (w != 0) out += dilate(x, Rational(j + 1)) * w;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cone weights and Phi

Rational ConeWeights::weight(int face) const {
  auto it = w_.find(face);
  return it == w_.end() ? Rational(0) : it->second;
}

void ConeWeights::add(int face, const Rational& c) {
  if (c == 0) return;
  auto& slot = w_[face];
  slot += c;
  if (slot == 0) w_.erase(face);
}

ConeWeights& ConeWeights::operator+=(const ConeWeights& o) {
  for (const auto& [f, c] : o.w_) add(f, c);
  return *this;
}

ConeWeights& ConeWeights::operator-=(const ConeWeights& o) {
  for (const auto& [f, c] : o.w_) add(f, -c);
  return *this;
}

ConeWeights& ConeWeights::operator*=(const Rational& s) {
  if (s == 0) {
    w_.clear();
    return *this;
  }
  for (auto& [f, c] : w_) c *= s;
  return *this;
}

ConeWeights PhiEvaluator::operator()(const VPolytope& p) const {
  VPolytope n = p.normalized();
  CacheKey key{static_cast<int>(p.arrangement()->type()), p.arrangement()->d(), n.vertices()};
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const auto& arr = *p.arrangement();
  ConeWeights out(p.arrangement());
  FaceLattice lattice(n);
  std::map<int, Rational> volumes;
  for (std::size_t f = 0; f < arr.num_faces(); ++f) {
    const int g = lattice.face_of(static_cast<int>(f));
    if (lattice.dim(g) != arr.d() - arr.face_dim(static_cast<int>(f))) continue;
    auto it = volumes.find(g);
    if (it == volumes.end()) it = volumes.emplace(g, lattice.volume(g)).first;
    out.add(static_cast<int>(f), it->second);
  }
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), out);
  return out;
}

ConeWeights PhiEvaluator::operator()(const PiElement& x) const {
  ConeWeights out(x.arrangement());
  for (const auto& [key, term] : x.terms()) out += (*this)(term.poly) * term.coeff;
  return out;
}

std::size_t PhiEvaluator::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

PhiEvaluator& phi_evaluator() {
  static PhiEvaluator evaluator;
  return evaluator;
}

ConeWeights phi(const VPolytope& p) { return phi_evaluator()(p); }
ConeWeights phi(const PiElement& x) { return phi_evaluator()(x); }

ConeWeights phi_act(const ConeWeights& w, const TitsElement& e) {
  if (!(w.arrangement()->kind() == e.arrangement()->kind()))
    throw InvalidArgument("weights and Tits element belong to different arrangements");
  const auto& arr = *w.arrangement();
  ConeWeights out(w.arrangement());
  const int n = static_cast<int>(arr.num_faces());
  for (const auto& [f, ef] : e.terms()) {
    for (int g = 0; g < n; ++g) {
      const int fg = arr.product(f, g);
      if (arr.face_dim(fg) != arr.face_dim(g)) continue;
      const Rational c = w.weight(fg);
      if (c != 0) out.add(g, ef * c);
    }
  }
  return out;
}

ConeWeights psi1(const VPolytope& p) {
  const auto& arr = *p.arrangement();
  ConeWeights out(p.arrangement());
  FaceLattice lattice(p);
  for (int f : arr.faces_of_dim(arr.d() - 1)) {
    const int g = lattice.face_of(f);
    if (lattice.dim(g) == 1) out.add(f, lattice.volume(g));
  }
  return out;
}

}  // namespace polyalg
