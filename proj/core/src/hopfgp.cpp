#include "polyalg/hopfgp.hpp"

#include <algorithm>
#include <random>

namespace polyalg {

namespace {

void check_labels(const std::vector<int>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1) throw InvalidArgument("labels must be positive");
    if (i && labels[i - 1] >= labels[i]) throw InvalidArgument("labels must be sorted and distinct");
  }
}

int position(const std::vector<int>& labels, int label) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) throw InvalidArgument("label " + std::to_string(label) + " not in the label set");
  return static_cast<int>(it - labels.begin());
}

std::vector<int> complement(const std::vector<int>& labels, const std::vector<int>& S) {
  std::vector<int> out;
  std::set_difference(labels.begin(), labels.end(), S.begin(), S.end(), std::back_inserter(out));
  return out;
}

std::vector<int> subset_of(const std::vector<int>& labels, unsigned mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (mask >> i & 1u) out.push_back(labels[i]);
  return out;
}

std::vector<int> iota_labels(int first, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

Point project(const Point& v, const std::vector<int>& labels, const std::vector<int>& keep) {
  Point out;
  for (int l : keep) out.push_back(v[position(labels, l)]);
  return out;
}

std::string labels_text(const std::vector<int>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// LabeledGP

LabeledGP::LabeledGP(std::vector<int> labels, VPolytope p) : labels_(std::move(labels)) {
  check_labels(labels_);
  if (labels_.empty()) throw InvalidArgument("the empty label set carries only the unit");
  const auto& arr = *p.arrangement();
  if (arr.type() != ArrangementType::BraidA || arr.d() != size())
    throw InvalidArgument("polytope must live over the braid arrangement of the label set");
  poly_ = std::move(p);
}

LabeledGP LabeledGP::from_points(std::vector<int> labels, std::vector<Point> points) {
  if (labels.empty()) return LabeledGP();
  const int n = static_cast<int>(labels.size());
  return LabeledGP(std::move(labels), VPolytope::from_points(Arrangement::braid(n), std::move(points)));
}

LabeledGP LabeledGP::permutahedron(std::vector<int> labels) {
  if (labels.empty()) return LabeledGP();
  const int n = static_cast<int>(labels.size());
  return LabeledGP(std::move(labels), polyalg::permutahedron(n));
}

LabeledGP LabeledGP::simplex(std::vector<int> labels, const std::vector<int>& S) {
  check_labels(labels);
  std::vector<int> positions;
  for (int l : S) positions.push_back(position(labels, l) + 1);
  const int n = static_cast<int>(labels.size());
  return LabeledGP(std::move(labels), polyalg::simplex(Arrangement::braid(n), positions));
}

const VPolytope& LabeledGP::polytope() const {
  if (!poly_) throw InvalidArgument("the unit has no braid polytope");
  return *poly_;
}

std::vector<Point> LabeledGP::vertices() const {
  if (!poly_) return {Point{}};
  return poly_->vertices();
}

LabeledGP LabeledGP::relabeled(const std::map<int, int>& bijection) const {
  std::vector<int> images;
  for (int l : labels_) {
    auto it = bijection.find(l);
    if (it == bijection.end()) throw InvalidArgument("bijection misses label " + std::to_string(l));
    images.push_back(it->second);
  }
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidArgument("relabeling is not injective");
  if (!poly_) return LabeledGP();
  std::vector<Point> pts;
  for (const auto& v : poly_->vertices()) {
    Point w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[position(sorted, images[i])] = v[i];
    pts.push_back(std::move(w));
  }
  return from_points(std::move(sorted), std::move(pts));
}

// ---------------------------------------------------------------------------
// Product and coproduct

LabeledGP gp_product(const LabeledGP& p, const LabeledGP& q) {
  if (p.is_unit()) return q;
  if (q.is_unit()) return p;
  std::vector<int> labels;
  std::set_union(p.labels().begin(), p.labels().end(), q.labels().begin(), q.labels().end(), std::back_inserter(labels));
  if (static_cast<int>(labels.size()) != p.size() + q.size()) throw InvalidArgument("product needs disjoint label sets");
  std::vector<Point> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      Point v(labels.size());
      for (int i = 0; i < p.size(); ++i) v[position(labels, p.labels()[i])] = a[i];
      for (int i = 0; i < q.size(); ++i) v[position(labels, q.labels()[i])] = b[i];
      pts.push_back(std::move(v));
    }
  }
  return LabeledGP::from_points(std::move(labels), std::move(pts));
}

std::pair<LabeledGP, LabeledGP> gp_coproduct(const LabeledGP& p, const std::vector<int>& S) {
  std::vector<int> s = S;
  std::sort(s.begin(), s.end());
  for (int l : s) position(p.labels(), l);
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidArgument("coproduct subset repeats a label");
  if (s.empty()) return {LabeledGP(), p};
  if (static_cast<int>(s.size()) == p.size()) return {p, LabeledGP()};
  const std::vector<int> t = complement(p.labels(), s);
  std::vector<Rational> direction(p.size(), Rational(0));
  for (int l : s) direction[position(p.labels(), l)] = 1;
  const auto& verts = p.polytope().vertices();
  std::vector<Point> restricted, contracted;
  for (int i : p.polytope().argmax(direction)) {
    restricted.push_back(project(verts[i], p.labels(), s));
    contracted.push_back(project(verts[i], p.labels(), t));
  }
  return {LabeledGP::from_points(s, std::move(restricted)), LabeledGP::from_points(t, std::move(contracted))};
}

LabeledGP gp_minkowski_sum(const LabeledGP& p, const LabeledGP& q) {
  if (p.labels() != q.labels()) throw InvalidArgument("Minkowski sum needs equal label sets");
  if (p.is_unit()) return p;
  return LabeledGP(p.labels(), minkowski_sum(p.polytope(), q.polytope()));
}

// ---------------------------------------------------------------------------
// Classes

LabeledClass LabeledClass::of(const LabeledGP& p) {
  LabeledClass x = zero(p.labels());
  if (p.is_unit()) x.scalar = 1;
  else x.element->add_term(p.polytope(), 1);
  return x;
}

LabeledClass LabeledClass::zero(const std::vector<int>& labels) {
  check_labels(labels);
  LabeledClass x;
  x.labels = labels;
  x.scalar = 0;
  if (!labels.empty()) x.element = PiElement(Arrangement::braid(static_cast<int>(labels.size())));
  return x;
}

LabeledClass& LabeledClass::operator+=(const LabeledClass& o) {
  if (labels != o.labels) throw InvalidArgument("classes over different label sets");
  if (element) *element += *o.element;
  else scalar += o.scalar;
  return *this;
}

LabeledClass& LabeledClass::operator*=(const Rational& s) {
  if (element) *element *= s;
  else scalar *= s;
  return *this;
}

LabeledClass class_product(const LabeledClass& a, const LabeledClass& b) {
  if (a.labels.empty()) {
    LabeledClass out = b;
    return out *= a.scalar;
  }
  if (b.labels.empty()) {
    LabeledClass out = a;
    return out *= b.scalar;
  }
  std::vector<int> labels;
  std::set_union(a.labels.begin(), a.labels.end(), b.labels.begin(), b.labels.end(), std::back_inserter(labels));
  LabeledClass out = LabeledClass::zero(labels);
  for (const auto& [ka, ta] : a.element->terms())
    for (const auto& [kb, tb] : b.element->terms())
      out.element->add_term(gp_product(LabeledGP(a.labels, ta.poly), LabeledGP(b.labels, tb.poly)).polytope(),
                            ta.coeff * tb.coeff);
  return out;
}

PiElement euler_map(const PiElement& x) {
  PiElement out(x.arrangement());
  for (const auto& [key, term] : x.terms()) {
    FaceLattice lattice(term.poly);
    const auto& verts = term.poly.vertices();
    for (int id = 0; id < static_cast<int>(lattice.size()); ++id) {
      std::vector<Point> pts;
      for (int i : lattice.face(id)) pts.push_back(verts[i]);
      out.add_term(VPolytope::from_points(x.arrangement(), std::move(pts)), lattice.dim(id) % 2 ? -term.coeff : term.coeff);
    }
  }
  return out;
}

PiElement antipode_class(const PiElement& x) {
  PiElement out = euler_map(x);
  return x.arrangement()->d() % 2 ? out * Rational(-1) : out;
}

LabeledClass euler_map(const LabeledClass& x) {
  LabeledClass out = x;
  if (x.element) out.element = euler_map(*x.element);
  return out;
}

LabeledClass antipode_class(const LabeledClass& x) {
  LabeledClass out = euler_map(x);
  if (x.labels.size() % 2) out *= Rational(-1);
  return out;
}

SparseVector phi_labeled(const LabeledClass& x) {
  if (!x.element) {
    SparseVector v;
    if (x.scalar != 0) v.emplace(0, x.scalar);
    return v;
  }
  return phi(*x.element).to_vector();
}

void add_tensor(TensorWeights& t, const SparseVector& a, const SparseVector& b, const Rational& c) {
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      auto& slot = t[{i, j}];
      slot += c * x * y;
      if (slot == 0) t.erase({i, j});
    }
}

// ---------------------------------------------------------------------------
// Samples and checks

namespace {

std::vector<LabeledGP> samples_over(const std::vector<int>& labels, unsigned seed) {
  std::vector<LabeledGP> out;
  if (labels.empty()) return {LabeledGP()};
  const unsigned n = static_cast<unsigned>(labels.size());
  std::vector<std::vector<int>> big;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    auto S = subset_of(labels, mask);
    out.push_back(LabeledGP::simplex(labels, S));
    if (S.size() >= 2) big.push_back(S);
  }
  out.push_back(LabeledGP::permutahedron(labels));
  if (big.empty()) return out;
  std::mt19937 rng(seed);
  for (int k = 0; k < 6; ++k) {
    LabeledGP p = LabeledGP::simplex(labels, big[rng() % big.size()]);
    const int extra = 1 + static_cast<int>(rng() % 2);
    for (int j = 0; j < extra; ++j) p = gp_minkowski_sum(p, LabeledGP::simplex(labels, big[rng() % big.size()]));
    out.push_back(p);
  }
  return out;
}

struct Tally {
  long long cases = 0;
  std::optional<std::string> first_failure;
  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && !first_failure) first_failure = what;
  }
  void report(Report& r, const std::string& name) const {
    auto& c = r.add(name, !first_failure, std::to_string(cases) + " cases");
    c.order = static_cast<int>(cases);
    if (first_failure) c.first_mismatch = *first_failure;
  }
};

}  // namespace

std::vector<LabeledGP> hopf_samples(int n, unsigned seed) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  return samples_over(iota_labels(1, n), seed);
}

Report hopf_axiom_check(int n) {
  if (n < 1 || n > 4) throw ResourceLimit("Hopf axiom checks need 1 <= n <= 4");
  Report report;
  report.suite = "Hopf monoid axioms, n=" + std::to_string(n);
  const auto I = iota_labels(1, n);
  const auto samples = hopf_samples(n);

  Tally coassoc;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& p = samples[k];
    int assignments = 1;
    for (int i = 0; i < n; ++i) assignments *= 3;
    for (int code = 0; code < assignments; ++code) {
      std::vector<int> S1, S2, S12;
      for (int i = 0, c = code; i < n; ++i, c /= 3) {
        if (c % 3 == 0) S1.push_back(I[i]);
        if (c % 3 == 1) S2.push_back(I[i]);
        if (c % 3 != 2) S12.push_back(I[i]);
      }
      auto [a, b] = gp_coproduct(p, S12);
      auto [a1, a2] = gp_coproduct(a, S1);
      auto [c, e] = gp_coproduct(p, S1);
      auto [e1, e2] = gp_coproduct(e, S2);
      coassoc.record(a1 == c && a2 == e1 && b == e2,
                     "sample " + std::to_string(k) + " S1=" + labels_text(S1) + " S2=" + labels_text(S2));
    }
  }
  coassoc.report(report, "coassociativity");

  Tally bimonoid;
  for (unsigned amask = 0; amask < (1u << n); ++amask) {
    const auto A = subset_of(I, amask);
    const auto B = complement(I, A);
    const std::vector<std::pair<LabeledGP, LabeledGP>> pairs{
        {LabeledGP::permutahedron(A), B.empty() ? LabeledGP() : LabeledGP::simplex(B, B)},
        {A.empty() ? LabeledGP() : LabeledGP::simplex(A, A), LabeledGP::permutahedron(B)}};
    for (const auto& [p, q] : pairs) {
      const LabeledGP pq = gp_product(p, q);
      for (unsigned smask = 0; smask < (1u << n); ++smask) {
        const auto S = subset_of(I, smask);
        std::vector<int> SA, SB;
        std::set_intersection(S.begin(), S.end(), A.begin(), A.end(), std::back_inserter(SA));
        std::set_intersection(S.begin(), S.end(), B.begin(), B.end(), std::back_inserter(SB));
        auto [l, r] = gp_coproduct(pq, S);
        auto [pl, pr] = gp_coproduct(p, SA);
        auto [ql, qr] = gp_coproduct(q, SB);
        bimonoid.record(l == gp_product(pl, ql) && r == gp_product(pr, qr),
                        "A=" + labels_text(A) + " S=" + labels_text(S));
      }
    }
  }
  bimonoid.report(report, "coproduct of a product");

  Tally minkowski;
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    const auto& p = samples[k];
    const auto& q = samples[k + 1];
    const LabeledGP pq = gp_minkowski_sum(p, q);
    for (unsigned smask = 0; smask < (1u << n); ++smask) {
      const auto S = subset_of(I, smask);
      auto [l, r] = gp_coproduct(pq, S);
      auto [pl, pr] = gp_coproduct(p, S);
      auto [ql, qr] = gp_coproduct(q, S);
      const bool ok = l == (pl.is_unit() ? pl : gp_minkowski_sum(pl, ql)) &&
                      r == (pr.is_unit() ? pr : gp_minkowski_sum(pr, qr));
      minkowski.record(ok, "samples " + std::to_string(k) + "," + std::to_string(k + 1) + " S=" + labels_text(S));
    }
  }
  minkowski.report(report, "coproduct of a Minkowski sum");

  Tally natural;
  std::map<int, int> reverse, shift;
  for (int i = 1; i <= n; ++i) {
    reverse[i] = n + 1 - i;
    shift[i] = i + n;  // onto {n+1, ..., 2n}
  }
  for (const auto* sigma : {&reverse, &shift}) {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const LabeledGP moved = samples[k].relabeled(*sigma);
      for (unsigned smask = 0; smask < (1u << n); ++smask) {
        const auto S = subset_of(I, smask);
        std::vector<int> image;
        for (int l : S) image.push_back(sigma->at(l));
        auto [l, r] = gp_coproduct(samples[k], S);
        auto [ml, mr] = gp_coproduct(moved, image);
        natural.record(ml == l.relabeled(*sigma) && mr == r.relabeled(*sigma),
                       "sample " + std::to_string(k) + " S=" + labels_text(S));
      }
    }
  }
  natural.report(report, "naturality under relabeling");

  Tally translation;
  Point t(n);
  for (int i = 0; i < n; ++i) t[i] = Rational(i * i + 1, 2);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const LabeledGP moved(I, samples[k].polytope().translated(t));
    for (unsigned smask = 0; smask < (1u << n); ++smask) {
      const auto S = subset_of(I, smask);
      TensorWeights tw;
      auto [a, b] = gp_coproduct(moved, S);
      auto [c, e] = gp_coproduct(samples[k], S);
      add_tensor(tw, phi_labeled(LabeledClass::of(a)), phi_labeled(LabeledClass::of(b)), 1);
      add_tensor(tw, phi_labeled(LabeledClass::of(c)), phi_labeled(LabeledClass::of(e)), -1);
      translation.record(tw.empty(), "sample " + std::to_string(k) + " S=" + labels_text(S));
    }
  }
  translation.report(report, "translation relations map to zero");

  if (n <= 3) {
    Tally antipode, involution;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& p = samples[k];
      LabeledClass sum = LabeledClass::zero(I);
      for (unsigned smask = 0; smask < (1u << n); ++smask) {
        auto [l, r] = gp_coproduct(p, subset_of(I, smask));
        sum += class_product(antipode_class(LabeledClass::of(l)), LabeledClass::of(r));
      }
      antipode.record(phi_labeled(sum).empty(), "sample " + std::to_string(k));
      const LabeledClass x = LabeledClass::of(p);
      involution.record(phi_labeled(antipode_class(antipode_class(x))) == phi_labeled(x), "sample " + std::to_string(k));
    }
    antipode.report(report, "antipode axiom under Phi");
    involution.report(report, "s(s(x)) = x under Phi");
  }
  return report;
}

Report mc_coideal_check(int n, int trials) {
  if (n < 1 || n > 4) throw ResourceLimit("coideal checks need 1 <= n <= 4");
  Report report;
  report.suite = "valuation relations, n=" + std::to_string(n);
  const auto I = iota_labels(1, n);
  const auto samples = hopf_samples(n);
  const std::vector<int> extra{n + 1, n + 2};
  const LabeledGP segment = LabeledGP::permutahedron(extra);
  Tally coideal, ideal;
  int relations = 0;
  for (std::size_t k = 0; k < samples.size() && relations < trials; ++k) {
    const VPolytope& p = samples[k].polytope();
    for (int i = 0; i < n && relations < trials; ++i) {
      std::vector<Rational> form(n, Rational(0));
      form[i] = 1;
      Rational lo = p.vertices()[0][i], hi = lo;
      for (const auto& v : p.vertices()) {
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
      }
      if (lo == hi) continue;
      for (const Rational& c : std::vector<Rational>{(lo + hi) / 2, (2 * lo + hi) / 3}) {
        SliceResult pieces{p, p, p};
        try {
          pieces = slice(p, form, c);
        } catch (const InvalidArgument&) {
          continue;
        }
        // m = [p] - [le] - [ge] + [eq], kept as separate GP terms.
        const std::vector<std::pair<VPolytope, Rational>> terms{
            {p, 1}, {pieces.le, -1}, {pieces.ge, -1}, {pieces.eq, 1}};
        ++relations;
        const std::string where = "sample " + std::to_string(k) + " x" + std::to_string(i + 1) + "=" + to_string(c);
        for (unsigned smask = 0; smask < (1u << n); ++smask) {
          const auto S = subset_of(I, smask);
          TensorWeights tw;
          for (const auto& [q, sign] : terms) {
            auto [a, b] = gp_coproduct(LabeledGP(I, q), S);
            add_tensor(tw, phi_labeled(LabeledClass::of(a)), phi_labeled(LabeledClass::of(b)), sign);
          }
          coideal.record(tw.empty(), where + " S=" + labels_text(S));
        }
        LabeledClass prod = LabeledClass::zero(iota_labels(1, n + 2));
        for (const auto& [q, sign] : terms) {
          LabeledClass term = class_product(LabeledClass::of(LabeledGP(I, q)), LabeledClass::of(segment));
          term *= sign;
          prod += term;
        }
        ideal.record(phi_labeled(prod).empty(), where);
        if (relations >= trials) break;
      }
    }
  }
  coideal.report(report, "coproducts of valuation relations vanish in Phi x Phi");
  ideal.report(report, "products with valuation relations vanish under Phi");
  report.add("relations generated", relations >= trials, std::to_string(relations) + " of " + std::to_string(trials));
  return report;
}

Report two_one_monoid_check(int n) {
  if (n < 2 || n > 4) throw ResourceLimit("(2,1)-monoid checks need 2 <= n <= 4");
  Report report;
  report.suite = "(2,1)-monoid identities, n=" + std::to_string(n);
  const auto I = iota_labels(1, n);
  Tally product, coproduct;
  for (unsigned amask = 1; amask + 1 < (1u << n); ++amask) {
    const auto A = subset_of(I, amask);
    const auto B = complement(I, A);
    const auto ps = samples_over(A, 11 + amask);
    const auto qs = samples_over(B, 23 + amask);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto& p1 = ps[i];
      const auto& p2 = ps[(i * 7 + 3) % ps.size()];
      const auto& q1 = qs[i % qs.size()];
      const auto& q2 = qs[(i * 5 + 1) % qs.size()];
      const bool ok = gp_product(gp_minkowski_sum(p1, p2), gp_minkowski_sum(q1, q2)) ==
                      gp_minkowski_sum(gp_product(p1, q1), gp_product(p2, q2));
      product.record(ok, "A=" + labels_text(A) + " pair " + std::to_string(i));
    }
  }
  product.report(report, "(p1 + p2) x (q1 + q2) = p1 x q1 + p2 x q2");
  const auto samples = hopf_samples(n);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& p1 = samples[k];
    const auto& p2 = samples[(k * 3 + 1) % samples.size()];
    const LabeledGP sum = gp_minkowski_sum(p1, p2);
    for (unsigned smask = 1; smask + 1 < (1u << n); ++smask) {
      const auto S = subset_of(I, smask);
      auto [l, r] = gp_coproduct(sum, S);
      auto [l1, r1] = gp_coproduct(p1, S);
      auto [l2, r2] = gp_coproduct(p2, S);
      coproduct.record(l == gp_minkowski_sum(l1, l2) && r == gp_minkowski_sum(r1, r2),
                       "sample " + std::to_string(k) + " S=" + labels_text(S));
    }
  }
  coproduct.report(report, "coproduct of p1 + p2 is the sum of coproducts");
  return report;
}

}  // namespace polyalg
