#include "polyalg/spectra.hpp"

#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "polyalg/gfseries.hpp"
#include "polyalg/linalg.hpp"
#include "polyalg/titsalgebra.hpp"

namespace polyalg {

std::string_view method_name(EtaMethod method) {
  switch (method) {
    case EtaMethod::MobiusFormula: return "mobius_formula";
    case EtaMethod::PermutationCount: return "permutation_count";
    case EtaMethod::IdempotentRank: return "idempotent_rank";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// EtaTable

EtaTable::EtaTable(ArrangementPtr arr, EtaMethod method)
    : arr_(std::move(arr)), method_(method),
      values_(arr_->num_flats(), std::vector<long long>(arr_->d() + 1, 0)) {}

long long EtaTable::value(int flat, int r) const {
  if (r < 0 || r > max_grade()) return 0;
  return values_.at(flat)[r];
}

void EtaTable::set(int flat, int r, long long value) {
  if (r < 0 || r > max_grade()) throw InvalidArgument("grade out of range");
  values_.at(flat)[r] = value;
}

RatPoly EtaTable::polynomial(int flat) const {
  std::vector<Rational> c;
  for (long long v : values_.at(flat)) c.emplace_back(static_cast<long>(v));
  return RatPoly(std::move(c));
}

std::vector<long long> EtaTable::grade_sums() const {
  std::vector<long long> out(max_grade() + 1, 0);
  for (const auto& row : values_)
    for (std::size_t r = 0; r < row.size(); ++r) out[r] += row[r];
  return out;
}

std::vector<long long> EtaTable::grade_sums_of_dim(int k) const {
  std::vector<long long> out(max_grade() + 1, 0);
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (arr_->flat_dim(static_cast<int>(x)) != k) continue;
    for (std::size_t r = 0; r < values_[x].size(); ++r) out[r] += values_[x][r];
  }
  return out;
}

bool EtaTable::same_values(const EtaTable& o) const {
  return arr_->kind() == o.arr_->kind() && values_ == o.values_;
}

std::string EtaTable::first_difference(const EtaTable& o) const {
  if (!(arr_->kind() == o.arr_->kind())) return "different arrangements";
  for (std::size_t x = 0; x < values_.size(); ++x)
    for (std::size_t r = 0; r < values_[x].size(); ++r)
      if (values_[x][r] != o.values_[x][r])
        return arr_->format_flat(static_cast<int>(x)) + " r=" + std::to_string(r) + ": " +
               std::to_string(values_[x][r]) + " vs " + std::to_string(o.values_[x][r]);
  return {};
}

// ---------------------------------------------------------------------------
// Mobius formula

namespace {

long long to_count(const Rational& c, const char* what) {
  if (c.get_den() != 1 || c < 0 || !c.get_num().fits_slong_p())
    throw std::logic_error(std::string(what) + " produced a non-count coefficient " + to_string(c));
  return c.get_num().get_si();
}

int coordinate_flat(const Arrangement& arr, Block S) {
  const int d = arr.d();
  std::vector<Block> blocks;
  for (int i = 0; i < d; ++i)
    if (!(S >> i & 1u)) blocks.push_back(Block{1} << i);
  return arr.flat_index(arr.canonical_flat(std::move(blocks), S | (S << d)));
}

int braid_flat(const Arrangement& arr, const std::vector<Block>& blocks) {
  return arr.flat_index(arr.canonical_flat(blocks, 0));
}

std::vector<int> elements_of(Block b) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1u) out.push_back(i + 1);
  return out;
}

}  // namespace

std::vector<RatPoly> flat_h_by_products(const Arrangement& arr) {
  std::vector<RatPoly> out;
  const RatPoly one_plus_z(std::vector<Rational>{1, 1});
  for (const auto& y : arr.flats()) {
    RatPoly h(1);
    for (Block b : y.blocks) h *= eulerian_A(std::popcount(b));
    const int m = std::popcount(y.zero) / 2;
    if (arr.type() == ArrangementType::TypeB) {
      h *= eulerian_B(m);
    } else if (arr.type() == ArrangementType::Coordinate) {
      for (int i = 0; i < m; ++i) h *= one_plus_z;
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<RatPoly> flat_h_by_geometry(const ArrangementPtr& arr) {
  FaceLattice lattice(zonotope_of(arr));
  std::vector<RatPoly> out(arr->num_flats());
  std::vector<char> seen(arr->num_flats(), 0);
  for (std::size_t f = 0; f < arr->num_faces(); ++f) {
    const int y = arr->support(static_cast<int>(f));
    if (seen[y]) continue;
    seen[y] = 1;
    out[y] = h_polynomial_of_face(lattice, lattice.face_of(static_cast<int>(f)));
  }
  return out;
}

EtaTable eta_mobius(const ArrangementPtr& arr) {
  const auto by_products = flat_h_by_products(*arr);
  const auto by_geometry = flat_h_by_geometry(arr);
  for (std::size_t y = 0; y < by_products.size(); ++y)
    if (!(by_products[y] == by_geometry[y]))
      throw std::logic_error("h-polynomial sources disagree at flat " + arr->format_flat(static_cast<int>(y)) + ": " +
                             by_products[y].to_string() + " vs " + by_geometry[y].to_string());
  EtaTable table(arr, EtaMethod::MobiusFormula);
  const int n = static_cast<int>(arr->num_flats());
  for (int x = 0; x < n; ++x) {
    RatPoly eta;
    for (int y = 0; y < n; ++y)
      if (arr->leq(x, y)) eta += by_products[y] * Rational(static_cast<long>(arr->mobius(x, y)));
    if (eta.degree() > arr->d()) throw std::logic_error("eta polynomial exceeds degree d");
    for (int r = 0; r <= eta.degree(); ++r) table.set(x, r, to_count(eta.coeff(r), "Mobius formula"));
  }
  return table;
}

long long eta_mobius(const ArrangementPtr& arr, int flat, int r) { return eta_mobius(arr).value(flat, r); }

// ---------------------------------------------------------------------------
// Permutation counts

EtaTable eta_permutations(const ArrangementPtr& arr) {
  EtaTable table(arr, EtaMethod::PermutationCount);
  const int d = arr->d();
  auto bump = [&](int x, int r) { table.set(x, r, table.value(x, r) + 1); };
  switch (arr->type()) {
    case ArrangementType::BraidA:
      for_each_permutation(d, [&](const Permutation& s) {
        auto st = stats(s);
        bump(arr->flat_index(st.supp), st.exc);
      });
      break;
    case ArrangementType::TypeB:
      for_each_signed_permutation(d, [&](const SignedPermutation& s) {
        auto st = stats_signed(s);
        bump(arr->flat_index(st.supp), st.exc_b);
      });
      break;
    case ArrangementType::Coordinate:
      for (Block neg = 0; neg < (Block{1} << d); ++neg) bump(coordinate_flat(*arr, neg), std::popcount(neg));
      break;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Spanning sets and idempotent ranks

namespace {

const EulerianFamily& family_for(const ArrangementPtr& arr) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, EulerianFamily> cache;
  std::lock_guard lock(mutex);
  const std::pair<int, int> key{static_cast<int>(arr->type()), arr->d()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  switch (arr->type()) {
    case ArrangementType::BraidA:
      return cache.emplace(key, adams_family(arr->d())).first->second;
    case ArrangementType::Coordinate:
      return cache.emplace(key, gamma_family(arr->d(), Rational(2)).second).first->second;
    case ArrangementType::TypeB:
      break;
  }
  throw InvalidArgument("no Eulerian family for type B arrangements");
}

PiElement log_simplex(const ArrangementPtr& arr, const std::vector<int>& S) { return log_class(simplex(arr, S)); }

}  // namespace

std::vector<VPolytope> xi1_generators(const ArrangementPtr& arr) {
  std::vector<VPolytope> out;
  const int d = arr->d();
  switch (arr->type()) {
    case ArrangementType::BraidA:
      for (int k = 2; k <= d; ++k)
        for (Block S = 1; S < (Block{1} << d); ++S)
          if (std::popcount(S) == k) out.push_back(simplex(arr, elements_of(S)));
      break;
    case ArrangementType::Coordinate:
      for (int i = 1; i <= d; ++i) out.push_back(simplex0(arr, {i}));
      break;
    case ArrangementType::TypeB:
      for (const auto& g : b_generators(d).generators) out.push_back(g.poly);
      break;
  }
  return out;
}

XiBasis xi_basis(const ArrangementPtr& arr, int r) {
  const int d = arr->d();
  XiBasis basis;
  basis.r = r;
  if (r < 0 || r > d) return basis;
  const long long target = to_count(flat_h_by_products(*arr)[arr->bottom()].coeff(r), "h-vector");
  EchelonBasis echelon;
  auto offer = [&](PiElement x) {
    ConeWeights w = phi(x);
    if (!echelon.insert(w.to_vector())) return false;
    basis.elements.push_back(std::move(x));
    basis.phis.push_back(std::move(w));
    return true;
  };
  auto done = [&] { return static_cast<long long>(echelon.rank()) >= target; };
  if (r == 0) {
    offer(PiElement::one(arr));
  } else {
    // Preferred candidates first.
    if (arr->type() == ArrangementType::BraidA && d <= enumeration_bounds().max_symmetric) {
      PermFilter filter;
      filter.exc = r;
      for (const auto& sigma : enumerate_symmetric(d, filter)) {
        if (done()) break;
        offer(x_sigma_factor(sigma));
      }
    } else if (arr->type() == ArrangementType::Coordinate) {
      for (Block S = 0; S < (Block{1} << d) && !done(); ++S)
        if (std::popcount(S) == r) offer(y_class(d, S));
    }
    // Then all products of r generator logs.
    std::vector<PiElement> logs;
    for (const auto& g : xi1_generators(arr)) logs.push_back(log_class(g));
    std::vector<int> pick;
    std::function<void(int)> walk = [&](int start) {
      if (done()) return;
      if (static_cast<int>(pick.size()) == r) {
        PiElement x = PiElement::one(arr);
        for (int i : pick) x = x * logs[i];
        offer(std::move(x));
        return;
      }
      for (int i = start; i < static_cast<int>(logs.size()) && !done(); ++i) {
        pick.push_back(i);
        walk(i);
        pick.pop_back();
      }
    };
    walk(0);
  }
  if (static_cast<long long>(echelon.rank()) != target)
    throw std::logic_error("spanning set of Xi_" + std::to_string(r) + " has rank " + std::to_string(echelon.rank()) +
                           ", expected " + std::to_string(target));
  return basis;
}

EtaTable eta_idempotent_rank(const ArrangementPtr& arr) {
  if (arr->type() == ArrangementType::TypeB) throw InvalidArgument("idempotent ranks need a braid or coordinate arrangement");
  if (arr->d() > 4) throw ResourceLimit("idempotent ranks are limited to d <= 4");
  const auto& family = family_for(arr);
  EtaTable table(arr, EtaMethod::IdempotentRank);
  for (int r = 0; r <= arr->d(); ++r) {
    const XiBasis basis = xi_basis(arr, r);
    for (const auto& [x, e] : family.elements) {
      EchelonBasis echelon;
      for (const auto& w : basis.phis) echelon.insert(phi_act(w, e).to_vector());
      table.set(x, r, static_cast<long long>(echelon.rank()));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// x_sigma

PiElement x_sigma_factor(const Permutation& sigma) {
  auto arr = Arrangement::braid(sigma.size());
  const IncreasingForest forest = forest_of(sigma);
  PiElement out = PiElement::one(arr);
  for (int leaf : forest.leaves()) out = out * log_simplex(arr, forest.path_to_root(leaf));
  return out;
}

PiElement x_sigma(const Permutation& sigma) {
  auto arr = Arrangement::braid(sigma.size());
  const int x = arr->flat_index(stats(sigma).supp);
  return module_act(x_sigma_factor(sigma), family_for(arr).elements.at(x));
}

PiElement x_flat(const ArrangementPtr& arr, int flat) {
  if (arr->type() != ArrangementType::BraidA) throw InvalidArgument("x_X is defined on braid arrangements");
  PiElement out = PiElement::one(arr);
  for (Block b : arr->flat(flat).blocks) {
    auto elems = elements_of(b);
    for (std::size_t j = 1; j < elems.size(); ++j) out = out * log_simplex(arr, {elems[0], elems[j]});
  }
  return out;
}

ConjectureReport conjecture_check(int d) {
  auto arr = Arrangement::braid(d);
  const auto& family = family_for(arr);
  const EtaTable eta = eta_mobius(arr);
  ConjectureReport out;
  out.propositions.suite = "x_sigma extremal cases, d=" + std::to_string(d);
  out.conjecture.suite = "x_sigma conjecture, d=" + std::to_string(d);

  // Extremal case r = 1: log[Delta_J] . E_{X_J}.
  std::vector<VPolytope> gens = xi1_generators(arr);
  std::vector<ConeWeights> gen_phis;
  for (const auto& g : gens) gen_phis.push_back(phi(log_class(g)));
  std::vector<int> rows;
  for (std::size_t f = 0; f < arr->num_faces(); ++f) rows.push_back(static_cast<int>(f));
  auto coordinates = [&](const ConeWeights& w) {
    Matrix m(rows.size(), std::vector<Rational>(gens.size()));
    std::vector<Rational> b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) m[i][j] = gen_phis[j].weight(rows[i]);
      b[i] = w.weight(rows[i]);
    }
    return solve(std::move(m), b, gens.size());
  };
  EchelonBasis r1;
  bool r1_ok = true;
  std::string r1_detail;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Block mask = 0;
    for (const auto& v : gens[j].vertices())
      for (int i = 0; i < d; ++i)
        if (v[i] == 1) mask |= Block{1} << i;
    std::vector<Block> blocks{mask};
    for (int i = 0; i < d; ++i)
      if (!(mask >> i & 1u)) blocks.push_back(Block{1} << i);
    const int xj = braid_flat(*arr, blocks);
    const PiElement x = module_act(log_class(gens[j]), family.elements.at(xj));
    const ConeWeights w = phi(x);
    auto sol = coordinates(w);
    PermFilter filter;
    filter.supp = arr->flat(xj);
    filter.exc = 1;
    auto sigmas = enumerate_symmetric(d, filter);
    bool eigen = true;
    for (const auto& [y, e] : family.elements) {
      ConeWeights acted = phi_act(w, e);
      if (!(acted == (y == xj ? w : ConeWeights(arr)))) eigen = false;
    }
    const bool ok = !w.is_zero() && sol.consistent && sol.unique && sol.solution[j] == 1 && sigmas.size() == 1 &&
                    phi(x_sigma(sigmas[0])) == w && eigen && r1.insert(w.to_vector());
    if (!ok && r1_ok) r1_detail = "fails at J=" + arr->format_flat(xj);
    r1_ok = r1_ok && ok;
  }
  const long long h1 = to_count(flat_h_by_products(*arr)[arr->bottom()].coeff(1), "h-vector");
  out.propositions.add("r=1: log[Delta_J].E_{X_J} nonzero, unit coefficient, equal to x_sigma, basis of Xi_1",
                       r1_ok && static_cast<long long>(r1.rank()) == h1,
                       r1_ok ? "rank " + std::to_string(r1.rank()) + " = h_1" : r1_detail);

  // Extremal case r = d - k: x_X.
  bool top_ok = true;
  std::string top_detail;
  for (int xf = 0; xf < static_cast<int>(arr->num_flats()); ++xf) {
    const int r = d - arr->flat_dim(xf);
    const PiElement x = x_flat(arr, xf);
    const ConeWeights w = phi(x);
    const bool graded = phi(dilate(x, Rational(2))) == w * power(Rational(2), r);
    const bool fixed = phi(module_act(x, family.elements.at(xf))) == w;
    const bool ok = !w.is_zero() && graded && fixed && eta.value(xf, r) == 1;
    if (!ok && top_ok) top_detail = "fails at X=" + arr->format_flat(xf);
    top_ok = top_ok && ok;
  }
  out.propositions.add("r=d-k: x_X nonzero, of degree d-k, fixed by E_X, eigenspace 1-dimensional", top_ok,
                       top_detail);

  // Full conjecture: independence per (X, r).
  std::map<std::pair<int, int>, std::vector<Permutation>> groups;
  for_each_permutation(d, [&](const Permutation& s) {
    auto st = stats(s);
    groups[{arr->flat_index(st.supp), st.exc}].push_back(s);
  });
  for (int xf = 0; xf < static_cast<int>(arr->num_flats()); ++xf) {
    for (int r = 0; r <= d; ++r) {
      auto it = groups.find({xf, r});
      const std::size_t count = it == groups.end() ? 0 : it->second.size();
      if (count == 0 && eta.value(xf, r) == 0) continue;
      EchelonBasis echelon;
      bool fixed = true;
      if (it != groups.end()) {
        for (const auto& s : it->second) {
          const ConeWeights w = phi_act(phi(x_sigma_factor(s)), family.elements.at(xf));
          if (!(phi_act(w, family.elements.at(xf)) == w)) fixed = false;
          echelon.insert(w.to_vector());
        }
      }
      const bool ok = fixed && echelon.rank() == count && static_cast<long long>(count) == eta.value(xf, r);
      out.conjecture.add("X=" + arr->format_flat(xf) + " r=" + std::to_string(r), ok,
                         std::to_string(count) + " elements, rank " + std::to_string(echelon.rank()) + ", eta " +
                             std::to_string(eta.value(xf, r)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cube

PiElement y_class(int d, Block S) {
  auto arr = Arrangement::coordinate(d);
  PiElement out = PiElement::one(arr);
  for (int i : elements_of(S)) out = out * log_class(simplex0(arr, {i}));
  return out;
}

Report y_basis_cube(int d) {
  if (d > 5) throw ResourceLimit("the cube basis check is limited to d <= 5");
  auto arr = Arrangement::coordinate(d);
  const auto& family = family_for(arr);
  Report report;
  report.suite = "cube eigenbasis, d=" + std::to_string(d);
  EchelonBasis all;
  bool nonzero = true, graded = true, fixed = true, others = true, formula = true, face_form = true;
  for (Block S = 0; S < (Block{1} << d); ++S) {
    const int k = std::popcount(S);
    const int xs = coordinate_flat(*arr, S);
    const PiElement y = y_class(d, S);
    const ConeWeights w = phi(y);
    nonzero = nonzero && !w.is_zero();
    graded = graded && phi(dilate(y, Rational(2))) == w * power(Rational(2), k);
    fixed = fixed && phi(module_act(y, family.elements.at(xs))) == w;
    for (const auto& [x, e] : family.elements)
      if (x != xs && !phi_act(w, e).is_zero()) others = false;
    // sum over T subset S of (-1)^{|S-T|} [c_{X_T}]
    PiElement alt(arr);
    for (Block T = S;; T = (T - 1) & S) {
      std::vector<Point> pts;
      for (Block U = T;; U = (U - 1) & T) {
        Point p(d, Rational(0));
        for (int i : elements_of(U)) p[i - 1] = 1;
        pts.push_back(std::move(p));
        if (U == 0) break;
      }
      alt.add_term(VPolytope::from_points(arr, std::move(pts)), std::popcount(S & ~T) % 2 ? -1 : 1);
      if (T == 0) break;
    }
    formula = formula && alt == y && phi(alt) == w;
    std::vector<Point> cs;
    for (Block U = S;; U = (U - 1) & S) {
      Point p(d, Rational(0));
      for (int i : elements_of(U)) p[i - 1] = 1;
      cs.push_back(std::move(p));
      if (U == 0) break;
    }
    const PiElement c = PiElement::of(VPolytope::from_points(arr, std::move(cs)));
    face_form = face_form && phi(module_act(c, family.elements.at(xs))) == w;
    all.insert(w.to_vector());
  }
  report.add("y_S nonzero", nonzero);
  report.add("y_S in Xi_|S|", graded, "delta_2 y_S = 2^|S| y_S");
  report.add("y_S . E_{X_S} = y_S", fixed);
  report.add("y_S . E_X = 0 for X != X_S", others);
  report.add("y_S = sum (-1)^{|S-T|} [c_{X_T}]", formula);
  report.add("y_S = [c_{X_S}] . E_{X_S}", face_form);
  report.add("2^d elements independent", all.rank() == (std::size_t{1} << d),
             "rank " + std::to_string(all.rank()));
  return report;
}

// ---------------------------------------------------------------------------
// Type-B generators and decompositions

std::vector<std::vector<int>> special_sets(int d) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= d; ++k) {
    for (Block A = 1; A < (Block{1} << d); ++A) {
      if (std::popcount(A) != k) continue;
      const auto abs = elements_of(A);
      for (Block signs = 0; signs < (Block{1} << (k - 1)); ++signs) {
        std::vector<int> S{abs[0]};
        for (int j = 1; j < k; ++j) S.push_back(signs >> (j - 1) & 1u ? -abs[j] : abs[j]);
        out.push_back(std::move(S));
      }
    }
  }
  return out;
}

std::string GeneratorB::name() const {
  std::string s = with_origin ? "Delta0_{" : "Delta_{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i]);
  return s + "}";
}

int GeneratorFamilyB::full_dimensional() const {
  int n = 0;
  for (const auto& g : generators) n += g.poly.dim() == arr->d();
  return n;
}

GeneratorFamilyB b_generators(int d) {
  if (d < 1 || d > 4) throw ResourceLimit("type-B generators are limited to 1 <= d <= 4");
  GeneratorFamilyB fam;
  fam.arr = Arrangement::type_b(d);
  fam.sets = special_sets(d);
  for (const auto& S : fam.sets)
    if (S.size() >= 2) fam.generators.push_back({S, false, simplex(fam.arr, S)});
  for (const auto& S : fam.sets) fam.generators.push_back({S, true, simplex0(fam.arr, S)});
  return fam;
}

namespace {

Matrix psi1_matrix(const std::vector<ConeWeights>& columns, const std::vector<int>& rows) {
  Matrix m(rows.size(), std::vector<Rational>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) m[i][j] = columns[j].weight(rows[i]);
  return m;
}

Decomposition decompose(const VPolytope& p, const std::vector<VPolytope>& gens, std::vector<std::string> names) {
  const auto& arr = p.arrangement();
  const auto rows = arr->faces_of_dim(arr->d() - 1);
  std::vector<ConeWeights> columns;
  for (const auto& g : gens) columns.push_back(psi1(g));
  const ConeWeights target = psi1(p);
  std::vector<Rational> b;
  for (int f : rows) b.push_back(target.weight(f));
  auto sol = solve(psi1_matrix(columns, rows), b, gens.size());
  if (!sol.consistent) throw std::logic_error("decomposition system is inconsistent");
  if (!sol.unique) throw std::logic_error("decomposition is not unique");
  Decomposition out;
  out.names = std::move(names);
  out.coeffs = std::move(sol.solution);
  out.reconstructed = reconstructs(p, gens, out.coeffs);
  return out;
}

}  // namespace

Report check_generator_family(const GeneratorFamilyB& family) {
  const int d = family.arr->d();
  Report report;
  report.suite = "type-B generators, d=" + std::to_string(d);
  long long pow3 = 1;
  for (int i = 0; i < d; ++i) pow3 *= 3;
  const long long expected = pow3 - d - 1;
  report.add("non-point members = 3^d - d - 1", static_cast<long long>(family.generators.size()) == expected,
             std::to_string(family.generators.size()) + " vs " + std::to_string(expected));
  report.add("full-dimensional members = 2^(d-1)", family.full_dimensional() == (1 << (d - 1)),
             std::to_string(family.full_dimensional()));
  bool special = true;
  for (const auto& S : family.sets) {
    int best = S[0];
    for (int i : S) {
      if (std::abs(i) < std::abs(best)) best = i;
      for (int j : S)
        if (i == -j) special = false;
    }
    if (best < 0) special = false;
  }
  report.add("every set is special", special);
  bool same = true;
  std::vector<ConeWeights> columns;
  for (const auto& g : family.generators) {
    columns.push_back(psi1(g.poly));
    if (!(columns.back() == phi(log_class(g.poly)))) same = false;
  }
  report.add("Psi_1 from edges equals Phi(log)", same);
  const auto rows = family.arr->faces_of_dim(d - 1);
  const std::size_t rk = rank(psi1_matrix(columns, rows));
  report.add("Psi_1 images have full column rank", rk == family.generators.size(),
             "rank " + std::to_string(rk) + " of " + std::to_string(family.generators.size()));
  return report;
}

std::map<std::string, Rational> Decomposition::nonzero() const {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (coeffs[i] != 0) out.emplace(names[i], coeffs[i]);
  return out;
}

Decomposition b_decompose(const VPolytope& p, const GeneratorFamilyB& family) {
  if (!(p.arrangement()->kind() == family.arr->kind()))
    throw InvalidArgument("polytope and generator family belong to different arrangements");
  std::vector<VPolytope> gens;
  std::vector<std::string> names;
  for (const auto& g : family.generators) {
    gens.push_back(g.poly);
    names.push_back(g.name());
  }
  return decompose(p, gens, std::move(names));
}

Decomposition b_decompose(const VPolytope& p) {
  if (p.arrangement()->type() != ArrangementType::TypeB) throw InvalidArgument("b_decompose needs a type-B deformation");
  static std::mutex mutex;
  static std::map<int, GeneratorFamilyB> cache;
  const GeneratorFamilyB* family = nullptr;
  {
    std::lock_guard lock(mutex);
    const int d = p.arrangement()->d();
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, b_generators(d)).first;
    family = &it->second;
  }
  return b_decompose(p, *family);
}

Decomposition a_decompose(const VPolytope& p) {
  const auto& arr = p.arrangement();
  if (arr->type() != ArrangementType::BraidA) throw InvalidArgument("a_decompose needs a braid deformation");
  if (arr->d() > 5) throw ResourceLimit("a_decompose is limited to d <= 5");
  std::vector<VPolytope> gens = xi1_generators(arr);
  std::vector<std::string> names;
  for (const auto& g : gens) {
    Block mask = 0;
    for (const auto& v : g.vertices())
      for (int i = 0; i < arr->d(); ++i)
        if (v[i] == 1) mask |= Block{1} << i;
    std::string s = "Delta_{";
    for (int i : elements_of(mask)) s += (s.back() == '{' ? "" : ",") + std::to_string(i);
    names.push_back(s + "}");
  }
  return decompose(p, gens, std::move(names));
}

bool reconstructs(const VPolytope& p, const std::vector<VPolytope>& gens, const std::vector<Rational>& coeffs) {
  if (gens.size() != coeffs.size()) throw InvalidArgument("one coefficient per generator expected");
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Rational D(den);
  VPolytope lhs = dilate(p, D);
  VPolytope rhs = VPolytope::point(p.arrangement());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (coeffs[i] > 0) rhs = minkowski_sum(rhs, dilate(gens[i], coeffs[i] * D));
    else if (coeffs[i] < 0) lhs = minkowski_sum(lhs, dilate(gens[i], -coeffs[i] * D));
  }
  return lhs.is_translate_of(rhs);
}

}  // namespace polyalg
