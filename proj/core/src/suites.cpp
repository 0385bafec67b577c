#include "polyalg/suites.hpp"

#include <optional>
#include <random>
#include <string>

#include "polyalg/gfseries.hpp"
#include "polyalg/hopfgp.hpp"
#include "polyalg/permstat.hpp"
#include "polyalg/polyclass.hpp"
#include "polyalg/titsalgebra.hpp"

namespace polyalg {

namespace {

std::string dstr(int d) { return ", d=" + std::to_string(d); }

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

// Phi computed on the polytope as given, bypassing the normalized cache.
ConeWeights phi_direct(const VPolytope& p) {
  const auto& arr = *p.arrangement();
  ConeWeights out(p.arrangement());
  FaceLattice lattice(p);
  for (int f = 0; f < static_cast<int>(arr.num_faces()); ++f) {
    const int g = lattice.face_of(f);
    if (lattice.dim(g) == arr.d() - arr.face_dim(f)) out.add(f, lattice.volume(g));
  }
  return out;
}

std::pair<Rational, Rational> form_range(const VPolytope& p, const std::vector<Rational>& form) {
  Rational lo = 0, hi = 0;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rational s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += form[k] * v[k];
    if (first || s < lo) lo = s;
    if (first || s > hi) hi = s;
    first = false;
  }
  return {lo, hi};
}

// Deformations used as samples: the zonotope, Xi_1 generators and random
// Minkowski sums of generators.
std::vector<VPolytope> sample_polytopes(const ArrangementPtr& arr, unsigned seed, int random_sums) {
  std::vector<VPolytope> out{zonotope_of(arr)};
  std::vector<VPolytope> gens;
  for (const auto& g : xi1_generators(arr))
    if (g.dim() > 0) gens.push_back(g);
  for (const auto& g : gens) out.push_back(g);
  std::mt19937 rng(seed);
  for (int k = 0; k < random_sums && !gens.empty(); ++k) {
    VPolytope p = gens[rng() % gens.size()];
    const int extra = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < extra; ++j) p = minkowski_sum(p, gens[rng() % gens.size()]);
    out.push_back(p);
  }
  return out;
}

Point random_translation(std::mt19937& rng, int d) {
  Point t(d);
  for (auto& c : t) c = ratio(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 3));
  return t;
}

}  // namespace

Report verify_brenti(ArrangementType type, int d) {
  Report report;
  if (type == ArrangementType::BraidA) {
    report.suite = "brenti A" + dstr(d);
    const RatPoly h = h_polynomial(permutahedron(d));
    const RatPoly rec = eulerian_A(d);
    report.add("h(pi_d) = A_d(z) by recurrence", h == rec, h.to_string() + " vs " + rec.to_string());
    const RatPoly en = eulerian_A_enumerated(d);
    report.add("A_d(z) by recurrence = descent enumeration", rec == en, en.to_string());
  } else if (type == ArrangementType::TypeB) {
    report.suite = "brenti B" + dstr(d);
    const RatPoly h = h_polynomial(typeB_permutahedron(d));
    const RatPoly rec = eulerian_B(d);
    report.add("h(pi^B_d) = B_d(z) by recurrence", h == rec, h.to_string() + " vs " + rec.to_string());
    const RatPoly en = eulerian_B_enumerated(d);
    report.add("B_d(z) by recurrence = descent enumeration", rec == en, en.to_string());
  } else {
    throw InvalidArgument("brenti checks need type A or B");
  }
  return report;
}

EtaCheck verify_eta(const ArrangementPtr& arr, bool with_idempotents) {
  EtaCheck out;
  const int d = arr->d();
  out.report.suite = std::string("eta ") + type_letter(arr->type()) + dstr(d);
  out.tables.reserve(3);  // references below must survive the third push
  out.tables.push_back(eta_mobius(arr));
  out.tables.push_back(eta_permutations(arr));
  const EtaTable& mob = out.tables[0];
  const EtaTable& perm = out.tables[1];
  out.report.add("mobius formula = permutation counts", mob.same_values(perm), mob.first_difference(perm));
  if (with_idempotents && arr->type() != ArrangementType::TypeB && d <= 4) {
    out.tables.push_back(eta_idempotent_rank(arr));
    const EtaTable& idem = out.tables.back();
    out.report.add("mobius formula = idempotent ranks", mob.same_values(idem), mob.first_difference(idem));
  }

  // sum over flats of eta in degree r is h_r of the zonotope
  const RatPoly h = h_polynomial(zonotope_of(arr));
  const auto sums = mob.grade_sums();
  bool sums_ok = true;
  for (int r = 0; r <= d; ++r) sums_ok = sums_ok && Rational(static_cast<long>(sums[r])) == h.coeff(r);
  out.report.add("grade sums = h-vector of the zonotope", sums_ok);

  if (arr->type() == ArrangementType::TypeB) {
    const long long want = 1LL << (d - 1);
    out.report.add("eta_bottom(Xi_1) = 2^(d-1)", mob.value(arr->bottom(), 1) == want && perm.value(arr->bottom(), 1) == want,
                   std::to_string(mob.value(arr->bottom(), 1)));
  }
  if (arr->type() == ArrangementType::Coordinate) {
    bool ok = true;
    std::string where;
    for (const auto& table : out.tables)
      for (int x = 0; x < static_cast<int>(arr->num_flats()); ++x)
        for (int r = 0; r <= d; ++r) {
          const long long want = r == d - arr->flat_dim(x) ? 1 : 0;
          if (table.value(x, r) != want && ok) {
            ok = false;
            where = std::string(method_name(table.method())) + " at " + arr->format_flat(x) + " r=" + std::to_string(r);
          }
        }
    out.report.add("eta_{X_S}(Xi_r) = [r = |S|]", ok, where);
  }
  return out;
}

Report verify_idempotents(int d) {
  Report report;
  report.suite = "eulerian idempotents" + dstr(d);
  const std::vector<Rational> ts{2, 3, 5, -1};

  Report adams = check_family(adams_family(d));
  adams.suite = "adams";
  report.merge(adams);
  const auto family = adams_family(d);
  for (const auto& t : ts) {
    const TitsElement w = adams_element(d, t);
    report.add("adams t=" + t.get_str() + " is characteristic", is_characteristic(w, t));
    report.add("adams t=" + t.get_str() + " = sum t^dim E_X", decomposes_characteristic(w, family, t));
  }

  Report gamma = check_family(gamma_family(d, ts.front()).second);
  gamma.suite = "first orthant";
  report.merge(gamma);
  for (const auto& t : ts) {
    const auto [w, fam] = gamma_family(d, t);
    report.add("gamma t=" + t.get_str() + " is characteristic", is_characteristic(w, t));
    report.add("gamma t=" + t.get_str() + " = sum t^dim E_X", decomposes_characteristic(w, fam, t));
  }
  return report;
}

Report verify_conjecture(int d) {
  const ConjectureReport c = conjecture_check(d);
  Report report;
  report.suite = "x_sigma" + dstr(d);
  report.merge(c.propositions);
  report.merge(c.conjecture);
  return report;
}

Report verify_cube(int d) {
  Report report;
  report.suite = "cube" + dstr(d);
  report.merge(y_basis_cube(d));
  report.merge(verify_eta(Arrangement::coordinate(d), d <= 4).report);
  return report;
}

Report verify_b_generators(int d, unsigned seed, int random_count) {
  Report report;
  report.suite = "type-B generators" + dstr(d);
  const GeneratorFamilyB family = b_generators(d);
  report.merge(check_generator_family(family));

  const VPolytope pib = typeB_permutahedron(d);
  const Decomposition dec = b_decompose(pib, family);
  report.add("pi^B_d reconstructs", dec.reconstructed, std::to_string(dec.nonzero().size()) + " nonzero coefficients");

  // Random integral sums with known coefficients, randomly translated.
  std::mt19937 rng(seed);
  const std::size_t n = family.generators.size();
  Tally random;
  for (int k = 0; k < random_count; ++k) {
    std::vector<Rational> want(n, Rational(0));
    VPolytope p = VPolytope::point(family.arr);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < terms; ++j) {
      const std::size_t g = rng() % n;
      const int c = 1 + static_cast<int>(rng() % 2);
      want[g] += c;
      for (int i = 0; i < c; ++i) p = minkowski_sum(p, family.generators[g].poly);
    }
    p = p.translated(random_translation(rng, d));
    const Decomposition got = b_decompose(p, family);
    random.record(got.reconstructed && got.coeffs == want, "sample " + std::to_string(k));
  }
  random.report(report, "random integral deformations");
  return report;
}

Report verify_hopf(int n) {
  Report report;
  report.suite = "hopf, n=" + std::to_string(n);
  report.merge(hopf_axiom_check(n));
  // [1] has no slices to generate relations from
  if (n >= 2) {
    report.merge(mc_coideal_check(n, 25));
    report.merge(two_one_monoid_check(n));
  }
  return report;
}

Report verify_phi_soundness(const ArrangementPtr& arr, int min_relations, unsigned seed) {
  Report report;
  const int d = arr->d();
  report.suite = std::string("phi soundness ") + type_letter(arr->type()) + dstr(d);
  const auto samples = sample_polytopes(arr, seed, 12);
  const auto forms = slice_forms(arr->kind());
  const std::vector<Rational> cuts{ratio(1, 2), ratio(1, 3), ratio(3, 4), ratio(1, 5)};

  Tally slices;
  for (const auto& p : samples) {
    for (const auto& form : forms) {
      const auto [lo, hi] = form_range(p, form);
      if (lo == hi) continue;
      for (const auto& cut : cuts) {
        const Rational c = lo + (hi - lo) * cut;
        std::optional<SliceResult> s;
        try {
          s = slice(p, form, c);
        } catch (const InvalidArgument&) {
          continue;
        }
        const auto x = PiElement::of(s->le) + PiElement::of(s->ge) - PiElement::of(p) - PiElement::of(s->eq);
        slices.record(phi(x).is_zero(), "slice of sample at c=" + c.get_str());
      }
    }
    if (slices.cases >= 4L * min_relations) break;
  }
  slices.report(report, "slice relations vanish");
  report.add("at least " + std::to_string(min_relations) + " slice relations", slices.cases >= min_relations);

  Tally translations;
  std::mt19937 rng(seed + 1);
  for (int k = 0; translations.cases < min_relations; ++k) {
    const auto& p = samples[k % samples.size()];
    const VPolytope q = p.translated(random_translation(rng, d));
    translations.record((phi_direct(p) - phi_direct(q)).is_zero(), "translate of sample " + std::to_string(k));
  }
  translations.report(report, "translation relations vanish");

  Tally homogeneous;
  for (std::size_t k = 0; k < samples.size() && k < 8; ++k) {
    const PiElement x = PiElement::of(samples[k]);
    ConeWeights total(arr);
    for (int r = 0; r <= d; ++r) {
      const PiElement xr = graded_component(x, r);
      const ConeWeights w = phi(xr);
      total += w;
      bool ok = phi(dilate(xr, Rational(2))) == w * power(Rational(2), r);
      for (const auto& [f, c] : w.weights()) ok = ok && arr->face_dim(f) == d - r;
      homogeneous.record(ok, "sample " + std::to_string(k) + " r=" + std::to_string(r));
    }
    homogeneous.record(total == phi(x), "sample " + std::to_string(k) + " components sum");
  }
  homogeneous.report(report, "degree r supported on faces of dimension d-r");
  return report;
}

Report verify_module_axioms(const ArrangementPtr& arr, int pairs, unsigned seed) {
  Report report;
  report.suite = std::string("module axioms ") + type_letter(arr->type()) + dstr(arr->d());
  const int n = static_cast<int>(arr->num_faces());
  const VPolytope z = zonotope_of(arr);

  Tally assoc;
  for (const PiElement& x : {PiElement::of(z), log_class(z)}) {
    std::vector<PiElement> acted;
    for (int f = 0; f < n; ++f) acted.push_back(module_act(x, f));
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g)
        assoc.record(module_act(acted[f], g) == acted[arr->product(f, g)],
                     arr->format_face(f) + " then " + arr->format_face(g));
  }
  assoc.report(report, "(x.H_F).H_G = x.H_{FG}");

  const auto samples = sample_polytopes(arr, seed, 10);
  std::mt19937 rng(seed);
  Tally mult, dil;
  for (int k = 0; k < pairs; ++k) {
    const PiElement x = PiElement::of(samples[rng() % samples.size()]);
    const PiElement y = k % 2 ? log_class(samples[rng() % samples.size()]) : PiElement::of(samples[rng() % samples.size()]);
    const int f = static_cast<int>(rng() % n);
    mult.record(phi(module_act(x * y, f)) == phi(module_act(x, f) * module_act(y, f)),
                "pair " + std::to_string(k) + " at " + arr->format_face(f));
    const Rational lambda = ratio(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 3));
    dil.record(phi(module_act(dilate(x, lambda), f)) == phi(dilate(module_act(x, f), lambda)),
               "pair " + std::to_string(k));
  }
  mult.report(report, "H_F acts multiplicatively");
  dil.report(report, "dilation commutes with the action");
  return report;
}

Report verify_arrangement_oracles(const ArrangementPtr& arr) {
  Report report;
  report.suite = std::string("arrangement ") + type_letter(arr->type()) + dstr(arr->d());
  Tally tits;
  for (const auto& f : arr->faces())
    for (const auto& g : arr->faces())
      tits.record(arr->tits_product(f, g) == arr->geometric_product(f, g), arr->format(f) + " * " + arr->format(g));
  tits.report(report, "combinatorial = geometric Tits product");

  Tally mob;
  const int m = static_cast<int>(arr->num_flats());
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (arr->leq(x, y))
        mob.record(arr->mobius(x, y) == arr->mobius_recursive(x, y), arr->format_flat(x) + " " + arr->format_flat(y));
  mob.report(report, "mobius product formula = recursion");
  return report;
}

Report verify_forest_bijection(int d) {
  Report report;
  report.suite = "forest bijection" + dstr(d);
  auto arr = Arrangement::braid(d);
  Tally round, leaves, comps;
  for_each_permutation(d, [&](const Permutation& s) {
    const auto t = forest_of(s);
    const auto st = stats(s);
    round.record(perm_of(t) == s && forest_of(perm_of(t)) == t, s.to_string());
    leaves.record(static_cast<int>(t.leaves().size()) == st.exc, s.to_string());
    comps.record(arr->canonical_flat(t.components(), 0) == st.supp, s.to_string());
  });
  round.report(report, "round trip");
  leaves.report(report, "leaves = exc");
  comps.report(report, "components = supp");
  return report;
}

}  // namespace polyalg
