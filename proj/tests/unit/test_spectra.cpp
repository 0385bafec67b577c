#include "doctest.h"

#include <random>

#include "polyalg/gfseries.hpp"
#include "polyalg/spectra.hpp"
#include "polyalg/titsalgebra.hpp"

using namespace polyalg;

namespace {

RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

long long binom(int n, int k) {
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

TEST_CASE("Mobius formula examples") {
  auto a3 = Arrangement::braid(3);
  CHECK(eta_mobius(a3).polynomial(a3->bottom()) == poly({0, 1, 1}));
  auto b2 = Arrangement::type_b(2);
  CHECK(eta_mobius(b2).polynomial(b2->bottom()) == poly({0, 2, 1}));
  auto c3 = Arrangement::coordinate(3);
  auto cube = eta_mobius(c3);
  for (int x = 0; x < static_cast<int>(c3->num_flats()); ++x)
    CHECK(cube.polynomial(x) == RatPoly::monomial(1, 3 - c3->flat_dim(x)));
  CHECK(eta_mobius(a3, a3->bottom(), 2) == 1);
}

TEST_CASE("both h sources agree with the Eulerian polynomials") {
  for (int d = 2; d <= 4; ++d) {
    auto a = Arrangement::braid(d);
    auto h = flat_h_by_geometry(a);
    CHECK(h == flat_h_by_products(*a));
    CHECK(h[a->bottom()] == eulerian_A_enumerated(d));
  }
  for (int d = 2; d <= 3; ++d) {
    auto b = Arrangement::type_b(d);
    auto h = flat_h_by_geometry(b);
    CHECK(h == flat_h_by_products(*b));
    CHECK(h[b->bottom()] == eulerian_B_enumerated(d));
  }
}

TEST_CASE("permutation counts") {
  auto a3 = Arrangement::braid(3);
  auto t = eta_permutations(a3);
  CHECK(t.value(a3->bottom(), 1) == 1);
  CHECK(t.value(a3->bottom(), 2) == 1);
  CHECK(t.value(a3->top(), 0) == 1);
  auto b2 = Arrangement::type_b(2);
  auto tb = eta_permutations(b2);
  CHECK(tb.value(b2->bottom(), 1) == 2);
  CHECK(tb.value(b2->top(), 0) == 1);
  CHECK(method_name(t.method()) == "permutation_count");
}

TEST_CASE("Mobius formula equals permutation counts") {
  for (int d = 2; d <= 4; ++d) {
    auto a = Arrangement::braid(d);
    auto m = eta_mobius(a);
    auto p = eta_permutations(a);
    CHECK_MESSAGE(m.same_values(p), m.first_difference(p));
  }
  for (int d = 2; d <= 3; ++d) {
    auto b = Arrangement::type_b(d);
    auto m = eta_mobius(b);
    auto p = eta_permutations(b);
    CHECK_MESSAGE(m.same_values(p), m.first_difference(p));
  }
  for (int d = 1; d <= 4; ++d) {
    auto c = Arrangement::coordinate(d);
    CHECK(eta_mobius(c).same_values(eta_permutations(c)));
  }
}

TEST_CASE("grade sums, dimension sums and the degree bound") {
  for (int d = 2; d <= 4; ++d) {
    auto a = Arrangement::braid(d);
    auto m = eta_mobius(a);
    auto sums = m.grade_sums();
    auto eul = eulerian_A_enumerated(d);
    for (int r = 0; r <= d; ++r) CHECK(Rational(static_cast<long>(sums[r])) == eul.coeff(r));
    // Count permutations by the number of cycles and excedances directly.
    std::vector<std::vector<long long>> byk(d + 1, std::vector<long long>(d + 1, 0));
    for_each_permutation(d, [&](const Permutation& s) {
      byk[s.cycles().size()][stats(s).exc] += 1;
    });
    for (int k = 1; k <= d; ++k) CHECK(m.grade_sums_of_dim(k) == byk[k]);
    for (int x = 0; x < static_cast<int>(a->num_flats()); ++x)
      for (int r = 0; r <= d; ++r)
        if (r + a->flat_dim(x) > d) CHECK(m.value(x, r) == 0);
  }
  auto c4 = Arrangement::coordinate(4);
  auto sums = eta_mobius(c4).grade_sums();
  for (int r = 0; r <= 4; ++r) CHECK(sums[r] == binom(4, r));
}

TEST_CASE("phi_act agrees with the module action") {
  auto a3 = Arrangement::braid(3);
  auto fam = adams_family(3);
  std::vector<PiElement> xs{log_class(permutahedron(3)), log_class(simplex(a3, {1, 2, 3})),
                            log_class(simplex(a3, {1, 3})) * log_class(simplex(a3, {2, 3}))};
  for (const auto& x : xs) {
    for (const auto& [flat, e] : fam.elements) CHECK(phi_act(phi(x), e) == phi(module_act(x, e)));
    for (int f = 0; f < static_cast<int>(a3->num_faces()); ++f)
      CHECK(phi_act(phi(x), TitsElement::basis(a3, f)) == phi(module_act(x, f)));
  }
  auto b2 = Arrangement::type_b(2);
  auto y = log_class(typeB_permutahedron(2));
  for (int f = 0; f < static_cast<int>(b2->num_faces()); ++f)
    CHECK(phi_act(phi(y), TitsElement::basis(b2, f)) == phi(module_act(y, f)));
}

TEST_CASE("spanning sets reach h_r") {
  auto a3 = Arrangement::braid(3);
  CHECK(xi_basis(a3, 0).elements.size() == 1);
  CHECK(xi_basis(a3, 1).elements.size() == 4);
  CHECK(xi_basis(a3, 2).elements.size() == 1);
  CHECK(xi_basis(a3, 3).elements.empty());
  CHECK(xi1_generators(Arrangement::braid(4)).size() == 11);
}

TEST_CASE("idempotent ranks agree with the other methods") {
  auto a2 = Arrangement::braid(2);
  auto t2 = eta_idempotent_rank(a2);
  CHECK(t2.value(a2->bottom(), 1) == 1);
  CHECK(t2.value(a2->top(), 0) == 1);
  // Xi_1 . E_bottom is spanned by log[Delta_12] . E_bottom.
  auto fam = adams_family(2);
  auto x = module_act(log_class(simplex(a2, {1, 2})), fam.elements.at(a2->bottom()));
  CHECK_FALSE(phi(x).is_zero());
  for (int d = 2; d <= 3; ++d) {
    auto a = Arrangement::braid(d);
    auto t = eta_idempotent_rank(a);
    CHECK_MESSAGE(t.same_values(eta_mobius(a)), t.first_difference(eta_mobius(a)));
    CHECK(t.value(a->top(), 0) == 1);
    for (int r = 1; r <= d; ++r) CHECK(t.value(a->top(), r) == 0);
  }
  for (int d = 1; d <= 3; ++d) {
    auto c = Arrangement::coordinate(d);
    CHECK(eta_idempotent_rank(c).same_values(eta_mobius(c)));
  }
  CHECK_THROWS_AS(eta_idempotent_rank(Arrangement::type_b(2)), InvalidArgument);
  CHECK_THROWS_AS(eta_idempotent_rank(Arrangement::braid(5)), ResourceLimit);
}

TEST_CASE("x_sigma elements") {
  // Unique sigma with support {13,2} and one excedance.
  auto a3 = Arrangement::braid(3);
  auto sigma = Permutation::parse("(13)", 3);
  auto x = x_sigma(sigma);
  auto fam = adams_family(3);
  auto direct = module_act(log_class(simplex(a3, {1, 3})), fam.elements.at(a3->flat_index(a3->parse_flat("{13,2}"))));
  CHECK(phi(x) == phi(direct));
  CHECK_FALSE(phi(x).is_zero());
  // x_X for the bottom flat of A_3 is log[Delta_12] log[Delta_13].
  auto xx = x_flat(a3, a3->bottom());
  CHECK(xx == log_class(simplex(a3, {1, 2})) * log_class(simplex(a3, {1, 3})));
  CHECK(x_flat(a3, a3->top()) == PiElement::one(a3));
}

TEST_CASE("conjecture and extremal cases for small d") {
  for (int d = 2; d <= 3; ++d) {
    auto rep = conjecture_check(d);
    CHECK_MESSAGE(rep.propositions.pass(), rep.propositions.to_json());
    CHECK_MESSAGE(rep.conjecture.pass(), rep.conjecture.to_json());
    CHECK(!rep.conjecture.checks.empty());
  }
}

TEST_CASE("cube eigenbasis") {
  for (int d = 1; d <= 3; ++d) {
    auto rep = y_basis_cube(d);
    CHECK_MESSAGE(rep.pass(), rep.to_json());
  }
  CHECK(y_class(2, 0) == PiElement::one(Arrangement::coordinate(2)));
  auto y = y_class(2, 3);
  CHECK(phi(dilate(y, Rational(2))) == phi(y) * Rational(4));
  CHECK_FALSE(phi(y).is_zero());
}

TEST_CASE("type-B generators for d = 2") {
  auto fam = b_generators(2);
  CHECK(fam.sets == std::vector<std::vector<int>>{{1}, {2}, {1, 2}, {1, -2}});
  std::vector<std::string> names;
  for (const auto& g : fam.generators) names.push_back(g.name());
  CHECK(names == std::vector<std::string>{"Delta_{1,2}", "Delta_{1,-2}", "Delta0_{1}", "Delta0_{2}", "Delta0_{1,2}",
                                          "Delta0_{1,-2}"});
  CHECK(fam.full_dimensional() == 2);
  auto rep = check_generator_family(fam);
  CHECK_MESSAGE(rep.pass(), rep.to_json());
  auto rep3 = check_generator_family(b_generators(3));
  CHECK_MESSAGE(rep3.pass(), rep3.to_json());
  CHECK(special_sets(3).size() == 13);
  CHECK_THROWS_AS(b_generators(5), ResourceLimit);
}

TEST_CASE("type-B decompositions") {
  auto b2 = Arrangement::type_b(2);
  auto dec = b_decompose(simplex0(b2, {1, 2}));
  CHECK(dec.nonzero() == std::map<std::string, Rational>{{"Delta0_{1,2}", 1}});
  CHECK(dec.reconstructed);
  for (int d = 2; d <= 3; ++d) {
    auto p = typeB_permutahedron(d);
    auto full = b_decompose(p);
    CHECK(full.reconstructed);
    auto fam = b_generators(d);
    std::vector<VPolytope> gens;
    for (const auto& g : fam.generators) gens.push_back(g.poly);
    CHECK(reconstructs(p, gens, full.coeffs));
    // A wrong coefficient vector does not reconstruct.
    auto wrong = full.coeffs;
    wrong[0] += 1;
    CHECK_FALSE(reconstructs(p, gens, wrong));
  }
  std::mt19937 rng(7);
  auto fam = b_generators(3);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> c(fam.generators.size(), Rational(0));
    VPolytope p = VPolytope::point(fam.arr);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int k = static_cast<int>(rng() % 3);
      c[i] = k;
      if (k) p = minkowski_sum(p, dilate(fam.generators[i].poly, Rational(k)));
    }
    auto got = b_decompose(p, fam);
    CHECK(got.coeffs == c);
    CHECK(got.reconstructed);
  }
  CHECK_THROWS_AS(b_decompose(permutahedron(3)), InvalidArgument);
}

TEST_CASE("type-A decompositions") {
  auto a3 = Arrangement::braid(3);
  auto dec = a_decompose(permutahedron(3));
  CHECK(dec.nonzero() == std::map<std::string, Rational>{{"Delta_{1,2}", 1}, {"Delta_{1,3}", 1}, {"Delta_{2,3}", 1}});
  CHECK(dec.reconstructed);
  CHECK(a_decompose(simplex(a3, {1, 2, 3})).nonzero() == std::map<std::string, Rational>{{"Delta_{1,2,3}", 1}});
  CHECK(a_decompose(VPolytope::point(a3)).nonzero().empty());
  // The inverted simplex -Delta_123 needs a negative coefficient.
  auto inv = VPolytope::from_points(a3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto d2 = a_decompose(inv);
  CHECK(d2.reconstructed);
  CHECK(d2.nonzero().at("Delta_{1,2,3}") == -1);
  auto p4 = a_decompose(permutahedron(4));
  CHECK(p4.reconstructed);
  CHECK(p4.nonzero().size() == 6);
}
