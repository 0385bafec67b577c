#include "doctest.h"

#include "polyalg/suites.hpp"

using namespace polyalg;

namespace {

void require_pass(const Report& r) { CHECK_MESSAGE(r.pass(), r.to_json()); }

}  // namespace

TEST_CASE("small suites pass") {
  require_pass(verify_brenti(ArrangementType::BraidA, 3));
  require_pass(verify_brenti(ArrangementType::TypeB, 2));
  CHECK_THROWS_AS(verify_brenti(ArrangementType::Coordinate, 2), InvalidArgument);
  for (auto arr : {Arrangement::braid(3), Arrangement::type_b(2), Arrangement::coordinate(3)}) {
    auto eta = verify_eta(arr, true);
    require_pass(eta.report);
    CHECK(eta.tables.size() == (arr->type() == ArrangementType::TypeB ? 2u : 3u));
  }
  require_pass(verify_idempotents(2));
  require_pass(verify_conjecture(3));
  require_pass(verify_cube(2));
  require_pass(verify_b_generators(2, 5, 4));
  require_pass(verify_hopf(2));
  require_pass(verify_forest_bijection(4));
}

TEST_CASE("relation and axiom suites count their cases") {
  auto a3 = Arrangement::braid(3);
  auto phi_rep = verify_phi_soundness(a3, 25, 11);
  require_pass(phi_rep);
  for (const auto& c : phi_rep.checks)
    if (c.name.find("relations vanish") != std::string::npos) CHECK(c.order.value_or(0) >= 25);
  auto mod = verify_module_axioms(Arrangement::type_b(2), 20, 3);
  require_pass(mod);
  require_pass(verify_arrangement_oracles(Arrangement::coordinate(2)));
}

TEST_CASE("suites are deterministic") {
  CHECK(verify_b_generators(2, 9, 3).to_json() == verify_b_generators(2, 9, 3).to_json());
}
