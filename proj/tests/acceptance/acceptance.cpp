// One line per acceptance criterion; nonzero exit if any criterion fails or
// exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "polyalg/gfseries.hpp"
#include "polyalg/suites.hpp"

using namespace polyalg;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Report&)> run;
};

void add_eta(Report& out, const ArrangementPtr& arr) { out.merge(verify_eta(arr, true).report); }

std::vector<Criterion> criteria() {
  const unsigned seed = 2024;
  return {
      {1, "h(pi_d) = A_d for d=2..5 and h(pi^B_d) = B_d for d=2..4", 60,
       [](Report& r) {
         for (int d = 2; d <= 5; ++d) r.merge(verify_brenti(ArrangementType::BraidA, d));
         for (int d = 2; d <= 4; ++d) r.merge(verify_brenti(ArrangementType::TypeB, d));
       }},
      {2, "type A eta: Mobius = excedances (d=2..5), idempotent ranks (d<=4)", 120,
       [](Report& r) {
         for (int d = 2; d <= 5; ++d) add_eta(r, Arrangement::braid(d));
       }},
      {3, "type B eta: Mobius = exc_B (d=2..4), eta_bottom(Xi_1) = 2^(d-1)", 300,
       [](Report& r) {
         for (int d = 2; d <= 4; ++d) add_eta(r, Arrangement::type_b(d));
       }},
      {4, "cube: eta_{X_S}(Xi_r) = [r=|S|] (d<=5), idempotent ranks (d<=4)", 30,
       [](Report& r) {
         for (int d = 1; d <= 5; ++d) r.merge(verify_cube(d));
       }},
      {5, "Adams and first-orthant families (d<=4), t in {2,3,5,-1}", 60,
       [](Report& r) {
         for (int d = 1; d <= 4; ++d) r.merge(verify_idempotents(d));
       }},
      {6, "generating-function identities to order 8 (A) / 6 (B)", 60,
       [](Report& r) { r.merge(verify_identities(8, 6)); }},
      {7, "Phi kills >=25 slice and >=25 translation relations, degree support", 60,
       [seed](Report& r) {
         for (int d = 1; d <= 3; ++d)
           for (auto arr : {Arrangement::braid(d), Arrangement::type_b(d), Arrangement::coordinate(d)})
             if (arr->type() != ArrangementType::BraidA || d > 1)  // pi_1 is a point, nothing to slice
               r.merge(verify_phi_soundness(arr, 25, seed));
       }},
      {8, "module axioms on pi_3 and pi^B_2, multiplicativity, dilation", 120,
       [seed](Report& r) {
         r.merge(verify_module_axioms(Arrangement::braid(3), 24, seed));
         r.merge(verify_module_axioms(Arrangement::type_b(2), 24, seed));
       }},
      {9, "x_sigma: extremal propositions and independence for d=2..4", 300,
       [](Report& r) {
         for (int d = 2; d <= 4; ++d) r.merge(verify_conjecture(d));
       }},
      {10, "type-B generators d=2..4, pi^B_d and 10 random deformations", 300,
       [seed](Report& r) {
         for (int d = 2; d <= 4; ++d) r.merge(verify_b_generators(d, seed + d, 10));
       }},
      {11, "Hopf monoid: coassociativity, compatibility, coideal, antipode", 300,
       [](Report& r) {
         for (int n = 1; n <= 4; ++n) r.merge(verify_hopf(n));
       }},
      {12, "Tits product, Mobius and forest bijection cross-checks", 60,
       [](Report& r) {
         for (int d = 1; d <= 3; ++d)
           for (auto arr : {Arrangement::braid(d), Arrangement::type_b(d), Arrangement::coordinate(d)})
             r.merge(verify_arrangement_oracles(arr));
         for (int d = 1; d <= 6; ++d) r.merge(verify_forest_bijection(d));
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Report report;
    std::string error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_seconds;
    const bool ok = error.empty() && report.pass() && !report.checks.empty() && in_time;
    if (!ok) ++failed;
    std::printf("[%s] %2d  %s  (%zu checks, %.2f s of %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                report.checks.size(), secs, c.budget_seconds);
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (!in_time) std::printf("      over the time budget\n");
    for (const auto& chk : report.checks)
      if (!chk.pass)
        std::printf("      failed: %s %s %s\n", chk.name.c_str(), chk.first_mismatch.value_or("").c_str(),
                    chk.detail.c_str());
  }
  std::printf("%d of 12 criteria pass\n", 12 - failed);
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
