#pragma once

#include <vector>

#include "polyalg/arrangement.hpp"
#include "polyalg/report.hpp"
#include "polyalg/spectra.hpp"

namespace polyalg {

// Verification suites shared by the command line driver, the acceptance
// binary and the benchmarks. Every suite compares two independent
// computations and reports each comparison.

// h(pi_d) against the Eulerian recurrence and the enumerated descent
// polynomial (BraidA or TypeB).
Report verify_brenti(ArrangementType type, int d);

struct EtaCheck {
  Report report;
  std::vector<EtaTable> tables;  // one per method that ran
};
// Mobius formula against permutation counts, plus idempotent ranks when
// with_idempotents is set and the arrangement supports them (BraidA and
// Coordinate, d <= 4). TypeB adds eta_bottom(Xi_1) = 2^{d-1}; Coordinate
// adds eta_{X_S}(Xi_r) = [r = |S|].
EtaCheck verify_eta(const ArrangementPtr& arr, bool with_idempotents);

// Adams family (BraidA) and first-orthant family (Coordinate) at d, with
// the characteristic decomposition at t in {2, 3, 5, -1}.
Report verify_idempotents(int d);

// Extremal propositions and the independence check for x_sigma.
Report verify_conjecture(int d);

// Cube eigenbasis plus the eta checks on Coordinate(d).
Report verify_cube(int d);

// Family counts and ranks, the decomposition of the type-B permutahedron
// and of `random_count` random integral deformations.
Report verify_b_generators(int d, unsigned seed, int random_count);

// Hopf monoid axioms, valuation coideal and (2,1)-identities over [n].
Report verify_hopf(int n);

// Phi vanishes on slice and translation relations (at least `min_relations`
// of each) and is supported on faces of dimension d - r in degree r.
Report verify_phi_soundness(const ArrangementPtr& arr, int min_relations, unsigned seed);

// (x.H_F).H_G = x.H_{FG} over all face pairs, multiplicativity of each H_F
// on `pairs` random class pairs, and dilation commuting with the action.
Report verify_module_axioms(const ArrangementPtr& arr, int pairs, unsigned seed);

// Combinatorial against geometric Tits product, Mobius product formulas
// against the recursion.
Report verify_arrangement_oracles(const ArrangementPtr& arr);
// Forest bijection round trip, leaves = exc and components = supp.
Report verify_forest_bijection(int d);

}  // namespace polyalg
