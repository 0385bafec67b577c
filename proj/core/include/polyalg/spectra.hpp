#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyalg/arrangement.hpp"
#include "polyalg/permstat.hpp"
#include "polyalg/polyclass.hpp"
#include "polyalg/report.hpp"

namespace polyalg {

enum class EtaMethod { MobiusFormula, PermutationCount, IdempotentRank };
std::string_view method_name(EtaMethod method);  // mobius_formula, ...

// eta_X(Xi_r): multiplicity of the simultaneous eigenspace of the flat X in
// the degree-r part. Rows are flats by index, columns r = 0..d.
class EtaTable {
 public:
  EtaTable(ArrangementPtr arr, EtaMethod method);

  const ArrangementPtr& arrangement() const { return arr_; }
  EtaMethod method() const { return method_; }
  int max_grade() const { return arr_->d(); }
  long long value(int flat, int r) const;
  void set(int flat, int r, long long value);
  // Sum over r of eta z^r.
  RatPoly polynomial(int flat) const;
  // Sum over flats, per grade.
  std::vector<long long> grade_sums() const;
  // Sum over flats of dimension k, per grade.
  std::vector<long long> grade_sums_of_dim(int k) const;

  // Same arrangement and values; the method tag is ignored.
  bool same_values(const EtaTable& o) const;
  // First differing (flat, r) as text, if any.
  std::string first_difference(const EtaTable& o) const;

 private:
  ArrangementPtr arr_;
  EtaMethod method_;
  std::vector<std::vector<long long>> values_;
};

// h(z_Y) for every flat Y, where z_Y = p_F for any face with supp F = Y and
// p the zonotope. From the Eulerian product formulas, and from the face
// lattice of the zonotope.
std::vector<RatPoly> flat_h_by_products(const Arrangement& arr);
std::vector<RatPoly> flat_h_by_geometry(const ArrangementPtr& arr);

// sum_r eta_X z^r = sum_{Y >= X} mu(X, Y) h(z_Y). Both h sources are used
// and must agree; a disagreement throws std::logic_error.
EtaTable eta_mobius(const ArrangementPtr& arr);
long long eta_mobius(const ArrangementPtr& arr, int flat, int r);

// Counts signed or unsigned permutations by (supp, exc) or (supp, exc_B).
// Coordinate arrangements use sign vectors with supp = X_Neg, exc = |Neg|.
EtaTable eta_permutations(const ArrangementPtr& arr);

// Spanning set of Xi_r certified by Phi-rank equal to h_r.
struct XiBasis {
  int r = 0;
  std::vector<PiElement> elements;
  std::vector<ConeWeights> phis;
};
// Classes whose logs span Xi_1: log-simplices for BraidA, the unit segments
// for Coordinate, the type-B generators for TypeB.
std::vector<VPolytope> xi1_generators(const ArrangementPtr& arr);
XiBasis xi_basis(const ArrangementPtr& arr, int r);

// rank of Phi(b . E_X) over a basis of Xi_r. BraidA (Adams family) and
// Coordinate (gamma_2 family), d <= 4.
EtaTable eta_idempotent_rank(const ArrangementPtr& arr);

// Product of log[Delta_J] over root paths of the leaves of forest_of(sigma).
PiElement x_sigma_factor(const Permutation& sigma);
// x_sigma = x_sigma_factor(sigma) . E_{supp sigma}.
PiElement x_sigma(const Permutation& sigma);
// prod_i prod_{j != min S_i} log[Delta_{min S_i, j}] for the flat's blocks.
PiElement x_flat(const ArrangementPtr& arr, int flat);

struct ConjectureReport {
  Report propositions;  // the extremal cases, which are theorems
  Report conjecture;    // independence of {x_sigma} per (X, r)
};
ConjectureReport conjecture_check(int d);

// y_S = prod_{i in S} log[l_i] on Coordinate(d).
PiElement y_class(int d, Block S);
Report y_basis_cube(int d);

// Special involution-exclusive S: nonempty, no i with -i, and the element
// of least absolute value positive. Listed by size, then absolute values,
// then signs.
std::vector<std::vector<int>> special_sets(int d);

struct GeneratorB {
  std::vector<int> set;
  bool with_origin = false;  // Delta^0_S instead of Delta_S
  VPolytope poly;
  std::string name() const;  // "Delta_{1,-2}" or "Delta0_{1,-2}"
};

struct GeneratorFamilyB {
  ArrangementPtr arr;
  std::vector<std::vector<int>> sets;
  std::vector<GeneratorB> generators;  // non-point members only
  int full_dimensional() const;
};

GeneratorFamilyB b_generators(int d);
// Counts, special-set condition, Psi_1 = Phi(log) per generator and full
// column rank of the Psi_1 matrix.
Report check_generator_family(const GeneratorFamilyB& family);

struct Decomposition {
  std::vector<std::string> names;
  std::vector<Rational> coeffs;
  bool reconstructed = false;  // vertex-level signed Minkowski identity
  std::map<std::string, Rational> nonzero() const;
};

// log[p] = sum c_g log[g] over the type-B generators, solved through Psi_1.
// Throws InvalidArgument for non-deformations or d > 4, std::logic_error if
// the system is inconsistent or not unique.
Decomposition b_decompose(const VPolytope& p);
Decomposition b_decompose(const VPolytope& p, const GeneratorFamilyB& family);
// log[p] = sum y_S log[Delta_S] over |S| >= 2, braid deformations, d <= 5.
Decomposition a_decompose(const VPolytope& p);

// p + sum_{c<0} |c| g = sum_{c>0} c g up to translation, after clearing
// denominators.
bool reconstructs(const VPolytope& p, const std::vector<VPolytope>& gens, const std::vector<Rational>& coeffs);

}  // namespace polyalg
