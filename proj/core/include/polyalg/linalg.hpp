#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "polyalg/rational.hpp"

namespace polyalg {

using SparseVector = std::map<int, Rational>;
using Matrix = std::vector<std::vector<Rational>>;

// Incremental row echelon basis over Q. Used for rank saturation and
// independence tests on sparse vectors.
class EchelonBasis {
 public:
  // Reduces v against the basis. Returns true and stores the remainder if
  // it is nonzero.
  bool insert(SparseVector v);
  bool contains(SparseVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  SparseVector reduce(SparseVector v) const;
  std::map<int, SparseVector> rows_;  // pivot -> row with leading 1 at pivot
};

std::size_t rank(const std::vector<SparseVector>& vectors);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);
std::size_t rank(Matrix m);
Rational determinant(Matrix m);

// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols);

struct SolveResult {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> solution;  // free variables set to zero
};

// Solves m x = b.
SolveResult solve(Matrix m, const std::vector<Rational>& b, std::size_t cols);

// Covolume of the full-rank integer lattice spanned by the given rows of
// length m (absolute determinant of a Hermite basis).
Integer lattice_determinant(std::vector<std::vector<Integer>> rows, std::size_t m);

}  // namespace polyalg
