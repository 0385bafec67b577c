#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyalg/arrangement.hpp"

namespace polyalg {

class Permutation {
 public:
  // images[i-1] = sigma(i), a bijection of [d].
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int d);
  // Cycle notation "(1 3)(2 6 5 8)"; omitted points are fixed.
  static Permutation parse(std::string_view cycles, int d);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }
  // Cycles as sequences (a sigma(a) ...), each starting at its minimum,
  // ordered by minimum.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

class SignedPermutation {
 public:
  // images[i-1] = sigma(i) in [+-d] with distinct absolute values.
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int d);
  // Cycle notation with "-" for bars: "(1)(-1)(2 -2)(3 4 -3 -4)".
  static SignedPermutation parse(std::string_view cycles, int d);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return i > 0 ? img_[i - 1] : -img_[-i - 1]; }
  const std::vector<int>& images() const { return img_; }
  // Cycles on [+-d], each starting at the element of least absolute value
  // (positive first), ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> img_;
};

struct PermStats {
  int exc = 0;
  int des = 0;
  Flat supp;
};

struct SignedPermStats {
  int exc = 0;
  int fneg = 0;
  int fexc = 0;
  int exc_b = 0;
  int des = 0;  // descents with sigma(0) = 0, positions 0..d-1
  Flat supp;
};

PermStats stats(const Permutation& sigma);
SignedPermStats stats_signed(const SignedPermutation& sigma);

// Excedances of a cyclic permutation (c0 c1 ... ck) of an involution-exclusive
// set, for the order -1 < -2 < ... < -d < 1 < 2 < ... < d.
int exc_prec(const std::vector<int>& cycle);
// Right-hand side of the additivity formula for exc_B: exc_B on the zero
// block plus exc_prec over one cycle of every nonzero block pair.
int exc_b_by_blocks(const SignedPermutation& sigma);

// Increasing rooted forest on [n] stored as a parent array (0 for roots).
// Children are ordered increasingly, trees by their roots.
class IncreasingForest {
 public:
  IncreasingForest(int n, std::vector<int> parent);
  // Nested notation "1(3(7),5(6,9)) 2(4,8(10))"; children must increase.
  static IncreasingForest parse(std::string_view text);

  int size() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v - 1]; }
  std::vector<int> children(int v) const;
  std::vector<int> roots() const;
  std::vector<int> leaves() const;  // non-root nodes without children
  std::vector<Block> components() const;
  std::vector<int> path_to_root(int node) const;
  std::string to_string() const;
  friend bool operator==(const IncreasingForest&, const IncreasingForest&) = default;

 private:
  std::vector<int> parent_;
};

// Cycles written with their minimum last, split by right-to-left minima.
IncreasingForest forest_of(const Permutation& sigma);
// Contour walk of each tree recording a node once its subtree is finished.
Permutation perm_of(const IncreasingForest& forest);

struct EnumerationBounds {
  int max_symmetric = 8;
  int max_hyperoctahedral = 6;
};
// Defaults, overridable by POLYALG_MAX_SYM_D and POLYALG_MAX_HYPEROCT_D.
EnumerationBounds enumeration_bounds();

struct PermFilter {
  std::optional<Flat> supp;
  std::optional<int> exc;  // exc for S_d, exc_B for B_d
};

// Lexicographic order of image arrays. Throws ResourceLimit beyond bounds.
std::vector<Permutation> enumerate_symmetric(int d, const PermFilter& filter = {});
std::vector<SignedPermutation> enumerate_hyperoctahedral(int d, const PermFilter& filter = {});
void for_each_permutation(int d, const std::function<void(const Permutation&)>& fn);
void for_each_signed_permutation(int d, const std::function<void(const SignedPermutation&)>& fn);

}  // namespace polyalg
