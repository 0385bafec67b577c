#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polyalg/rational.hpp"
#include "polyalg/ratpoly.hpp"

namespace polyalg {

enum class ArrangementType { BraidA, TypeB, Coordinate };

struct ArrangementKind {
  ArrangementType type = ArrangementType::BraidA;
  int d = 1;
  friend bool operator==(const ArrangementKind&, const ArrangementKind&) = default;
};

char type_letter(ArrangementType type);                  // 'A', 'B', 'C'
ArrangementType parse_arrangement_type(std::string_view);  // A|B|C|cube|braid|...

// Blocks are bit masks. Type A: bit i-1 is the element i. Types B and C:
// bit i-1 is +i and bit d+i-1 is -i.
using Block = std::uint32_t;

// Faces.
//   BraidA: blocks = the set composition in order, zero unused.
//   TypeB: blocks = the blocks preceding the zero block, zero = zero block.
//   Coordinate: blocks = signed singletons of nonzero coordinates sorted by
//   index, zero = the zero coordinates (both signs).
// In every case the dimension equals blocks.size().
struct Face {
  std::vector<Block> blocks;
  Block zero = 0;
  friend auto operator<=>(const Face&, const Face&) = default;
};

// Flats.
//   BraidA: blocks = set partition sorted by minimum.
//   TypeB/Coordinate: one representative per nonzero block pair (its
//   smallest absolute value carries a plus sign), sorted by that value;
//   zero = the zero block. Coordinate flats X_S have singleton blocks.
// Dimension equals blocks.size().
struct Flat {
  std::vector<Block> blocks;
  Block zero = 0;
  friend auto operator<=>(const Flat&, const Flat&) = default;
};

// Block helpers that need only d.
Block negate_block(int d, Block b);
Block abs_block(int d, Block b);  // bits 0..d-1
Block signed_block(int d, std::span<const int> elements);
Flat canonical_flat(ArrangementType type, int d, std::vector<Block> blocks, Block zero);

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};
struct FlatHash {
  std::size_t operator()(const Flat& f) const noexcept;
};

class Arrangement;
using ArrangementPtr = std::shared_ptr<const Arrangement>;

class Arrangement {
 public:
  // Faces and flats are enumerated on first use; structural operations on
  // Face and Flat values (parse, format, support, order, Mobius) work for
  // any supported d without enumeration.
  explicit Arrangement(ArrangementKind kind);

  // Shared immutable instance per kind.
  static ArrangementPtr get(ArrangementKind kind);
  static ArrangementPtr braid(int d) { return get({ArrangementType::BraidA, d}); }
  static ArrangementPtr type_b(int d) { return get({ArrangementType::TypeB, d}); }
  static ArrangementPtr coordinate(int d) { return get({ArrangementType::Coordinate, d}); }

  ArrangementKind kind() const { return kind_; }
  ArrangementType type() const { return kind_.type; }
  int d() const { return kind_.d; }
  bool signed_elements() const { return kind_.type != ArrangementType::BraidA; }
  // Dimension of chambers; the central face has dimension min_face_dim().
  int max_face_dim() const { return kind_.type == ArrangementType::BraidA ? kind_.d : kind_.d; }
  int min_face_dim() const { return kind_.type == ArrangementType::BraidA ? 1 : 0; }

  // Faces, indexed in canonical order (by dimension, then lexicographic).
  std::size_t num_faces() const { return tables().faces.size(); }
  const Face& face(int i) const { return tables().faces[i]; }
  const std::vector<Face>& faces() const { return tables().faces; }
  std::vector<int> faces_of_dim(int k) const;
  std::vector<int> chambers() const { return faces_of_dim(max_face_dim()); }
  int face_index(const Face& f) const;  // throws InvalidArgument
  std::optional<int> find_face(const Face& f) const;
  int face_dim(int i) const { return static_cast<int>(tables().faces[i].blocks.size()); }
  int central_face() const { return 0; }

  // Flats, indexed in canonical order (by dimension, then lexicographic).
  std::size_t num_flats() const { return tables().flats.size(); }
  const Flat& flat(int i) const { return tables().flats[i]; }
  const std::vector<Flat>& flats() const { return tables().flats; }
  int flat_index(const Flat& x) const;  // throws InvalidArgument
  int flat_dim(int i) const { return static_cast<int>(tables().flats[i].blocks.size()); }
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(tables().flats.size()) - 1; }

  // Combinatorial Tits product and support.
  Face tits_product(const Face& f, const Face& g) const;
  // Tabulated for arrangements with at most kProductTableLimit faces.
  int product(int f, int g) const;
  Flat support(const Face& f) const;
  int support(int f) const { return tables().support[f]; }
  // F <= G in the face order (F is a face of G), equivalently FG = G.
  bool face_leq(int f, int g) const { return product(f, g) == g; }

  // Flat lattice.
  bool leq(const Flat& x, const Flat& y) const;
  bool leq(int x, int y) const { return tables().leq[x * tables().flats.size() + y]; }
  Flat join(const Flat& x, const Flat& y) const;
  int join(int x, int y) const { return flat_index(join(flat(x), flat(y))); }
  // Product formulas; throws InvalidArgument unless x <= y.
  long long mobius(const Flat& x, const Flat& y) const;
  long long mobius(int x, int y) const { return mobius(flat(x), flat(y)); }
  // Generic recursive definition, used as an independent oracle.
  long long mobius_recursive(int x, int y) const;

  // chi(A, t), or chi(A^X, t) when under is given.
  RatPoly characteristic_polynomial(std::optional<int> under = std::nullopt) const;

  std::vector<Rational> interior_point(const Face& f) const;
  // A second, different point in the relative interior.
  std::vector<Rational> alternate_interior_point(const Face& f) const;
  Face face_of_point(std::span<const Rational> v) const;
  // Face containing v_F + eps v_G; the geometric definition of FG.
  Face geometric_product(const Face& f, const Face& g) const;

  std::string format(const Face& f) const;
  std::string format(const Flat& x) const;
  std::string format_face(int i) const { return format(face(i)); }
  std::string format_flat(int i) const { return format(flat(i)); }
  Face parse_face(std::string_view text) const;
  Flat parse_flat(std::string_view text) const;

  // Canonical flat from arbitrary (possibly unsorted, possibly negated)
  // nonzero blocks and a zero block.
  Flat canonical_flat(std::vector<Block> blocks, Block zero) const;

  // Helpers on signed blocks.
  Block negate(Block b) const;
  Block abs_mask(Block b) const;  // bits 0..d-1
  std::vector<int> elements(Block b) const;
  Block block_of(std::span<const int> elements) const;
  int element_bit(int element) const;

  // All blocks of a flat including negatives and the zero block.
  std::vector<Block> full_blocks(const Flat& x) const;

 private:
  struct Tables {
    std::vector<Face> faces;
    std::unordered_map<Face, int, FaceHash> face_index;
    std::vector<Flat> flats;
    std::unordered_map<Flat, int, FlatHash> flat_index;
    std::vector<int> support;
    std::vector<char> leq;
  };
  const Tables& tables() const;
  const std::vector<int>* product_table() const;
  std::vector<Face> enumerate_faces() const;
  std::vector<Flat> enumerate_flats() const;
  std::vector<std::vector<int>> sort_key(const std::vector<Block>& blocks, Block zero) const;

  ArrangementKind kind_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<Tables> tables_;
  mutable std::once_flag product_once_;
  mutable std::vector<int> product_table_;
};

}  // namespace polyalg
