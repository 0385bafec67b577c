#include "polyalg/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace polyalg {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Bounds for enumerating faces and flats.
constexpr int kMaxBraid = 7;
constexpr int kMaxTypeB = 5;
constexpr int kMaxCoordinate = 8;
// Bounds for the bit-mask encoding itself.
constexpr int kMaxEncodedBraid = 31;
constexpr int kMaxEncodedSigned = 16;

long long signed_factorial_a(int k) {  // (-1)^{k-1} (k-1)!
  long long f = 1;
  for (int i = 2; i < k; ++i) f *= i;
  return (k % 2 == 1) ? f : -f;
}

long long signed_double_factorial_b(int k) {  // (-1)^k (2k-1)!!
  long long f = 1;
  for (int i = 2 * k - 1; i > 1; i -= 2) f *= i;
  return (k % 2 == 0) ? f : -f;
}

// All ordered set partitions of the bits of mask.
void compositions(Block mask, std::vector<Block>& prefix,
                  const std::function<void(const std::vector<Block>&)>& emit) {
  if (mask == 0) {
    emit(prefix);
    return;
  }
  for (Block sub = mask; sub != 0; sub = (sub - 1) & mask) {
    prefix.push_back(sub);
    compositions(mask & ~sub, prefix, emit);
    prefix.pop_back();
  }
}

// All set partitions of the bits of mask; blocks generated by minimum.
void partitions(Block mask, std::vector<Block>& prefix,
                const std::function<void(const std::vector<Block>&)>& emit) {
  if (mask == 0) {
    emit(prefix);
    return;
  }
  const Block low = mask & (~mask + 1);
  const Block rest = mask & ~low;
  // Enumerate subsets of rest to join low.
  Block sub = rest;
  while (true) {
    prefix.push_back(low | sub);
    partitions(rest & ~sub, prefix, emit);
    prefix.pop_back();
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

char type_letter(ArrangementType type) {
  switch (type) {
    case ArrangementType::BraidA: return 'A';
    case ArrangementType::TypeB: return 'B';
    case ArrangementType::Coordinate: return 'C';
  }
  return '?';
}

ArrangementType parse_arrangement_type(std::string_view text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "a" || s == "braid" || s == "braida") return ArrangementType::BraidA;
  if (s == "b" || s == "typeb") return ArrangementType::TypeB;
  if (s == "c" || s == "cube" || s == "coordinate") return ArrangementType::Coordinate;
  throw InvalidArgument("unknown arrangement type: " + std::string(text));
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = f.zero;
  for (Block b : f.blocks) h = mix(h, b);
  return h;
}

std::size_t FlatHash::operator()(const Flat& x) const noexcept {
  std::size_t h = x.zero * 31u + 7u;
  for (Block b : x.blocks) h = mix(h, b);
  return h;
}

Arrangement::Arrangement(ArrangementKind kind) : kind_(kind) {
  const int d = kind.d;
  if (d < 1) throw InvalidArgument("arrangement dimension must be positive");
  const int bound = kind.type == ArrangementType::BraidA ? kMaxEncodedBraid : kMaxEncodedSigned;
  if (d > bound)
    throw ResourceLimit(std::string("arrangement ") + type_letter(kind.type) +
                        " encodes d <= " + std::to_string(bound));
}

const Arrangement::Tables& Arrangement::tables() const {
  std::call_once(once_, [this] {
    const int bound = kind_.type == ArrangementType::BraidA ? kMaxBraid
                      : kind_.type == ArrangementType::TypeB ? kMaxTypeB
                                                             : kMaxCoordinate;
    if (kind_.d > bound)
      throw ResourceLimit(std::string("arrangement ") + type_letter(kind_.type) +
                          " enumerates faces only for d <= " + std::to_string(bound));
    auto t = std::make_unique<Tables>();
    t->faces = enumerate_faces();
    for (std::size_t i = 0; i < t->faces.size(); ++i) t->face_index.emplace(t->faces[i], static_cast<int>(i));
    t->flats = enumerate_flats();
    for (std::size_t i = 0; i < t->flats.size(); ++i) t->flat_index.emplace(t->flats[i], static_cast<int>(i));
    t->support.reserve(t->faces.size());
    for (const auto& f : t->faces) t->support.push_back(t->flat_index.at(support(f)));
    const std::size_t n = t->flats.size();
    t->leq.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) t->leq[x * n + y] = leq(t->flats[x], t->flats[y]) ? 1 : 0;
    tables_ = std::move(t);
  });
  return *tables_;
}

ArrangementPtr Arrangement::get(ArrangementKind kind) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, ArrangementPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(kind.type), kind.d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto arr = std::make_shared<const Arrangement>(kind);
  cache.emplace(key, arr);
  return arr;
}

int Arrangement::element_bit(int element) const {
  const int d = kind_.d;
  if (element == 0 || element > d || element < -d)
    throw InvalidArgument("element out of range: " + std::to_string(element));
  if (element > 0) return element - 1;
  if (!signed_elements()) throw InvalidArgument("negative element in type A");
  return d - element - 1;
}

Block Arrangement::negate(Block b) const { return negate_block(kind_.d, b); }

Block Arrangement::abs_mask(Block b) const { return abs_block(kind_.d, b); }

Block negate_block(int d, Block b) {
  const Block low = (Block{1} << d) - 1;
  return ((b & low) << d) | (b >> d);
}

Block abs_block(int d, Block b) {
  const Block low = (Block{1} << d) - 1;
  return (b | (b >> d)) & low;
}

Block signed_block(int d, std::span<const int> elements) {
  Block b = 0;
  for (int e : elements) {
    if (e == 0 || e > d || e < -d) throw InvalidArgument("element out of range: " + std::to_string(e));
    b |= e > 0 ? Block{1} << (e - 1) : Block{1} << (d - e - 1);
  }
  return b;
}

Flat canonical_flat(ArrangementType type, int d, std::vector<Block> blocks, Block zero) {
  if (type == ArrangementType::BraidA) {
    std::sort(blocks.begin(), blocks.end(),
              [](Block a, Block b) { return std::countr_zero(a) < std::countr_zero(b); });
    return {blocks, 0};
  }
  for (Block& b : blocks) {
    const int k = std::countr_zero(abs_block(d, b));
    if (!(b >> k & 1u)) b = negate_block(d, b);
  }
  std::sort(blocks.begin(), blocks.end(), [&](Block a, Block b) {
    return std::countr_zero(abs_block(d, a)) < std::countr_zero(abs_block(d, b));
  });
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return {blocks, zero};
}

std::vector<int> Arrangement::elements(Block b) const {
  std::vector<int> out;
  const int d = kind_.d;
  if (!signed_elements()) {
    for (int i = 0; i < d; ++i)
      if (b >> i & 1u) out.push_back(i + 1);
    return out;
  }
  for (int i = 0; i < d; ++i) {
    if (b >> i & 1u) out.push_back(i + 1);
    if (b >> (d + i) & 1u) out.push_back(-(i + 1));
  }
  return out;
}

Block Arrangement::block_of(std::span<const int> elems) const {
  Block b = 0;
  for (int e : elems) {
    Block bit = Block{1} << element_bit(e);
    if (b & bit) throw InvalidArgument("repeated element " + std::to_string(e));
    b |= bit;
  }
  return b;
}

std::vector<std::vector<int>> Arrangement::sort_key(const std::vector<Block>& blocks,
                                                    Block zero) const {
  auto encode = [&](Block b) {
    std::vector<int> v;
    for (int e : elements(b)) v.push_back(e > 0 ? 2 * e : -2 * e + 1);
    return v;
  };
  std::vector<std::vector<int>> key;
  key.push_back({static_cast<int>(blocks.size())});
  key.push_back(encode(zero));
  for (Block b : blocks) key.push_back(encode(b));
  return key;
}

std::vector<Face> Arrangement::enumerate_faces() const {
  const int d = kind_.d;
  const Block all = (Block{1} << d) - 1;
  std::vector<Face> out;
  std::vector<Block> prefix;
  switch (kind_.type) {
    case ArrangementType::BraidA:
      compositions(all, prefix, [&](const std::vector<Block>& c) { out.push_back({c, 0}); });
      break;
    case ArrangementType::TypeB:
      for (Block z = 0; z <= all; ++z) {
        const Block rest = all & ~z;
        const Block zero = z | (z << d);
        compositions(rest, prefix, [&](const std::vector<Block>& c) {
          // independent signs for every element of rest
          const int n = std::popcount(rest);
          for (Block signs = 0; signs < (Block{1} << n); ++signs) {
            std::vector<Block> blocks;
            for (Block b : c) {
              Block sb = 0;
              int pos = 0;
              for (int i = 0; i < d; ++i) {
                if (!(rest >> i & 1u)) continue;
                if (b >> i & 1u) sb |= (signs >> pos & 1u) ? (Block{1} << (d + i)) : (Block{1} << i);
                ++pos;
              }
              blocks.push_back(sb);
            }
            out.push_back({blocks, zero});
          }
        });

      }
      break;
    case ArrangementType::Coordinate: {
      int total = 1;
      for (int i = 0; i < d; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        Face f;
        int c = code;
        for (int i = 0; i < d; ++i, c /= 3) {
          const int s = c % 3;  // 0 zero, 1 plus, 2 minus
          if (s == 0) f.zero |= (Block{1} << i) | (Block{1} << (d + i));
          else f.blocks.push_back(s == 1 ? Block{1} << i : Block{1} << (d + i));
        }
        out.push_back(std::move(f));
      }
      break;
    }
  }
  std::vector<std::pair<std::vector<std::vector<int>>, Face>> keyed;
  keyed.reserve(out.size());
  for (auto& f : out) keyed.emplace_back(sort_key(f.blocks, f.zero), std::move(f));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Face> faces;
  faces.reserve(keyed.size());
  for (auto& [k, f] : keyed) faces.push_back(std::move(f));
  return faces;
}

std::vector<Flat> Arrangement::enumerate_flats() const {
  const int d = kind_.d;
  const Block all = (Block{1} << d) - 1;
  std::vector<Flat> out;
  std::vector<Block> prefix;
  if (kind_.type == ArrangementType::BraidA) {
    partitions(all, prefix, [&](const std::vector<Block>& p) { out.push_back({p, 0}); });
  } else if (kind_.type == ArrangementType::Coordinate) {
    for (Block s = 0; s <= all; ++s) {
      Flat x;
      x.zero = s | (s << d);
      for (int i = 0; i < d; ++i)
        if (!(s >> i & 1u)) x.blocks.push_back(Block{1} << i);
      out.push_back(std::move(x));
    }
  } else {
    for (Block z = 0; z <= all; ++z) {
      const Block rest = all & ~z;
      partitions(rest, prefix, [&](const std::vector<Block>& p) {
        // Sign choices for every non-minimal element in every block.
        std::vector<int> free_bits;
        for (Block b : p) {
          Block others = b & (b - 1);
          for (int i = 0; i < d; ++i)
            if (others >> i & 1u) free_bits.push_back(i);
        }
        const std::size_t n = free_bits.size();
        for (Block signs = 0; signs < (Block{1} << n); ++signs) {
          std::vector<Block> blocks;
          for (Block b : p) {
            Block sb = 0;
            for (int i = 0; i < d; ++i) {
              if (!(b >> i & 1u)) continue;
              auto it = std::find(free_bits.begin(), free_bits.end(), i);
              bool neg = it != free_bits.end() && (signs >> (it - free_bits.begin()) & 1u);
              sb |= neg ? (Block{1} << (d + i)) : (Block{1} << i);
            }
            blocks.push_back(sb);
          }
          out.push_back(canonical_flat(blocks, z | (z << d)));
        }
      });
    }
  }
  std::vector<std::pair<std::vector<std::vector<int>>, Flat>> keyed;
  for (auto& x : out) keyed.emplace_back(sort_key(x.blocks, x.zero), std::move(x));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Flat> flats;
  flats.reserve(keyed.size());
  for (auto& [k, x] : keyed) flats.push_back(std::move(x));
  return flats;
}

std::vector<int> Arrangement::faces_of_dim(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < num_faces(); ++i)
    if (face_dim(static_cast<int>(i)) == k) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> Arrangement::find_face(const Face& f) const {
  const auto& index = tables().face_index;
  auto it = index.find(f);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

int Arrangement::face_index(const Face& f) const {
  const auto& index = tables().face_index;
  auto it = index.find(f);
  if (it == index.end()) throw InvalidArgument("not a face of this arrangement");
  return it->second;
}

int Arrangement::flat_index(const Flat& x) const {
  const auto& index = tables().flat_index;
  auto it = index.find(x);
  if (it == index.end()) throw InvalidArgument("not a flat of this arrangement");
  return it->second;
}

Flat Arrangement::canonical_flat(std::vector<Block> blocks, Block zero) const {
  return polyalg::canonical_flat(kind_.type, kind_.d, std::move(blocks), zero);
}

const std::vector<int>* Arrangement::product_table() const {
  constexpr std::size_t kProductTableLimit = 600;
  const std::size_t n = num_faces();
  if (n > kProductTableLimit) return nullptr;
  std::call_once(product_once_, [this, n] {
    std::vector<int> table(n * n);
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g)
        table[f * n + g] = face_index(tits_product(face(static_cast<int>(f)), face(static_cast<int>(g))));
    product_table_ = std::move(table);
  });
  return &product_table_;
}

int Arrangement::product(int f, int g) const {
  if (const auto* table = product_table()) return (*table)[static_cast<std::size_t>(f) * num_faces() + g];
  return face_index(tits_product(face(f), face(g)));
}

Face Arrangement::tits_product(const Face& f, const Face& g) const {
  Face r;
  switch (kind_.type) {
    case ArrangementType::BraidA:
      for (Block b : f.blocks)
        for (Block c : g.blocks)
          if (b & c) r.blocks.push_back(b & c);
      return r;
    case ArrangementType::Coordinate: {
      const int d = kind_.d;
      std::vector<std::pair<int, Block>> singles;
      for (Block b : f.blocks) singles.emplace_back(std::countr_zero(abs_mask(b)), b);
      for (Block b : g.blocks)
        if (f.zero & b) singles.emplace_back(std::countr_zero(abs_mask(b)), b);
      std::sort(singles.begin(), singles.end());
      for (auto& s : singles) r.blocks.push_back(s.second);
      r.zero = f.zero & g.zero;
      (void)d;
      return r;
    }
    case ArrangementType::TypeB: {
      // Full symmetric lists T_1..T_m, Z, -T_m..-T_1; the zero block sits at index m.
      auto full = [&](const Face& x) {
        std::vector<Block> v(x.blocks);
        v.push_back(x.zero);
        for (auto it = x.blocks.rbegin(); it != x.blocks.rend(); ++it) v.push_back(negate(*it));
        return v;
      };
      const auto lf = full(f), lg = full(g);
      const std::size_t zf = f.blocks.size(), zg = g.blocks.size();
      for (std::size_t i = 0; i < lf.size(); ++i) {
        for (std::size_t j = 0; j < lg.size(); ++j) {
          const Block x = lf[i] & lg[j];
          if (i == zf && j == zg) {
            r.zero = x;
            return r;  // blocks before the zero block are the positive side
          }
          if (x) r.blocks.push_back(x);
        }
      }
      return r;
    }
  }
  return r;
}

Flat Arrangement::support(const Face& f) const {
  return canonical_flat(f.blocks, f.zero);
}

std::vector<Block> Arrangement::full_blocks(const Flat& x) const {
  std::vector<Block> v(x.blocks);
  if (signed_elements()) {
    for (Block b : x.blocks) v.push_back(negate(b));
    if (x.zero) v.push_back(x.zero);
  }
  return v;
}

bool Arrangement::leq(const Flat& x, const Flat& y) const {
  const auto fx = full_blocks(x), fy = full_blocks(y);
  for (Block b : fy) {
    bool inside = false;
    for (Block c : fx)
      if ((b & ~c) == 0) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

Flat Arrangement::join(const Flat& x, const Flat& y) const {
  if (!signed_elements()) {
    std::vector<Block> blocks;
    for (Block b : x.blocks)
      for (Block c : y.blocks)
        if (b & c) blocks.push_back(b & c);
    return canonical_flat(blocks, 0);
  }
  const Block zero = x.zero & y.zero;
  std::vector<Block> blocks;
  auto fx = full_blocks(x), fy = full_blocks(y);
  for (Block b : fx)
    for (Block c : fy) {
      const Block m = b & c;
      if (m == 0 || (b == x.zero && c == y.zero)) continue;
      blocks.push_back(m);
    }
  return canonical_flat(blocks, zero);
}

long long Arrangement::mobius(const Flat& x, const Flat& y) const {
  if (!leq(x, y)) throw InvalidArgument("mobius requires X <= Y");
  long long mu = 1;
  auto count_inside = [&](Block s) {
    int k = 0;
    for (Block b : y.blocks)
      if ((b & ~s) == 0 || (signed_elements() && (negate(b) & ~s) == 0)) ++k;
    return k;
  };
  for (Block s : x.blocks) mu *= signed_factorial_a(count_inside(s));
  if (signed_elements()) {
    const int k0 = count_inside(x.zero);
    if (kind_.type == ArrangementType::TypeB) mu *= signed_double_factorial_b(k0);
    else mu *= (k0 % 2 == 0) ? 1 : -1;
  }
  return mu;
}

long long Arrangement::mobius_recursive(int x, int y) const {
  if (!leq(x, y)) throw InvalidArgument("mobius requires X <= Y");
  // Flats are sorted by dimension, so every Z with X <= Z < Y precedes Y.
  std::map<int, long long> mu;
  for (int z = 0; z <= y; ++z) {
    if (!leq(x, z) || !leq(z, y)) continue;
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    long long s = 0;
    for (const auto& [w, m] : mu)
      if (leq(w, z) && w != z) s += m;
    mu[z] = -s;
  }
  return mu[y];
}

RatPoly Arrangement::characteristic_polynomial(std::optional<int> under) const {
  const int top_flat = under ? *under : top();
  RatPoly chi;
  for (std::size_t y = 0; y < num_flats(); ++y) {
    const int yi = static_cast<int>(y);
    if (!leq(yi, top_flat)) continue;
    chi += RatPoly::monomial(Rational(static_cast<long>(mobius(yi, top_flat))), flat_dim(yi));
  }
  return chi;
}

std::vector<Rational> Arrangement::interior_point(const Face& f) const {
  const int d = kind_.d;
  std::vector<Rational> v(d, Rational(0));
  const int k = static_cast<int>(f.blocks.size());
  for (int i = 0; i < k; ++i) {
    const Block b = f.blocks[i];
    const int value = kind_.type == ArrangementType::BraidA ? k - 1 - i
                      : kind_.type == ArrangementType::TypeB ? k - i
                                                             : 1;
    for (int e : elements(b)) v[std::abs(e) - 1] = e > 0 ? value : -value;
  }
  return v;
}

std::vector<Rational> Arrangement::alternate_interior_point(const Face& f) const {
  const int d = kind_.d;
  std::vector<Rational> v(d, Rational(0));
  const int k = static_cast<int>(f.blocks.size());
  for (int i = 0; i < k; ++i) {
    const Block b = f.blocks[i];
    int value = 0;
    switch (kind_.type) {
      case ArrangementType::BraidA: value = 3 * (k - 1 - i) * (k - 1 - i) + 5 * (k - 1 - i); break;
      case ArrangementType::TypeB: value = (k - i) * (k - i) * 2 + 1; break;
      case ArrangementType::Coordinate: value = std::countr_zero(abs_mask(b)) + 2; break;
    }
    for (int e : elements(b)) v[std::abs(e) - 1] = e > 0 ? value : -value;
  }
  if (kind_.type == ArrangementType::BraidA)
    for (auto& x : v) x -= 7;  // shift along the lineality space
  return v;
}

Face Arrangement::face_of_point(std::span<const Rational> v) const {
  const int d = kind_.d;
  if (static_cast<int>(v.size()) != d) throw InvalidArgument("point has wrong dimension");
  Face f;
  if (kind_.type == ArrangementType::BraidA) {
    std::vector<Rational> values(v.begin(), v.end());
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (const auto& val : values) {
      Block b = 0;
      for (int i = 0; i < d; ++i)
        if (v[i] == val) b |= Block{1} << i;
      f.blocks.push_back(b);
    }
    return f;
  }
  for (int i = 0; i < d; ++i)
    if (v[i] == 0) f.zero |= (Block{1} << i) | (Block{1} << (d + i));
  auto signed_bit = [&](int i) { return v[i] > 0 ? Block{1} << i : Block{1} << (d + i); };
  if (kind_.type == ArrangementType::Coordinate) {
    for (int i = 0; i < d; ++i)
      if (v[i] != 0) f.blocks.push_back(signed_bit(i));
    return f;
  }
  std::vector<Rational> mags;
  for (int i = 0; i < d; ++i)
    if (v[i] != 0) mags.push_back(abs(v[i]));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
  for (const auto& m : mags) {
    Block b = 0;
    for (int i = 0; i < d; ++i)
      if (v[i] != 0 && abs(v[i]) == m) b |= signed_bit(i);
    f.blocks.push_back(b);
  }
  return f;
}

Face Arrangement::geometric_product(const Face& f, const Face& g) const {
  const int d = kind_.d;
  const Rational eps(1, 4 * d * d);
  auto vf = interior_point(f);
  auto vg = interior_point(g);
  for (int i = 0; i < d; ++i) vf[i] += eps * vg[i];
  return face_of_point(vf);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

// Digits are run together ("67") when every element is a positive digit.
std::string join_elements(const std::vector<int>& elems, bool compact) {
  if (compact)
    for (int e : elems)
      if (e < 1 || e > 9) compact = false;
  std::string s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0 && !compact) s += ' ';
    s += std::to_string(elems[i]);
  }
  return s;
}

std::vector<int> parse_elements(const std::string& text, bool compact_digits) {
  std::vector<int> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  bool has_space = t.find(' ') != std::string::npos;
  if (compact_digits && !has_space && t.find('-') == std::string::npos) {
    for (char c : t) {
      if (c < '1' || c > '9') throw InvalidArgument("bad element in block: " + t);
      out.push_back(c - '0');
    }
    return out;
  }
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw InvalidArgument("bad element: " + tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad element: " + tok);
    }
  }
  return out;
}

}  // namespace

std::string Arrangement::format(const Face& f) const {
  const int d = kind_.d;
  const bool compact = d <= 9;
  switch (kind_.type) {
    case ArrangementType::BraidA: {
      std::string s;
      for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        if (i) s += '|';
        s += join_elements(elements(f.blocks[i]), compact);
      }
      return s;
    }
    case ArrangementType::TypeB: {
      std::vector<std::string> parts;
      auto by_abs = [&](Block b) {
        auto e = elements(b);
        return join_elements(e, compact);
      };
      for (Block b : f.blocks) parts.push_back(by_abs(b));
      parts.push_back("0:" + by_abs(f.zero));
      for (auto it = f.blocks.rbegin(); it != f.blocks.rend(); ++it) parts.push_back(by_abs(negate(*it)));
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '|';
        s += parts[i];
      }
      return s;
    }
    case ArrangementType::Coordinate: {
      std::string s(d, '0');
      for (Block b : f.blocks) {
        for (int e : elements(b)) s[std::abs(e) - 1] = e > 0 ? '+' : '-';
      }
      return s;
    }
  }
  return {};
}

std::string Arrangement::format(const Flat& x) const {
  const bool compact = kind_.d <= 9;
  switch (kind_.type) {
    case ArrangementType::BraidA: {
      std::string s = "{";
      for (std::size_t i = 0; i < x.blocks.size(); ++i) {
        if (i) s += ',';
        s += join_elements(elements(x.blocks[i]), compact);
      }
      return s + "}";
    }
    case ArrangementType::TypeB: {
      std::string s = "{0:" + join_elements(elements(x.zero), compact);
      for (Block b : x.blocks) {
        s += "," + join_elements(elements(b), compact);
        s += "," + join_elements(elements(negate(b)), compact);
      }
      return s + "}";
    }
    case ArrangementType::Coordinate: {
      std::string s = "X_{";
      bool first = true;
      for (int e : elements(x.zero)) {
        if (e < 0) continue;
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
      }
      return s + "}";
    }
  }
  return {};
}

Face Arrangement::parse_face(std::string_view text) const {
  const int d = kind_.d;
  const Block all_signed = signed_elements() ? (Block{1} << (2 * d)) - 1 : (Block{1} << d) - 1;
  std::string t = trim(text);
  Face f;
  switch (kind_.type) {
    case ArrangementType::BraidA: {
      Block seen = 0;
      for (const auto& part : split(t, '|')) {
        auto e = parse_elements(part, d <= 9);
        if (e.empty()) throw InvalidArgument("empty block in composition: " + t);
        Block b = block_of(e);
        if (b & seen) throw InvalidArgument("blocks overlap: " + t);
        seen |= b;
        f.blocks.push_back(b);
      }
      if (seen != all_signed) throw InvalidArgument("composition does not cover [d]: " + t);
      break;
    }
    case ArrangementType::TypeB: {
      auto parts = split(t, '|');
      std::size_t zi = parts.size();
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (trim(parts[i]).rfind("0:", 0) == 0) {
          if (zi != parts.size()) throw InvalidArgument("two zero blocks: " + t);
          zi = i;
        }
      if (zi == parts.size()) throw InvalidArgument("missing zero block (\"0:\"): " + t);
      if (2 * zi + 1 != parts.size()) throw InvalidArgument("signed composition is not symmetric: " + t);
      std::string zs = trim(parts[zi]).substr(2);
      f.zero = block_of(parse_elements(zs, d <= 9));
      if (negate(f.zero) != f.zero) throw InvalidArgument("zero block must be closed under negation");
      Block seen = f.zero;
      for (std::size_t i = 0; i < zi; ++i) {
        auto e = parse_elements(parts[i], d <= 9);
        if (e.empty()) throw InvalidArgument("empty block: " + t);
        Block b = block_of(e);
        Block mirror = block_of(parse_elements(parts[parts.size() - 1 - i], d <= 9));
        if (mirror != negate(b)) throw InvalidArgument("signed composition is not symmetric: " + t);
        if ((b | negate(b)) & seen || (b & negate(b))) throw InvalidArgument("blocks overlap: " + t);
        seen |= b | negate(b);
        f.blocks.push_back(b);
      }
      if (seen != all_signed) throw InvalidArgument("signed composition does not cover [+-d]: " + t);
      break;
    }
    case ArrangementType::Coordinate: {
      std::string s;
      for (char c : t)
        if (c != '(' && c != ')' && c != ',' && c != ' ') s += c;
      if (static_cast<int>(s.size()) != d) throw InvalidArgument("sign vector has wrong length: " + t);
      for (int i = 0; i < d; ++i) {
        if (s[i] == '0') f.zero |= (Block{1} << i) | (Block{1} << (d + i));
        else if (s[i] == '+') f.blocks.push_back(Block{1} << i);
        else if (s[i] == '-') f.blocks.push_back(Block{1} << (d + i));
        else throw InvalidArgument("bad sign character in: " + t);
      }
      break;
    }
  }
  return f;
}

Flat Arrangement::parse_flat(std::string_view text) const {
  const int d = kind_.d;
  std::string t = trim(text);
  if (kind_.type == ArrangementType::Coordinate) {
    if (t.rfind("X_{", 0) != 0 || t.back() != '}') throw InvalidArgument("expected X_{...}: " + t);
    std::string inner = t.substr(3, t.size() - 4);
    Block s = 0;
    if (!trim(inner).empty())
      for (const auto& part : split(inner, ',')) {
        auto e = parse_elements(part, false);
        if (e.size() != 1 || e[0] < 1) throw InvalidArgument("bad coordinate in: " + t);
        s |= Block{1} << element_bit(e[0]);
      }
    Flat x;
    x.zero = s | (s << d);
    for (int i = 0; i < d; ++i)
      if (!(s >> i & 1u)) x.blocks.push_back(Block{1} << i);
    return x;
  }
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw InvalidArgument("expected {...}: " + t);
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<Block> blocks;
  Block zero = 0;
  Block seen = 0;
  for (const auto& raw : split(inner, ',')) {
    std::string part = trim(raw);
    if (part.rfind("0:", 0) == 0) {
      if (!signed_elements()) throw InvalidArgument("zero block in type A flat");
      Block z = block_of(parse_elements(part.substr(2), d <= 9));
      if (negate(z) != z) throw InvalidArgument("zero block must be closed under negation");
      if (z & seen) throw InvalidArgument("blocks overlap: " + t);
      zero = z;
      seen |= z;
      continue;
    }
    auto e = parse_elements(part, d <= 9);
    if (e.empty()) throw InvalidArgument("empty block: " + t);
    Block b = block_of(e);
    if (signed_elements()) {
      if (b & negate(b)) throw InvalidArgument("nonzero block meets its negative: " + t);
      if (b & seen) {
        // listing both a block and its negative is allowed
        if ((seen & (b | negate(b))) == (b | negate(b)) &&
            std::find(blocks.begin(), blocks.end(), negate(b)) != blocks.end())
          continue;
        throw InvalidArgument("blocks overlap: " + t);
      }
      seen |= b | negate(b);
    } else {
      if (b & seen) throw InvalidArgument("blocks overlap: " + t);
      seen |= b;
    }
    blocks.push_back(b);
  }
  const Block all = signed_elements() ? (Block{1} << (2 * d)) - 1 : (Block{1} << d) - 1;
  if (seen != all) throw InvalidArgument("partition does not cover the ground set: " + t);
  return canonical_flat(blocks, zero);
}

}  // namespace polyalg
