#include "polyalg/permstat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace polyalg {

namespace {

// Cycles are space separated integers; "(2658)" is read digit by digit
// when d <= 9.
std::vector<std::vector<int>> parse_cycle_text(std::string_view text, int d) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  const std::string s(text);
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw InvalidArgument("expected '(' in cycle notation: " + s);
    auto close = s.find(')', i);
    if (close == std::string::npos) throw InvalidArgument("unbalanced cycle notation: " + s);
    const std::string body = s.substr(i + 1, close - i - 1);
    std::vector<int> cyc;
    if (d <= 9 && body.size() > 1 && body.find_first_of(" -") == std::string::npos) {
      for (char c : body) {
        if (c < '1' || c > '9') throw InvalidArgument("bad cycle element in: " + body);
        cyc.push_back(c - '0');
      }
      cycles.push_back(cyc);
      i = close + 1;
      continue;
    }
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::logic_error&) {
        throw InvalidArgument("bad cycle element: " + tok);
      }
      if (pos != tok.size()) throw InvalidArgument("bad cycle element: " + tok);
      cyc.push_back(v);
    }
    if (cyc.empty()) throw InvalidArgument("empty cycle in: " + s);
    cycles.push_back(cyc);
    i = close + 1;
  }
  return cycles;
}

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::logic_error&) {
    return fallback;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int d = static_cast<int>(img_.size());
  std::vector<char> seen(d + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > d || seen[v]) throw InvalidArgument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text, int d) {
  std::vector<int> img(d, 0);
  for (const auto& c : parse_cycle_text(text, d)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i], b = c[(i + 1) % c.size()];
      if (a < 1 || a > d || b < 1 || b > d) throw InvalidArgument("cycle element out of range");
      if (img[a - 1] != 0) throw InvalidArgument("element repeated in cycles");
      img[a - 1] = b;
    }
  }
  for (int i = 0; i < d; ++i)
    if (img[i] == 0) img[i] = i + 1;
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int d = size();
  std::vector<char> seen(d + 1, 0);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= d; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j - 1]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const { return cycles_to_string(cycles()); }

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
  const int d = static_cast<int>(img_.size());
  std::vector<char> seen(d + 1, 0);
  for (int v : img_) {
    const int a = std::abs(v);
    if (a < 1 || a > d || seen[a]) throw InvalidArgument("not a signed permutation");
    seen[a] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int d) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 1);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::parse(std::string_view text, int d) {
  std::map<int, int> map;
  for (const auto& c : parse_cycle_text(text, d)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i], b = c[(i + 1) % c.size()];
      if (a == 0 || b == 0 || std::abs(a) > d || std::abs(b) > d)
        throw InvalidArgument("cycle element out of range");
      for (auto [x, y] : {std::pair{a, b}, std::pair{-a, -b}}) {
        auto it = map.find(x);
        if (it != map.end() && it->second != y)
          throw InvalidArgument("cycles are not closed under negation");
        map[x] = y;
      }
    }
  }
  std::vector<int> img(d);
  for (int i = 1; i <= d; ++i) {
    auto it = map.find(i);
    img[i - 1] = it == map.end() ? i : it->second;
  }
  return SignedPermutation(std::move(img));
}

std::vector<std::vector<int>> SignedPermutation::cycles() const {
  const int d = size();
  std::vector<char> seen(2 * d + 1, 0);
  auto slot = [d](int x) { return x + d; };
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= d; ++a) {
    for (int start : {a, -a}) {
      if (seen[slot(start)]) continue;
      std::vector<int> c;
      for (int j = start; !seen[slot(j)]; j = (*this)(j)) {
        seen[slot(j)] = 1;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::string SignedPermutation::to_string() const { return cycles_to_string(cycles()); }

// ---------------------------------------------------------------------------

PermStats stats(const Permutation& sigma) {
  PermStats s;
  const int d = sigma.size();
  for (int i = 1; i <= d; ++i) {
    if (sigma(i) > i) ++s.exc;
    if (i < d && sigma(i) > sigma(i + 1)) ++s.des;
  }
  for (const auto& c : sigma.cycles()) {
    Block b = 0;
    for (int x : c) b |= Block{1} << (x - 1);
    s.supp.blocks.push_back(b);  // cycles() is ordered by minimum
  }
  return s;
}

SignedPermStats stats_signed(const SignedPermutation& sigma) {
  SignedPermStats s;
  const int d = sigma.size();
  for (int i = 1; i <= d; ++i) {
    if (sigma(i) > i) ++s.exc;
    if (sigma(i) < 0) ++s.fneg;
  }
  for (int i = 0; i < d; ++i) {
    const int a = i == 0 ? 0 : sigma(i);
    if (a > sigma(i + 1)) ++s.des;
  }
  s.fexc = 2 * s.exc + s.fneg;
  s.exc_b = s.exc + (s.fneg + 1) / 2;
  std::vector<Block> blocks;
  Block zero = 0;
  for (const auto& c : sigma.cycles()) {
    const Block b = signed_block(d, c);
    if (negate_block(d, b) == b) zero |= b;
    else blocks.push_back(b);
  }
  s.supp = canonical_flat(ArrangementType::TypeB, d, blocks, zero);
  return s;
}

int exc_prec(const std::vector<int>& cycle) {
  int d = 0;
  for (int x : cycle) {
    if (x == 0) throw InvalidArgument("zero is not an element");
    d = std::max(d, std::abs(x));
  }
  for (int x : cycle)
    if (std::find(cycle.begin(), cycle.end(), -x) != cycle.end())
      throw InvalidArgument("cycle support is not involution-exclusive");
  auto key = [d](int x) { return x > 0 ? d + x : -x; };
  int count = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
    if (key(to) > key(from)) ++count;
  }
  return count;
}

int exc_b_by_blocks(const SignedPermutation& sigma) {
  int exc0 = 0, fneg0 = 0, total = 0;
  for (const auto& c : sigma.cycles()) {
    const bool inclusive = std::find(c.begin(), c.end(), -c[0]) != c.end();
    if (inclusive) {
      for (int x : c) {
        if (x < 0) continue;
        if (sigma(x) > x) ++exc0;
        if (sigma(x) < 0) ++fneg0;
      }
    } else if (c[0] > 0) {
      // cycles() starts at the least absolute value, positive first; take
      // the representative beginning with a positive element.
      total += exc_prec(c);
    }
  }
  return total + exc0 + (fneg0 + 1) / 2;
}

// ---------------------------------------------------------------------------

IncreasingForest::IncreasingForest(int n, std::vector<int> parent) : parent_(std::move(parent)) {
  if (static_cast<int>(parent_.size()) != n) throw InvalidArgument("parent array has wrong length");
  for (int v = 1; v <= n; ++v) {
    const int p = parent_[v - 1];
    if (p < 0 || p >= v) throw InvalidArgument("forest is not increasing at node " + std::to_string(v));
  }
}

IncreasingForest IncreasingForest::parse(std::string_view text) {
  const std::string s(text);
  std::map<int, int> parent;
  std::size_t i = 0;
  std::vector<int> stack;  // current ancestors
  std::vector<int> last_child(1, 0);
  int last = 0;
  auto read_int = [&]() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw InvalidArgument("expected node label in forest: " + s);
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == ',') {
      ++i;
      continue;
    }
    if (c == '(') {
      stack.push_back(last);
      last_child.push_back(0);
      ++i;
      continue;
    }
    if (c == ')') {
      if (stack.empty()) throw InvalidArgument("unbalanced forest notation: " + s);
      stack.pop_back();
      last_child.pop_back();
      ++i;
      continue;
    }
    const int v = read_int();
    if (parent.count(v)) throw InvalidArgument("repeated node in forest: " + s);
    const int p = stack.empty() ? 0 : stack.back();
    if (v <= last_child.back()) throw InvalidArgument("children must increase left to right: " + s);
    last_child.back() = v;
    parent[v] = p;
    last = v;
  }
  if (!stack.empty()) throw InvalidArgument("unbalanced forest notation: " + s);
  const int n = static_cast<int>(parent.size());
  std::vector<int> par(n);
  for (int v = 1; v <= n; ++v) {
    auto it = parent.find(v);
    if (it == parent.end()) throw InvalidArgument("forest nodes must be 1..n: " + s);
    par[v - 1] = it->second;
  }
  return IncreasingForest(n, std::move(par));
}

std::vector<int> IncreasingForest::children(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= size(); ++u)
    if (parent_[u - 1] == v) out.push_back(u);
  return out;
}

std::vector<int> IncreasingForest::roots() const { return children(0); }

std::vector<int> IncreasingForest::leaves() const {
  std::vector<char> has_child(size() + 1, 0);
  for (int p : parent_) has_child[p] = 1;
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v)
    if (parent_[v - 1] != 0 && !has_child[v]) out.push_back(v);
  return out;
}

std::vector<int> IncreasingForest::path_to_root(int node) const {
  std::vector<int> path;
  for (int v = node; v != 0; v = parent_[v - 1]) path.push_back(v);
  return path;
}

std::vector<Block> IncreasingForest::components() const {
  std::vector<Block> out;
  for (int r : roots()) {
    Block b = 0;
    for (int v = 1; v <= size(); ++v)
      if (path_to_root(v).back() == r) b |= Block{1} << (v - 1);
    out.push_back(b);
  }
  return out;
}

std::string IncreasingForest::to_string() const {
  std::function<std::string(int)> render = [&](int v) {
    std::string s = std::to_string(v);
    auto ch = children(v);
    if (ch.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i) s += ',';
      s += render(ch[i]);
    }
    return s + ")";
  };
  std::string out;
  for (int r : roots()) {
    if (!out.empty()) out += ' ';
    out += render(r);
  }
  return out;
}

namespace {

// Attach the word w (all entries larger than root) below root.
void grow(int root, const std::vector<int>& w, std::vector<int>& parent) {
  // Right-to-left minima of w, read left to right.
  std::vector<std::size_t> minima;
  int current = 0;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (minima.empty() || w[k] < current) {
      minima.push_back(k);
      current = w[k];
    }
  }
  std::reverse(minima.begin(), minima.end());
  std::size_t start = 0;
  for (std::size_t m : minima) {
    const int child = w[m];
    parent[child - 1] = root;
    grow(child, std::vector<int>(w.begin() + start, w.begin() + m), parent);
    start = m + 1;
  }
}

}  // namespace

IncreasingForest forest_of(const Permutation& sigma) {
  const int d = sigma.size();
  std::vector<int> parent(d, 0);
  for (auto c : sigma.cycles()) {
    // cycles() starts at the minimum; rotate it to the last position.
    std::rotate(c.begin(), c.begin() + 1, c.end());
    const int m = c.back();
    c.pop_back();
    parent[m - 1] = 0;
    grow(m, c, parent);
  }
  return IncreasingForest(d, std::move(parent));
}

Permutation perm_of(const IncreasingForest& forest) {
  const int n = forest.size();
  std::vector<int> img(n, 0);
  for (int r : forest.roots()) {
    // Contour walk: a node is recorded when the walk passes it for the
    // last time, i.e. after its whole subtree.
    std::vector<int> order;
    std::vector<std::pair<int, std::size_t>> stack{{r, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto ch = forest.children(v);
      if (next < ch.size()) {
        const int c = ch[next++];
        stack.emplace_back(c, 0);
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) img[order[i] - 1] = order[(i + 1) % order.size()];
  }
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------

EnumerationBounds enumeration_bounds() {
  EnumerationBounds b;
  b.max_symmetric = env_int("POLYALG_MAX_SYM_D", b.max_symmetric);
  b.max_hyperoctahedral = env_int("POLYALG_MAX_HYPEROCT_D", b.max_hyperoctahedral);
  return b;
}

void for_each_permutation(int d, const std::function<void(const Permutation&)>& fn) {
  if (d < 1) throw InvalidArgument("d must be positive");
  if (d > enumeration_bounds().max_symmetric)
    throw ResourceLimit("S_d enumeration bound exceeded (d = " + std::to_string(d) + ")");
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 1);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

void for_each_signed_permutation(int d, const std::function<void(const SignedPermutation&)>& fn) {
  if (d < 1) throw InvalidArgument("d must be positive");
  if (d > enumeration_bounds().max_hyperoctahedral)
    throw ResourceLimit("B_d enumeration bound exceeded (d = " + std::to_string(d) + ")");
  std::vector<SignedPermutation> all;
  std::vector<int> base(d);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << d); ++signs) {
      std::vector<int> img(base);
      for (int i = 0; i < d; ++i)
        if (signs >> i & 1u) img[i] = -img[i];
      all.emplace_back(std::move(img));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(all.begin(), all.end());
  for (const auto& s : all) fn(s);
}

std::vector<Permutation> enumerate_symmetric(int d, const PermFilter& filter) {
  std::vector<Permutation> out;
  for_each_permutation(d, [&](const Permutation& p) {
    if (filter.supp || filter.exc) {
      auto s = stats(p);
      if (filter.supp && s.supp != *filter.supp) return;
      if (filter.exc && s.exc != *filter.exc) return;
    }
    out.push_back(p);
  });
  return out;
}

std::vector<SignedPermutation> enumerate_hyperoctahedral(int d, const PermFilter& filter) {
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(d, [&](const SignedPermutation& p) {
    if (filter.supp || filter.exc) {
      auto s = stats_signed(p);
      if (filter.supp && s.supp != *filter.supp) return;
      if (filter.exc && s.exc_b != *filter.exc) return;
    }
    out.push_back(p);
  });
  return out;
}

}  // namespace polyalg
