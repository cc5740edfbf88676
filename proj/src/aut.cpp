#include "circ/aut.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <utility>

#include "circ/error.hpp"

namespace circ {

namespace {

struct Digraph {
  int n = 0;
  std::array<Mask, kMaxOrder> out{};
  std::array<Mask, kMaxOrder> in{};

  explicit Digraph(const ConnectionSet& s) : n(s.order()) {
    const Mask neg = s.negate().bits();
    for (int v = 0; v < n; ++v) {
      out[v] = rotate(s.bits(), v, n);
      in[v] = rotate(neg, v, n);
    }
  }
};

// Ordered partition; cell order carries meaning, vertex order inside a
// cell does not.
struct Node {
  std::vector<Mask> cells;
  std::uint64_t trace = 0;

  bool discrete(int n) const { return static_cast<int>(cells.size()) == n; }
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Splits cells by (out, in) neighbour counts into every cell until the
// partition is equitable. Every decision depends only on counts and cell
// positions, so g(refine(P)) = refine(g(P)) for automorphisms g.
void refine(Node& node, const Digraph& g) {
  std::array<std::pair<int, int>, kMaxOrder> keyed{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < node.cells.size(); ++w) {
      const Mask splitter = node.cells[w];
      for (std::size_t c = 0; c < node.cells.size(); ++c) {
        const Mask cell = node.cells[c];
        if ((cell & (cell - 1)) == 0) continue;
        int count = 0;
        bool uniform = true;
        for (Mask b = cell; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          const int key = std::popcount(g.out[v] & splitter) * (kMaxOrder + 1) +
                          std::popcount(g.in[v] & splitter);
          keyed[count++] = {key, v};
          if (keyed[0].first != key) uniform = false;
        }
        if (uniform) continue;
        std::sort(keyed.begin(), keyed.begin() + count);
        std::vector<Mask> parts;
        node.trace = mix(node.trace, (w << 16) | c);
        for (int i = 0; i < count;) {
          int j = i;
          Mask part = 0;
          while (j < count && keyed[j].first == keyed[i].first) part |= Mask{1} << keyed[j++].second;
          node.trace = mix(node.trace, (static_cast<std::uint64_t>(keyed[i].first) << 8) | (j - i));
          parts.push_back(part);
          i = j;
        }
        node.cells[c] = parts.front();
        node.cells.insert(node.cells.begin() + static_cast<std::ptrdiff_t>(c) + 1, parts.begin() + 1,
                          parts.end());
        changed = true;
      }
    }
  }
  node.trace = mix(node.trace, node.cells.size());
}

Node individualize(const Node& parent, std::size_t cell, int v, const Digraph& g) {
  Node child = parent;
  const Mask single = Mask{1} << v;
  child.cells[cell] = single;
  child.cells.insert(child.cells.begin() + static_cast<std::ptrdiff_t>(cell) + 1,
                     parent.cells[cell] & ~single);
  child.trace = mix(parent.trace, 0xC0FFEEULL + cell);
  refine(child, g);
  return child;
}

bool same_shape(const Node& a, const Node& b) {
  if (a.trace != b.trace || a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (std::popcount(a.cells[i]) != std::popcount(b.cells[i])) return false;
  }
  return true;
}

std::size_t first_nonsingleton(const Node& node) {
  for (std::size_t i = 0; i < node.cells.size(); ++i) {
    if (node.cells[i] & (node.cells[i] - 1)) return i;
  }
  return node.cells.size();
}

bool is_automorphism(const std::vector<int>& img, const Digraph& g) {
  for (int v = 0; v < g.n; ++v) {
    Mask mapped = 0;
    for (Mask b = g.out[v]; b != 0; b &= b - 1) mapped |= Mask{1} << img[std::countr_zero(b)];
    if (mapped != g.out[img[v]]) return false;
  }
  return true;
}

class StabilizerSearch {
 public:
  StabilizerSearch(const ConnectionSet& s) : set_(s), graph_(s) {}

  AutomorphismData run() {
    const int n = graph_.n;
    Node root;
    root.cells = {full_mask(n)};
    path_.push_back(individualize(root, 0, 0, graph_));
    while (!path_.back().discrete(n)) {
      const std::size_t cell = first_nonsingleton(path_.back());
      const int b = std::countr_zero(path_.back().cells[cell]);
      target_cell_.push_back(cell);
      base_.push_back(b);
      path_.push_back(individualize(path_.back(), cell, b, graph_));
    }
    seed_multipliers();

    const std::size_t depth = base_.size();
    std::vector<int> orbit_sizes(depth, 1);
    for (std::size_t level = depth; level-- > 0;) {
      std::vector<char> in_orbit = orbit(level);
      const Mask candidates = path_[level].cells[target_cell_[level]];
      for (Mask b = candidates; b != 0; b &= b - 1) {
        const int x = std::countr_zero(b);
        if (in_orbit[x]) continue;
        Node child = individualize(path_[level], target_cell_[level], x, graph_);
        if (!same_shape(child, path_[level + 1])) continue;
        if (auto found = descend(child, level + 1)) {
          gens_.push_back(std::move(*found));
          in_orbit = orbit(level);
        }
      }
      orbit_sizes[level] = static_cast<int>(std::count(in_orbit.begin(), in_orbit.end(), 1));
    }

    AutomorphismData data;
    data.degree = n;
    data.base.push_back(0);
    data.base.insert(data.base.end(), base_.begin(), base_.end());
    data.orbit_sizes.push_back(n);
    data.orbit_sizes.insert(data.orbit_sizes.end(), orbit_sizes.begin(), orbit_sizes.end());
    for (auto& g : gens_) data.stabilizer_generators.emplace_back(std::move(g));
    return data;
  }

 private:
  // Multipliers fixing S are automorphisms in Stab(0); seeding them saves
  // searches at the top level.
  void seed_multipliers() {
    const Modulus& mod = set_.modulus();
    for (int a : units(mod)) {
      if (a == 1 || set_.scale(a) != set_) continue;
      std::vector<int> img(graph_.n);
      for (int i = 0; i < graph_.n; ++i) img[i] = mod.reduce(static_cast<long long>(a) * i);
      gens_.push_back(std::move(img));
    }
  }

  // Orbit of base_[level] under generators fixing base_[0..level-1].
  std::vector<char> orbit(std::size_t level) const {
    std::vector<const std::vector<int>*> usable;
    for (const auto& g : gens_) {
      bool ok = true;
      for (std::size_t j = 0; j < level && ok; ++j) ok = g[base_[j]] == base_[j];
      if (ok) usable.push_back(&g);
    }
    std::vector<char> seen(graph_.n, 0);
    std::vector<int> queue{base_[level]};
    seen[base_[level]] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto* g : usable) {
        const int y = (*g)[queue[i]];
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  // Looks for an automorphism mapping the first path's leaf to a leaf below
  // node, which sits at the given depth.
  std::optional<std::vector<int>> descend(const Node& node, std::size_t depth) const {
    if (node.discrete(graph_.n)) {
      const Node& leaf = path_.back();
      std::vector<int> img(graph_.n);
      for (std::size_t i = 0; i < leaf.cells.size(); ++i) {
        img[std::countr_zero(leaf.cells[i])] = std::countr_zero(node.cells[i]);
      }
      if (is_automorphism(img, graph_)) return img;
      return std::nullopt;
    }
    const std::size_t cell = target_cell_[depth];
    for (Mask b = node.cells[cell]; b != 0; b &= b - 1) {
      Node child = individualize(node, cell, std::countr_zero(b), graph_);
      if (!same_shape(child, path_[depth + 1])) continue;
      if (auto found = descend(child, depth + 1)) return found;
    }
    return std::nullopt;
  }

  const ConnectionSet& set_;
  Digraph graph_;
  std::vector<Node> path_;  // path_[0] has 0 individualized; path_[i+1] adds base_[i]
  std::vector<std::size_t> target_cell_;
  std::vector<int> base_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace

BigInt AutomorphismData::order() const {
  BigInt r = 1;
  for (int s : orbit_sizes) r *= s;
  return r;
}

long long AutomorphismData::stabilizer_order_saturated() const {
  constexpr long long cap = 1LL << 62;
  long long r = 1;
  for (std::size_t i = 1; i < orbit_sizes.size(); ++i) {
    if (r > cap / orbit_sizes[i]) return cap;
    r *= orbit_sizes[i];
  }
  return r;
}

PermGroup AutomorphismData::group() const {
  std::vector<Permutation> gens{rho(degree)};
  gens.insert(gens.end(), stabilizer_generators.begin(), stabilizer_generators.end());
  return PermGroup::from_strong_generating_set(base, std::move(gens), degree);
}

bool AutomorphismData::normalizes_regular_cycle() const {
  // <rho, Stab(0)> normalizes <rho> iff each stabilizer generator does; a
  // permutation s does iff s(x + 1) - s(x) is constant.
  for (const auto& s : stabilizer_generators) {
    const int k = s(1) - s(0);
    for (int x = 0; x < degree; ++x) {
      if ((s((x + 1) % degree) - s(x) - k) % degree != 0) return false;
    }
  }
  return true;
}

AutomorphismData compute_automorphisms(const ConnectionSet& s, int ceiling) {
  if (s.order() > ceiling) {
    throw ResourceError("order " + std::to_string(s.order()) +
                        " exceeds the automorphism ceiling " + std::to_string(ceiling));
  }
  return StabilizerSearch(s).run();
}

PermGroup aut_group(const ConnectionSet& s, int ceiling) {
  return compute_automorphisms(s, ceiling).group();
}

BigInt aut_order(const ConnectionSet& s, int ceiling) {
  return compute_automorphisms(s, ceiling).order();
}

bool is_normal(const ConnectionSet& s, int ceiling) {
  return aut_group(s, ceiling).normalizes_regular_cycle();
}

bool is_drr(const ConnectionSet& s, int ceiling) {
  return compute_automorphisms(s, ceiling).stabilizer_order_saturated() == 1;
}

bool is_small(const ConnectionSet& s, int ceiling) {
  return s.is_graph() && compute_automorphisms(s, ceiling).stabilizer_order_saturated() == 2;
}

bool admits_multiplier(const ConnectionSet& s, int a) { return s.scale(a) == s; }

namespace {

void check_cross_sym_args(int n, int m) {
  if (m < 4 || n % m != 0 || gcd(m, n / m) != 1) {
    throw InvalidArgument("1 x S_m test requires m >= 4, m | n and gcd(m, n/m) = 1");
  }
}

template <typename F>
Permutation inner_map(int n, int m, F&& sigma) {
  check_cross_sym_args(n, m);
  CrtSplit crt(Modulus(n), m);
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) {
    auto [i, j] = crt.split(x);
    img[x] = crt.join(i, sigma(j));
  }
  return Permutation(std::move(img));
}

}  // namespace

Permutation inner_transposition(int n, int m) {
  return inner_map(n, m, [](int j) { return j == 0 ? 1 : (j == 1 ? 0 : j); });
}

Permutation inner_cycle(int n, int m) {
  return inner_map(n, m, [m](int j) { return (j + 1) % m; });
}

bool contains_one_cross_sym(const ConnectionSet& s, int m, int ceiling) {
  check_cross_sym_args(s.order(), m);
  const PermGroup g = aut_group(s, ceiling);
  return g.contains(inner_transposition(s.order(), m)) && g.contains(inner_cycle(s.order(), m));
}

ClassificationRecord classify(const ConnectionSet& s, int ceiling) {
  ClassificationRecord r{.set = s, .aut_order = 0, .gw = {}, .dw = {}};
  r.is_graph = s.is_graph();
  r.gw = gw_witness(s);
  r.dw = dw_witness(s);
  r.is_sdw = r.dw.has_value() && !r.gw.has_value();
  const AutomorphismData data = compute_automorphisms(s, ceiling);
  r.aut_order = data.order();
  const long long stab = data.stabilizer_order_saturated();
  r.is_drr = stab == 1;
  r.is_small = r.is_graph && stab == 2;
  r.is_normal = data.normalizes_regular_cycle();
  return r;
}

}  // namespace circ
