#include "circ/perm.hpp"

#include <deque>
#include <string>
#include <unordered_set>

#include "circ/error.hpp"

namespace circ {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int y : images_) {
    if (y < 0 || y >= degree() || hit[y]) {
      throw InvalidArgument("permutation images are not a bijection");
    }
    hit[y] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  for (int i = 0; i < degree; ++i) p.images_[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("permutation degree mismatch");
  Permutation r;
  r.images_.resize(q.images_.size());
  for (int i = 0; i < q.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

bool Permutation::is_rotation() const {
  const int n = degree();
  if (n == 0) return true;
  const int k = images_[0];
  for (int i = 0; i < n; ++i) {
    if (images_[i] != (i + k) % n) return false;
  }
  return true;
}

Permutation rho(int n) {
  Modulus mod(n);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation(std::move(img));
}

Permutation iota(int n) {
  Modulus mod(n);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Permutation(std::move(img));
}

Permutation unit_perm(int a, int n) {
  UnitAction u(a, Modulus(n));
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = u(i);
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------

PermGroup PermGroup::group_from_generators(std::span<const Permutation> gens) {
  if (gens.empty()) throw InvalidArgument("group_from_generators needs at least one generator");
  const int n = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != n) throw InvalidArgument("generator degree mismatch");
  }
  PermGroup group(n);
  for (int b = 0; b + 1 < n; ++b) {
    group.base_.push_back(b);
    Level lvl;
    lvl.base_point = b;
    lvl.position.assign(n, -1);
    group.levels_.push_back(std::move(lvl));
  }
  for (std::size_t i = 0; i < group.levels_.size(); ++i) group.rebuild_orbit(i);

  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    group.generators_.push_back(g);
    Permutation residue = g;
    group.sift(residue, 0);
    if (!residue.is_identity()) group.add_strong_generator(0, g);
  }
  return group;
}

PermGroup PermGroup::from_strong_generating_set(std::vector<int> base,
                                                std::vector<Permutation> gens, int degree) {
  PermGroup group(degree);
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
  }
  group.base_ = std::move(base);
  for (const auto& g : gens) {
    if (!g.is_identity()) group.generators_.push_back(g);
  }
  for (std::size_t i = 0; i < group.base_.size(); ++i) {
    Level lvl;
    lvl.base_point = group.base_[i];
    lvl.position.assign(degree, -1);
    for (const auto& g : group.generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) {
        fixes_prefix = g(group.base_[j]) == group.base_[j];
      }
      if (fixes_prefix) lvl.strong_gens.push_back(g);
    }
    group.levels_.push_back(std::move(lvl));
    group.rebuild_orbit(i);
  }
  return group;
}

void PermGroup::rebuild_orbit(std::size_t level) {
  Level& lvl = levels_[level];
  if (lvl.orbit.empty()) {
    lvl.orbit.push_back(lvl.base_point);
    lvl.position[lvl.base_point] = 0;
    lvl.transversal.push_back(Permutation::identity(degree_));
    lvl.transversal_inv.push_back(Permutation::identity(degree_));
  }
  for (std::size_t idx = 0; idx < lvl.orbit.size(); ++idx) {
    const int x = lvl.orbit[idx];
    for (const auto& s : lvl.strong_gens) {
      const int y = s(x);
      if (lvl.position[y] >= 0) continue;
      lvl.position[y] = static_cast<int>(lvl.orbit.size());
      lvl.orbit.push_back(y);
      Permutation u = s * lvl.transversal[idx];
      lvl.transversal_inv.push_back(u.inverse());
      lvl.transversal.push_back(std::move(u));
    }
  }
  lvl.checked.resize(lvl.orbit.size());
  for (auto& row : lvl.checked) row.resize(lvl.strong_gens.size(), 0);
}

void PermGroup::add_strong_generator(std::size_t level, const Permutation& g) {
  if (level >= levels_.size()) return;
  levels_[level].strong_gens.push_back(g);
  rebuild_orbit(level);

  // Sift every Schreier generator not yet known to lie in the next stabilizer.
  // Deeper levels only grow, so a pair once verified stays verified.
  bool progress = true;
  while (progress) {
    progress = false;
    Level& lvl = levels_[level];
    for (std::size_t xi = 0; xi < lvl.orbit.size(); ++xi) {
      for (std::size_t si = 0; si < lvl.strong_gens.size(); ++si) {
        if (levels_[level].checked[xi][si]) continue;
        levels_[level].checked[xi][si] = 1;
        const Level& cur = levels_[level];
        const Permutation& s = cur.strong_gens[si];
        const int image = s(cur.orbit[xi]);
        Permutation schreier =
            cur.transversal_inv[cur.position[image]] * (s * cur.transversal[xi]);
        sift(schreier, level + 1);
        if (!schreier.is_identity()) {
          add_strong_generator(level + 1, schreier);
          progress = true;
        }
      }
    }
  }
}

std::size_t PermGroup::sift(Permutation& g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& lvl = levels_[l];
    const int pos = lvl.position[g(lvl.base_point)];
    if (pos < 0) return l;
    if (pos != 0) g = lvl.transversal_inv[pos] * g;
  }
  return levels_.size();
}

std::vector<int> PermGroup::orbit_sizes() const {
  std::vector<int> out;
  for (const auto& lvl : levels_) out.push_back(static_cast<int>(lvl.orbit.size()));
  return out;
}

BigInt PermGroup::order() const {
  BigInt r = 1;
  for (const auto& lvl : levels_) r *= lvl.orbit.size();
  return r;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation g = p;
  if (sift(g, 0) != levels_.size()) return false;
  return g.is_identity();
}

bool PermGroup::normalizes_regular_cycle() const {
  const Permutation r = rho(degree_);
  if (!contains(r)) throw InvalidArgument("the regular cycle is not a member of the group");
  for (const auto& s : generators_) {
    if (!(s * r * s.inverse()).is_rotation()) return false;
  }
  return true;
}

bool PermGroup::is_block_partition(const Partition& cells) const {
  std::vector<int> cell_of(degree_, -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw InvalidArgument("partition has an empty cell");
    for (int x : cells[c]) {
      if (x < 0 || x >= degree_ || cell_of[x] >= 0) {
        throw InvalidArgument("cells do not partition the point set");
      }
      cell_of[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < degree_; ++x) {
    if (cell_of[x] < 0) throw InvalidArgument("cells do not cover the point set");
  }
  for (const auto& s : generators_) {
    for (const auto& cell : cells) {
      const int target = cell_of[s(cell.front())];
      if (cells[target].size() != cell.size()) return false;
      for (int x : cell) {
        if (cell_of[s(x)] != target) return false;
      }
    }
  }
  return true;
}

long long naive_group_order(std::span<const Permutation> gens) {
  if (gens.empty()) throw InvalidArgument("naive_group_order needs at least one generator");
  const int n = gens.front().degree();
  if (n > 8) throw ResourceError("naive_group_order is limited to degree 8");
  for (const auto& g : gens) {
    if (g.degree() != n) throw InvalidArgument("generator degree mismatch");
  }
  auto encode = [n](const Permutation& p) {
    unsigned long long code = 0;
    for (int i = 0; i < n; ++i) code = code * 8 + static_cast<unsigned>(p(i));
    return code;
  };
  std::unordered_set<unsigned long long> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(n);
  seen.insert(encode(id));
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = g * p;
      if (seen.insert(encode(q)).second) queue.push_back(std::move(q));
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace circ
