#include "sgchain/green.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "sgchain/errors.hpp"

namespace sgchain {

Poset Poset::from_leq(std::size_t n, std::vector<bool> leq) {
  if (leq.size() != n * n) {
    throw ShapeError("leq matrix has wrong shape");
  }
  Poset p(n);
  p.leq_ = std::move(leq);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq(i, i)) throw InvalidArgumentError("relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i)) {
        throw InvalidArgumentError("relation is not antisymmetric");
      }
      if (!p.leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq(j, k) && !p.leq(i, k)) {
          throw InvalidArgumentError("relation is not transitive");
        }
      }
    }
  }
  return p;
}

std::size_t Poset::height() const {
  // longest path in the strict order, by DP over a topological order
  std::vector<std::size_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  // sort by number of elements below; works because lt is transitive
  std::vector<std::size_t> below(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (lt(b, a)) ++below[a];
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return below[a] < below[b];
  });
  std::vector<std::size_t> len(n_, 1);
  std::size_t best = n_ == 0 ? 0 : 1;
  for (std::size_t idx = 0; idx < n_; ++idx) {
    std::size_t const a = order[idx];
    for (std::size_t j = 0; j < idx; ++j) {
      std::size_t const b = order[j];
      if (lt(b, a)) len[a] = std::max(len[a], len[b] + 1);
    }
    best = std::max(best, len[a]);
  }
  return best;
}

std::vector<std::size_t> maximal_elements(Poset const& p,
                                          std::vector<std::size_t> subset) {
  if (subset.empty()) {
    throw EmptySubsetError();
  }
  std::vector<std::size_t> out;
  for (std::size_t a : subset) {
    bool maximal = true;
    for (std::size_t b : subset) {
      if (p.lt(a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// DFS over indices in increasing order, include-branch first; the first
// antichain found at each new best size is the lexicographically least of
// that size, and pruning never discards a strictly larger one.
void antichain_bb(Poset const& p, std::size_t next,
                  std::vector<std::size_t>& current,
                  std::vector<std::size_t>& best) {
  std::size_t const n = p.size();
  if (current.size() + (n - next) <= best.size()) return;
  if (next == n) {
    if (current.size() > best.size()) best = current;
    return;
  }
  bool compatible = true;
  for (std::size_t a : current) {
    if (p.leq(a, next) || p.leq(next, a)) {
      compatible = false;
      break;
    }
  }
  if (compatible) {
    current.push_back(next);
    antichain_bb(p, next + 1, current, best);
    current.pop_back();
  }
  antichain_bb(p, next + 1, current, best);
}

// Koenig construction: maximum antichain = minimum chain cover, extracted
// from a maximum matching of the strict-comparability bipartite graph.
std::vector<std::size_t> antichain_matching(Poset const& p) {
  std::size_t const n = p.size();
  std::vector<int> match_left(n, -1), match_right(n, -1);
  std::vector<char> visited(n);
  // Kuhn's augmenting-path search, deterministic vertex order
  std::function<bool(std::size_t)> try_augment = [&](std::size_t u) -> bool {
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.lt(u, v) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 ||
          try_augment(static_cast<std::size_t>(match_right[v]))) {
        match_left[u] = static_cast<int>(v);
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(visited.begin(), visited.end(), 0);
    try_augment(u);
  }
  // alternating reachability from unmatched left vertices
  std::vector<char> z_left(n, 0), z_right(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u) {
    if (match_left[u] < 0) {
      z_left[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    std::size_t const u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.lt(u, v) || z_right[v]) continue;
      if (match_left[u] >= 0 && static_cast<std::size_t>(match_left[u]) == v) {
        continue;  // only non-matching edges leave the left side
      }
      z_right[v] = 1;
      if (match_right[v] >= 0) {
        std::size_t const w = static_cast<std::size_t>(match_right[v]);
        if (!z_left[w]) {
          z_left[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  // cover = (L \ Z) u (R n Z); the antichain avoids both copies
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (z_left[v] && !z_right[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> maximum_antichain(Poset const& p) {
  if (p.size() == 0) return {};
  if (p.size() <= 24) {
    std::vector<std::size_t> current, best;
    antichain_bb(p, 0, current, best);
    return best;
  }
  return antichain_matching(p);
}

Partition partition_from_keys(std::size_t n,
                              std::vector<ElementSet> const& key_of) {
  std::map<ElementSet, std::vector<element>> groups;
  for (element a = 0; a < n; ++a) {
    groups[key_of[a]].push_back(a);
  }
  Partition part;
  part.class_of.resize(n);
  std::vector<std::pair<element, ElementSet>> ordered;
  for (auto const& [key, members] : groups) {
    ElementSet cls(n);
    for (element m : members) cls.add(m);
    ordered.emplace_back(members.front(), std::move(cls));
  }
  std::sort(ordered.begin(), ordered.end(),
            [](auto const& a, auto const& b) { return a.first < b.first; });
  for (auto& [rep, cls] : ordered) {
    std::uint32_t const idx = static_cast<std::uint32_t>(part.classes.size());
    cls.for_each([&](element m) { part.class_of[m] = idx; });
    part.classes.push_back(std::move(cls));
  }
  return part;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

GreenStructure compute_green(FiniteSemigroup const& s) {
  std::size_t const n = s.size();
  GreenStructure g;
  g.right_ideal_of.reserve(n);
  g.left_ideal_of.reserve(n);
  g.ideal_of.reserve(n);
  for (element a = 0; a < n; ++a) {
    ElementSet r(n), l(n);
    r.add(a);
    l.add(a);
    for (element x = 0; x < n; ++x) {
      r.add(s.mul(a, x));
      l.add(s.mul(x, a));
    }
    // S^1 a S^1 = {a} u aS u Sa u SaS
    ElementSet j = r | l;
    for (element x = 0; x < n; ++x) {
      element const xa = s.mul(x, a);
      for (element y = 0; y < n; ++y) j.add(s.mul(xa, y));
    }
    g.right_ideal_of.push_back(std::move(r));
    g.left_ideal_of.push_back(std::move(l));
    g.ideal_of.push_back(std::move(j));
  }
  g.r = partition_from_keys(n, g.right_ideal_of);
  g.l = partition_from_keys(n, g.left_ideal_of);
  g.j = partition_from_keys(n, g.ideal_of);
  // H = R meet L: key by the pair of ideals
  {
    std::vector<ElementSet> hkey(n);
    for (element a = 0; a < n; ++a) {
      // concatenate the two bitsets into a key over a doubled universe
      ElementSet key(2 * n);
      g.right_ideal_of[a].for_each([&](element x) { key.add(x); });
      g.left_ideal_of[a].for_each(
          [&](element x) { key.add(static_cast<element>(x + n)); });
      hkey[a] = std::move(key);
    }
    g.h = partition_from_keys(n, hkey);
  }
  // D = join of R and L
  {
    UnionFind uf(static_cast<std::uint32_t>(n));
    for (auto const& cls : g.r.classes) {
      auto const mem = cls.members();
      for (std::size_t i = 1; i < mem.size(); ++i) uf.unite(mem[0], mem[i]);
    }
    for (auto const& cls : g.l.classes) {
      auto const mem = cls.members();
      for (std::size_t i = 1; i < mem.size(); ++i) uf.unite(mem[0], mem[i]);
    }
    std::vector<ElementSet> dkey(n);
    for (element a = 0; a < n; ++a) {
      ElementSet key(n);
      key.add(uf.find(a));
      dkey[a] = std::move(key);
    }
    g.d = partition_from_keys(n, dkey);
  }
  // order on R-classes by containment of principal right ideals
  std::size_t const nr = g.r.count();
  std::vector<bool> leq(nr * nr, false);
  std::vector<element> rep(nr);
  for (std::size_t c = 0; c < nr; ++c) {
    rep[c] = g.r.classes[c].members().front();
  }
  for (std::size_t c1 = 0; c1 < nr; ++c1) {
    for (std::size_t c2 = 0; c2 < nr; ++c2) {
      leq[c1 * nr + c2] =
          g.right_ideal_of[rep[c1]].is_subset_of(g.right_ideal_of[rep[c2]]);
    }
  }
  g.r_poset = Poset::from_leq(nr, std::move(leq));
  return g;
}

}  // namespace sgchain
