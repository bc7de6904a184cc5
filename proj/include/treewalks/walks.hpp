#pragma once

#include "treewalks/rational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treewalks::oracle {

// Closed walk stored as the visited vertices (v_1, ..., v_{2l}); the step
// from the last vertex back to v_1 is implicit. A single-element sequence
// is the trivial walk of length 0.
struct TreeWalk {
  std::vector<int> seq;

  int length() const { return seq.size() <= 1 ? 0 : static_cast<int>(seq.size()); }
  int root() const { return seq.at(0); }
  friend bool operator==(const TreeWalk& a, const TreeWalk& b) { return a.seq == b.seq; }
};

struct InducedTree {
  int root = 1;
  int vertex_count = 0;
  int half_length = 0;
  std::map<std::pair<int, int>, int> edge_count;     // unordered pair -> traversals
  std::vector<std::vector<int>> children;            // plane order by first traversal
  std::vector<int> parent;                           // parent[root] = 0
  std::vector<int> degree;
  std::vector<int> depth;

  int edge_total() const { return static_cast<int>(edge_count.size()); }
  int excess() const { return half_length - edge_total(); }
  int traversals(int a, int b) const {
    auto it = edge_count.find(std::minmax(a, b));
    return it == edge_count.end() ? 0 : it->second;
  }
  bool is_simple_edge(int a, int b) const { return traversals(a, b) == 2; }
};

// Builds the induced tree of a closed walk; throws if the walk does not
// induce a tree on labels {1, ..., m}.
inline InducedTree induced_tree(const TreeWalk& walk) {
  if (walk.seq.empty()) throw std::invalid_argument("not a tree walk: empty sequence");
  const int len = walk.length();
  int m = 0;
  for (int v : walk.seq) {
    if (v < 1) throw std::invalid_argument("not a tree walk: labels must be positive");
    m = std::max(m, v);
  }
  std::vector<bool> seen(m + 1, false);
  for (int v : walk.seq) seen[v] = true;
  for (int v = 1; v <= m; ++v)
    if (!seen[v]) throw std::invalid_argument("not a tree walk: labels are not contiguous");

  InducedTree t;
  t.root = walk.seq[0];
  t.vertex_count = m;
  t.half_length = len / 2;
  t.children.assign(m + 1, {});
  t.parent.assign(m + 1, 0);
  t.degree.assign(m + 1, 0);
  t.depth.assign(m + 1, 0);

  if (len == 0) {
    if (m != 1) throw std::invalid_argument("not a tree walk: trivial walk on several labels");
    return t;
  }
  if (len % 2 != 0) throw std::invalid_argument("not a tree walk: odd length");

  std::vector<bool> visited(m + 1, false);
  visited[t.root] = true;
  for (int i = 0; i < len; ++i) {
    const int a = walk.seq[i];
    const int b = walk.seq[(i + 1) % len];
    if (a == b) throw std::invalid_argument("not a tree walk: self-loop step");
    const auto key = std::minmax(a, b);
    auto [it, inserted] = t.edge_count.try_emplace(key, 0);
    if (inserted) {
      if (visited[b]) throw std::invalid_argument("not a tree walk: induced cycle");
      t.parent[b] = a;
      t.children[a].push_back(b);
      t.degree[a]++;
      t.degree[b]++;
      visited[b] = true;
    }
    it->second++;
  }
  if (static_cast<int>(t.edge_count.size()) != m - 1)
    throw std::invalid_argument("not a tree walk: induced graph is not a tree");
  for (const auto& [e, cnt] : t.edge_count) {
    if (cnt % 2 != 0) throw std::invalid_argument("not a tree walk: odd edge traversal count");
    (void)e;
  }
  // depths from the root (children lists already cover every non-root vertex)
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int c : t.children[v]) {
      t.depth[c] = t.depth[v] + 1;
      stack.push_back(c);
    }
  }
  return t;
}

inline int simple_edge_count(const InducedTree& t) {
  int s = 0;
  for (const auto& [e, cnt] : t.edge_count) {
    if (cnt == 2) ++s;
    (void)e;
  }
  return s;
}

// Lemma-style structural characterization of kernel walks on the induced
// tree: (a) every leaf touches an excess edge, (b) every inner vertex has
// outdegree at least two or touches an excess edge. A degree-1 root counts
// as a leaf.
inline bool kernel_tree_conditions(const InducedTree& t) {
  if (t.vertex_count == 1) return true;
  auto touches_excess = [&](int v) {
    if (v != t.root && t.traversals(v, t.parent[v]) > 2) return true;
    for (int c : t.children[v])
      if (t.traversals(v, c) > 2) return true;
    return false;
  };
  for (int v = 1; v <= t.vertex_count; ++v) {
    const bool leaf = t.degree[v] == 1;
    if (leaf) {
      if (!touches_excess(v)) return false;  // (a)
    } else {
      const int outdeg = static_cast<int>(t.children[v].size());
      if (outdeg < 2 && !touches_excess(v)) return false;  // (b)
    }
  }
  return true;
}

namespace detail {

// Order-preserving relabeling onto {1, .., m'} after deletions.
inline void relabel(std::vector<int>& seq) {
  std::set<int> labels(seq.begin(), seq.end());
  std::map<int, int> to;
  int next = 1;
  for (int l : labels) to[l] = next++;
  for (int& v : seq) v = to[v];
}

// Labels 1, 2, 3, ... in order of first appearance.
inline void relabel_first_visit(std::vector<int>& seq) {
  std::map<int, int> to;
  int next = 1;
  for (int v : seq)
    if (to.try_emplace(v, next).second) ++next;
  for (int& v : seq) v = to[v];
}

// Remove a pendant vertex u (single occurrence, flanked cyclically by its
// neighbor); collapses the duplicate neighbor entry that results. u is
// never the root, so its index is >= 1.
inline void remove_pendant(std::vector<int>& seq, int u) {
  const auto it = std::find(seq.begin(), seq.end(), u);
  const size_t i = it - seq.begin();
  seq.erase(it);
  if (seq.size() >= 2) {
    if (i == seq.size()) {
      // u was last: the duplicate pair is (last, first); keep the root entry
      if (seq.back() == seq.front()) seq.pop_back();
    } else if (seq[i - 1] == seq[i]) {
      seq.erase(seq.begin() + i);
    }
  }
  relabel(seq);
}

// Root is a leaf on a simple edge: drop the first and last entry.
inline void remove_root_pendant(std::vector<int>& seq) {
  seq.erase(seq.begin());
  if (seq.size() > 1) seq.pop_back();
  relabel(seq);
}

// Contract a degree-2 vertex v between two simple edges: erase both
// occurrences.
inline void contract_degree_two(std::vector<int>& seq, int v) {
  seq.erase(std::remove(seq.begin(), seq.end(), v), seq.end());
  relabel(seq);
}

enum class MoveKind { PruneLeaf, MoveRoot, Contract };
struct Move {
  MoveKind kind;
  int vertex;  // unused for MoveRoot
};

inline std::vector<Move> applicable_moves(const InducedTree& t) {
  std::vector<Move> moves;
  if (t.vertex_count == 1) return moves;
  for (int v = 1; v <= t.vertex_count; ++v) {
    if (v == t.root || t.degree[v] != 1) continue;
    if (t.traversals(v, t.parent[v]) == 2) moves.push_back({MoveKind::PruneLeaf, v});
  }
  if (t.degree[t.root] == 1 && t.traversals(t.root, t.children[t.root][0]) == 2)
    moves.push_back({MoveKind::MoveRoot, t.root});
  for (int v = 1; v <= t.vertex_count; ++v) {
    if (v == t.root || t.degree[v] != 2) continue;
    bool both_simple = true;
    if (v != t.root && t.traversals(v, t.parent[v]) != 2) both_simple = false;
    for (int c : t.children[v])
      if (t.traversals(v, c) != 2) both_simple = false;
    if (both_simple) moves.push_back({MoveKind::Contract, v});
  }
  return moves;
}

inline void apply_move(std::vector<int>& seq, const Move& m) {
  switch (m.kind) {
    case MoveKind::PruneLeaf:
      remove_pendant(seq, m.vertex);
      break;
    case MoveKind::MoveRoot:
      remove_root_pendant(seq);
      break;
    case MoveKind::Contract:
      contract_degree_two(seq, m.vertex);
      break;
  }
}

}  // namespace detail

// The kernel of a tree walk: exhaust leaf pruning of simple edges, then
// root migration off simple pendant edges, then contraction of degree-2
// vertices between two simple edges, repeating until nothing applies.
inline TreeWalk reduce_to_kernel(TreeWalk walk) {
  induced_tree(walk);  // validate
  bool changed = true;
  while (changed) {
    changed = false;
    // leaf pruning
    for (;;) {
      const InducedTree t = induced_tree(walk);
      int leaf = 0;
      for (int v = 1; v <= t.vertex_count; ++v) {
        if (v != t.root && t.degree[v] == 1 && t.traversals(v, t.parent[v]) == 2) {
          leaf = v;
          break;
        }
      }
      if (leaf == 0) break;
      detail::remove_pendant(walk.seq, leaf);
      changed = true;
    }
    // root migration
    for (;;) {
      const InducedTree t = induced_tree(walk);
      if (t.vertex_count == 1 || t.degree[t.root] != 1 ||
          t.traversals(t.root, t.children[t.root][0]) != 2)
        break;
      detail::remove_root_pendant(walk.seq);
      changed = true;
    }
    // contraction of degree-2 vertices between two simple edges
    for (;;) {
      const InducedTree t = induced_tree(walk);
      int cand = 0;
      for (const auto& m : detail::applicable_moves(t)) {
        if (m.kind == detail::MoveKind::Contract) {
          cand = m.vertex;
          break;
        }
      }
      if (cand == 0) break;
      detail::contract_degree_two(walk.seq, cand);
      changed = true;
    }
  }
  return walk;
}

// Same fixed point via a randomized move order; the reduction result is
// independent of interleaving.
inline TreeWalk reduce_to_kernel_any_order(TreeWalk walk, std::mt19937& rng) {
  induced_tree(walk);
  for (;;) {
    const InducedTree t = induced_tree(walk);
    auto moves = detail::applicable_moves(t);
    if (moves.empty()) return walk;
    const auto& m = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
    detail::apply_move(walk.seq, m);
  }
}

struct WalkClass {
  int excess = 0;
  int simple_edges = 0;
  bool is_kernel = false;
  bool is_superreduced = false;
  int root_departures = 0;
};

inline WalkClass classify(const TreeWalk& walk) {
  const InducedTree t = induced_tree(walk);
  WalkClass c;
  c.excess = t.excess();
  c.simple_edges = simple_edge_count(t);
  c.is_superreduced = c.simple_edges == 0;
  c.is_kernel = reduce_to_kernel(walk) == walk;
  if (walk.length() > 0)
    c.root_departures = static_cast<int>(std::count(walk.seq.begin(), walk.seq.end(), t.root));
  return c;
}

// Canonical encoding of the plane tree with edges colored by
// simple ('s') vs excess ('e'); children in first-traversal order.
inline std::string colored_plane_encoding(const InducedTree& t) {
  std::string out;
  auto rec = [&](auto&& self, int v) -> void {
    out.push_back('(');
    for (int c : t.children[v]) {
      out.push_back(t.traversals(v, c) == 2 ? 's' : 'e');
      self(self, c);
    }
    out.push_back(')');
  };
  rec(rec, t.root);
  return out;
}

// A kernel walk of excess xi attaining the structural bounds: a binary
// tree on 2*xi - 1 vertices made of simple edges with one excess pendant
// edge (traversed four times) at each of its xi leaves.
inline TreeWalk optimal_kernel_witness(int xi) {
  if (xi < 1) throw std::invalid_argument("optimal kernel witness needs xi >= 1");
  std::vector<std::vector<int>> children;
  int next = 1;
  auto new_vertex = [&]() {
    children.emplace_back();
    return next++;
  };
  // grow a binary tree with xi leaves by repeatedly splitting a leaf
  const int root = new_vertex();
  std::vector<int> leaves{root};
  while (static_cast<int>(leaves.size()) < xi) {
    const int v = leaves.front();
    leaves.erase(leaves.begin());
    const int a = new_vertex();
    const int b = new_vertex();
    children[v - 1] = {a, b};
    leaves.push_back(a);
    leaves.push_back(b);
  }
  // contour walk; at each binary-tree leaf the pendant is crossed twice
  // in each direction
  std::vector<int> seq;
  auto dfs = [&](auto&& self, int v) -> void {
    seq.push_back(v);
    if (children[v - 1].empty()) {
      const int p = new_vertex();
      seq.push_back(p);
      seq.push_back(v);
      seq.push_back(p);
      seq.push_back(v);
    } else {
      for (int c : children[v - 1]) {
        self(self, c);
        seq.push_back(v);
      }
    }
  };
  dfs(dfs, root);
  seq.pop_back();  // the trailing root entry duplicates the start
  TreeWalk w{std::move(seq)};
  detail::relabel_first_visit(w.seq);
  return w;
}

}  // namespace treewalks::oracle
