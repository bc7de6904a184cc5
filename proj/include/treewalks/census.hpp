#pragma once

#include "treewalks/combinatorics.hpp"
#include "treewalks/walks.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace treewalks::oracle {

inline constexpr int kMaxCensusLength = 14;

// Ground-truth counts from exhaustive enumeration. Keys carry walk length
// 2l; counts are over labeled walks (canonical count times m!).
struct WalkCensus {
  int l_max = 0;
  std::map<std::pair<int, int>, std::int64_t> w;        // (m, 2l)
  std::map<std::tuple<int, int, int>, std::int64_t> k;  // (xi, s, 2l)
  std::map<std::pair<int, int>, std::int64_t> sr;       // (m, 2l)

  std::int64_t walks(int m, int two_l) const {
    auto it = w.find({m, two_l});
    return it == w.end() ? 0 : it->second;
  }
  std::int64_t kernels(int xi, int s, int two_l) const {
    auto it = k.find({xi, s, two_l});
    return it == k.end() ? 0 : it->second;
  }
  std::int64_t superreduced(int m, int two_l) const {
    auto it = sr.find({m, two_l});
    return it == sr.end() ? 0 : it->second;
  }
};

namespace detail {

// Depth-first extension of partial closed walks in first-visit canonical
// labeling. New edges may only reach brand-new vertices (an edge between
// two visited vertices would close a cycle), so the running graph is
// always a tree and pruning is by distance to the root and parity.
template <class Visit>
void enumerate_walks_of_length(int two_l, Visit&& visit) {
  if (two_l == 0) {
    visit(TreeWalk{{1}});
    return;
  }
  std::vector<int> seq{1};
  std::vector<int> parent{0, 0};   // parent[v], root has 0
  std::vector<int> depth{0, 0};    // depth[v]
  std::vector<std::vector<int>> children(2);
  int m = 1;

  auto dfs = [&](auto&& self, int cur, int steps_left) -> void {
    if (steps_left == 0) {
      if (cur == 1) visit(TreeWalk{seq});
      return;
    }
    const int d = depth[cur];
    if (d > steps_left || (steps_left - d) % 2 != 0) return;
    // continue along existing edges
    auto step_to = [&](int nxt) {
      if (steps_left > 1) seq.push_back(nxt);
      self(self, nxt, steps_left - 1);
      if (steps_left > 1) seq.pop_back();
    };
    if (parent[cur] != 0) step_to(parent[cur]);
    for (int c : children[cur]) step_to(c);
    // open a new vertex (needs one extra step of slack to come back)
    if (d + 1 <= steps_left - 1) {
      ++m;
      const int v = m;
      parent.push_back(cur);
      depth.push_back(d + 1);
      children.emplace_back();
      children[cur].push_back(v);
      step_to(v);
      children[cur].pop_back();
      parent.pop_back();
      depth.pop_back();
      children.pop_back();
      --m;
    }
  };
  dfs(dfs, 1, two_l);
}

}  // namespace detail

// Calls `visit` with every canonical tree walk of each length 2l <= 2*l_max.
template <class Visit>
void for_each_canonical_walk(int l_max, Visit&& visit) {
  if (2 * l_max > kMaxCensusLength)
    throw std::invalid_argument("census enumeration is guarded at walk length " +
                                std::to_string(kMaxCensusLength));
  if (l_max < 0) throw std::invalid_argument("census needs l_max >= 0");
  for (int l = 0; l <= l_max; ++l)
    detail::enumerate_walks_of_length(2 * l, visit);
}

// Exhaustive census of tree walks, kernel walks and superreduced walks.
inline WalkCensus enumerate_census(int l_max) {
  WalkCensus census;
  census.l_max = l_max;
  for_each_canonical_walk(l_max, [&](const TreeWalk& walk) {
    const InducedTree t = induced_tree(walk);
    const int m = t.vertex_count;
    const int two_l = walk.length();
    const std::int64_t weight = factorial(m).convert_to<std::int64_t>();
    census.w[{m, two_l}] += weight;
    const WalkClass cls = classify(walk);
    if (cls.is_kernel) census.k[{cls.excess, cls.simple_edges, two_l}] += weight;
    if (cls.is_superreduced) census.sr[{m, two_l}] += weight;
  });
  return census;
}

}  // namespace treewalks::oracle
