#include "treewalks/census.hpp"
#include "treewalks/combinatorics.hpp"
#include "treewalks/walks.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace treewalks;
using namespace treewalks::oracle;

TEST_CASE("induced tree basics") {
  // one edge traversed four times
  const TreeWalk w1{{1, 2, 1, 2}};
  const InducedTree t1 = induced_tree(w1);
  CHECK(t1.vertex_count == 2);
  CHECK(t1.edge_total() == 1);
  CHECK(t1.traversals(1, 2) == 4);
  CHECK(t1.excess() == 1);

  // star with two spokes
  const TreeWalk w2{{1, 2, 1, 3}};
  const InducedTree t2 = induced_tree(w2);
  CHECK(t2.edge_total() == 2);
  CHECK(t2.traversals(1, 2) == 2);
  CHECK(t2.traversals(1, 3) == 2);
  CHECK(t2.excess() == 0);

  // contour walk of a path: closing step (2,1)
  const TreeWalk w3{{1, 2, 3, 2}};
  const InducedTree t3 = induced_tree(w3);
  CHECK(t3.edge_total() == 2);
  CHECK(t3.traversals(1, 2) == 2);
  CHECK(t3.traversals(2, 3) == 2);
  CHECK(t3.excess() == 0);

  CHECK_THROWS_AS(induced_tree(TreeWalk{{1, 2, 3, 1}}), std::invalid_argument);  // cycle
  CHECK_THROWS_AS(induced_tree(TreeWalk{{1, 3, 1, 3}}), std::invalid_argument);  // label gap
  CHECK_THROWS_AS(induced_tree(TreeWalk{{1, 1}}), std::invalid_argument);        // self-loop
}

TEST_CASE("kernel reduction examples") {
  // contour of a path reduces to the trivial walk
  CHECK(reduce_to_kernel(TreeWalk{{1, 2, 1, 3}}) == TreeWalk{{1}});
  // superreduced walk is its own kernel
  CHECK(reduce_to_kernel(TreeWalk{{1, 2, 1, 2}}) == TreeWalk{{1, 2, 1, 2}});
  // pruning the simple edge of a length-8 walk leaves a doubled excess edge
  CHECK(reduce_to_kernel(TreeWalk{{1, 2, 1, 3, 1, 3, 1, 3}}) ==
        TreeWalk{{1, 2, 1, 2, 1, 2}});
}

TEST_CASE("classification examples") {
  const WalkClass a = classify(TreeWalk{{1, 2, 1, 2}});
  CHECK(a.excess == 1);
  CHECK(a.simple_edges == 0);
  CHECK(a.is_kernel);
  CHECK(a.is_superreduced);
  CHECK(a.root_departures == 2);

  const WalkClass b = classify(TreeWalk{{1, 2, 1, 3}});
  CHECK(b.excess == 0);
  CHECK(b.simple_edges == 2);
  CHECK_FALSE(b.is_kernel);
  CHECK_FALSE(b.is_superreduced);
  CHECK(b.root_departures == 2);

  const WalkClass t = classify(TreeWalk{{1}});
  CHECK(t.excess == 0);
  CHECK(t.is_kernel);
  CHECK(t.is_superreduced);
  CHECK(t.root_departures == 0);
}

TEST_CASE("census base values") {
  const WalkCensus census = enumerate_census(3);
  CHECK(census.walks(1, 0) == 1);
  CHECK(census.walks(2, 4) == 2);
  CHECK(census.walks(4, 6) == 120);
  // w_{l+1, 2l} = (l+1)! Cat(l)
  for (int l = 0; l <= 3; ++l) {
    const Int expect = factorial(l + 1) * catalan_number(l);
    CHECK(census.walks(l + 1, 2 * l) == expect.convert_to<std::int64_t>());
  }
  // w_{m,2l} = 0 when l < m-1
  CHECK(census.walks(3, 2) == 0);
  CHECK(census.walks(4, 4) == 0);
}

TEST_CASE("census guard") {
  CHECK_THROWS_AS(enumerate_census(8), std::invalid_argument);
}

TEST_CASE("census divisibility and zero rows") {
  const WalkCensus census = enumerate_census(5);
  for (const auto& [key, cnt] : census.w) {
    const auto [m, two_l] = key;
    CHECK(cnt % factorial(m).convert_to<std::int64_t>() == 0);
    CHECK(two_l / 2 >= m - 1);
  }
}

TEST_CASE("kernel procedure properties on all enumerated walks") {
  std::mt19937 rng(12345);
  int checked = 0;
  for_each_canonical_walk(5, [&](const TreeWalk& walk) {
    const TreeWalk kernel = reduce_to_kernel(walk);
    // idempotence
    CHECK(reduce_to_kernel(kernel) == kernel);
    // excess preservation
    const InducedTree tw = induced_tree(walk);
    const InducedTree tk = induced_tree(kernel);
    CHECK(tk.excess() == tw.excess());
    // structural characterization agrees with the fixed-point definition
    const bool is_kernel = kernel == walk;
    CHECK(is_kernel == kernel_tree_conditions(tw));
    // reduction is invariant to the interleaving of steps
    if (++checked % 7 == 0) {
      TreeWalk again = reduce_to_kernel_any_order(walk, rng);
      CHECK(again == kernel);
    }
  });
}

TEST_CASE("kernel bounds and tightness witnesses") {
  // bounds on every enumerated kernel
  for_each_canonical_walk(6, [&](const TreeWalk& walk) {
    const WalkClass cls = classify(walk);
    if (!cls.is_kernel || cls.excess == 0) return;
    const InducedTree t = induced_tree(walk);
    CHECK(t.vertex_count <= 3 * cls.excess - 1);
    CHECK(cls.simple_edges <= 2 * cls.excess - 2);
    CHECK(t.half_length <= 4 * cls.excess - 2);
    if (cls.is_superreduced) {
      CHECK(t.vertex_count <= cls.excess + 1);
      CHECK(walk.length() <= 4 * cls.excess);
    }
  });
  // constructive witnesses attaining every bound simultaneously
  for (int xi = 1; xi <= 3; ++xi) {
    const TreeWalk w = optimal_kernel_witness(xi);
    const WalkClass cls = classify(w);
    const InducedTree t = induced_tree(w);
    CHECK(cls.is_kernel);
    CHECK(cls.excess == xi);
    CHECK(t.vertex_count == 3 * xi - 1);
    CHECK(cls.simple_edges == 2 * xi - 2);
    CHECK(t.half_length == 4 * xi - 2);
  }
}

TEST_CASE("optimal and near-optimal kernel counts") {
  // optimal kernels of excess 2 have 2 simple edges and length 12
  const WalkCensus census = enumerate_census(6);
  const Int expect2 = factorial(3 * 2 - 1) * catalan_number(1);
  CHECK(census.kernels(2, 2, 12) == expect2.convert_to<std::int64_t>());
  // near-optimal kernels of excess 2: one simple edge, length 10
  CHECK(census.kernels(2, 1, 10) == expect2.convert_to<std::int64_t>());
  // excess 1: single kernel shape, length 4
  CHECK(census.kernels(1, 0, 4) == 2);
}

namespace {

// Rooted plane tree with edges colored 's' (simple) or 'e' (excess).
struct ColoredNode {
  std::vector<std::pair<char, ColoredNode>> kids;
};

std::string encode_tree(const ColoredNode& n) {
  std::string s = "(";
  for (const auto& [c, kid] : n.kids) {
    s.push_back(c);
    s += encode_tree(kid);
  }
  s += ")";
  return s;
}

int edges_of(const ColoredNode& n) {
  int e = 0;
  for (const auto& [c, kid] : n.kids) e += 1 + edges_of(kid);
  return e;
}

int excess_edges_of(const ColoredNode& n) {
  int x = 0;
  for (const auto& [c, kid] : n.kids) x += (c == 'e' ? 1 : 0) + excess_edges_of(kid);
  return x;
}

// (a) every leaf (including a degree-1 root) touches an excess edge;
// (b) every non-root inner vertex has outdegree >= 2 or touches one.
bool kernel_colored_conditions(const ColoredNode& n, char parent_color, bool is_root) {
  const size_t degree = n.kids.size() + (is_root ? 0 : 1);
  bool touches = !is_root && parent_color == 'e';
  for (const auto& [c, kid] : n.kids) touches = touches || c == 'e';
  if (degree == 1) {
    if (!touches) return false;
  } else if (!is_root && n.kids.size() < 2 && !touches) {
    return false;
  }
  for (const auto& [c, kid] : n.kids)
    if (!kernel_colored_conditions(kid, c, false)) return false;
  return true;
}

// All colored rooted plane trees with exactly e edges, e <= max_edges.
std::vector<std::vector<ColoredNode>> colored_trees_by_edges(int max_edges) {
  std::vector<std::vector<ColoredNode>> by_edges(max_edges + 1);
  by_edges[0].push_back(ColoredNode{});
  for (int e = 1; e <= max_edges; ++e) {
    for (int fc = 0; fc <= e - 1; ++fc) {  // first-child subtree edges
      for (const ColoredNode& child : by_edges[fc]) {
        for (const ColoredNode& rest : by_edges[e - 1 - fc]) {
          for (char color : {'s', 'e'}) {
            ColoredNode n;
            n.kids.push_back({color, child});
            for (const auto& kc : rest.kids) n.kids.push_back(kc);
            by_edges[e].push_back(std::move(n));
          }
        }
      }
    }
  }
  return by_edges;
}

}  // namespace

TEST_CASE("colored tree characterization is exhaustive in both directions") {
  // colored plane trees of kernels whose excess edges all have excess
  // exactly one; those kernels have the minimal length for their tree
  std::set<std::string> from_kernels;
  for_each_canonical_walk(6, [&](const TreeWalk& walk) {
    const WalkClass cls = classify(walk);
    if (!cls.is_kernel) return;
    const InducedTree t = induced_tree(walk);
    bool minimal = true;
    for (const auto& [e, cnt] : t.edge_count) {
      if (cnt > 4) minimal = false;
      (void)e;
    }
    if (minimal) from_kernels.insert(colored_plane_encoding(t));
  });

  std::set<std::string> from_trees;
  const auto by_edges = colored_trees_by_edges(6);
  for (int e = 0; e <= 6; ++e) {
    for (const ColoredNode& n : by_edges[e]) {
      const int x = excess_edges_of(n);
      if (e == 0) {
        from_trees.insert("()");
        continue;
      }
      if (e + x > 6) continue;  // minimal walk length 2(e + x) exceeds the range
      if (kernel_colored_conditions(n, 'e', true)) from_trees.insert(encode_tree(n));
    }
  }
  CHECK(from_kernels == from_trees);
}
