#pragma once

// Reduction from induced subgraph isomorphism to maximal common
// generalization, and direct brute-force deciders to check it against.

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setgen/error.hpp"
#include "setgen/gen_model.hpp"
#include "setgen/goal.hpp"
#include "setgen/oracles.hpp"

namespace setgen {

// Undirected simple graph on integer vertex ids.
class UGraph {
 public:
  UGraph() = default;
  UGraph(std::set<int> vertices, const std::vector<std::pair<int, int>>& edges) : vertices_(std::move(vertices)) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  // Vertices 1..n.
  static UGraph with_vertices(int n) {
    UGraph g;
    for (int v = 1; v <= n; ++v) g.vertices_.insert(v);
    return g;
  }

  void add_vertex(int v) { vertices_.insert(v); }
  void add_edge(int u, int v) {
    if (u == v) throw ConfigError("self-loop on vertex " + std::to_string(u));
    if (!vertices_.contains(u) || !vertices_.contains(v))
      throw ConfigError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an unknown endpoint");
    edges_.insert(std::minmax(u, v));
  }

  const std::set<int>& vertices() const noexcept { return vertices_; }
  const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }
  bool adjacent(int u, int v) const { return edges_.contains(std::minmax(u, v)); }

 private:
  std::set<int> vertices_;
  std::set<std::pair<int, int>> edges_;
};

// "p <n>" header, then one "u v" edge per line; vertices are 1..n. Blank
// lines and lines starting with 'c' or '#' are ignored.
inline UGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  UGraph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '#') continue;
    if (first == "p") {
      int n = -1;
      if (header || !(ls >> n) || n < 0) throw ParseError("bad 'p <vertices>' header", line_no, 1);
      g = UGraph::with_vertices(n);
      header = true;
      continue;
    }
    if (!header) throw ParseError("edge before 'p <vertices>' header", line_no, 1);
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("expected an edge 'u v'", line_no, 1);
    }
    if (!(ls >> v)) throw ParseError("expected an edge 'u v'", line_no, 1);
    try {
      g.add_edge(u, v);
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (!header) throw ParseError("missing 'p <vertices>' header", line_no + 1, 1);
  return g;
}

enum class EdgeEncoding {
  // node/1 per vertex, edge/2 in both orientations per edge.
  edges_only,
  // Additionally nonedge/2 in both orientations per non-adjacent pair, so
  // that non-edges must also be preserved.
  induced,
};

// Vertex x becomes variable V<x>.
inline Goal graph_to_goal(const UGraph& g, EdgeEncoding encoding = EdgeEncoding::induced) {
  auto var = [](int x) { return Term::variable("V" + std::to_string(x)); };
  std::vector<Literal> out;
  for (int x : g.vertices()) out.emplace_back("node", std::vector<Term>{var(x)});
  for (int x : g.vertices())
    for (int y : g.vertices()) {
      if (x == y) continue;
      if (g.adjacent(x, y))
        out.emplace_back("edge", std::vector<Term>{var(x), var(y)});
      else if (encoding == EdgeEncoding::induced)
        out.emplace_back("nonedge", std::vector<Term>{var(x), var(y)});
    }
  return Goal(std::move(out));
}

inline std::pair<Goal, Goal> reduce_isip(const UGraph& g1, const UGraph& g2,
                                         EdgeEncoding encoding = EdgeEncoding::induced) {
  if (g1.vertices().size() > g2.vertices().size())
    throw SizeOrderError("reduce_isip requires |V1| <= |V2|, got " + std::to_string(g1.vertices().size()) + " > " +
                         std::to_string(g2.vertices().size()));
  return rename_apart(graph_to_goal(g1, encoding), graph_to_goal(g2, encoding));
}

namespace detail {

// Tries every injective f : V1 -> V2; `induced` also requires non-edges to
// map to non-edges.
inline bool decide_embedding(const UGraph& g1, const UGraph& g2, bool induced, const OracleBudget& budget) {
  const std::vector<int> v1(g1.vertices().begin(), g1.vertices().end());
  const std::vector<int> v2(g2.vertices().begin(), g2.vertices().end());
  if (v1.size() > v2.size()) return false;
  if (v2.size() > budget.max_variables)
    throw BudgetExceeded("graph has " + std::to_string(v2.size()) + " vertices, budget allows " +
                         std::to_string(budget.max_variables));
  Clock clock(budget.time_limit);
  std::vector<int> image(v1.size());
  std::vector<bool> used(v2.size(), false);
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    clock.tick("decide_isip_direct");
    if (depth == v1.size()) return true;
    for (std::size_t t = 0; t < v2.size(); ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < depth && ok; ++p) {
        const bool e1 = g1.adjacent(v1[p], v1[depth]);
        const bool e2 = g2.adjacent(image[p], v2[t]);
        ok = induced ? e1 == e2 : (!e1 || e2);
      }
      if (!ok) continue;
      used[t] = true;
      image[depth] = v2[t];
      if (self(self, depth + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace detail

// Is g1 isomorphic to an induced subgraph of g2?
inline bool decide_isip_direct(const UGraph& g1, const UGraph& g2, const OracleBudget& budget = {}) {
  return detail::decide_embedding(g1, g2, true, budget);
}

// Is g1 isomorphic to a (not necessarily induced) subgraph of g2?
inline bool decide_subgraph_direct(const UGraph& g1, const UGraph& g2, const OracleBudget& budget = {}) {
  return detail::decide_embedding(g1, g2, false, budget);
}

// Reduces to goals and asks an exact mcg oracle whether all of the first
// goal generalizes.
inline bool decide_isip_via_mcg(const UGraph& g1, const UGraph& g2, const OracleBudget& budget = {},
                                EdgeEncoding encoding = EdgeEncoding::induced) {
  auto [a, b] = reduce_isip(g1, g2, encoding);
  GenContext ctx(a, b);
  return mcg_by_renamings(ctx, budget).size() == a.size();
}

}  // namespace setgen
