#pragma once

#include <array>
#include <map>

#include "pdpm/multigraph.hpp"

namespace pdpm {

// The Petersen graph P with its canonical labeling and the catalog of its
// six perfect matchings.
//
// Labeling: vertices 0..4 are the outer cycle u1..u5, vertices 5..9 are the
// inner pentagram v1..v5 (vi adjacent to v(i+-2)), with spokes ui-vi.
// M0 is the matching of all five spokes; for i >= 1, Mi is the unique other
// perfect matching containing the spoke ui-vi. Every edge lies in exactly
// two matchings, every two matchings share exactly one edge, and the 15
// index pairs biject with the 15 edges.
struct PetersenCatalog {
  Multigraph graph;
  std::array<PerfectMatching, 6> matchings;
  // unordered index pair {i, j} -> the unique edge of Mi intersect Mj
  std::map<std::pair<int, int>, std::pair<Vertex, Vertex>> pair_to_edge;
  // edge -> its index pair {i, j}, i < j
  std::map<std::pair<Vertex, Vertex>, std::pair<int, int>> edge_to_pair;

  Vertex outer(int i) const { return i - 1; }      // u_i, i in 1..5
  Vertex inner(int i) const { return 4 + i; }      // v_i, i in 1..5
};

namespace detail {

inline void enumerate_simple_pms(const Multigraph& g, std::vector<char>& used,
                                 std::vector<std::pair<Vertex, Vertex>>& cur,
                                 std::vector<std::vector<std::pair<Vertex, Vertex>>>& out) {
  Vertex u = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!used[v]) {
      u = v;
      break;
    }
  if (u == -1) {
    out.push_back(cur);
    return;
  }
  used[u] = 1;
  for (const auto& [p, m] : g.adjacency()) {
    Vertex other = -1;
    if (p.first == u)
      other = p.second;
    else if (p.second == u)
      other = p.first;
    if (other == -1 || used[other]) continue;
    used[other] = 1;
    cur.push_back({std::min(u, other), std::max(u, other)});
    enumerate_simple_pms(g, used, cur, out);
    cur.pop_back();
    used[other] = 0;
  }
  used[u] = 0;
}

}  // namespace detail

// Builds P, enumerates its perfect matchings exhaustively and assigns the
// catalog indices by the containing-spoke rule.
inline PetersenCatalog build_petersen_catalog() {
  PetersenCatalog cat;
  Multigraph p(10);
  std::vector<std::string> labels;
  for (int i = 1; i <= 5; ++i) labels.push_back("u" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) labels.push_back("v" + std::to_string(i));
  p.set_labels(std::move(labels));
  for (int i = 0; i < 5; ++i) p.add_copies(i, (i + 1) % 5, 1);            // outer cycle
  for (int i = 0; i < 5; ++i) p.add_copies(i, 5 + i, 1);                  // spokes
  for (int i = 0; i < 5; ++i) p.add_copies(5 + i, 5 + (i + 2) % 5, 1);    // pentagram

  std::vector<std::vector<std::pair<Vertex, Vertex>>> pms;
  {
    std::vector<char> used(10, 0);
    std::vector<std::pair<Vertex, Vertex>> cur;
    detail::enumerate_simple_pms(p, used, cur, pms);
  }
  if (pms.size() != 6) throw integrity_error("Petersen enumeration did not find 6 matchings");

  auto contains_edge = [](const std::vector<std::pair<Vertex, Vertex>>& pm, Vertex a, Vertex b) {
    return std::find(pm.begin(), pm.end(), std::make_pair(std::min(a, b), std::max(a, b))) !=
           pm.end();
  };

  std::array<int, 6> order{-1, -1, -1, -1, -1, -1};
  for (int k = 0; k < 6; ++k) {
    bool all_spokes = true;
    for (int i = 0; i < 5; ++i) all_spokes = all_spokes && contains_edge(pms[k], i, 5 + i);
    if (all_spokes) order[0] = k;
  }
  for (int i = 1; i <= 5; ++i) {
    for (int k = 0; k < 6; ++k) {
      if (k == order[0]) continue;
      if (contains_edge(pms[k], i - 1, 4 + i)) {
        if (order[i] != -1) throw integrity_error("spoke contained in more than two matchings");
        order[i] = k;
      }
    }
  }
  for (int i = 0; i < 6; ++i)
    if (order[i] < 0) throw integrity_error("catalog index assignment failed");

  cat.graph = std::move(p);
  for (int i = 0; i < 6; ++i) {
    PerfectMatching pm;
    for (const auto& [a, b] : pms[order[i]]) pm.copies.emplace_back(a, b, 0);
    pm.normalize();
    cat.matchings[i] = std::move(pm);
  }

  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      std::vector<std::pair<Vertex, Vertex>> common;
      for (const EdgeCopy& e : cat.matchings[i].copies)
        for (const EdgeCopy& f : cat.matchings[j].copies)
          if (e.u == f.u && e.v == f.v) common.push_back({e.u, e.v});
      if (common.size() != 1) throw integrity_error("matching pair does not share exactly one edge");
      cat.pair_to_edge[{i, j}] = common[0];
      cat.edge_to_pair[common[0]] = {i, j};
    }
  }
  if (cat.edge_to_pair.size() != 15) throw integrity_error("pair-edge table is not a bijection");
  return cat;
}

// Shared immutable catalog.
inline const PetersenCatalog& petersen_catalog() {
  static const PetersenCatalog cat = build_petersen_catalog();
  return cat;
}

// The unique edge of Mi intersect Mj, 0 <= i < j <= 5.
inline EdgeCopy common_edge(const PetersenCatalog& cat, int i, int j) {
  if (i == j) throw domain_error("common_edge: indices must differ");
  if (i < 0 || j < 0 || i > 5 || j > 5) throw domain_error("common_edge: index out of range");
  auto [a, b] = cat.pair_to_edge.at({std::min(i, j), std::max(i, j)});
  return EdgeCopy(a, b, 0);
}

}  // namespace pdpm
