#pragma once

#include <optional>
#include <vector>

#include "pdpm/maxflow.hpp"
#include "pdpm/multigraph.hpp"

namespace pdpm {

// Cut value plus one witness shore.
struct CutResult {
  long long value = 0;
  VertexSet side;
};

// Gomory-Hu cut tree. parent[0] is unused (vertex 0 is the root); for every
// v > 0 the tree link (v, parent[v]) carries weight[v], and the fundamental
// cut of that link is a minimum v-parent[v] cut.
struct GomoryHuTree {
  std::vector<Vertex> parent;
  std::vector<long long> weight;

  // Minimum u-v cut value: minimum link weight on the tree path.
  long long min_cut(Vertex u, Vertex v) const {
    std::vector<char> on_pu(parent.size(), 0);
    for (Vertex x = u;; x = parent[x]) {
      on_pu[x] = 1;
      if (x == 0) break;
    }
    Vertex meet = v;
    while (!on_pu[meet]) meet = parent[meet];
    long long best = -1;
    for (Vertex x = u; x != meet; x = parent[x])
      best = best < 0 ? weight[x] : std::min(best, weight[x]);
    for (Vertex x = v; x != meet; x = parent[x])
      best = best < 0 ? weight[x] : std::min(best, weight[x]);
    return best;
  }

  // Shore of the fundamental cut of link (v, parent[v]): the component of v
  // after removing that link from the tree.
  VertexSet fundamental_shore(Vertex v) const {
    const int n = static_cast<int>(parent.size());
    std::vector<std::vector<Vertex>> children(n);
    for (Vertex x = 1; x < n; ++x) children[parent[x]].push_back(x);
    VertexSet out;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (Vertex c : children[x]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

};

// Gomory-Hu construction with contraction: tree nodes are vertex groups,
// each step splits one group along a minimum cut computed in the graph with
// all other groups' subtrees contracted. This yields a genuine cut tree
// (every tree link's fundamental cut is a minimum cut between its
// endpoints), which the odd-cut search below relies on.
inline GomoryHuTree gomory_hu(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw domain_error("gomory_hu: need at least two vertices");

  struct Group {
    std::vector<Vertex> members;
    std::vector<std::pair<int, long long>> links;  // (other group, weight)
  };
  std::vector<Group> groups;
  {
    Group all;
    for (Vertex v = 0; v < n; ++v) all.members.push_back(v);
    groups.push_back(std::move(all));
  }

  std::vector<int> work{0};
  while (!work.empty()) {
    const int xi = work.back();
    work.pop_back();
    if (groups[xi].members.size() < 2) continue;

    // contract every subtree hanging off this group to a single node
    std::vector<int> cid(n, -1);
    const std::vector<Vertex> mem = groups[xi].members;
    for (size_t i = 0; i < mem.size(); ++i) cid[mem[i]] = static_cast<int>(i);
    int next_id = static_cast<int>(mem.size());
    std::vector<int> branch_id(groups[xi].links.size(), -1);
    for (size_t b = 0; b < groups[xi].links.size(); ++b) {
      branch_id[b] = next_id++;
      // flood the subtree reachable through this link without re-entering xi
      std::vector<int> stack{groups[xi].links[b].first};
      std::set<int> seen{xi, groups[xi].links[b].first};
      while (!stack.empty()) {
        int gi = stack.back();
        stack.pop_back();
        for (Vertex v : groups[gi].members) cid[v] = branch_id[b];
        for (const auto& [other, w] : groups[gi].links)
          if (!seen.count(other)) {
            seen.insert(other);
            stack.push_back(other);
          }
      }
    }

    Multigraph contracted(next_id);
    for (const auto& [p, m] : g.adjacency())
      if (cid[p.first] != cid[p.second]) contracted.add_copies(cid[p.first], cid[p.second], m);

    DinicFlow flow(contracted);
    const long long f = flow.max_flow(0, 1);  // splits mem[0] from mem[1]
    VertexSet side = flow.min_cut_side(0);
    std::vector<char> in_side(next_id, 0);
    for (Vertex v : side) in_side[v] = 1;

    Group keep, off;
    for (Vertex v : mem)
      (in_side[cid[v]] ? keep : off).members.push_back(v);
    const int yi = static_cast<int>(groups.size());
    for (size_t b = 0; b < groups[xi].links.size(); ++b) {
      const auto& [other, w] = groups[xi].links[b];
      Group& host = in_side[branch_id[b]] ? keep : off;
      host.links.push_back({other, w});
      for (auto& [back, bw] : groups[other].links)
        if (back == xi) back = in_side[branch_id[b]] ? xi : yi;
    }
    keep.links.push_back({yi, f});
    off.links.push_back({xi, f});
    groups[xi] = std::move(keep);
    groups.push_back(std::move(off));
    if (groups[xi].members.size() > 1) work.push_back(xi);
    if (groups[yi].members.size() > 1) work.push_back(yi);
  }

  // every group is now a singleton; root the tree at vertex 0's group
  std::vector<int> group_of(n, -1);
  for (size_t gi = 0; gi < groups.size(); ++gi) group_of[groups[gi].members[0]] = static_cast<int>(gi);
  GomoryHuTree t;
  t.parent.assign(n, 0);
  t.weight.assign(n, 0);
  std::vector<char> visited(groups.size(), 0);
  std::vector<int> stack{group_of[0]};
  visited[group_of[0]] = 1;
  while (!stack.empty()) {
    int gi = stack.back();
    stack.pop_back();
    const Vertex vu = groups[gi].members[0];
    for (const auto& [other, w] : groups[gi].links) {
      if (visited[other]) continue;
      visited[other] = 1;
      const Vertex vv = groups[other].members[0];
      t.parent[vv] = vu;
      t.weight[vv] = w;
      stack.push_back(other);
    }
  }
  return t;
}

namespace detail {

// Normalizes a shore so that it contains vertex 0, for reproducible output.
inline VertexSet canonical_shore(const Multigraph& g, VertexSet side) {
  if (!vertex_set_contains(side, 0)) side = complement_set(g, side);
  return side;
}

// Picks (value, shore) minimizing value, breaking ties by lexicographically
// smallest canonical shore.
struct BestCut {
  long long value = -1;
  VertexSet side;

  void offer(const Multigraph& g, long long v, VertexSet s) {
    VertexSet c = canonical_shore(g, std::move(s));
    if (value < 0 || v < value || (v == value && c < side)) {
      value = v;
      side = std::move(c);
    }
  }
};

}  // namespace detail

// Global edge-connectivity with a canonical witness shore, from the
// Gomory-Hu tree links.
inline CutResult lambda(const Multigraph& g) {
  if (g.vertex_count() < 2) throw domain_error("lambda: need at least two vertices");
  GomoryHuTree t = gomory_hu(g);
  detail::BestCut best;
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    best.offer(g, t.weight[v], t.fundamental_shore(v));
  return {best.value, best.side};
}

// Minimum boundary over odd-cardinality vertex sets. Requires even order.
// A minimum odd cut is attained among the odd-shore fundamental cuts of a
// Gomory-Hu cut tree, so only those n-1 candidates are inspected.
inline CutResult lambda_odd(const Multigraph& g) {
  if (g.vertex_count() < 2) throw domain_error("lambda_odd: need at least two vertices");
  if (g.vertex_count() % 2 != 0)
    throw unsupported_error("lambda_odd: defined here only for even-order graphs");
  GomoryHuTree t = gomory_hu(g);
  detail::BestCut best;
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    VertexSet shore = t.fundamental_shore(v);
    if (shore.size() % 2 == 1) best.offer(g, t.weight[v], std::move(shore));
  }
  return {best.value, best.side};
}

// Returns r when g is r-regular with odd edge-connectivity exactly r.
inline std::optional<long long> is_r_graph(const Multigraph& g) {
  if (g.vertex_count() < 2 || g.vertex_count() % 2 != 0) return std::nullopt;
  auto r = regular_degree(g);
  if (!r) return std::nullopt;
  if (lambda_odd(g).value != *r) return std::nullopt;
  return r;
}

}  // namespace pdpm
