#pragma once

#include <map>
#include <string>
#include <vector>

#include "pdpm/connectivity.hpp"
#include "pdpm/constructions.hpp"
#include "pdpm/json_io.hpp"

namespace pdpm {

// Declarative wiring of the 6-regular host built from Q1 gadget copies, a
// hub w and ring vertices, plus the expansion partitions and the designated
// matching of the expanded graph. Shipped as a data file and validated on
// load; the validator is authoritative, nothing in the file is trusted.
struct WiringSpec {
  std::vector<std::string> gadgets;
  std::vector<std::string> hub_vertices;
  std::vector<std::tuple<std::string, std::string, long long>> edges;
  std::vector<std::tuple<std::string, std::string, long long>> gadget_edge_removals;
  struct Expansion {
    std::string vertex;
    std::vector<std::pair<std::string, long long>> prime;  // copies taken by the ' half
  };
  std::vector<Expansion> expansions;
  std::vector<std::pair<std::string, std::string>> m6;
  struct Cluster {
    std::string gadget, x, y, z;
  };
  std::vector<Cluster> clusters;
};

inline WiringSpec wiring_from_json(const json& j) {
  WiringSpec w;
  w.gadgets = j.at("gadgets").get<std::vector<std::string>>();
  w.hub_vertices = j.at("hub_vertices").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges"))
    w.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<long long>()});
  if (j.contains("gadget_edge_removals"))
    for (const auto& e : j.at("gadget_edge_removals"))
      w.gadget_edge_removals.push_back(
          {e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<long long>()});
  for (const auto& x : j.at("expansions")) {
    WiringSpec::Expansion ex;
    ex.vertex = x.at("vertex").get<std::string>();
    for (const auto& p : x.at("prime"))
      ex.prime.push_back({p[0].get<std::string>(), p[1].get<long long>()});
    w.expansions.push_back(std::move(ex));
  }
  for (const auto& e : j.at("m6"))
    w.m6.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
  for (const auto& c : j.at("clusters")) {
    WiringSpec::Cluster cl;
    cl.gadget = c.at("gadget").get<std::string>();
    cl.x = c.at("x").get<std::string>();
    cl.y = c.at("y").get<std::string>();
    cl.z = c.at("z").get<std::string>();
    w.clusters.push_back(std::move(cl));
  }
  return w;
}

inline WiringSpec load_wiring(const std::string& path) {
  return wiring_from_json(json::parse(read_text_file(path)));
}

struct GadgetInstance {
  std::string name;
  VertexSet vertices;  // ids are stable across the expansion stage
  Vertex hub = -1, port1 = -1, port2 = -1;
};

struct ExpansionInfo {
  std::string original_label;
  Vertex prime = -1, dprime = -1;  // ids in the expanded graph
};

struct ClusterInfo {
  int gadget_index = -1;
  Vertex x = -1, y = -1;
  Vertex z_prime = -1, z_dprime = -1;
};

// The wired host before expansion (g1), the expanded graph (g6), the
// designated matching, and the structural bookkeeping the verifiers need.
struct G6Build {
  Multigraph g1;
  Multigraph g6;
  PerfectMatching m6;
  std::vector<GadgetInstance> gadgets;
  std::vector<ExpansionInfo> expansions;
  ClusterInfo w_cluster;  // only prime/dprime of w, stored as z fields unused
  Vertex w_prime = -1, w_dprime = -1;
  std::vector<ClusterInfo> clusters;
};

namespace detail {

inline Vertex resolve_label(const Multigraph& g, const std::string& s,
                            std::vector<std::string>& violations) {
  auto v = g.find_label(s);
  if (!v) {
    violations.push_back("unknown vertex reference: " + s);
    return -1;
  }
  return *v;
}

}  // namespace detail

// Builds and validates the wired construction. Stage 1 wires gadget copies
// and hub vertices into g1 and checks 6-regularity and lambda = lambda_o = 6.
// Stage 2 applies the declared 3-expansions and re-checks the same
// properties. Stage 3 resolves the designated matching and checks it is a
// perfect matching with multiplicity >= 2 on every edge. Any violation
// refuses the build.
inline G6Build build_g6(const WiringSpec& spec) {
  std::vector<std::string> violations;
  G6Build out;

  // stage 0: assemble
  const Q1Gadget gadget_ref = q1();
  Multigraph g(0);
  {
    Multigraph acc(0);
    bool first = true;
    for (const auto& name : spec.gadgets) {
      Multigraph copy = with_label_prefix(gadget_ref.graph, name + ".");
      GadgetInstance inst;
      inst.name = name;
      if (first) {
        acc = copy;
        inst.hub = gadget_ref.hub;
        inst.port1 = gadget_ref.port1;
        inst.port2 = gadget_ref.port2;
        for (Vertex v = 0; v < copy.vertex_count(); ++v) inst.vertices.push_back(v);
        first = false;
      } else {
        auto [u, off] = disjoint_union(acc, copy);
        acc = std::move(u);
        inst.hub = off + gadget_ref.hub;
        inst.port1 = off + gadget_ref.port1;
        inst.port2 = off + gadget_ref.port2;
        for (Vertex v = 0; v < copy.vertex_count(); ++v) inst.vertices.push_back(off + v);
      }
      out.gadgets.push_back(std::move(inst));
    }
    Multigraph hub(static_cast<int>(spec.hub_vertices.size()));
    {
      std::vector<std::string> ls = spec.hub_vertices;
      hub.set_labels(std::move(ls));
    }
    if (spec.gadgets.empty())
      g = std::move(hub);
    else {
      auto [u, off] = disjoint_union(acc, hub);
      (void)off;
      g = std::move(u);
    }
  }
  for (const auto& [a, b, c] : spec.gadget_edge_removals) {
    Vertex u = detail::resolve_label(g, a, violations);
    Vertex v = detail::resolve_label(g, b, violations);
    if (u < 0 || v < 0) continue;
    if (g.mu(u, v) < c) {
      violations.push_back("removal exceeds multiplicity: " + a + " - " + b);
      continue;
    }
    g.remove_copies_in_place(u, v, c);
  }
  for (const auto& [a, b, c] : spec.edges) {
    Vertex u = detail::resolve_label(g, a, violations);
    Vertex v = detail::resolve_label(g, b, violations);
    if (u < 0 || v < 0) continue;
    if (u == v) {
      violations.push_back("loop edge in wiring: " + a);
      continue;
    }
    g.add_copies(u, v, c);
  }
  if (!violations.empty()) throw validation_error(violations);

  // stage 1: validate the pre-expansion host
  if (g.vertex_count() % 2 != 0) violations.push_back("host has odd order");
  if (!is_regular(g, 6)) violations.push_back("host is not 6-regular");
  if (violations.empty()) {
    if (long long lv = lambda(g).value; lv != 6)
      violations.push_back("host lambda is " + std::to_string(lv) + ", expected 6");
    if (long long lo = lambda_odd(g).value; lo != 6)
      violations.push_back("host lambda_odd is " + std::to_string(lo) + ", expected 6");
  }
  if (!violations.empty()) throw validation_error(violations);
  out.g1 = g;

  // stage 2: expansions
  for (const auto& ex : spec.expansions) {
    auto vid = g.find_label(ex.vertex);
    if (!vid) {
      violations.push_back("expansion vertex not found: " + ex.vertex);
      break;
    }
    std::vector<EdgeCopy> part;
    bool ok = true;
    std::map<Vertex, long long> taken;
    for (const auto& [nl, count] : ex.prime) {
      auto nid = g.find_label(nl);
      if (!nid) {
        violations.push_back("expansion neighbour not found: " + nl);
        ok = false;
        break;
      }
      if (taken[*nid] + count > g.mu(*vid, *nid)) {
        violations.push_back("expansion partition exceeds multiplicity at " + ex.vertex + " - " +
                             nl);
        ok = false;
        break;
      }
      for (long long c = 0; c < count; ++c) part.emplace_back(*vid, *nid, taken[*nid] + c);
      taken[*nid] += count;
    }
    if (!ok) break;
    ExpandResult res = expand3(g, *vid, part);
    out.expansions.push_back({ex.vertex, res.v_prime, res.v_dprime});
    g = std::move(res.graph);
  }
  if (!violations.empty()) throw validation_error(violations);

  // stage 2b: validate the expanded graph
  if (!is_regular(g, 6)) violations.push_back("expanded graph is not 6-regular");
  if (violations.empty()) {
    if (long long lv = lambda(g).value; lv != 6)
      violations.push_back("expanded lambda is " + std::to_string(lv) + ", expected 6");
    if (long long lo = lambda_odd(g).value; lo != 6)
      violations.push_back("expanded lambda_odd is " + std::to_string(lo) + ", expected 6");
  }
  if (!violations.empty()) throw validation_error(violations);

  // stage 3: the designated matching
  PerfectMatching m6;
  for (const auto& [a, b] : spec.m6) {
    Vertex u = detail::resolve_label(g, a, violations);
    Vertex v = detail::resolve_label(g, b, violations);
    if (u < 0 || v < 0) continue;
    if (g.mu(u, v) == 0) {
      violations.push_back("designated matching pair is not an edge: " + a + " - " + b);
      continue;
    }
    if (g.mu(u, v) < 2)
      violations.push_back("designated matching edge has multiplicity < 2: " + a + " - " + b);
    m6.copies.emplace_back(u, v, 0);
  }
  m6.normalize();
  if (violations.empty() && !is_perfect_matching(g, m6))
    violations.push_back("designated matching is not a perfect matching");
  if (!violations.empty()) throw validation_error(violations);

  out.g6 = std::move(g);
  out.m6 = std::move(m6);

  // bookkeeping for the verifiers
  for (const ExpansionInfo& e : out.expansions) {
    if (e.original_label == "w") {
      out.w_prime = e.prime;
      out.w_dprime = e.dprime;
    }
  }
  for (const auto& cl : spec.clusters) {
    ClusterInfo info;
    for (size_t i = 0; i < out.gadgets.size(); ++i)
      if (out.gadgets[i].name == cl.gadget) info.gadget_index = static_cast<int>(i);
    auto x = out.g6.find_label(cl.x);
    auto y = out.g6.find_label(cl.y);
    if (info.gadget_index < 0 || !x || !y)
      throw validation_error({"cluster references unknown gadget or vertices"});
    info.x = *x;
    info.y = *y;
    for (const ExpansionInfo& e : out.expansions)
      if (e.original_label == cl.z) {
        info.z_prime = e.prime;
        info.z_dprime = e.dprime;
      }
    if (info.z_prime < 0)
      throw validation_error({"cluster z vertex " + cl.z + " is not among the expansions"});
    out.clusters.push_back(info);
  }
  return out;
}

// Convenience: witness-family base from a validated build.
inline G6Base g6_base_from_build(const G6Build& b) { return {b.g6, b.m6}; }

}  // namespace pdpm
