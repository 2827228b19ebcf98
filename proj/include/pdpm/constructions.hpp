#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdpm/connectivity.hpp"
#include "pdpm/json_io.hpp"
#include "pdpm/matching.hpp"
#include "pdpm/multigraph.hpp"
#include "pdpm/petersen.hpp"

namespace pdpm {

// P plus one extra copy of each catalog matching, m.counts[i] times each.
// The result is (k+3)-regular for k = sum(m) and every edge e with catalog
// pair {i, j} has multiplicity 1 + m_i + m_j.
inline Multigraph p_power(const PetersenMultiset& m) {
  const PetersenCatalog& cat = petersen_catalog();
  Multigraph g = cat.graph;
  for (int i = 0; i < 6; ++i)
    for (long long c = 0; c < m.counts[i]; ++c) g = g.add_matching_copies(cat.matchings[i]);
  return g;
}

// --- splice ---------------------------------------------------------------

// Metadata of one splice application, enough to project matching families
// back onto either operand.
struct SpliceRecord {
  int t = 0;
  int r = 0;
  Vertex g_u = -1, g_v = -1;  // operand-local endpoint ids
  Vertex h_x = -1, h_y = -1;
  Vertex merged_ux = -1, merged_vy = -1;  // ids in the spliced graph
  long long uv_g_remaining = 0;  // merged-pair copies 0..a-1 originate from g
  long long xy_h_remaining = 0;  // merged-pair copies a..a+b-1 originate from h
  std::vector<Vertex> g_map, h_map;  // operand id -> spliced id
};

// Deletes t copies of uv in g and r-t copies of xy in h, then identifies u
// with x and v with y. g keeps its vertex ids; h's surviving vertices are
// appended. Copy indices of the merged pair place g-origin copies first.
inline std::pair<Multigraph, SpliceRecord> splice(const Multigraph& g, Vertex u, Vertex v,
                                                  const Multigraph& h, Vertex x, Vertex y, int t,
                                                  int r) {
  if (t < 0 || t > r) throw precondition_error("splice: t must lie in 0..r");
  if (u == v || x == y) throw precondition_error("splice: endpoints must be distinct");
  if (g.mu(u, v) < t) throw precondition_error("splice: g has fewer than t copies of uv");
  if (h.mu(x, y) < r - t) throw precondition_error("splice: h has fewer than r-t copies of xy");

  SpliceRecord rec;
  rec.t = t;
  rec.r = r;
  rec.g_u = u;
  rec.g_v = v;
  rec.h_x = x;
  rec.h_y = y;
  rec.uv_g_remaining = g.mu(u, v) - t;
  rec.xy_h_remaining = h.mu(x, y) - (r - t);

  const int ng = g.vertex_count(), nh = h.vertex_count();
  rec.g_map.resize(ng);
  for (Vertex i = 0; i < ng; ++i) rec.g_map[i] = i;
  rec.h_map.assign(nh, -1);
  rec.h_map[x] = u;
  rec.h_map[y] = v;
  int next = ng;
  for (Vertex i = 0; i < nh; ++i)
    if (i != x && i != y) rec.h_map[i] = next++;
  rec.merged_ux = u;
  rec.merged_vy = v;

  Multigraph out(ng + nh - 2);
  std::vector<std::string> labels(ng + nh - 2);
  std::set<std::string> used;
  auto unique_label = [&used](std::string s) {
    while (!used.insert(s).second) s += "~";
    return s;
  };
  for (Vertex i = 0; i < ng; ++i)
    if (i != u && i != v) labels[i] = unique_label(g.label(i));
  labels[u] = unique_label(g.label(u) + "+" + h.label(x));
  labels[v] = unique_label(g.label(v) + "+" + h.label(y));
  for (Vertex i = 0; i < nh; ++i)
    if (i != x && i != y) labels[rec.h_map[i]] = unique_label(h.label(i));
  out.set_labels(std::move(labels));

  for (const auto& [p, m] : g.adjacency()) {
    long long keep = m;
    if ((p.first == std::min(u, v)) && (p.second == std::max(u, v))) keep -= t;
    out.add_copies(p.first, p.second, keep);
  }
  for (const auto& [p, m] : h.adjacency()) {
    long long keep = m;
    if ((p.first == std::min(x, y)) && (p.second == std::max(x, y))) keep -= (r - t);
    out.add_copies(rec.h_map[p.first], rec.h_map[p.second], keep);
  }
  return {std::move(out), std::move(rec)};
}

// --- 3-expansion ------------------------------------------------------------

struct ExpandResult {
  Multigraph graph;
  Vertex v_prime = -1;   // keeps v's slot, carries the part1 edges
  Vertex v_dprime = -1;  // appended vertex, carries the rest
};

// Splits v into v' and v'', distributing its edge copies per the given
// partition side, and joins the halves by three parallel edges.
inline ExpandResult expand3(const Multigraph& g, Vertex v, const std::vector<EdgeCopy>& part1) {
  std::map<Vertex, long long> take;
  std::set<EdgeCopy> seen;
  for (const EdgeCopy& e : part1) {
    if (!seen.insert(e).second) throw precondition_error("expand3: duplicate copy in partition");
    Vertex other;
    if (e.u == v)
      other = e.v;
    else if (e.v == v)
      other = e.u;
    else
      throw precondition_error("expand3: partition copy not incident with the split vertex");
    if (e.copy < 0 || e.copy >= g.mu(v, other))
      throw precondition_error("expand3: partition copy does not exist");
    take[other]++;
  }

  const int n = g.vertex_count();
  ExpandResult res;
  res.v_prime = v;
  res.v_dprime = n;
  Multigraph out(n + 1);
  std::vector<std::string> labels(n + 1);
  for (Vertex i = 0; i < n; ++i) labels[i] = g.label(i);
  labels[v] = g.label(v) + "'";
  labels[n] = g.label(v) + "''";
  out.set_labels(std::move(labels));

  for (const auto& [p, m] : g.adjacency()) {
    if (p.first != v && p.second != v) {
      out.add_copies(p.first, p.second, m);
      continue;
    }
    const Vertex other = (p.first == v) ? p.second : p.first;
    const long long to_prime = take.count(other) ? take[other] : 0;
    out.add_copies(v, other, to_prime);
    out.add_copies(n, other, m - to_prime);
  }
  out.add_copies(v, n, 3);

  if (out.degree(v) != static_cast<long long>(part1.size()) + 3)
    throw precondition_error("expand3: partition does not cover the boundary consistently");
  return {std::move(out), res.v_prime, res.v_dprime};
}

// --- the two-block gadget ----------------------------------------------------

struct Q1Gadget {
  Multigraph graph;   // 19 vertices
  Vertex hub = -1;    // the identified vertex u1^1+u1^2, degree 6
  Vertex port1 = -1;  // v1^1, degree 3
  Vertex port2 = -1;  // v1^2, degree 3
};

// Two copies of P + M0 + M1 + M2 with all three parallel u1v1 copies removed
// from each, glued by identifying their u1 vertices. The two v1 vertices are
// the degree-3 ports.
inline Q1Gadget q1() {
  PetersenMultiset m;
  m.counts = {1, 1, 1, 0, 0, 0};
  const Multigraph base = p_power(m);
  Multigraph c1 = with_label_suffix(base, "^1");
  Multigraph c2 = with_label_suffix(base, "^2");
  c1.remove_copies_in_place(0, 5, 3);  // u1-v1 bundle, mu = 1 + m0 + m1 = 3
  c2.remove_copies_in_place(0, 5, 3);
  auto [both, off] = disjoint_union(c1, c2);
  SurgeryResult glued = identify(both, 0, off);  // u1^1 with u1^2
  Q1Gadget out;
  out.hub = glued.vertex_map[0];
  out.port1 = glued.vertex_map[5];
  out.port2 = glued.vertex_map[off + 5];
  out.graph = std::move(glued.graph);
  return out;
}

// --- base graphs and the induction ladder ------------------------------------

// The (3l-4)-regular base: P + (l-2)M0 + (l-3)M1 + (l-3)M2 + M3, together
// with the designated matching M0, whose edges all have multiplicity >= l-1.
inline std::pair<Multigraph, PerfectMatching> base_g(int l) {
  if (l < 4) throw domain_error("base_g: requires l >= 4");
  PetersenMultiset m;
  m.counts = {l - 2, l - 3, l - 3, 1, 0, 0};
  Multigraph g = p_power(m);
  PerfectMatching m0 = petersen_catalog().matchings[0];
  return {std::move(g), std::move(m0)};
}

// P + ceil((r-l)/2) M0 + floor((r-l)/2) M1 + (l-2) M2: the (r+1)-regular
// block spliced in by every induction step. Requires r >= 3l-4 so that its
// edge-connectivity reaches 2l.
inline Multigraph p_next(int r, int l) {
  if (l < 2) throw domain_error("p_next: requires l >= 2");
  if (r < 3 * l - 4) throw domain_error("p_next: requires r >= 3l-4");
  PetersenMultiset m;
  m.counts = {(r - l + 1) / 2, (r - l) / 2, l - 2, 0, 0, 0};
  return p_power(m);
}

struct InductionStepRecord {
  int l = 0;
  int r_from = 0;  // input is an r_from-graph, output an (r_from+1)-graph
  PerfectMatching matching_in;
  PerfectMatching matching_out;
  std::vector<SpliceRecord> splices;
  std::string result_hash;
};

struct InductionStepResult {
  Multigraph graph;
  PerfectMatching matching;
  InductionStepRecord record;
};

// One ladder step r -> r+1: add the carried matching, then splice a fresh
// (r+1)-regular block over every matching edge. The output matching is the
// union of the blocks' M2 copies. Input preconditions and the three output
// properties (degree+odd connectivity, lambda >= 2l, multiplicities on the
// new matching) are all computed, not assumed.
inline InductionStepResult induction_step(const Multigraph& g, const PerfectMatching& m, int l,
                                          int r) {
  if (l < 2) throw precondition_error("induction_step: requires l >= 2");
  if (r < 3 * l - 4) throw precondition_error("induction_step: requires r >= 3l-4");
  if (!is_perfect_matching(g, m))
    throw precondition_error("induction_step: carried matching is not a perfect matching");
  for (const EdgeCopy& e : m.copies)
    if (g.mu(e.u, e.v) < l - 1)
      throw precondition_error("induction_step: multiplicity below l-1 on matching edge " +
                               g.label(e.u) + "-" + g.label(e.v));
  {
    auto rg = is_r_graph(g);
    if (!rg || *rg != r)
      throw precondition_error("induction_step: input is not an r-graph for r = " +
                               std::to_string(r));
    CutResult lam = lambda(g);
    if (lam.value < 2 * l)
      throw precondition_error("induction_step: input edge-connectivity " +
                               std::to_string(lam.value) + " is below 2l");
  }

  InductionStepRecord rec;
  rec.l = l;
  rec.r_from = r;
  rec.matching_in = m;

  Multigraph cur = g.add_matching_copies(m);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const EdgeCopy& e : m.copies) pairs.push_back({e.u, e.v});
  std::sort(pairs.begin(), pairs.end());

  const Multigraph block = p_next(r, l);
  const PerfectMatching& m2 = petersen_catalog().matchings[2];
  PerfectMatching m_out;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string tag = "^" + std::to_string(i + 1) + "@r" + std::to_string(r + 1);
    Multigraph fresh = with_label_suffix(block, tag);
    auto [next, srec] =
        splice(cur, pairs[i].first, pairs[i].second, fresh, 0, 5, l, r + 1);
    for (const EdgeCopy& e : m2.copies) {
      const Vertex a = srec.h_map[e.u], b = srec.h_map[e.v];
      m_out.copies.emplace_back(a, b, 0);
    }
    rec.splices.push_back(std::move(srec));
    cur = std::move(next);
  }
  m_out.normalize();

  if (!is_perfect_matching(cur, m_out))
    throw integrity_error("induction_step: output matching is not perfect");
  for (const EdgeCopy& e : m_out.copies)
    if (cur.mu(e.u, e.v) < l - 1)
      throw integrity_error("induction_step: output multiplicity below l-1 on " +
                            cur.label(e.u) + "-" + cur.label(e.v));
  {
    auto rg = is_r_graph(cur);
    if (!rg || *rg != r + 1)
      throw integrity_error("induction_step: output is not an (r+1)-graph");
    CutResult lam = lambda(cur);
    if (lam.value < 2 * l)
      throw integrity_error("induction_step: output edge-connectivity dropped below 2l");
  }

  rec.matching_out = m_out;
  rec.result_hash = graph_hash(cur);
  return {std::move(cur), std::move(m_out), std::move(rec)};
}

// --- witness family -----------------------------------------------------------

enum class WitnessKind { inductive, trivial_range };

struct FamilyProvenance {
  int l = 0;
  int r = 0;
  WitnessKind kind = WitnessKind::inductive;
  std::string base_kind;  // "petersen-power" or "g6"
  int base_r = 0;
  std::optional<PetersenMultiset> base_multiset;
  std::string base_hash;
  std::vector<InductionStepRecord> chain;
};

struct Witness {
  Multigraph graph;
  PerfectMatching matching;
  FamilyProvenance provenance;
};

inline PetersenMultiset balanced_multiset(long long total) {
  PetersenMultiset m;
  for (int i = 0; i < 6; ++i) m.counts[i] = total / 6 + (i < total % 6 ? 1 : 0);
  return m;
}

struct G6Base {
  Multigraph graph;
  PerfectMatching matching;
};

// A 2l-edge-connected r-graph without a (3l-5)-PDPM, with provenance.
// For r >= 3l-3 the graph is produced by the induction ladder from the base
// at r = 3l-4 (the Petersen-power base for l >= 4; a validated wired base
// for l = 3, which the caller must supply). For 2l <= r < 3l-4 the witness
// is a balanced class-2 Petersen power, reported as trivial-range.
inline Witness family_witness(int l, int r, const G6Base* g6_base = nullptr) {
  if (l < 3) throw domain_error("family_witness: requires l >= 3");
  if (r < 2 * l) throw domain_error("family_witness: requires r >= 2l");

  Witness w;
  w.provenance.l = l;
  w.provenance.r = r;

  if (l >= 4 && r < 3 * l - 4) {
    PetersenMultiset m = balanced_multiset(r - 3);
    w.graph = p_power(m);
    w.matching = petersen_catalog().matchings[0];
    w.provenance.kind = WitnessKind::trivial_range;
    w.provenance.base_kind = "petersen-power";
    w.provenance.base_r = r;
    w.provenance.base_multiset = m;
    w.provenance.base_hash = graph_hash(w.graph);
    if (lambda(w.graph).value < 2 * l)
      throw integrity_error("family_witness: trivial-range witness misses 2l-edge-connectivity");
    return w;
  }

  int base_r;
  if (l == 3) {
    if (g6_base == nullptr)
      throw unsupported_error("family_witness: l = 3 requires a validated wired base");
    base_r = 6;
    w.graph = g6_base->graph;
    w.matching = g6_base->matching;
    w.provenance.base_kind = "g6";
  } else {
    base_r = 3 * l - 4;
    auto [g, m0] = base_g(l);
    w.graph = std::move(g);
    w.matching = std::move(m0);
    w.provenance.base_kind = "petersen-power";
    PetersenMultiset m;
    m.counts = {l - 2, l - 3, l - 3, 1, 0, 0};
    w.provenance.base_multiset = m;
  }
  w.provenance.kind = WitnessKind::inductive;
  w.provenance.base_r = base_r;
  w.provenance.base_hash = graph_hash(w.graph);

  for (int rr = base_r; rr < r; ++rr) {
    InductionStepResult step = induction_step(w.graph, w.matching, l, rr);
    w.graph = std::move(step.graph);
    w.matching = std::move(step.matching);
    w.provenance.chain.push_back(std::move(step.record));
  }
  return w;
}

// --- provenance serialization ---------------------------------------------

inline json multiset_to_json(const PetersenMultiset& m) {
  json a = json::array();
  for (long long c : m.counts) a.push_back(c);
  return a;
}

inline PetersenMultiset multiset_from_json(const json& j) {
  PetersenMultiset m;
  if (!j.is_array() || j.size() != 6) throw domain_error("multiset json: expected 6 counts");
  for (int i = 0; i < 6; ++i) m.counts[i] = j[i].get<long long>();
  return m;
}

inline json provenance_to_json(const FamilyProvenance& p) {
  json j;
  j["l"] = p.l;
  j["r"] = p.r;
  j["kind"] = p.kind == WitnessKind::inductive ? "inductive" : "trivial-range";
  j["base_kind"] = p.base_kind;
  j["base_r"] = p.base_r;
  if (p.base_multiset) j["base_multiset"] = multiset_to_json(*p.base_multiset);
  j["base_hash"] = p.base_hash;
  json chain = json::array();
  for (const InductionStepRecord& s : p.chain) {
    json sj;
    sj["l"] = s.l;
    sj["r_from"] = s.r_from;
    sj["matching_in"] = matching_to_json(s.matching_in);
    sj["matching_out"] = matching_to_json(s.matching_out);
    sj["splice_count"] = s.splices.size();
    sj["result_hash"] = s.result_hash;
    chain.push_back(std::move(sj));
  }
  j["chain"] = std::move(chain);
  return j;
}

}  // namespace pdpm
