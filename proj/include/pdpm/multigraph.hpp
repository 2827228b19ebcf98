#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "pdpm/errors.hpp"

namespace pdpm {

using Vertex = int;

// One copy of a parallel edge. Endpoints are normalized u < v; copies of the
// same pair are distinguished by copy_index in 0..mu(u,v)-1.
struct EdgeCopy {
  Vertex u = 0;
  Vertex v = 0;
  long long copy = 0;

  EdgeCopy() = default;
  EdgeCopy(Vertex a, Vertex b, long long c) : u(std::min(a, b)), v(std::max(a, b)), copy(c) {}

  friend bool operator==(const EdgeCopy&, const EdgeCopy&) = default;
  friend auto operator<=>(const EdgeCopy& a, const EdgeCopy& b) {
    return std::tie(a.u, a.v, a.copy) <=> std::tie(b.u, b.v, b.copy);
  }
};

// A set of edge copies covering every vertex of its host exactly once.
// Kept sorted so that equal matchings compare equal.
struct PerfectMatching {
  std::vector<EdgeCopy> copies;

  void normalize() { std::sort(copies.begin(), copies.end()); }
  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.copies <=> b.copies;
  }
};

// Sorted set of vertex ids.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool vertex_set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Undirected multigraph with labelled vertices and no loops. Parallel edges
// are stored as a pair -> multiplicity map; copy identities are synthesized
// deterministically as (pair, 0..mu-1). Graphs are treated as immutable
// values once built: every construction returns a new graph.
class Multigraph {
 public:
  static constexpr int kMaxVertices = 10000;

  Multigraph() = default;

  explicit Multigraph(int n) {
    if (n < 0 || n > kMaxVertices) throw domain_error("vertex count out of range");
    n_ = n;
    deg_.assign(n, 0);
    labels_.resize(n);
    for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i);
  }

  Multigraph(int n, const std::vector<std::tuple<Vertex, Vertex, long long>>& edges)
      : Multigraph(n) {
    for (const auto& [u, v, m] : edges) add_copies(u, v, m);
  }

  int vertex_count() const { return n_; }

  long long copy_count() const {
    long long c = 0;
    for (const auto& [p, m] : adj_) c += m;
    return c;
  }

  long long degree(Vertex v) const {
    check_vertex(v);
    return deg_[v];
  }

  // Number of parallel edges between u and v; 0 for non-adjacent pairs and u = v.
  long long mu(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    auto it = adj_.find(key(u, v));
    return it == adj_.end() ? 0 : it->second;
  }

  // Maximum multiplicity over all vertex pairs.
  long long max_mu() const {
    if (n_ == 0) throw domain_error("max_mu: empty graph");
    long long best = 0;
    for (const auto& [p, m] : adj_) best = std::max(best, m);
    return best;
  }

  const std::map<std::pair<Vertex, Vertex>, long long>& adjacency() const { return adj_; }

  // All edge copies with exactly one endpoint in x.
  std::vector<EdgeCopy> boundary(const VertexSet& x) const {
    if (x.empty() || static_cast<int>(x.size()) >= n_)
      throw domain_error("boundary: shore must be a nonempty proper subset");
    std::vector<EdgeCopy> out;
    for (const auto& [p, m] : adj_) {
      const bool iu = vertex_set_contains(x, p.first);
      const bool iv = vertex_set_contains(x, p.second);
      if (iu != iv)
        for (long long c = 0; c < m; ++c) out.emplace_back(p.first, p.second, c);
    }
    return out;
  }

  long long boundary_size(const VertexSet& x) const {
    if (x.empty() || static_cast<int>(x.size()) >= n_)
      throw domain_error("boundary: shore must be a nonempty proper subset");
    long long total = 0;
    for (const auto& [p, m] : adj_) {
      const bool iu = vertex_set_contains(x, p.first);
      const bool iv = vertex_set_contains(x, p.second);
      if (iu != iv) total += m;
    }
    return total;
  }

  // All edge copies with one endpoint in x and the other in y. Requires x, y disjoint.
  std::vector<EdgeCopy> edges_between(const VertexSet& x, const VertexSet& y) const {
    for (Vertex v : x)
      if (vertex_set_contains(y, v)) throw domain_error("edges_between: sets overlap");
    std::vector<EdgeCopy> out;
    for (const auto& [p, m] : adj_) {
      const bool cross = (vertex_set_contains(x, p.first) && vertex_set_contains(y, p.second)) ||
                         (vertex_set_contains(y, p.first) && vertex_set_contains(x, p.second));
      if (cross)
        for (long long c = 0; c < m; ++c) out.emplace_back(p.first, p.second, c);
    }
    return out;
  }

  // Returns this graph plus one extra copy of every edge of f. f must cover
  // every vertex exactly once along existing adjacencies.
  Multigraph add_matching_copies(const PerfectMatching& f) const {
    std::vector<char> covered(n_, 0);
    for (const EdgeCopy& e : f.copies) {
      check_vertex(e.u);
      check_vertex(e.v);
      if (mu(e.u, e.v) == 0)
        throw domain_error("add_matching_copies: matching pair is not an edge of the graph");
      if (covered[e.u] || covered[e.v])
        throw domain_error("add_matching_copies: vertex covered twice");
      covered[e.u] = covered[e.v] = 1;
    }
    for (Vertex v = 0; v < n_; ++v)
      if (!covered[v]) throw domain_error("add_matching_copies: vertex not covered");
    Multigraph out = *this;
    for (const EdgeCopy& e : f.copies) out.add_copies(e.u, e.v, 1);
    return out;
  }

  // --- labels ----------------------------------------------------------

  const std::string& label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  void set_label(Vertex v, const std::string& s) {
    check_vertex(v);
    for (Vertex u = 0; u < n_; ++u)
      if (u != v && labels_[u] == s) throw domain_error("duplicate vertex label: " + s);
    labels_[v] = s;
  }

  void set_labels(std::vector<std::string> ls) {
    if (static_cast<int>(ls.size()) != n_) throw domain_error("label vector size mismatch");
    std::set<std::string> seen;
    for (const auto& s : ls)
      if (!seen.insert(s).second) throw domain_error("duplicate vertex label: " + s);
    labels_ = std::move(ls);
  }

  std::optional<Vertex> find_label(const std::string& s) const {
    for (Vertex v = 0; v < n_; ++v)
      if (labels_[v] == s) return v;
    return std::nullopt;
  }

  Vertex vertex_by_label(const std::string& s) const {
    auto v = find_label(s);
    if (!v) throw domain_error("unknown vertex label: " + s);
    return *v;
  }

  // --- construction helpers (used by builders; graphs are value types) ---

  void add_copies(Vertex u, Vertex v, long long count) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw domain_error("loops are not allowed");
    if (count < 0) throw domain_error("negative multiplicity");
    if (count == 0) return;
    adj_[key(u, v)] += count;
    deg_[u] += count;
    deg_[v] += count;
  }

  void remove_copies_in_place(Vertex u, Vertex v, long long count) {
    check_vertex(u);
    check_vertex(v);
    if (count < 0) throw domain_error("negative removal count");
    if (count == 0) return;
    auto it = adj_.find(key(u, v));
    if (it == adj_.end() || it->second < count)
      throw precondition_error("remove_copies: fewer copies exist than requested");
    it->second -= count;
    if (it->second == 0) adj_.erase(it);
    deg_[u] -= count;
    deg_[v] -= count;
  }

 private:
  static std::pair<Vertex, Vertex> key(Vertex u, Vertex v) {
    return {std::min(u, v), std::max(u, v)};
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw domain_error("unknown vertex id " + std::to_string(v));
  }

  int n_ = 0;
  std::map<std::pair<Vertex, Vertex>, long long> adj_;
  std::vector<long long> deg_;
  std::vector<std::string> labels_;
};

inline VertexSet full_vertex_set(const Multigraph& g) {
  VertexSet s(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) s[i] = i;
  return s;
}

inline VertexSet complement_set(const Multigraph& g, const VertexSet& x) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!vertex_set_contains(x, v)) out.push_back(v);
  return out;
}

inline bool is_regular(const Multigraph& g, long long r) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

inline std::optional<long long> regular_degree(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  long long r = g.degree(0);
  return is_regular(g, r) ? std::optional<long long>(r) : std::nullopt;
}

// Validates that pm is a perfect matching of g at the copy level.
inline bool is_perfect_matching(const Multigraph& g, const PerfectMatching& pm) {
  std::vector<char> covered(g.vertex_count(), 0);
  for (const EdgeCopy& e : pm.copies) {
    if (e.u < 0 || e.v >= g.vertex_count() || e.copy < 0 || e.copy >= g.mu(e.u, e.v))
      return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

// --- surgery -------------------------------------------------------------

// Primitive graph edits. Every edit returns the new graph together with a
// provenance map old id -> new id (merged vertices map to the merged id).
struct SurgeryResult {
  Multigraph graph;
  std::vector<Vertex> vertex_map;
};

inline SurgeryResult remove_copies(const Multigraph& g, Vertex u, Vertex v, long long count) {
  Multigraph out = g;
  out.remove_copies_in_place(u, v, count);
  std::vector<Vertex> id(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) id[i] = i;
  return {std::move(out), std::move(id)};
}

// Merges v into u. Requires mu(u,v) = 0 so that no loop is created; the
// merged vertex keeps u's position and gets the label "<u>+<v>".
inline SurgeryResult identify(const Multigraph& g, Vertex u, Vertex v) {
  if (u == v) throw domain_error("identify: vertices must differ");
  if (g.mu(u, v) != 0)
    throw precondition_error("identify: vertices are adjacent, identification would create a loop");
  const int n = g.vertex_count();
  std::vector<Vertex> map(n);
  int next = 0;
  for (Vertex i = 0; i < n; ++i) {
    if (i == v) continue;
    map[i] = next++;
  }
  map[v] = map[u];
  Multigraph out(n - 1);
  std::vector<std::string> labels(n - 1);
  for (Vertex i = 0; i < n; ++i) {
    if (i == v) continue;
    labels[map[i]] = (i == u) ? g.label(u) + "+" + g.label(v) : g.label(i);
  }
  out.set_labels(std::move(labels));
  for (const auto& [p, m] : g.adjacency()) out.add_copies(map[p.first], map[p.second], m);
  return {std::move(out), std::move(map)};
}

// Induced subgraph on x; vertices are re-densified in increasing id order.
// Vertices outside x map to -1.
inline SurgeryResult induced(const Multigraph& g, const VertexSet& x) {
  if (x.empty()) throw domain_error("induced: empty vertex set");
  std::vector<Vertex> map(g.vertex_count(), -1);
  int next = 0;
  for (Vertex v : x) {
    if (v < 0 || v >= g.vertex_count()) throw domain_error("induced: unknown vertex");
    map[v] = next++;
  }
  Multigraph out(next);
  std::vector<std::string> labels(next);
  for (Vertex v : x) labels[map[v]] = g.label(v);
  out.set_labels(std::move(labels));
  for (const auto& [p, m] : g.adjacency())
    if (map[p.first] >= 0 && map[p.second] >= 0) out.add_copies(map[p.first], map[p.second], m);
  return {std::move(out), std::move(map)};
}

struct RemoveCopiesOp {
  Vertex u, v;
  long long count;
};
struct IdentifyOp {
  Vertex u, v;
};
struct InducedOp {
  VertexSet x;
};
using SurgeryOp = std::variant<RemoveCopiesOp, IdentifyOp, InducedOp>;

// Applies a sequence of primitive edits. Vertex ids inside each op refer to
// the graph as it stands when that op runs; the returned map composes all
// steps (original id -> final id, -1 if dropped).
inline SurgeryResult surgery(const Multigraph& g, const std::vector<SurgeryOp>& ops) {
  Multigraph cur = g;
  std::vector<Vertex> total(g.vertex_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i) total[i] = i;
  for (const SurgeryOp& op : ops) {
    SurgeryResult step = std::visit(
        [&](const auto& o) -> SurgeryResult {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, RemoveCopiesOp>)
            return remove_copies(cur, o.u, o.v, o.count);
          else if constexpr (std::is_same_v<T, IdentifyOp>)
            return identify(cur, o.u, o.v);
          else
            return induced(cur, o.x);
        },
        op);
    for (Vertex i = 0; i < g.vertex_count(); ++i)
      if (total[i] >= 0) total[i] = step.vertex_map[total[i]];
    cur = std::move(step.graph);
  }
  return {std::move(cur), std::move(total)};
}

// Disjoint union; h's vertices are appended after g's. Labels must not clash.
inline std::pair<Multigraph, Vertex> disjoint_union(const Multigraph& g, const Multigraph& h) {
  const int n = g.vertex_count() + h.vertex_count();
  Multigraph out(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : g.labels()) labels.push_back(s);
  for (const auto& s : h.labels()) labels.push_back(s);
  out.set_labels(std::move(labels));
  for (const auto& [p, m] : g.adjacency()) out.add_copies(p.first, p.second, m);
  const Vertex off = g.vertex_count();
  for (const auto& [p, m] : h.adjacency()) out.add_copies(p.first + off, p.second + off, m);
  return {std::move(out), off};
}

inline Multigraph with_label_suffix(const Multigraph& g, const std::string& suffix) {
  Multigraph out = g;
  std::vector<std::string> ls = g.labels();
  for (auto& s : ls) s += suffix;
  out.set_labels(std::move(ls));
  return out;
}

inline Multigraph with_label_prefix(const Multigraph& g, const std::string& prefix) {
  Multigraph out = g;
  std::vector<std::string> ls = g.labels();
  for (auto& s : ls) s = prefix + s;
  out.set_labels(std::move(ls));
  return out;
}

}  // namespace pdpm
