#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pdpm/multigraph.hpp"

namespace pdpm {

using json = nlohmann::ordered_json;

// Canonical graph format:
//   { "n": int, "labels": [str, ...], "edges": [[u, v, multiplicity], ...] }
// with u < v and edges sorted lexicographically. Import accepts only the
// canonical form so that export/import round-trips are byte exact.

inline json graph_to_json(const Multigraph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["labels"] = g.labels();
  json edges = json::array();
  for (const auto& [p, m] : g.adjacency()) edges.push_back({p.first, p.second, m});
  j["edges"] = std::move(edges);
  return j;
}

inline std::string graph_to_canonical_string(const Multigraph& g) {
  return graph_to_json(g).dump();
}

inline Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("labels") || !j.contains("edges"))
    throw domain_error("graph json: expected object with n, labels, edges");
  const int n = j.at("n").get<int>();
  Multigraph g(n);
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  g.set_labels(std::move(labels));
  std::pair<Vertex, Vertex> prev{-1, -1};
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw domain_error("graph json: edge must be [u, v, m]");
    const Vertex u = e[0].get<Vertex>();
    const Vertex v = e[1].get<Vertex>();
    const long long m = e[2].get<long long>();
    if (u >= v) throw domain_error("graph json: edges must satisfy u < v");
    if (m <= 0) throw domain_error("graph json: multiplicity must be positive");
    if (std::pair<Vertex, Vertex>{u, v} <= prev)
      throw domain_error("graph json: edges must be strictly sorted");
    prev = {u, v};
    g.add_copies(u, v, m);
  }
  return g;
}

inline Multigraph graph_from_string(const std::string& s) {
  return graph_from_json(json::parse(s));
}

// Atomic write: the content lands under a temporary name and is renamed
// into place, so readers never observe a partially written artifact.
inline void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw domain_error("cannot open for writing: " + tmp);
    f << content;
    if (!f.good()) throw domain_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw domain_error("cannot move artifact into place: " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Multigraph load_graph(const std::string& path) {
  return graph_from_string(read_text_file(path));
}

inline void save_graph(const Multigraph& g, const std::string& path) {
  write_text_file(path, graph_to_canonical_string(g));
}

// DOT export; multiplicity is rendered as an edge label.
inline std::string graph_to_dot(const Multigraph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (const auto& [p, m] : g.adjacency()) {
    out << "  " << p.first << " -- " << p.second;
    if (m > 1) out << " [label=\"" << m << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Matchings are serialized as sorted lists of [u, v, copy_index].
inline json matching_to_json(const PerfectMatching& pm) {
  PerfectMatching s = pm;
  s.normalize();
  json arr = json::array();
  for (const EdgeCopy& e : s.copies) arr.push_back({e.u, e.v, e.copy});
  json j;
  j["copies"] = std::move(arr);
  return j;
}

inline PerfectMatching matching_from_json(const json& j) {
  PerfectMatching pm;
  for (const auto& e : j.at("copies"))
    pm.copies.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<long long>());
  pm.normalize();
  return pm;
}

// FNV-1a digest of a canonical serialization, as 16 hex chars.
inline std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline std::string graph_hash(const Multigraph& g) {
  return fnv1a_hex(graph_to_canonical_string(g));
}

}  // namespace pdpm
