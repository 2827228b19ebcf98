#pragma once

#include <array>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "pdpm/multigraph.hpp"
#include "pdpm/petersen.hpp"

namespace pdpm {

// Multiset of catalog matchings: counts[i] copies of Mi.
struct PetersenMultiset {
  std::array<long long, 6> counts{0, 0, 0, 0, 0, 0};

  long long sum() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }
  friend bool operator==(const PetersenMultiset&, const PetersenMultiset&) = default;
};

// All multisets with sum(m) <= total, in lexicographic order.
inline std::vector<PetersenMultiset> multisets_up_to(long long total) {
  std::vector<PetersenMultiset> out;
  PetersenMultiset m;
  auto rec = [&](auto&& self, int i, long long left) -> void {
    if (i == 6) {
      out.push_back(m);
      return;
    }
    for (m.counts[i] = 0; m.counts[i] <= left; ++m.counts[i]) self(self, i + 1, left - m.counts[i]);
    m.counts[i] = 0;
  };
  rec(rec, 0, total);
  return out;
}

// Per-index counts of a family of matchings after projection onto the catalog.
struct ProjectionVector {
  std::array<long long, 6> counts{0, 0, 0, 0, 0, 0};

  long long sum() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }
  friend bool operator==(const ProjectionVector&, const ProjectionVector&) = default;
  friend auto operator<=>(const ProjectionVector& a, const ProjectionVector& b) {
    return a.counts <=> b.counts;
  }
};

// Pairwise disjoint perfect matchings of one host graph. Disjointness is at
// the level of individual parallel-edge copies.
struct PdpmFamily {
  std::vector<PerfectMatching> matchings;

  int size() const { return static_cast<int>(matchings.size()); }
};

inline bool is_valid_pdpm_family(const Multigraph& g, const PdpmFamily& fam) {
  std::set<EdgeCopy> seen;
  for (const PerfectMatching& pm : fam.matchings) {
    if (!is_perfect_matching(g, pm)) return false;
    for (const EdgeCopy& e : pm.copies)
      if (!seen.insert(e).second) return false;
  }
  return true;
}

enum class PmMode { support, copies };
enum class SearchStatus { exact, budget_exhausted };

namespace detail {

// Support perfect matchings, enumerated by always covering the lowest
// uncovered vertex. This yields each matching exactly once, in increasing
// lexicographic order of its sorted pair list.
inline void enumerate_support_pms(const Multigraph& g, std::vector<char>& used,
                                  std::vector<std::pair<Vertex, Vertex>>& cur,
                                  long long cap, long long& found,
                                  const std::function<void(const std::vector<std::pair<Vertex, Vertex>>&)>& cb) {
  Vertex u = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!used[v]) {
      u = v;
      break;
    }
  if (u == -1) {
    ++found;
    if (found > cap) throw budget_error("perfect matching cap exceeded", found - 1);
    cb(cur);
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
    enumerate_support_pms(g, used, cur, cap, found, cb);
    cur.pop_back();
    used[other] = 0;
  }
  used[u] = 0;
}

}  // namespace detail

// Perfect matchings of g. In support mode, matchings of the underlying
// simple support (copy index 0 everywhere). In copies mode, each support
// matching is expanded by the per-edge multiplicity product; the expansion
// is refused with a budget error when the total exceeds cap.
inline std::vector<PerfectMatching> enumerate_pm(const Multigraph& g, PmMode mode,
                                                 long long cap = 1000000) {
  if (g.vertex_count() % 2 != 0) throw domain_error("enumerate_pm: odd vertex count");
  std::vector<std::vector<std::pair<Vertex, Vertex>>> supports;
  {
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<std::pair<Vertex, Vertex>> cur;
    long long found = 0;
    detail::enumerate_support_pms(
        g, used, cur, mode == PmMode::support ? cap : std::numeric_limits<long long>::max(),
        found, [&](const auto& pm) { supports.push_back(pm); });
  }
  for (auto& s : supports) std::sort(s.begin(), s.end());
  std::sort(supports.begin(), supports.end());

  std::vector<PerfectMatching> out;
  if (mode == PmMode::support) {
    for (const auto& s : supports) {
      PerfectMatching pm;
      for (const auto& [u, v] : s) pm.copies.emplace_back(u, v, 0);
      out.push_back(std::move(pm));
    }
    return out;
  }

  long long total = 0;
  for (const auto& s : supports) {
    long long prod = 1;
    for (const auto& [u, v] : s) prod *= g.mu(u, v);
    total += prod;
  }
  if (total > cap) throw budget_error("copy-level matching count exceeds cap", total);

  for (const auto& s : supports) {
    std::vector<long long> idx(s.size(), 0);
    while (true) {
      PerfectMatching pm;
      for (size_t i = 0; i < s.size(); ++i) pm.copies.emplace_back(s[i].first, s[i].second, idx[i]);
      out.push_back(std::move(pm));
      int pos = static_cast<int>(s.size()) - 1;
      while (pos >= 0) {
        if (++idx[pos] < g.mu(s[pos].first, s[pos].second)) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

// Copy-level perfect matching count without expansion.
inline long long count_pm_copies(const Multigraph& g, long long support_cap = 1000000) {
  if (g.vertex_count() % 2 != 0) throw domain_error("count_pm_copies: odd vertex count");
  long long total = 0;
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<std::pair<Vertex, Vertex>> cur;
  long long found = 0;
  detail::enumerate_support_pms(g, used, cur, support_cap, found, [&](const auto& s) {
    long long prod = 1;
    for (const auto& [u, v] : s) prod *= g.mu(u, v);
    total += prod;
  });
  return total;
}

// --- exact maximum-PDPM search --------------------------------------------

struct MaxPdpmResult {
  PdpmFamily family;
  SearchStatus status = SearchStatus::exact;
  long long nodes = 0;
};

struct AllOptimalResult {
  int k = 0;
  std::vector<PdpmFamily> families;
  SearchStatus status = SearchStatus::exact;
  long long nodes = 0;
};

namespace detail {

// Branch-and-bound over families of support matchings with per-pair
// capacities. Copy-level disjointness of matchings is equivalent to the
// per-pair constraint "at most mu(u,v) family members contain the pair", so
// the search runs at support level and copy indices are assigned afterwards
// per pair in family order. Symmetry is broken by enumerating each matching
// lexicographically and requiring the family's support sequence to be
// non-decreasing.
class PdpmSearch {
 public:
  PdpmSearch(const Multigraph& g, long long budget) : g_(g), budget_(budget) {
    n_ = g.vertex_count();
    for (const auto& [p, m] : g.adjacency()) {
      pairs_.push_back(p);
      cap_.push_back(m);
    }
    adj_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      adj_[pairs_[i].first].push_back({pairs_[i].second, i});
      adj_[pairs_[i].second].push_back({pairs_[i].first, i});
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    rdeg_.assign(n_, 0);
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      rdeg_[pairs_[i].first] += cap_[i];
      rdeg_[pairs_[i].second] += cap_[i];
    }
    covered_.assign(n_, 0);
  }

  // Maximum family size; stops early once k_target is reached.
  MaxPdpmResult run_max(std::optional<int> k_target) {
    k_target_ = k_target;
    enumerate_all_ = false;
    best_ = 0;
    best_family_.clear();
    search_family();
    MaxPdpmResult res;
    res.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::exact;
    res.nodes = nodes_;
    res.family = to_copy_level(best_family_);
    return res;
  }

  // Every canonical family of size exactly k.
  AllOptimalResult run_all(int k) {
    k_target_ = std::nullopt;
    enumerate_all_ = true;
    enum_k_ = k;
    best_ = 0;
    search_family();
    AllOptimalResult res;
    res.k = k;
    res.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::exact;
    res.nodes = nodes_;
    for (const auto& fam : collected_) res.families.push_back(to_copy_level(fam));
    return res;
  }

 private:
  using Support = std::vector<std::pair<Vertex, Vertex>>;

  PdpmFamily to_copy_level(const std::vector<Support>& fams) const {
    PdpmFamily out;
    std::map<std::pair<Vertex, Vertex>, long long> used;
    for (const Support& s : fams) {
      PerfectMatching pm;
      for (const auto& p : s) pm.copies.emplace_back(p.first, p.second, used[p]++);
      pm.normalize();
      out.matchings.push_back(std::move(pm));
    }
    return out;
  }

  bool done() const {
    if (exhausted_) return true;
    return k_target_ && best_ >= *k_target_;
  }

  void search_family() {
    const int size = static_cast<int>(family_.size());
    if (enumerate_all_) {
      if (size == enum_k_) {
        collected_.push_back(family_);
        return;
      }
    } else if (size > best_) {
      best_ = size;
      best_family_ = family_;
    }
    if (done()) return;
    long long bound = std::numeric_limits<long long>::max();
    for (Vertex v = 0; v < n_; ++v) bound = std::min(bound, rdeg_[v]);
    if (n_ == 0) bound = 0;
    if (enumerate_all_) {
      if (size + bound < enum_k_) return;
    } else {
      if (size + bound <= best_) return;
    }
    // each matching is built against a fresh cover mask; capacities persist
    std::vector<char> saved_covered = covered_;
    Support saved_cur = cur_;
    std::fill(covered_.begin(), covered_.end(), 0);
    cur_.clear();
    extend_matching(0, !family_.empty());
    covered_ = std::move(saved_covered);
    cur_ = std::move(saved_cur);
  }

  // Builds the next matching edge by edge, always covering the lowest
  // uncovered vertex. `tight` means the matching built so far equals the
  // previous family member's prefix, so the next edge may not compare lower.
  void extend_matching(int depth, bool tight) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    Vertex u = -1;
    for (Vertex v = 0; v < n_; ++v)
      if (!covered_[v]) {
        u = v;
        break;
      }
    if (u == -1) {
      family_.push_back(cur_);
      search_family();
      family_.pop_back();
      return;
    }
    // copied, not referenced: family_ may reallocate inside the recursion
    const Support prev = family_.empty() ? Support{} : family_.back();
    for (const auto& [v, pi] : adj_[u]) {
      if (covered_[v] || cap_[pi] == 0) continue;
      const std::pair<Vertex, Vertex> e{std::min(u, v), std::max(u, v)};
      bool next_tight = false;
      if (tight && depth < static_cast<int>(prev.size())) {
        if (e < prev[depth]) continue;
        next_tight = (e == prev[depth]);
      }
      covered_[u] = covered_[v] = 1;
      --cap_[pi];
      rdeg_[u]--;
      rdeg_[v]--;
      cur_.push_back(e);
      extend_matching(depth + 1, next_tight);
      cur_.pop_back();
      covered_[u] = covered_[v] = 0;
      ++cap_[pi];
      rdeg_[u]++;
      rdeg_[v]++;
      if (done()) return;
    }
  }

  const Multigraph& g_;
  int n_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<long long> cap_, rdeg_;
  std::vector<std::vector<std::pair<Vertex, int>>> adj_;
  std::vector<char> covered_;
  Support cur_;
  std::vector<Support> family_;
  std::optional<int> k_target_;
  bool enumerate_all_ = false;
  int enum_k_ = 0;
  int best_ = 0;
  std::vector<Support> best_family_;
  std::vector<std::vector<Support>> collected_;
};

}  // namespace detail

// Exact maximum set of pairwise disjoint perfect matchings. The budget is a
// node-expansion count; running out yields status budget_exhausted together
// with the best family found, never a silently wrong maximum.
inline MaxPdpmResult max_pdpm(const Multigraph& g, std::optional<int> k_target = std::nullopt,
                              long long budget = 10000000) {
  if (g.vertex_count() % 2 != 0) throw domain_error("max_pdpm: odd vertex count");
  detail::PdpmSearch s(g, budget);
  return s.run_max(k_target);
}

// All optimal families of size k (one canonical representative per family up
// to re-indexing of parallel copies).
inline AllOptimalResult all_optimal_pdpm(const Multigraph& g, int k, long long budget = 10000000) {
  if (g.vertex_count() % 2 != 0) throw domain_error("all_optimal_pdpm: odd vertex count");
  detail::PdpmSearch s(g, budget);
  return s.run_all(k);
}

// --- the 6-variable oracle -------------------------------------------------

struct OracleResult {
  long long max = 0;
  std::vector<ProjectionVector> optima;
};

// Exact maximum family size of the Petersen power for multiset m, via the
// pairwise feasibility system n_i + n_j <= 1 + m_i + m_j over the bounded
// 6-dimensional box. A k-family exists iff a feasible vector sums to k.
inline OracleResult pdpm_oracle(const PetersenMultiset& m) {
  std::array<long long, 6> ub;
  for (int i = 0; i < 6; ++i) {
    long long b = std::numeric_limits<long long>::max();
    for (int j = 0; j < 6; ++j)
      if (j != i) b = std::min(b, 1 + m.counts[i] + m.counts[j]);
    ub[i] = b;
  }
  OracleResult res;
  std::array<long long, 6> n{};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 6) {
      long long s = std::accumulate(n.begin(), n.end(), 0LL);
      if (s > res.max) {
        res.max = s;
        res.optima.clear();
      }
      if (s == res.max) res.optima.push_back(ProjectionVector{n});
      return;
    }
    for (n[i] = 0; n[i] <= ub[i]; ++n[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (n[i] + n[j] > 1 + m.counts[i] + m.counts[j]) ok = false;
      if (ok) self(self, i + 1);
    }
    n[i] = 0;
  };
  rec(rec, 0);
  return res;
}

// Enumerates every feasible vector (not only the optima).
inline std::vector<ProjectionVector> oracle_feasible_vectors(const PetersenMultiset& m) {
  std::array<long long, 6> ub;
  for (int i = 0; i < 6; ++i) {
    long long b = std::numeric_limits<long long>::max();
    for (int j = 0; j < 6; ++j)
      if (j != i) b = std::min(b, 1 + m.counts[i] + m.counts[j]);
    ub[i] = b;
  }
  std::vector<ProjectionVector> out;
  std::array<long long, 6> n{};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 6) {
      out.push_back(ProjectionVector{n});
      return;
    }
    for (n[i] = 0; n[i] <= ub[i]; ++n[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (n[i] + n[j] > 1 + m.counts[i] + m.counts[j]) ok = false;
      if (ok) self(self, i + 1);
    }
    n[i] = 0;
  };
  rec(rec, 0);
  return out;
}

// Maps each family member to its support matching in the catalog and counts
// per index. Fails with an integrity error if some member's support is not a
// catalog matching, which cannot happen for true Petersen powers.
inline ProjectionVector project_family(const PetersenCatalog& cat, const PdpmFamily& fam) {
  ProjectionVector out;
  for (const PerfectMatching& pm : fam.matchings) {
    std::vector<std::pair<Vertex, Vertex>> support;
    for (const EdgeCopy& e : pm.copies) support.push_back({e.u, e.v});
    std::sort(support.begin(), support.end());
    int found = -1;
    for (int i = 0; i < 6 && found < 0; ++i) {
      std::vector<std::pair<Vertex, Vertex>> cs;
      for (const EdgeCopy& e : cat.matchings[i].copies) cs.push_back({e.u, e.v});
      if (cs == support) found = i;
    }
    if (found < 0)
      throw integrity_error("project_family: member support is not a catalog matching");
    out.counts[found]++;
  }
  return out;
}

// Recognizes a graph that is exactly the canonical Petersen power for some
// multiset: same vertex indexing, support equal to P, and multiplicities
// consistent with mu(e) = 1 + m_i + m_j. Recognition is by canonical layout,
// not isomorphism.
inline std::optional<PetersenMultiset> petersen_power_multiset(const Multigraph& g) {
  const PetersenCatalog& cat = petersen_catalog();
  if (g.vertex_count() != 10) return std::nullopt;
  if (g.adjacency().size() != cat.graph.adjacency().size()) return std::nullopt;
  for (const auto& [p, m] : g.adjacency())
    if (cat.graph.mu(p.first, p.second) != 1) return std::nullopt;

  auto s = [&](int i, int j) {
    auto [a, b] = cat.pair_to_edge.at({std::min(i, j), std::max(i, j)});
    return g.mu(a, b) - 1;
  };
  PetersenMultiset m;
  const long long twice_m0 = s(0, 1) + s(0, 2) - s(1, 2);
  if (twice_m0 < 0 || twice_m0 % 2 != 0) return std::nullopt;
  m.counts[0] = twice_m0 / 2;
  for (int i = 1; i < 6; ++i) {
    m.counts[i] = s(0, i) - m.counts[0];
    if (m.counts[i] < 0) return std::nullopt;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (s(i, j) != m.counts[i] + m.counts[j]) return std::nullopt;
  return m;
}

// --- over-index property and the shared-vertex clause ----------------------

struct OverIndexReport {
  bool pass = true;
  long long vectors_checked = 0;
  long long clause2_cases = 0;
  std::vector<std::string> counterexamples;
};

namespace detail {

// Searches for pairwise disjoint perfect matchings such that matching j
// contains the forced edge copy forced[j]. Matchings sharing the same forced
// support pair are kept lexicographically non-decreasing.
class ForcedFamilySearch {
 public:
  ForcedFamilySearch(const Multigraph& g, std::vector<std::pair<Vertex, Vertex>> forced)
      : g_(g), forced_(std::move(forced)), n_(g.vertex_count()) {
    for (const auto& [p, m] : g.adjacency()) {
      pair_index_[p] = static_cast<int>(cap_.size());
      pairs_.push_back(p);
      cap_.push_back(m);
    }
    adj_.assign(n_, {});
    for (int i = 0; i < static_cast<int>(pairs_.size()); ++i) {
      adj_[pairs_[i].first].push_back({pairs_[i].second, i});
      adj_[pairs_[i].second].push_back({pairs_[i].first, i});
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    covered_.assign(n_, 0);
  }

  bool feasible() { return next_matching(0); }

 private:
  using Support = std::vector<std::pair<Vertex, Vertex>>;

  bool next_matching(int j) {
    if (j == static_cast<int>(forced_.size())) return true;
    const auto& f = forced_[j];
    const int pi = pair_index_.at(f);
    if (cap_[pi] == 0) return false;
    std::vector<char> saved_covered = covered_;
    Support saved_cur = cur_;
    std::fill(covered_.begin(), covered_.end(), 0);
    covered_[f.first] = covered_[f.second] = 1;
    --cap_[pi];
    cur_.clear();
    cur_.push_back(f);
    const bool same_group = j > 0 && forced_[j - 1] == f;
    bool ok = complete(j, 1, same_group);
    ++cap_[pi];
    covered_ = std::move(saved_covered);
    cur_ = std::move(saved_cur);
    return ok;
  }

  bool complete(int j, int depth, bool tight) {
    Vertex u = -1;
    for (Vertex v = 0; v < n_; ++v)
      if (!covered_[v]) {
        u = v;
        break;
      }
    if (u == -1) {
      Support done = cur_;
      prev_.push_back(done);
      bool ok = next_matching(j + 1);
      prev_.pop_back();
      return ok;
    }
    for (const auto& [v, pi] : adj_[u]) {
      if (covered_[v] || cap_[pi] == 0) continue;
      std::pair<Vertex, Vertex> e{std::min(u, v), std::max(u, v)};
      bool next_tight = false;
      if (tight && depth < static_cast<int>(prev_.back().size())) {
        if (e < prev_.back()[depth]) continue;
        next_tight = (e == prev_.back()[depth]);
      }
      covered_[u] = covered_[v] = 1;
      --cap_[pi];
      cur_.push_back(e);
      bool ok = complete(j, depth + 1, next_tight);
      cur_.pop_back();
      covered_[u] = covered_[v] = 0;
      ++cap_[pi];
      if (ok) return true;
    }
    return false;
  }

  const Multigraph& g_;
  std::vector<std::pair<Vertex, Vertex>> forced_;
  int n_;
  std::map<std::pair<Vertex, Vertex>, int> pair_index_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<long long> cap_;
  std::vector<std::vector<std::pair<Vertex, int>>> adj_;
  std::vector<char> covered_;
  Support cur_;
  std::vector<Support> prev_;
};

}  // namespace detail

// Checks, for the given multiset, that every feasible projection vector has
// at most one over-index (n_i > m_i). With check_shared_vertex_clause set it
// additionally searches the Petersen power itself for a disjoint family
// containing all copies of two edge bundles that share a vertex, which must
// not exist.
inline OverIndexReport over_index_check(const PetersenMultiset& m,
                                   bool check_shared_vertex_clause = false) {
  OverIndexReport rep;
  for (const ProjectionVector& n : oracle_feasible_vectors(m)) {
    ++rep.vectors_checked;
    int over = 0;
    for (int i = 0; i < 6; ++i)
      if (n.counts[i] > m.counts[i]) ++over;
    if (over > 1) {
      rep.pass = false;
      std::string s = "over-indices > 1 at n = (";
      for (int i = 0; i < 6; ++i) s += std::to_string(n.counts[i]) + (i < 5 ? "," : ")");
      rep.counterexamples.push_back(s);
    }
  }
  if (check_shared_vertex_clause) {
    // Built here to avoid a header cycle with the construction module.
    const PetersenCatalog& cat = petersen_catalog();
    Multigraph host = cat.graph;
    for (int i = 0; i < 6; ++i)
      for (long long c = 0; c < m.counts[i]; ++c)
        host = host.add_matching_copies(cat.matchings[i]);
    for (Vertex w = 0; w < host.vertex_count(); ++w) {
      std::vector<Vertex> nbrs;
      for (Vertex v = 0; v < host.vertex_count(); ++v)
        if (host.mu(w, v) > 0) nbrs.push_back(v);
      for (size_t a = 0; a < nbrs.size(); ++a) {
        for (size_t b = a + 1; b < nbrs.size(); ++b) {
          ++rep.clause2_cases;
          std::vector<std::pair<Vertex, Vertex>> forced;
          const Vertex u = nbrs[a], v = nbrs[b];
          for (long long c = 0; c < host.mu(u, w); ++c)
            forced.push_back({std::min(u, w), std::max(u, w)});
          for (long long c = 0; c < host.mu(v, w); ++c)
            forced.push_back({std::min(v, w), std::max(v, w)});
          detail::ForcedFamilySearch search(host, forced);
          if (search.feasible()) {
            rep.pass = false;
            rep.counterexamples.push_back("family containing all edges at shared vertex " +
                                          host.label(w) + " towards " + host.label(u) + "," +
                                          host.label(v));
          }
        }
      }
    }
  }
  return rep;
}

// --- chromatic-index classification ----------------------------------------

enum class GraphClass { class1, class2, unknown };

namespace detail {

// Exact backtracking edge coloring of an r-regular multigraph with r colors.
// Copies of the same pair take increasing colors, and the palette only grows
// one color at a time, to break color symmetry.
class EdgeColoringSearch {
 public:
  EdgeColoringSearch(const Multigraph& g, int r, long long budget)
      : r_(r), budget_(budget) {
    for (const auto& [p, m] : g.adjacency())
      for (long long c = 0; c < m; ++c) copies_.push_back(p);
    vertex_mask_.assign(g.vertex_count(), 0ULL);
  }

  GraphClass run() {
    if (r_ > 62) return GraphClass::unknown;
    bool found = color(0, 0, -1);
    if (exhausted_) return GraphClass::unknown;
    return found ? GraphClass::class1 : GraphClass::class2;
  }

 private:
  bool color(size_t i, int max_used, int prev_pair_color) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (i == copies_.size()) return true;
    const auto& [u, v] = copies_[i];
    const bool same_pair = i > 0 && copies_[i - 1] == copies_[i];
    const int lo = same_pair ? prev_pair_color + 1 : 0;
    const int hi = std::min(r_ - 1, max_used + 1);
    for (int c = lo; c <= hi; ++c) {
      const unsigned long long bit = 1ULL << c;
      if ((vertex_mask_[u] | vertex_mask_[v]) & bit) continue;
      vertex_mask_[u] |= bit;
      vertex_mask_[v] |= bit;
      if (color(i + 1, std::max(max_used, c), c)) return true;
      vertex_mask_[u] &= ~bit;
      vertex_mask_[v] &= ~bit;
      if (exhausted_) return false;
    }
    return false;
  }

  int r_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::pair<Vertex, Vertex>> copies_;
  std::vector<unsigned long long> vertex_mask_;
};

}  // namespace detail

// Whether the edge copies of the r-regular graph g partition into r perfect
// matchings. Canonical Petersen powers are answered exactly through the
// oracle; other graphs get an exact backtracking edge coloring bounded by
// the node budget.
inline GraphClass is_class1(const Multigraph& g, long long budget = 10000000) {
  auto r = regular_degree(g);
  if (!r || g.vertex_count() % 2 != 0)
    throw domain_error("is_class1: graph must be regular with even order");
  if (auto m = petersen_power_multiset(g)) {
    OracleResult res = pdpm_oracle(*m);
    return res.max >= *r ? GraphClass::class1 : GraphClass::class2;
  }
  detail::EdgeColoringSearch search(g, static_cast<int>(*r), budget);
  return search.run();
}

}  // namespace pdpm
