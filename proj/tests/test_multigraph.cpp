#include <doctest.h>

#include "pdpm/json_io.hpp"
#include "pdpm/multigraph.hpp"
#include "pdpm/petersen.hpp"
#include "pdpm/constructions.hpp"

using namespace pdpm;

namespace {
PetersenMultiset ms(long long a, long long b, long long c, long long d = 0, long long e = 0,
                    long long f = 0) {
  PetersenMultiset m;
  m.counts = {a, b, c, d, e, f};
  return m;
}
}  // namespace

TEST_CASE("mu basics") {
  const Multigraph& p = petersen_catalog().graph;
  CHECK(p.mu(0, 5) == 1);  // u1-v1 spoke
  CHECK(p.mu(0, 0) == 0);
  CHECK(p.mu(0, 2) == 0);  // outer non-adjacency
  CHECK_THROWS_AS((void)p.mu(0, 99), domain_error);

  Multigraph heavy = p_power(ms(2, 1, 1, 1));
  CHECK(heavy.mu(0, 5) == 4);  // 1 + m0 + m1
  CHECK(heavy.max_mu() == 4);
  CHECK(p.max_mu() == 1);
  CHECK(p_power(ms(1, 0, 0)).max_mu() == 2);
  CHECK_THROWS_AS((void)Multigraph(0).max_mu(), domain_error);
}

TEST_CASE("boundary and edges_between") {
  const Multigraph& p = petersen_catalog().graph;
  CHECK(p.boundary(make_vertex_set({0})).size() == 3);
  VertexSet all_but_one;
  for (Vertex v = 0; v < 10; ++v)
    if (v != 9) all_but_one.push_back(v);
  CHECK(p.boundary(all_but_one).size() == 3);
  CHECK_THROWS_AS((void)p.boundary({}), domain_error);
  CHECK_THROWS_AS((void)p.boundary(full_vertex_set(p)), domain_error);

  // doubled spokes: |boundary({u1,v1})| = deg(u1) + deg(v1) - 2 mu(u1,v1)
  Multigraph pm0 = p_power(ms(1, 0, 0));
  CHECK(pm0.boundary(make_vertex_set({0, 5})).size() == 4);

  CHECK(p.edges_between(make_vertex_set({0}), make_vertex_set({5})).size() == 1);
  CHECK(p.edges_between(make_vertex_set({0}), make_vertex_set({2})).empty());
  CHECK_THROWS_AS((void)p.edges_between(make_vertex_set({0, 1}), make_vertex_set({1})),
                  domain_error);
}

TEST_CASE("boundary symmetry and parity identity") {
  // exhaustive over all shores of small powers
  for (const auto& m : {ms(0, 0, 0), ms(1, 0, 0), ms(1, 1, 1)}) {
    Multigraph g = p_power(m);
    const long long r = g.degree(0);
    const int n = g.vertex_count();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet x;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) x.push_back(v);
      const long long b = g.boundary_size(x);
      CHECK(b == g.boundary_size(complement_set(g, x)));
      // r|X| - 2|E(G[X])| parity
      CHECK((b - r * static_cast<long long>(x.size())) % 2 == 0);
      if (mask > 4096) mask += 37;  // sampled tail keeps the loop quick
    }
  }
}

TEST_CASE("handshake") {
  Multigraph g = p_power(ms(2, 1, 0));
  long long degsum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) degsum += g.degree(v);
  CHECK(degsum == 2 * g.copy_count());
}

TEST_CASE("add_matching_copies") {
  const PetersenCatalog& cat = petersen_catalog();
  Multigraph g = cat.graph.add_matching_copies(cat.matchings[0]);
  CHECK(g.copy_count() == 20);
  CHECK(regular_degree(g) == 4);
  Multigraph g2 = g.add_matching_copies(cat.matchings[0]);
  CHECK(g2.mu(0, 5) == 3);
  // M1 doubles only the first spoke
  Multigraph g3 = cat.graph.add_matching_copies(cat.matchings[1]);
  CHECK(g3.mu(0, 5) == 2);
  CHECK(g3.mu(1, 6) == 1);

  PerfectMatching broken = cat.matchings[0];
  broken.copies.pop_back();
  CHECK_THROWS_AS((void)cat.graph.add_matching_copies(broken), domain_error);

  // add then remove the same copies is the identity up to reindexing
  Multigraph back = g;
  for (const EdgeCopy& e : cat.matchings[0].copies) back.remove_copies_in_place(e.u, e.v, 1);
  CHECK(back.adjacency() == cat.graph.adjacency());
}

TEST_CASE("mu equals edges_between on singletons") {
  Multigraph g = p_power(ms(2, 1, 1));
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      CHECK(g.mu(u, v) ==
            static_cast<long long>(g.edges_between(make_vertex_set({u}), make_vertex_set({v})).size()));
}

TEST_CASE("surgery: remove, identify, induced") {
  Multigraph g = p_power(ms(1, 1, 1));
  SUBCASE("remove_copies") {
    auto [h, map] = remove_copies(g, 0, 5, 3);
    CHECK(h.degree(0) == 3);
    CHECK(h.degree(5) == 3);
    CHECK(map[7] == 7);
    CHECK_THROWS_AS((void)remove_copies(h, 0, 5, 1), precondition_error);
  }
  SUBCASE("identify") {
    auto [both, off] = disjoint_union(with_label_suffix(g, "a"), with_label_suffix(g, "b"));
    auto [merged, map] = identify(both, 0, off);
    CHECK(merged.vertex_count() == 19);
    CHECK(map[0] == map[off]);
    CHECK(merged.degree(map[0]) == 12);
    CHECK(merged.label(map[0]) == "u1a+u1b");
    CHECK_THROWS_AS((void)identify(both, 0, 5), precondition_error);  // adjacent
  }
  SUBCASE("induced outer cycle") {
    auto [c5, map] = induced(petersen_catalog().graph, make_vertex_set({0, 1, 2, 3, 4}));
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.copy_count() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(map[7] == -1);
  }
  SUBCASE("composed ops") {
    SurgeryResult res = surgery(petersen_catalog().graph,
                                {InducedOp{make_vertex_set({0, 1, 2, 3, 4})},
                                 RemoveCopiesOp{0, 1, 1}});
    CHECK(res.graph.degree(0) == 1);
    CHECK(res.vertex_map[5] == -1);
  }
}

TEST_CASE("canonical json round-trip") {
  Multigraph g = p_power(ms(2, 0, 1));
  const std::string s = graph_to_canonical_string(g);
  Multigraph h = graph_from_string(s);
  CHECK(graph_to_canonical_string(h) == s);
  CHECK(h.adjacency() == g.adjacency());
  CHECK(h.labels() == g.labels());

  // import is strict about canonical ordering
  CHECK_THROWS_AS((void)graph_from_string(R"({"n":2,"labels":["a","b"],"edges":[[1,0,1]]})"),
                  domain_error);
  CHECK_THROWS_AS(
      (void)graph_from_string(
          R"({"n":3,"labels":["a","b","c"],"edges":[[1,2,1],[0,1,1]]})"),
      domain_error);
  CHECK_THROWS_AS((void)graph_from_string(R"({"n":2,"labels":["a","b"],"edges":[[0,1,0]]})"),
                  domain_error);
}

TEST_CASE("dot export carries multiplicities") {
  Multigraph g(2);
  g.add_copies(0, 1, 5);
  const std::string dot = graph_to_dot(g);
  CHECK(dot.find("label=\"5\"") != std::string::npos);
}

TEST_CASE("labels are unique and searchable") {
  Multigraph g(3);
  g.set_labels({"a", "b", "c"});
  CHECK(g.vertex_by_label("b") == 1);
  CHECK_THROWS_AS(g.set_label(0, "c"), domain_error);
  CHECK_THROWS_AS((void)g.vertex_by_label("zz"), domain_error);
}
