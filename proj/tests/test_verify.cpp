#include <doctest.h>

#include "pdpm/cli.hpp"
#include "pdpm/verify.hpp"
#include "pdpm/wiring.hpp"
#include "test_oracles.hpp"

using namespace pdpm;

namespace {
PetersenMultiset ms(long long a, long long b, long long c, long long d = 0, long long e = 0,
                    long long f = 0) {
  PetersenMultiset m;
  m.counts = {a, b, c, d, e, f};
  return m;
}
const std::string kData = PDPM_DATA_DIR;
}  // namespace

TEST_CASE("lambda formula sweep, small cap") {
  LambdaFormulaReport rep = verify_lambda_formula(3);
  CHECK(rep.cases == 84);
  CHECK(rep.pass());
  // spot values of the closed form
  CHECK(lambda_formula(ms(3, 0, 0)) == 4);
  CHECK(lambda_formula(ms(1, 1, 1, 1, 1, 1)) == 9);
  // parallel run agrees
  LambdaFormulaReport rep2 = verify_lambda_formula(3, 4);
  CHECK(rep2.pass());
  CHECK(rep2.cases == rep.cases);
}

TEST_CASE("verify_splice fixture") {
  Multigraph g = p_power(ms(2, 0, 0)), h = p_power(ms(1, 1, 0));
  SpliceReport rep = verify_splice(g, 0, 5, h, 0, 5, 2, 5);
  CHECK(rep.pass);
  CHECK(rep.lambda_spliced == 4);
  CHECK(rep.r_graph == 5);
  CHECK_THROWS_AS((void)verify_splice(g, 0, 5, h, 0, 5, 4, 5), precondition_error);
}

TEST_CASE("splice suite covers r 4..9 with at least 20 fixtures") {
  auto suite = cli::detail::splice_suite();
  CHECK(suite.size() >= 20);
  std::set<int> rs;
  for (const auto& fx : suite) rs.insert(fx.r);
  for (int r = 4; r <= 9; ++r) CHECK(rs.count(r) == 1);
}

TEST_CASE("projection of every optimal family, both sides") {
  Multigraph g = p_power(ms(2, 0, 0)), h = p_power(ms(1, 1, 0));
  auto [gp, rec] = splice(g, 0, 5, h, 0, 5, 2, 5);
  MaxPdpmResult best = max_pdpm(gp);
  REQUIRE(best.status == SearchStatus::exact);
  AllOptimalResult alls = all_optimal_pdpm(gp, best.family.size());
  REQUIRE(alls.status == SearchStatus::exact);
  CHECK(!alls.families.empty());
  for (const auto& fam : alls.families) {
    PdpmFamily pg = project_pdpm(gp, fam, rec, SpliceSide::g);
    PdpmFamily ph = project_pdpm(gp, fam, rec, SpliceSide::h);
    CHECK(is_valid_pdpm_family(g, pg));
    CHECK(is_valid_pdpm_family(h, ph));
    // clause (i): at least one uv copy of g is avoided
    long long used = 0;
    for (const auto& pm : pg.matchings)
      for (const EdgeCopy& e : pm.copies)
        if (e.u == 0 && e.v == 5) ++used;
    CHECK(used < g.mu(0, 5));
    // clause (ii): copies away from the seam that the family avoided stay avoided
    std::set<EdgeCopy> used_before, used_after;
    for (const auto& pm : fam.matchings)
      for (const EdgeCopy& e : pm.copies) used_before.insert(e);
    for (const auto& pm : pg.matchings)
      for (const EdgeCopy& e : pm.copies) used_after.insert(e);
    for (const auto& [p, mcount] : g.adjacency()) {
      if (p.first == rec.g_u || p.first == rec.g_v || p.second == rec.g_u || p.second == rec.g_v)
        continue;
      for (long long c = 0; c < mcount; ++c) {
        EdgeCopy e(p.first, p.second, c);
        if (!used_before.count(e)) CHECK(!used_after.count(e));
      }
    }
  }
  SUBCASE("empty family projects to empty") {
    PdpmFamily empty;
    CHECK(project_pdpm(gp, empty, rec, SpliceSide::g).matchings.empty());
  }
  SUBCASE("inconsistent record is refused") {
    SpliceRecord bad = rec;
    bad.h_map.pop_back();
    CHECK_THROWS_AS((void)project_pdpm(gp, best.family, bad, SpliceSide::g), integrity_error);
  }
}

TEST_CASE("ladder projection replays the descent") {
  // Build one ladder step by hand, find a 2-family on top, walk it back down
  // to the augmented base, and check it avoids a copy of every rung.
  auto [g, m0] = base_g(4);
  Multigraph h0 = g.add_matching_copies(m0);
  std::vector<std::pair<Vertex, Vertex>> rungs;
  for (const EdgeCopy& e : m0.copies) rungs.push_back({e.u, e.v});
  std::sort(rungs.begin(), rungs.end());

  const Multigraph block = p_next(8, 4);
  std::vector<Multigraph> hosts{h0};
  std::vector<SpliceRecord> recs;
  Multigraph cur = h0;
  for (size_t i = 0; i < rungs.size(); ++i) {
    Multigraph fresh = with_label_suffix(block, "^" + std::to_string(i + 1));
    auto [next, rec] = splice(cur, rungs[i].first, rungs[i].second, fresh, 0, 5, 4, 9);
    recs.push_back(rec);
    cur = std::move(next);
    hosts.push_back(cur);
  }
  CHECK(cur.vertex_count() == 50);

  MaxPdpmResult top = max_pdpm(cur, 2, 5000000);
  REQUIRE(top.family.size() == 2);
  PdpmFamily fam = top.family;
  for (int i = static_cast<int>(recs.size()) - 1; i >= 0; --i) {
    fam = project_pdpm(hosts[i + 1], fam, recs[i], SpliceSide::g);
    CHECK(is_valid_pdpm_family(hosts[i], fam));
  }
  // the projected family avoids at least one copy of every rung of m0
  std::map<std::pair<Vertex, Vertex>, long long> used;
  for (const auto& pm : fam.matchings)
    for (const EdgeCopy& e : pm.copies) used[{e.u, e.v}]++;
  for (const auto& rung : rungs) CHECK(used[rung] < h0.mu(rung.first, rung.second));
}

TEST_CASE("q1 boundary enumeration") {
  Q1BoundaryReport rep = q1_boundary_check();
  CHECK(rep.complete);
  CHECK(rep.feasible_tuples > 0);
  CHECK(rep.every_matching_one_pendant);
  CHECK(rep.all_splits_two_two);
  CHECK(rep.pattern_table.size() == 1);  // only the 1+1+1+1 distribution over 2+2 sides
  CHECK(rep.pass());
}

TEST_CASE("q1 boundary respects its budget") {
  Q1BoundaryReport rep = q1_boundary_check(10);
  CHECK_FALSE(rep.complete);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("gomory-hu pairwise values on an 18-vertex splice") {
  Multigraph g = p_power(ms(2, 0, 0)), h = p_power(ms(1, 1, 0));
  auto [gp, rec] = splice(g, 0, 5, h, 0, 5, 2, 5);
  GomoryHuTree t = gomory_hu(gp);
  for (Vertex u = 0; u < gp.vertex_count(); ++u)
    for (Vertex v = u + 1; v < gp.vertex_count(); ++v)
      CHECK(t.min_cut(u, v) == max_flow(gp, u, v));
  for (Vertex v = 1; v < gp.vertex_count(); ++v)
    CHECK(gp.boundary_size(t.fundamental_shore(v)) == t.weight[v]);
  // odd cut agrees with subset brute force beyond the 12-vertex sweeps
  CHECK(lambda_odd(gp).value == test_oracle::brute_lambda_odd(gp));
}

TEST_CASE("port boundary sets on the wired host") {
  G6Build b = build_g6(load_wiring(kData + "/g1_wiring.json"));
  const GadgetInstance& inst = b.gadgets[0];
  VertexSet outside = complement_set(b.g1, inst.vertices);
  auto e1 = b.g1.edges_between(make_vertex_set({inst.port1}), outside);
  auto e2 = b.g1.edges_between(make_vertex_set({inst.port2}), outside);
  CHECK(e1.size() == 3);
  CHECK(e2.size() == 3);
  CHECK(b.g1.boundary(inst.vertices).size() == 6);
}

TEST_CASE("wiring loads, validates, and builds") {
  G6Build b = build_g6(load_wiring(kData + "/g1_wiring.json"));
  CHECK(b.g1.vertex_count() == 70);
  CHECK(b.g6.vertex_count() == 74);
  CHECK(is_regular(b.g1, 6));
  CHECK(is_regular(b.g6, 6));
  CHECK(is_perfect_matching(b.g6, b.m6));
  for (const EdgeCopy& e : b.m6.copies) CHECK(b.g6.mu(e.u, e.v) >= 2);
  CHECK(b.gadgets.size() == 3);
  CHECK(b.clusters.size() == 3);
  CHECK(b.w_prime >= 0);
}

TEST_CASE("negative control: broken regularity is refused at validation") {
  CHECK_THROWS_AS((void)build_g6(load_wiring(kData + "/g1_wiring_bad_regularity.json")),
                  validation_error);
}

TEST_CASE("negative control: stray gadget boundary is refused at the replay") {
  G6Build b = build_g6(load_wiring(kData + "/g1_wiring_bad_boundary.json"));
  Q1BoundaryReport q = q1_boundary_check();
  G6ReplayReport rep = g6_no4pdpm_replay(b, q);
  CHECK_FALSE(rep.certified);
  bool c_failed = false;
  for (const auto& s : rep.steps)
    if (s.name.starts_with("c.") && !s.pass) c_failed = true;
  CHECK(c_failed);
}

TEST_CASE("g6 replay certifies the shipped wiring") {
  G6Build b = build_g6(load_wiring(kData + "/g1_wiring.json"));
  G6ReplayReport rep = g6_no4pdpm_replay(b, q1_boundary_check());
  CHECK(rep.certified);
  CHECK(rep.steps.size() == 5);
  CHECK(!rep.wiring_conditional.empty());
  CHECK(rep.verification_mode.find("replay") != std::string::npos);
  // determinism of the serialized report
  G6ReplayReport rep2 = g6_no4pdpm_replay(b, q1_boundary_check());
  CHECK(rep.to_json().dump() == rep2.to_json().dump());
}

TEST_CASE("witness certificates fail loudly on corruption") {
  Witness w = family_witness(4, 8);
  WitnessCertificate good = certify_witness(w.graph, w.matching, w.provenance);
  CHECK(good.pass);

  Multigraph corrupted = w.graph;
  corrupted.remove_copies_in_place(0, 5, 1);
  WitnessCertificate bad = certify_witness(corrupted, w.matching, w.provenance);
  CHECK_FALSE(bad.pass);
  bool regular_failed = false;
  for (const auto& p : bad.properties)
    if (p.name == "regular" && !p.pass) regular_failed = true;
  CHECK(regular_failed);
}

TEST_CASE("witness certificate smoke search") {
  Witness w = family_witness(4, 8);
  WitnessCertificate cert = certify_witness(w.graph, w.matching, w.provenance, 1000000);
  CHECK(cert.pass);  // the direct search cannot find a 7-family on the base
  bool smoke_seen = false;
  for (const auto& p : cert.properties)
    if (p.name == "direct_search_smoke") smoke_seen = p.pass;
  CHECK(smoke_seen);
}

TEST_CASE("l = 3 family riding on the wired base") {
  G6Build b = build_g6(load_wiring(kData + "/g1_wiring.json"));
  G6Base base = g6_base_from_build(b);
  Witness w = family_witness(3, 6, &base);
  CHECK(w.graph.vertex_count() == 74);
  WitnessCertificate cert = certify_witness(w.graph, w.matching, w.provenance);
  CHECK(cert.pass);
}

TEST_CASE("the expanded host carries three disjoint matchings") {
  // a 3-family exists (the replay argument rules out a fourth)
  G6Build b = build_g6(load_wiring(kData + "/g1_wiring.json"));
  MaxPdpmResult r = max_pdpm(b.g6, 3, 2000000);
  CHECK(r.family.size() == 3);
  CHECK(is_valid_pdpm_family(b.g6, r.family));
}
