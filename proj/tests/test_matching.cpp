#include <doctest.h>

#include "pdpm/constructions.hpp"
#include "pdpm/matching.hpp"

using namespace pdpm;

namespace {
PetersenMultiset ms(long long a, long long b, long long c, long long d = 0, long long e = 0,
                    long long f = 0) {
  PetersenMultiset m;
  m.counts = {a, b, c, d, e, f};
  return m;
}
}  // namespace

TEST_CASE("enumerate_pm support and copies") {
  const Multigraph& p = petersen_catalog().graph;
  CHECK(enumerate_pm(p, PmMode::support).size() == 6);

  Multigraph pm0 = p_power(ms(1, 0, 0));
  CHECK(count_pm_copies(pm0) == 42);
  auto expanded = enumerate_pm(pm0, PmMode::copies);
  CHECK(expanded.size() == 42);
  std::set<PerfectMatching> uniq(expanded.begin(), expanded.end());
  CHECK(uniq.size() == 42);
  for (const auto& pm : expanded) CHECK(is_perfect_matching(pm0, pm));

  Multigraph path2(2);
  path2.add_copies(0, 1, 3);
  CHECK(enumerate_pm(path2, PmMode::copies).size() == 3);

  CHECK_THROWS_AS((void)enumerate_pm(Multigraph(3), PmMode::support), domain_error);
  CHECK_THROWS_AS((void)enumerate_pm(pm0, PmMode::copies, 10), budget_error);
  try {
    (void)enumerate_pm(pm0, PmMode::copies, 10);
  } catch (const budget_error& e) {
    CHECK(e.counted == 42);
  }
}

TEST_CASE("oracle box search") {
  CHECK(pdpm_oracle(ms(0, 0, 0)).max == 1);
  CHECK(pdpm_oracle(ms(1, 0, 0)).max == 2);
  CHECK(pdpm_oracle(ms(2, 1, 1, 1)).max == 6);
  // optima include the expected vectors
  OracleResult r = pdpm_oracle(ms(1, 0, 0));
  ProjectionVector want;
  want.counts = {2, 0, 0, 0, 0, 0};
  CHECK(std::find(r.optima.begin(), r.optima.end(), want) != r.optima.end());
  OracleResult r2 = pdpm_oracle(ms(2, 1, 1, 1));
  ProjectionVector want2;
  want2.counts = {3, 1, 1, 1, 0, 0};
  CHECK(std::find(r2.optima.begin(), r2.optima.end(), want2) != r2.optima.end());
}

TEST_CASE("oracle monotone under multiset growth") {
  for (const auto& m : multisets_up_to(3)) {
    const long long base = pdpm_oracle(m).max;
    for (int i = 0; i < 6; ++i) {
      PetersenMultiset bigger = m;
      bigger.counts[i]++;
      CHECK(pdpm_oracle(bigger).max >= base);
    }
  }
}

TEST_CASE("max_pdpm on small graphs") {
  CHECK(max_pdpm(petersen_catalog().graph).family.size() == 1);
  MaxPdpmResult r = max_pdpm(p_power(ms(1, 0, 0)));
  CHECK(r.family.size() == 2);
  CHECK(r.status == SearchStatus::exact);
  CHECK(is_valid_pdpm_family(p_power(ms(1, 0, 0)), r.family));
  CHECK_THROWS_AS((void)max_pdpm(Multigraph(3)), domain_error);

  // k_target short-circuit
  MaxPdpmResult t = max_pdpm(p_power(ms(2, 1, 1, 1)), 3);
  CHECK(t.family.size() == 3);

  // an exact run that falls short of k_target proves infeasibility
  MaxPdpmResult inf = max_pdpm(petersen_catalog().graph, 2);
  CHECK(inf.status == SearchStatus::exact);
  CHECK(inf.family.size() == 1);
}

TEST_CASE("max_pdpm respects its budget") {
  MaxPdpmResult r = max_pdpm(p_power(ms(2, 1, 1, 1)), std::nullopt, 50);
  CHECK(r.status == SearchStatus::budget_exhausted);
  CHECK(r.nodes >= 50);
}

TEST_CASE("all_optimal_pdpm finds each canonical family once") {
  Multigraph g = p_power(ms(1, 0, 0));
  AllOptimalResult r = all_optimal_pdpm(g, 2);
  CHECK(r.status == SearchStatus::exact);
  CHECK(!r.families.empty());
  std::set<std::string> seen;
  for (const auto& fam : r.families) {
    CHECK(is_valid_pdpm_family(g, fam));
    std::string key;
    for (const auto& pm : fam.matchings)
      for (const EdgeCopy& e : pm.copies)
        key += std::to_string(e.u) + "." + std::to_string(e.v) + "." + std::to_string(e.copy) + ";";
    CHECK(seen.insert(key).second);
  }
}

TEST_CASE("project_family") {
  const PetersenCatalog& cat = petersen_catalog();
  SUBCASE("empty family") {
    ProjectionVector v = project_family(cat, PdpmFamily{});
    CHECK(v.sum() == 0);
  }
  SUBCASE("mixed family") {
    Multigraph host = p_power(ms(1, 0, 0, 1));
    PdpmFamily fam;
    fam.matchings.push_back(cat.matchings[0]);
    fam.matchings.push_back(cat.matchings[3]);
    ProjectionVector v = project_family(cat, fam);
    CHECK(v.counts[0] == 1);
    CHECK(v.counts[3] == 1);
    CHECK(v.sum() == 2);
  }
  SUBCASE("optimal families project to oracle-feasible vectors") {
    Multigraph g = p_power(ms(1, 0, 0));
    for (const auto& fam : all_optimal_pdpm(g, 2).families) {
      ProjectionVector v = project_family(cat, fam);
      CHECK(v.sum() == 2);
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          CHECK(v.counts[i] + v.counts[j] <= 1 + ms(1, 0, 0).counts[i] + ms(1, 0, 0).counts[j]);
    }
  }
  SUBCASE("non-catalog support is refused") {
    PerfectMatching fake;
    fake.copies = {EdgeCopy(0, 1, 0), EdgeCopy(2, 3, 0), EdgeCopy(4, 5, 0), EdgeCopy(6, 7, 0),
                   EdgeCopy(8, 9, 0)};
    PdpmFamily fam;
    fam.matchings.push_back(fake);
    CHECK_THROWS_AS((void)project_family(cat, fam), integrity_error);
  }
}

TEST_CASE("max_pdpm equals the oracle beyond the acceptance sweep") {
  // the 8-regular ladder base reaches its bound of 6 by direct search
  MaxPdpmResult base = max_pdpm(p_power(ms(2, 1, 1, 1)));
  CHECK(base.status == SearchStatus::exact);
  CHECK(base.family.size() == 6);
  for (const auto& m : multisets_up_to(4)) {
    MaxPdpmResult res = max_pdpm(p_power(m));
    CHECK(res.status == SearchStatus::exact);
    CHECK(res.family.size() == pdpm_oracle(m).max);
  }
}

TEST_CASE("support matchings of a power are exactly the catalog") {
  const PetersenCatalog& cat = petersen_catalog();
  for (const auto& m : {ms(1, 0, 0), ms(2, 1, 1, 1), ms(0, 0, 2, 0, 1)}) {
    auto pms = enumerate_pm(p_power(m), PmMode::support);
    REQUIRE(pms.size() == 6);
    std::set<PerfectMatching> expect(cat.matchings.begin(), cat.matchings.end());
    std::set<PerfectMatching> got(pms.begin(), pms.end());
    CHECK(expect == got);
  }
}

TEST_CASE("over-index property of feasible projection vectors") {
  OverIndexReport rep = over_index_check(ms(0, 0, 0));
  CHECK(rep.pass);
  CHECK(rep.vectors_checked > 0);
  // the specific feasible vector (1,1,0,0,0,0) for m = e0 has one over-index
  OverIndexReport rep2 = over_index_check(ms(1, 0, 0));
  CHECK(rep2.pass);
  auto vecs = oracle_feasible_vectors(ms(1, 0, 0));
  ProjectionVector probe;
  probe.counts = {1, 1, 0, 0, 0, 0};
  CHECK(std::find(vecs.begin(), vecs.end(), probe) != vecs.end());
}

TEST_CASE("shared-vertex clause on tiny powers") {
  for (const auto& m : multisets_up_to(1)) {
    OverIndexReport rep = over_index_check(m, true);
    CHECK(rep.pass);
    CHECK(rep.clause2_cases == 30);  // 10 vertices x C(3,2) neighbour pairs
  }
}

TEST_CASE("petersen power recognition") {
  CHECK(petersen_power_multiset(petersen_catalog().graph) == ms(0, 0, 0));
  CHECK(petersen_power_multiset(p_power(ms(2, 0, 1))) == ms(2, 0, 1));
  Multigraph tweaked = p_power(ms(1, 0, 0));
  tweaked.add_copies(0, 1, 1);  // breaks the pair system
  CHECK_FALSE(petersen_power_multiset(tweaked).has_value());
  CHECK_FALSE(petersen_power_multiset(Multigraph(10)).has_value());
}

TEST_CASE("class classification") {
  CHECK(is_class1(petersen_catalog().graph) == GraphClass::class2);
  CHECK(is_class1(p_power(ms(1, 0, 0))) == GraphClass::class2);

  Multigraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_copies(i, j, 1);
  CHECK(is_class1(k4) == GraphClass::class1);

  Multigraph c4x2(4);  // 4-cycle with doubled edges, 4-regular, class 1
  for (int i = 0; i < 4; ++i) c4x2.add_copies(i, (i + 1) % 4, 2);
  CHECK(is_class1(c4x2) == GraphClass::class1);

  Multigraph irregular(4);
  irregular.add_copies(0, 1, 1);
  irregular.add_copies(1, 2, 1);
  irregular.add_copies(2, 3, 1);
  CHECK_THROWS_AS((void)is_class1(irregular), domain_error);

  // budget exhaustion yields unknown on a non-power instance
  Multigraph k4heavy(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4heavy.add_copies(i, j, 2);
  CHECK(is_class1(k4heavy, 2) == GraphClass::unknown);
}

TEST_CASE("petersen powers are never class 1") {
  for (const auto& m : multisets_up_to(3)) CHECK(is_class1(p_power(m)) == GraphClass::class2);
}

TEST_CASE("relabeled host falls through to the coloring search") {
  const Multigraph& p = petersen_catalog().graph;
  std::vector<Vertex> perm(10);
  for (int i = 0; i < 10; ++i) perm[i] = (3 * i + 1) % 10;
  Multigraph shuffled(10);
  for (const auto& [pr, m] : p.adjacency()) shuffled.add_copies(perm[pr.first], perm[pr.second], m);
  CHECK_FALSE(petersen_power_multiset(shuffled).has_value());
  CHECK(is_class1(shuffled) == GraphClass::class2);
}
