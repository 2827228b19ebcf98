#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pdpm/verify.hpp"

namespace pdpm::cli {

// Exit codes: 0 success/certified, 1 verification failure or refusal,
// 2 usage error, 3 budget exhausted.
enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

namespace detail {

inline Vertex resolve(const Multigraph& g, const std::string& ref) {
  if (auto v = g.find_label(ref)) return *v;
  try {
    size_t pos = 0;
    int idx = std::stoi(ref, &pos);
    if (pos == ref.size() && idx >= 0 && idx < g.vertex_count()) return idx;
  } catch (...) {
  }
  throw domain_error("unknown vertex reference: " + ref);
}

inline PetersenMultiset parse_multiset(const std::string& s) {
  PetersenMultiset m;
  std::string cur;
  int i = 0;
  for (char c : s + ",") {
    if (c == ',') {
      if (i >= 6) throw domain_error("multiset needs exactly 6 counts");
      m.counts[i++] = std::stoll(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (i != 6) throw domain_error("multiset needs exactly 6 counts");
  for (long long c : m.counts)
    if (c < 0) throw domain_error("multiset counts must be non-negative");
  return m;
}

inline long long default_budget() {
  if (const char* env = std::getenv("PDPM_BUDGET")) {
    try {
      return static_cast<long long>(std::stod(env));
    } catch (...) {
    }
  }
  return 10000000;
}

inline void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << "\n";
  else
    write_text_file(out_path, text);
}

inline FamilyProvenance provenance_from_json(const json& j) {
  FamilyProvenance p;
  p.l = j.at("l").get<int>();
  p.r = j.at("r").get<int>();
  p.kind = j.at("kind").get<std::string>() == "inductive" ? WitnessKind::inductive
                                                          : WitnessKind::trivial_range;
  p.base_kind = j.at("base_kind").get<std::string>();
  p.base_r = j.at("base_r").get<int>();
  if (j.contains("base_multiset")) p.base_multiset = multiset_from_json(j.at("base_multiset"));
  p.base_hash = j.at("base_hash").get<std::string>();
  for (const auto& s : j.at("chain")) {
    InductionStepRecord rec;
    rec.l = s.at("l").get<int>();
    rec.r_from = s.at("r_from").get<int>();
    rec.matching_in = matching_from_json(s.at("matching_in"));
    rec.matching_out = matching_from_json(s.at("matching_out"));
    rec.result_hash = s.at("result_hash").get<std::string>();
    p.chain.push_back(std::move(rec));
  }
  return p;
}

// The fixture suite behind `verify splice` and `verify projection`: operand
// powers spliced at u1/v1 with varied degree and seam width. The h side
// always carries r-3 matchings.
struct SpliceFixture {
  PetersenMultiset mg, mh;
  int t, r;
};

inline std::vector<SpliceFixture> splice_suite() {
  std::vector<SpliceFixture> out;
  auto ms = [](long long a, long long b, long long c, long long d = 0, long long e = 0,
               long long f = 0) {
    PetersenMultiset m;
    m.counts = {a, b, c, d, e, f};
    return m;
  };
  for (int r = 4; r <= 9; ++r) {
    const long long k = r - 3;
    // heavy u1v1 bundle on both sides: mu(u1,v1) = 1 + m0 + m1
    PetersenMultiset heavy = ms((k + 1) / 2, k / 2, 0);
    PetersenMultiset spread = k >= 2 ? ms(k - 1, 1, 0) : ms(k, 0, 0);
    PetersenMultiset mixed = k >= 3 ? ms(k - 2, 1, 1) : heavy;
    const long long mu_heavy = 1 + heavy.counts[0] + heavy.counts[1];
    for (int t = 2; t < r; ++t) {
      if (mu_heavy < t) continue;
      if (1 + spread.counts[0] + spread.counts[1] < r - t) continue;
      out.push_back({heavy, spread, t, r});
    }
    if (mu_heavy >= 2 && 1 + mixed.counts[0] + mixed.counts[1] >= r - 2)
      out.push_back({heavy, mixed, 2, r});
  }
  return out;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
  CLI::App app{"exact toolkit for disjoint perfect matchings in regular multigraphs"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "emit errors as JSON on stderr");

  int exit_code = kOk;

  // ---- petersen
  {
    auto* c = app.add_subcommand("petersen", "dump the Petersen matching catalog");
    auto out = std::make_shared<std::string>();
    c->add_option("-o,--output", *out, "output path (default stdout)");
    c->callback([out]() {
      const PetersenCatalog& cat = petersen_catalog();
      json j;
      j["graph"] = graph_to_json(cat.graph);
      json ms = json::array();
      for (const auto& m : cat.matchings) ms.push_back(matching_to_json(m));
      j["matchings"] = std::move(ms);
      json pairs = json::array();
      for (const auto& [ij, e] : cat.pair_to_edge)
        pairs.push_back({ij.first, ij.second, e.first, e.second});
      j["pair_to_edge"] = std::move(pairs);
      detail::emit(j.dump(), *out);
    });
  }

  // ---- build
  {
    auto* b = app.add_subcommand("build", "construct graphs");
    b->require_subcommand(1);

    {
      auto* c = b->add_subcommand("power", "Petersen power for a matching multiset");
      auto ms = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      c->add_option("--multiset", *ms, "six comma-separated counts m0,...,m5")->required();
      c->add_option("-o,--output", *out, "output path (default stdout)");
      c->callback([ms, out]() {
        Multigraph g = p_power(detail::parse_multiset(*ms));
        detail::emit(graph_to_canonical_string(g), *out);
      });
    }
    {
      auto* c = b->add_subcommand("q1", "the two-block gadget");
      auto out = std::make_shared<std::string>();
      c->add_option("-o,--output", *out, "output path (default stdout)");
      c->callback([out]() { detail::emit(graph_to_canonical_string(q1().graph), *out); });
    }
    {
      auto* c = b->add_subcommand("p-next", "the block spliced in by one ladder step");
      auto r = std::make_shared<int>(0);
      auto l = std::make_shared<int>(0);
      auto out = std::make_shared<std::string>();
      c->add_option("--r", *r, "current degree r")->required();
      c->add_option("--l", *l, "connectivity parameter l")->required();
      c->add_option("-o,--output", *out, "output path (default stdout)");
      c->callback([r, l, out]() { detail::emit(graph_to_canonical_string(p_next(*r, *l)), *out); });
    }
    {
      auto* c = b->add_subcommand("g6", "build and validate the wired expanded host");
      auto wiring = std::make_shared<std::string>();
      auto out = std::make_shared<std::string>();
      auto g1_out = std::make_shared<std::string>();
      auto m_out = std::make_shared<std::string>();
      c->add_option("--wiring", *wiring, "wiring spec path")->required();
      c->add_option("-o,--output", *out, "expanded graph output (default stdout)");
      c->add_option("--g1", *g1_out, "also write the pre-expansion host");
      c->add_option("--matching", *m_out, "also write the designated matching");
      c->callback([wiring, out, g1_out, m_out]() {
        G6Build bld = build_g6(load_wiring(*wiring));
        detail::emit(graph_to_canonical_string(bld.g6), *out);
        if (!g1_out->empty()) save_graph(bld.g1, *g1_out);
        if (!m_out->empty()) write_text_file(*m_out, matching_to_json(bld.m6).dump());
      });
    }
    {
      auto* c = b->add_subcommand("splice", "splice two graphs");
      auto gp = std::make_shared<std::string>();
      auto hp = std::make_shared<std::string>();
      auto gu = std::make_shared<std::string>();
      auto gv = std::make_shared<std::string>();
      auto hx = std::make_shared<std::string>();
      auto hy = std::make_shared<std::string>();
      auto t = std::make_shared<int>(0);
      auto r = std::make_shared<int>(0);
      auto out = std::make_shared<std::string>();
      c->add_option("-g,--first", *gp, "first operand path")->required();
      c->add_option("-H,--second", *hp, "second operand path")->required();
      c->add_option("--gu", *gu, "first operand endpoint u")->required();
      c->add_option("--gv", *gv, "first operand endpoint v")->required();
      c->add_option("--hx", *hx, "second operand endpoint x")->required();
      c->add_option("--hy", *hy, "second operand endpoint y")->required();
      c->add_option("--t", *t, "copies removed on the first side")->required();
      c->add_option("--r", *r, "total degree r")->required();
      c->add_option("-o,--output", *out, "output path (default stdout)");
      c->callback([=]() {
        Multigraph g = load_graph(*gp), h = load_graph(*hp);
        auto [res, rec] = splice(g, detail::resolve(g, *gu), detail::resolve(g, *gv), h,
                                 detail::resolve(h, *hx), detail::resolve(h, *hy), *t, *r);
        detail::emit(graph_to_canonical_string(res), *out);
      });
    }
    {
      auto* c = b->add_subcommand("family", "witness family member");
      auto l = std::make_shared<int>(0);
      auto r = std::make_shared<int>(0);
      auto out = std::make_shared<std::string>();
      auto m_out = std::make_shared<std::string>();
      auto p_out = std::make_shared<std::string>();
      auto wiring = std::make_shared<std::string>();
      c->add_option("--l", *l, "half of the required edge-connectivity")->required();
      c->add_option("--r", *r, "degree r")->required();
      c->add_option("-o,--output", *out, "graph output (default stdout)");
      c->add_option("--matching", *m_out, "write the carried matching");
      c->add_option("--provenance", *p_out, "write the construction provenance");
      c->add_option("--wiring", *wiring, "wiring spec (required for l = 3)");
      c->callback([l, r, out, m_out, p_out, wiring]() {
        Witness w;
        if (*l == 3) {
          if (wiring->empty())
            throw unsupported_error("family with l = 3 needs --wiring for the validated base");
          G6Build bld = build_g6(load_wiring(*wiring));
          G6Base base = g6_base_from_build(bld);
          w = family_witness(*l, *r, &base);
        } else {
          w = family_witness(*l, *r);
        }
        detail::emit(graph_to_canonical_string(w.graph), *out);
        if (!m_out->empty()) write_text_file(*m_out, matching_to_json(w.matching).dump());
        if (!p_out->empty()) write_text_file(*p_out, provenance_to_json(w.provenance).dump());
      });
    }
  }

  // ---- analyze
  {
    auto* a = app.add_subcommand("analyze", "connectivity and multiplicity queries");
    a->require_subcommand(1);
    auto make_input = [](CLI::App* c) {
      auto in = std::make_shared<std::string>();
      c->add_option("-i,--input", *in, "graph path")->required();
      return in;
    };
    {
      auto* c = a->add_subcommand("lambda", "edge-connectivity with witness shore");
      auto in = make_input(c);
      c->callback([in]() {
        Multigraph g = load_graph(*in);
        CutResult cut = lambda(g);
        json j;
        j["lambda"] = cut.value;
        json shore = json::array();
        for (Vertex v : cut.side) shore.push_back(g.label(v));
        j["shore"] = std::move(shore);
        std::cout << j.dump() << "\n";
      });
    }
    {
      auto* c = a->add_subcommand("lambda-odd", "odd edge-connectivity with witness shore");
      auto in = make_input(c);
      c->callback([in]() {
        Multigraph g = load_graph(*in);
        CutResult cut = lambda_odd(g);
        json j;
        j["lambda_odd"] = cut.value;
        json shore = json::array();
        for (Vertex v : cut.side) shore.push_back(g.label(v));
        j["shore"] = std::move(shore);
        std::cout << j.dump() << "\n";
      });
    }
    {
      auto* c = a->add_subcommand("r-graph", "regularity plus odd connectivity test");
      auto in = make_input(c);
      c->callback([in]() {
        auto r = is_r_graph(load_graph(*in));
        json j;
        j["r_graph"] = r ? json(*r) : json(nullptr);
        std::cout << j.dump() << "\n";
      });
    }
    {
      auto* c = a->add_subcommand("mu", "multiplicity of a vertex pair");
      auto in = make_input(c);
      auto u = std::make_shared<std::string>();
      auto v = std::make_shared<std::string>();
      c->add_option("--u", *u)->required();
      c->add_option("--v", *v)->required();
      c->callback([in, u, v]() {
        Multigraph g = load_graph(*in);
        std::cout << g.mu(detail::resolve(g, *u), detail::resolve(g, *v)) << "\n";
      });
    }
    {
      auto* c = a->add_subcommand("max-mu", "maximum multiplicity");
      auto in = make_input(c);
      c->callback([in]() { std::cout << load_graph(*in).max_mu() << "\n"; });
    }
  }

  // ---- max-pdpm
  {
    auto* c = app.add_subcommand("max-pdpm", "exact maximum disjoint-matching family");
    auto in = std::make_shared<std::string>();
    auto target = std::make_shared<int>(-1);
    auto budget = std::make_shared<double>(static_cast<double>(detail::default_budget()));
    auto out = std::make_shared<std::string>();
    c->add_option("-i,--input", *in, "graph path")->required();
    c->add_option("--target", *target, "stop once a family of this size is found");
    c->add_option("--budget", *budget, "node budget");
    c->add_option("-o,--family", *out, "write the family found");
    c->callback([in, target, budget, out, &exit_code]() {
      Multigraph g = load_graph(*in);
      std::optional<int> k = *target >= 0 ? std::optional<int>(*target) : std::nullopt;
      MaxPdpmResult res = max_pdpm(g, k, static_cast<long long>(*budget));
      std::cout << res.family.size() << "\n";
      if (!out->empty()) {
        json fam = json::array();
        for (const auto& pm : res.family.matchings) fam.push_back(matching_to_json(pm));
        write_text_file(*out, fam.dump());
      }
      if (res.status == SearchStatus::budget_exhausted) {
        std::cerr << "budget exhausted after " << res.nodes << " nodes\n";
        exit_code = kBudget;
      }
    });
  }

  // ---- pm-count
  {
    auto* c = app.add_subcommand("pm-count", "count perfect matchings");
    auto in = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("support");
    auto cap = std::make_shared<double>(1e6);
    c->add_option("-i,--input", *in, "graph path")->required();
    c->add_option("--mode", *mode, "support or copies")->check(CLI::IsMember({"support", "copies"}));
    c->add_option("--cap", *cap, "enumeration cap");
    c->callback([in, mode, cap]() {
      Multigraph g = load_graph(*in);
      if (*mode == "support")
        std::cout << enumerate_pm(g, PmMode::support, static_cast<long long>(*cap)).size() << "\n";
      else
        std::cout << count_pm_copies(g) << "\n";
    });
  }

  // ---- oracle
  {
    auto* c = app.add_subcommand("oracle", "exact family bound for a Petersen power");
    auto ms = std::make_shared<std::string>();
    c->add_option("--multiset", *ms, "six comma-separated counts")->required();
    c->callback([ms]() {
      OracleResult res = pdpm_oracle(detail::parse_multiset(*ms));
      json j;
      j["max"] = res.max;
      json opt = json::array();
      for (const auto& v : res.optima) {
        json row = json::array();
        for (long long c : v.counts) row.push_back(c);
        opt.push_back(std::move(row));
      }
      j["optima"] = std::move(opt);
      std::cout << j.dump() << "\n";
    });
  }

  // ---- export
  {
    auto* c = app.add_subcommand("export", "re-serialize a graph");
    auto in = std::make_shared<std::string>();
    auto fmt = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    c->add_option("-i,--input", *in, "graph path")->required();
    c->add_option("--format", *fmt, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    c->add_option("-o,--output", *out, "output path (default stdout)");
    c->callback([in, fmt, out]() {
      Multigraph g = load_graph(*in);
      if (*fmt == "json") {
        if (out->empty())
          std::cout << graph_to_canonical_string(g) << "\n";
        else
          save_graph(g, *out);
      } else {
        detail::emit(graph_to_dot(g), *out);
      }
    });
  }

  // ---- verify
  {
    auto* v = app.add_subcommand("verify", "computational checks");
    v->require_subcommand(1);

    {
      auto* c = v->add_subcommand("petersen", "catalog structure");
      c->callback([&exit_code]() {
        const PetersenCatalog& cat = petersen_catalog();
        bool ok = true;
        std::map<std::pair<Vertex, Vertex>, int> incidence;
        for (const auto& m : cat.matchings)
          for (const EdgeCopy& e : m.copies) incidence[{e.u, e.v}]++;
        ok = ok && incidence.size() == 15;
        for (const auto& [e, c2] : incidence) ok = ok && c2 == 2;
        ok = ok && cat.pair_to_edge.size() == 15;
        std::cout << (ok ? "pass" : "fail") << ": 6 matchings, each edge in exactly 2, 15 "
                  << "pairwise intersections\n";
        if (!ok) exit_code = kFail;
      });
    }
    {
      auto* c = v->add_subcommand("lambda-formula", "connectivity formula sweep");
      auto max_total = std::make_shared<int>(6);
      auto jobs = std::make_shared<int>(1);
      c->add_option("--max-total", *max_total, "largest multiset sum");
      c->add_option("--jobs", *jobs, "parallel verification batches");
      c->callback([max_total, jobs, &exit_code]() {
        LambdaFormulaReport rep = verify_lambda_formula(*max_total, *jobs);
        std::cout << (rep.pass() ? "pass" : "fail") << ": " << rep.cases << " cases, "
                  << rep.mismatches.size() << " mismatches\n";
        for (const auto& s : rep.mismatches) std::cerr << s << "\n";
        if (!rep.pass()) exit_code = kFail;
      });
    }
    {
      auto* c = v->add_subcommand("splice", "splice connectivity law on the fixture suite");
      auto suite = std::make_shared<bool>(true);
      c->add_flag("--suite", *suite, "run the built-in fixture suite (default)");
      c->callback([&exit_code]() {
        bool all = true;
        for (const auto& fx : detail::splice_suite()) {
          Multigraph g = p_power(fx.mg), h = p_power(fx.mh);
          SpliceReport rep = verify_splice(g, 0, 5, h, 0, 5, fx.t, fx.r);
          std::cout << (rep.pass ? "pass" : "fail") << ": r=" << fx.r << " t=" << fx.t
                    << " lambda " << rep.lambda_spliced << " = min(" << rep.lambda_g << ","
                    << rep.lambda_h << "), r-graph " << rep.r_graph << "\n";
          all = all && rep.pass;
        }
        if (!all) exit_code = kFail;
      });
    }
    {
      auto* c = v->add_subcommand("projection",
                                  "seam projection of optimal families on the fixture suite");
      c->callback([&exit_code]() {
        bool all = true;
        int cases = 0;
        for (const auto& fx : detail::splice_suite()) {
          if (fx.mh.sum() != fx.r - 3 || fx.t < 2) continue;
          Multigraph g = p_power(fx.mg), h = p_power(fx.mh);
          auto [gp, rec] = splice(g, 0, 5, h, 0, 5, fx.t, fx.r);
          MaxPdpmResult best = max_pdpm(gp);
          if (best.status != SearchStatus::exact) continue;
          AllOptimalResult alls = all_optimal_pdpm(gp, best.family.size());
          for (const auto& fam : alls.families) {
            PdpmFamily proj = project_pdpm(gp, fam, rec, SpliceSide::g);
            bool ok = is_valid_pdpm_family(g, proj);
            long long used = 0;
            for (const auto& pm : proj.matchings)
              for (const EdgeCopy& e : pm.copies)
                if (std::min(e.u, e.v) == std::min(rec.g_u, rec.g_v) &&
                    std::max(e.u, e.v) == std::max(rec.g_u, rec.g_v))
                  ++used;
            ok = ok && used < g.mu(rec.g_u, rec.g_v);
            all = all && ok;
            ++cases;
          }
        }
        std::cout << (all ? "pass" : "fail") << ": " << cases
                  << " optimal families projected onto the first operand\n";
        if (!all) exit_code = kFail;
      });
    }
    {
      auto* c = v->add_subcommand("q1-lemma", "gadget boundary enumeration");
      auto budget = std::make_shared<double>(2e8);
      c->add_option("--budget", *budget, "node budget");
      c->callback([budget, &exit_code]() {
        Q1BoundaryReport rep = q1_boundary_check(static_cast<long long>(*budget));
        json j;
        j["complete"] = rep.complete;
        j["feasible_tuples"] = rep.feasible_tuples;
        j["every_matching_one_pendant"] = rep.every_matching_one_pendant;
        j["all_splits_two_two"] = rep.all_splits_two_two;
        j["patterns"] = rep.pattern_table;
        std::cout << j.dump() << "\n";
        if (!rep.complete)
          exit_code = kBudget;
        else if (!rep.pass())
          exit_code = kFail;
      });
    }
    {
      auto* c = v->add_subcommand("g6-replay", "structural replay on the wired host");
      auto wiring = std::make_shared<std::string>();
      auto in = std::make_shared<std::string>();
      auto budget = std::make_shared<double>(2e8);
      auto out = std::make_shared<std::string>();
      c->add_option("--wiring", *wiring, "wiring spec path")->required();
      c->add_option("-i,--input", *in, "expanded graph to cross-check against the build");
      c->add_option("--budget", *budget, "gadget enumeration budget");
      c->add_option("-o,--output", *out, "report output (default stdout)");
      c->callback([wiring, in, budget, out, &exit_code]() {
        G6Build bld = build_g6(load_wiring(*wiring));
        if (!in->empty()) {
          Multigraph given = load_graph(*in);
          if (graph_hash(given) != graph_hash(bld.g6))
            throw integrity_error("provided graph does not match the wiring build");
        }
        G6ReplayReport rep = g6_no4pdpm_replay(bld, static_cast<long long>(*budget));
        detail::emit(rep.to_json().dump(), *out);
        if (!rep.certified) exit_code = kFail;
      });
    }
    {
      auto* c = v->add_subcommand("witness", "certify a family witness");
      auto in = std::make_shared<std::string>();
      auto mp = std::make_shared<std::string>();
      auto pp = std::make_shared<std::string>();
      auto smoke = std::make_shared<double>(0);
      auto out = std::make_shared<std::string>();
      c->add_option("-i,--input", *in, "graph path")->required();
      c->add_option("--matching", *mp, "carried matching path")->required();
      c->add_option("--provenance", *pp, "provenance path")->required();
      c->add_option("--smoke-budget", *smoke, "optional bounded direct search");
      c->add_option("-o,--output", *out, "certificate output (default stdout)");
      c->callback([in, mp, pp, smoke, out, &exit_code]() {
        Multigraph g = load_graph(*in);
        PerfectMatching m = matching_from_json(json::parse(read_text_file(*mp)));
        FamilyProvenance prov = detail::provenance_from_json(json::parse(read_text_file(*pp)));
        WitnessCertificate cert =
            certify_witness(g, m, prov, static_cast<long long>(*smoke));
        detail::emit(cert.to_json().dump(), *out);
        if (!cert.pass) exit_code = kFail;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kOk;
    }
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const budget_error& e) {
    if (json_errors)
      std::cerr << json{{"error", "budget"}, {"message", e.what()}, {"counted", e.counted}}.dump()
                << "\n";
    else
      std::cerr << "budget error: " << e.what() << "\n";
    return kBudget;
  } catch (const validation_error& e) {
    if (json_errors)
      std::cerr << json{{"error", "validation"}, {"violations", e.violations}}.dump() << "\n";
    else
      std::cerr << e.what() << "\n";
    return kFail;
  } catch (const integrity_error& e) {
    if (json_errors)
      std::cerr << json{{"error", "integrity"}, {"message", e.what()}}.dump() << "\n";
    else
      std::cerr << "integrity error: " << e.what() << "\n";
    return kFail;
  } catch (const domain_error& e) {
    if (json_errors)
      std::cerr << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const precondition_error& e) {
    if (json_errors)
      std::cerr << json{{"error", "precondition"}, {"message", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const unsupported_error& e) {
    if (json_errors)
      std::cerr << json{{"error", "unsupported"}, {"message", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}

}  // namespace pdpm::cli
