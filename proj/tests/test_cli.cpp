#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "pdpm/cli.hpp"

using namespace pdpm;

namespace {

const std::string kData = PDPM_DATA_DIR;

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"pdpm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  int code = cli::run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  return {code, captured.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"no-such-verb"}).code == cli::kUsage);
  CHECK(run_cli({"build", "family", "--l", "2", "--r", "5"}).code == cli::kUsage);
  CHECK(run_cli({"oracle", "--multiset", "1,2"}).code == cli::kUsage);
}

TEST_CASE("petersen dump") {
  CliResult res = run_cli({"petersen"});
  CHECK(res.code == cli::kOk);
  json j = json::parse(res.out);
  CHECK(j.at("matchings").size() == 6);
  CHECK(j.at("pair_to_edge").size() == 15);
}

TEST_CASE("build, analyze, export round trip") {
  const std::string path = "cli_test_g8.json";
  CHECK(run_cli({"build", "power", "--multiset", "2,1,1,1,0,0", "-o", path}).code == cli::kOk);

  CliResult lam = run_cli({"analyze", "lambda", "-i", path});
  CHECK(lam.code == cli::kOk);
  CHECK(json::parse(lam.out).at("lambda") == 8);

  CliResult lo = run_cli({"analyze", "lambda-odd", "-i", path});
  CHECK(json::parse(lo.out).at("lambda_odd") == 8);

  CliResult rg = run_cli({"analyze", "r-graph", "-i", path});
  CHECK(json::parse(rg.out).at("r_graph") == 8);

  CliResult mu = run_cli({"analyze", "mu", "-i", path, "--u", "u1", "--v", "v1"});
  CHECK(mu.out == "4\n");

  // byte-exact round trip through export
  const std::string copy = "cli_test_g8_copy.json";
  CHECK(run_cli({"export", "-i", path, "--format", "json", "-o", copy}).code == cli::kOk);
  CHECK(read_text_file(path) == read_text_file(copy));

  CliResult dot = run_cli({"export", "-i", path, "--format", "dot"});
  CHECK(dot.out.find("graph g {") == 0);

  std::remove(path.c_str());
  std::remove(copy.c_str());
}

TEST_CASE("oracle and max-pdpm agree through the cli") {
  CliResult o = run_cli({"oracle", "--multiset", "2,1,1,1,0,0"});
  CHECK(o.code == cli::kOk);
  CHECK(json::parse(o.out).at("max") == 6);

  const std::string path = "cli_test_pow.json";
  CHECK(run_cli({"build", "power", "--multiset", "2,1,1,1,0,0", "-o", path}).code == cli::kOk);
  CliResult mp = run_cli({"max-pdpm", "-i", path, "--budget", "1e7"});
  CHECK(mp.code == cli::kOk);
  CHECK(mp.out == "6\n");

  CliResult exhausted = run_cli({"max-pdpm", "-i", path, "--budget", "10"});
  CHECK(exhausted.code == cli::kBudget);

  CliResult pc = run_cli({"pm-count", "-i", path, "--mode", "support"});
  CHECK(pc.out == "6\n");
  std::remove(path.c_str());
}

TEST_CASE("verify subcommands") {
  CHECK(run_cli({"verify", "petersen"}).code == cli::kOk);
  CHECK(run_cli({"verify", "lambda-formula", "--max-total", "2"}).code == cli::kOk);
  CHECK(run_cli({"verify", "lambda-formula", "--max-total", "2", "--jobs", "3"}).code == cli::kOk);
  CHECK(run_cli({"verify", "q1-lemma"}).code == cli::kOk);
}

TEST_CASE("g6 pipeline through the cli") {
  CliResult good = run_cli({"verify", "g6-replay", "--wiring", kData + "/g1_wiring.json"});
  CHECK(good.code == cli::kOk);
  json rep = json::parse(good.out);
  CHECK(rep.at("certified") == true);

  CliResult bad =
      run_cli({"verify", "g6-replay", "--wiring", kData + "/g1_wiring_bad_boundary.json"});
  CHECK(bad.code == cli::kFail);

  CliResult refused =
      run_cli({"verify", "g6-replay", "--wiring", kData + "/g1_wiring_bad_regularity.json"});
  CHECK(refused.code == cli::kFail);
}

TEST_CASE("witness certification through the cli") {
  const std::string g = "cli_test_w.json", m = "cli_test_w_m.json", p = "cli_test_w_p.json";
  CHECK(run_cli({"build", "family", "--l", "4", "--r", "9", "-o", g, "--matching", m,
                 "--provenance", p})
            .code == cli::kOk);
  CliResult cert = run_cli({"verify", "witness", "-i", g, "--matching", m, "--provenance", p});
  CHECK(cert.code == cli::kOk);
  json cj = json::parse(cert.out);
  CHECK(cj.at("pass") == true);
  CHECK(cj.at("chain_summary").at("length") == 1);

  // identical invocations are byte identical
  CliResult cert2 = run_cli({"verify", "witness", "-i", g, "--matching", m, "--provenance", p});
  CHECK(cert.out == cert2.out);
  std::remove(g.c_str());
  std::remove(m.c_str());
  std::remove(p.c_str());
}

TEST_CASE("splice and projection suites") {
  CHECK(run_cli({"verify", "splice"}).code == cli::kOk);
  CHECK(run_cli({"verify", "projection"}).code == cli::kOk);
}

TEST_CASE("g6 build artifacts feed back into the replay") {
  const std::string g = "cli_test_g6.json";
  CHECK(run_cli({"build", "g6", "--wiring", kData + "/g1_wiring.json", "-o", g}).code == cli::kOk);
  // hash cross-check between the provided graph and the wiring build
  CHECK(run_cli({"verify", "g6-replay", "--wiring", kData + "/g1_wiring.json", "-i", g}).code ==
        cli::kOk);
  // a different graph is rejected as inconsistent
  const std::string other = "cli_test_other.json";
  CHECK(run_cli({"build", "power", "--multiset", "1,1,1,0,0,0", "-o", other}).code == cli::kOk);
  CHECK(run_cli({"verify", "g6-replay", "--wiring", kData + "/g1_wiring.json", "-i", other})
            .code == cli::kFail);
  std::remove(g.c_str());
  std::remove(other.c_str());
}

TEST_CASE("json error reporting and env budget") {
  // --json-errors routes machine-readable errors to stderr; exit code holds
  std::ostringstream err;
  std::streambuf* old = std::cerr.rdbuf(err.rdbuf());
  int code = run_cli({"--json-errors", "analyze", "lambda", "-i", "no_such_file.json"}).code;
  std::cerr.rdbuf(old);
  CHECK(code == cli::kUsage);
  CHECK(json::parse(err.str()).at("error") == "domain");

  const std::string path = "cli_test_env.json";
  CHECK(run_cli({"build", "power", "--multiset", "2,1,1,1,0,0", "-o", path}).code == cli::kOk);
  setenv("PDPM_BUDGET", "10", 1);
  std::ostringstream err2;
  old = std::cerr.rdbuf(err2.rdbuf());
  CliResult res = run_cli({"max-pdpm", "-i", path});
  std::cerr.rdbuf(old);
  unsetenv("PDPM_BUDGET");
  CHECK(res.code == cli::kBudget);
  std::remove(path.c_str());
}

TEST_CASE("l = 3 family through the cli") {
  CHECK(run_cli({"build", "family", "--l", "3", "--r", "6"}).code == cli::kUsage);  // no wiring
  const std::string g = "cli_test_f36.json";
  CHECK(run_cli({"build", "family", "--l", "3", "--r", "6", "--wiring",
                 kData + "/g1_wiring.json", "-o", g})
            .code == cli::kOk);
  CliResult rg = run_cli({"analyze", "r-graph", "-i", g});
  CHECK(json::parse(rg.out).at("r_graph") == 6);
  std::remove(g.c_str());
}
