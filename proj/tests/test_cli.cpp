#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "test_support.hpp"

namespace ts = testsupport;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const ts::TempDir& dir, const std::string& args,
                  const std::string& env = "") {
  static int calls = 0;
  std::string tag = std::to_string(calls++);
  std::string out_path = dir.file("stdout." + tag).string();
  std::string err_path = dir.file("stderr." + tag).string();
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(MBFKIT_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  int raw = std::system(cmd.c_str());
  CliResult res;
  res.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  res.out = ts::read_file(out_path);
  res.err = ts::read_file(err_path);
  return res;
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string serialize_graph(const mbfkit::WeightedGraph& g) {
  auto edges = g.edges();
  std::ostringstream os;
  os << g.node_count() << " " << edges.size() << "\n";
  for (const auto& e : edges) os << e.u << " " << e.v << " " << e.weight << "\n";
  return os.str();
}

const char* kPath3 = "3 2\n0 1 2\n1 2 3\n";
const char* kTriangle = "3 3\n0 1 1\n0 2 1\n1 2 1\n";
const char* kPair5 = "2 1\n0 1 5\n";
const char* kSquare4 = "4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1\n";

}  // namespace

TEST_CASE("solve prints shortest path lists as JSON lines") {
  ts::TempDir dir("cli_apsp");
  std::string g = dir.write("p3.graph", kPath3);

  auto r = run_cli(dir, "solve --algo apsp --input " + g);
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "{\"node\":0,\"list\":[[0,0],[2,1],[5,2]]}\n"
        "{\"node\":1,\"list\":[[2,0],[0,1],[3,2]]}\n"
        "{\"node\":2,\"list\":[[5,0],[3,1],[0,2]]}\n");

  auto tsv = run_cli(dir, "solve --algo apsp --format tsv --input " + g);
  CHECK(tsv.code == 0);
  CHECK(tsv.out ==
        "# node\tdistance\tsource\n"
        "0\t0\t0\n0\t2\t1\n0\t5\t2\n"
        "1\t2\t0\n1\t0\t1\n1\t3\t2\n"
        "2\t5\t0\n2\t3\t1\n2\t0\t2\n");
}

TEST_CASE("solve handles scalar and path-valued instances") {
  ts::TempDir dir("cli_solve");
  std::string p3 = dir.write("p3.graph", kPath3);
  std::string tri = dir.write("tri.graph", kTriangle);

  auto sssp = run_cli(dir, "solve --algo sssp --source 0 --input " + p3);
  CHECK(sssp.code == 0);
  CHECK(sssp.out ==
        "{\"node\":0,\"dist\":0}\n{\"node\":1,\"dist\":2}\n{\"node\":2,\"dist\":5}\n");

  // The source's own width is unbounded and serializes as null.
  auto widest = run_cli(dir, "solve --algo widest --source 0 --input " + p3);
  CHECK(widest.code == 0);
  CHECK(widest.out ==
        "{\"node\":0,\"width\":null}\n{\"node\":1,\"width\":2}\n{\"node\":2,\"width\":2}\n");

  auto ksdp = run_cli(dir, "solve --algo ksdp --k 2 --source 0 --input " + tri);
  CHECK(ksdp.code == 0);
  CHECK(ksdp.out ==
        "{\"node\":0,\"paths\":[{\"weight\":0,\"nodes\":[0]}]}\n"
        "{\"node\":1,\"paths\":[{\"weight\":1,\"nodes\":[1,0]},"
        "{\"weight\":2,\"nodes\":[1,2,0]}]}\n"
        "{\"node\":2,\"paths\":[{\"weight\":1,\"nodes\":[2,0]},"
        "{\"weight\":2,\"nodes\":[2,1,0]}]}\n");

  auto conn = run_cli(dir, "solve --algo connectivity --input " + p3);
  CHECK(conn.code == 0);
  CHECK(conn.out ==
        "{\"node\":0,\"reachable\":[0,1,2]}\n"
        "{\"node\":1,\"reachable\":[0,1,2]}\n"
        "{\"node\":2,\"reachable\":[0,1,2]}\n");

  // --d doubles as the hop bound for connectivity.
  auto hop1 = run_cli(dir, "solve --algo connectivity --d 1 --input " + p3);
  CHECK(hop1.code == 0);
  CHECK(hop1.out ==
        "{\"node\":0,\"reachable\":[0,1]}\n"
        "{\"node\":1,\"reachable\":[0,1,2]}\n"
        "{\"node\":2,\"reachable\":[1,2]}\n");
}

TEST_CASE("the metric subcommand emits a symmetric table in both formats") {
  ts::TempDir dir("cli_metric");
  std::string tri = dir.write("tri.graph", kTriangle);

  auto r = run_cli(dir, "metric --seed 1 --input " + tri);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["eps_hat"] == 0.25);
  REQUIRE(j["table"].size() == 3);
  for (int u = 0; u < 3; ++u) {
    REQUIRE(j["table"][u].size() == 3);
    CHECK(j["table"][u][u] == 0.0);
    for (int v = 0; v < 3; ++v) CHECK(j["table"][u][v] == j["table"][v][u]);
  }

  auto tsv = run_cli(dir, "metric --seed 1 --format tsv --input " + tri);
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.rfind("# n=3 eps_hat=0.25 lambda_max=", 0) == 0);
  CHECK(count_lines(tsv.out) == 4);  // header plus one row per pair
}

TEST_CASE("lelists writes one JSON line per node starting at distance zero") {
  ts::TempDir dir("cli_lelists");
  std::string p3 = dir.write("p3.graph", kPath3);

  auto r = run_cli(dir, "lelists --seed 4 --input " + p3);
  REQUIRE(r.code == 0);
  REQUIRE(count_lines(r.out) == 3);
  std::istringstream lines(r.out);
  std::string line;
  int node = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["node"] == node);
    REQUIRE(!j["list"].empty());
    CHECK(j["list"][0][0] == 0.0);
    CHECK(j["list"][0][1] == node);
    ++node;
  }

  auto tsv = run_cli(dir, "lelists --seed 4 --format tsv --input " + p3);
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.rfind("# node\tdistance\tentry\n", 0) == 0);
  CHECK(tsv.out.find("0\t0\t0\n") != std::string::npos);
}

TEST_CASE("kmedian reports facilities as JSON and is deterministic") {
  ts::TempDir dir("cli_kmedian");
  std::string sq = dir.write("sq.graph", kSquare4);

  auto full = run_cli(dir, "kmedian --k 4 --seed 2 --input " + sq);
  CHECK(full.code == 0);
  CHECK(full.out == "{\"facilities\":[0,1,2,3],\"objective\":0.0}\n");

  auto a = run_cli(dir, "kmedian --k 2 --seed 2 --input " + sq);
  auto b = run_cli(dir, "kmedian --k 2 --seed 2 --input " + sq);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto tsv = run_cli(dir, "kmedian --k 2 --seed 2 --format tsv --input " + sq);
  CHECK(tsv.code == 0);
  CHECK(tsv.out.rfind("# objective\t", 0) == 0);
}

TEST_CASE("bab prices a single demand over a single edge") {
  ts::TempDir dir("cli_bab");
  std::string g = dir.write("pair.graph", kPair5);
  std::string inst = dir.write("inst.json", "{\"demands\":[[0,1,3]],\"cables\":[[1,1]]}\n");

  auto r = run_cli(dir, "bab --seed 3 --instance " + inst + " --input " + g);
  CHECK(r.code == 0);
  CHECK(r.out == "{\"cost\":15.0,\"edges\":[{\"cable\":0,\"multiplicity\":3,"
                 "\"u\":0,\"v\":1}]}\n");

  auto tsv = run_cli(dir, "bab --seed 3 --format tsv --instance " + inst + " --input " + g);
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "# cost\t15\n0\t1\t0\t3\n");
}

TEST_CASE("exit codes distinguish usage, parse, invariant, and convergence failures") {
  ts::TempDir dir("cli_codes");
  std::string p3 = dir.write("p3.graph", kPath3);
  std::string sq = dir.write("sq.graph", kSquare4);
  std::string split = dir.write("split.graph", "2 0\n");

  CHECK(run_cli(dir, "--help").code == 0);
  CHECK(run_cli(dir, "").code == 1);                                // subcommand required
  CHECK(run_cli(dir, "solve --algo nope --input " + p3).code == 1); // bad option value
  CHECK(run_cli(dir, "kmedian --k 0 --input " + sq).code == 1);     // k must be positive
  CHECK(run_cli(dir, "embed --input " + p3).code == 1);             // --output required

  auto missing = run_cli(dir, "solve --algo apsp --input " + dir.file("nope.graph").string());
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("error: ", 0) == 0);

  auto badinst = run_cli(dir, "bab --instance " + dir.file("nope.json").string() +
                                  " --input " + p3);
  CHECK(badinst.code == 1);

  auto unwritable = run_cli(dir, "metric --output /nonexistent-dir/x.json --input " + p3);
  CHECK(unwritable.code == 1);

  auto invariant = run_cli(dir, "kmedian --k 9 --input " + sq);
  CHECK(invariant.code == 2);
  CHECK(invariant.err.rfind("error: ", 0) == 0);

  auto disconnected = run_cli(dir, "lelists --input " + split);
  CHECK(disconnected.code == 2);

  auto stuck = run_cli(dir, "lelists --cap-const 0 --input " + p3);
  CHECK(stuck.code == 3);
  CHECK(stuck.err.rfind("error: ", 0) == 0);
}

TEST_CASE("embed output is byte-stable across reruns and thread counts") {
  ts::TempDir dir("cli_embed");
  std::mt19937_64 rng(24680);
  auto g = ts::random_connected_graph(rng, 16, 20, 1, 9);
  std::string path = dir.write("g16.graph", serialize_graph(g));

  std::string base = "embed --samples 2 --stats --seed 5 --input " + path + " --output ";
  auto a = run_cli(dir, base + dir.file("a").string());
  auto b = run_cli(dir, base + dir.file("b").string() + " --threads 3");
  auto c = run_cli(dir, base + dir.file("c").string(), "MBFKIT_THREADS=2");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  REQUIRE(c.code == 0);

  for (const char* suffix :
       {".lelists.0.jsonl", ".lelists.1.jsonl", ".tree.0.tsv", ".tree.1.tsv", ".stats.json"}) {
    auto ref = ts::read_file(dir.file("a").string() + suffix);
    CHECK(!ref.empty());
    CHECK(ref == ts::read_file(dir.file("b").string() + suffix));
    CHECK(ref == ts::read_file(dir.file("c").string() + suffix));
  }

  auto stats = nlohmann::json::parse(ts::read_file(dir.file("a").string() + ".stats.json"));
  REQUIRE(stats["samples"].size() == 2);
  CHECK(stats["samples"][0]["sample"] == 0);
  CHECK(stats["samples"][1]["sample"] == 1);
  CHECK(stats["domination_violations"] == 0);
  for (const auto& s : stats["samples"]) {
    CHECK(s["iterations"].get<int>() > 0);
    CHECK(s["mean_list_length"].get<double>() >= 1.0);
    CHECK(s["domination_violations"] == 0);
  }
}

TEST_CASE("the bundled sample graph runs through the solver") {
  ts::TempDir dir("cli_data");
  std::string g = std::string(MBFKIT_DATA_DIR) + "/random128.graph";
  auto r = run_cli(dir, "solve --algo connectivity --input " + g);
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(count_lines(r.out) == 128);
}
