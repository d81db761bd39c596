#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbfkit/buyatbulk.hpp"
#include "mbfkit/engine.hpp"
#include "mbfkit/instances.hpp"
#include "mbfkit/io.hpp"
#include "mbfkit/kmedian.hpp"
#include "mbfkit/metric.hpp"
#include "mbfkit/parallel.hpp"

namespace {

using namespace mbfkit;

struct CommonOpts {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  double eps_hat = 0;
  std::string hopset = "identity";
  int d = 0;
  int cap_const = 8;
  int threads = 0;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--input", o.input, "graph file: 'n m' header, then 'u v w' lines (.gz ok)")
      ->required();
  cmd->add_option("--seed", o.seed, "root seed; all randomness derives from it");
  cmd->add_option("--eps-hat", o.eps_hat, "accuracy knob; 0 picks 1/ceil(log2 n)^2")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--hopset", o.hopset, "hopset strategy")
      ->check(CLI::IsMember({"identity", "shortcut"}));
  cmd->add_option("--d", o.d,
                  "hop budget; 0 picks the default (also the hop bound of "
                  "solve --algo ksdp/connectivity)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--cap-const", o.cap_const, "oracle iteration cap constant")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", o.threads, "worker cap; 0 = MBFKIT_THREADS or hardware")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--output", o.output, "output file (embed: output prefix); default stdout");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
}

EmbedConfig to_config(const CommonOpts& o) {
  EmbedConfig cfg;
  cfg.seed = o.seed;
  cfg.eps_hat = o.eps_hat;
  cfg.d = o.d;
  cfg.hopset = o.hopset == "shortcut" ? HopsetStrategy::cluster : HopsetStrategy::identity;
  cfg.cap_const = o.cap_const;
  return cfg;
}

/// Stdout, or the named file opened in binary mode so output bytes never
/// depend on the platform's text-mode behavior.
class Sink {
 public:
  std::ostream& open(const std::string& path) {
    if (path.empty()) return std::cout;
    file_.open(path, std::ios::binary);
    if (!file_) throw ParseError(path + ": cannot open for writing");
    return file_;
  }

 private:
  std::ofstream file_;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << content;
}

std::string json_num(Dist x) { return x == kInf ? "null" : format_double(x); }

int run_embed(const CommonOpts& o, int samples, bool stats) {
  WeightedGraph g = load_graph(o.input);
  EmbedConfig cfg = to_config(o);
  nlohmann::json agg;
  agg["samples"] = nlohmann::json::array();
  double max_mean_stretch = 0;
  std::size_t domination_violations = 0;
  for (int s = 0; s < samples; ++s) {
    cfg.sample_index = s;
    LePipeline pipe = compute_le_lists(g, cfg);
    FrtTree tree = build_frt_tree(pipe.lists, pipe.order, pipe.min_pair_distance,
                                  pipe.max_pair_distance);
    {
      std::ostringstream lists;
      write_le_lists_jsonl(lists, pipe.lists);
      write_file(o.output + ".lelists." + std::to_string(s) + ".jsonl", lists.str());
      std::ostringstream tsv;
      write_tree_tsv(tsv, tree);
      write_file(o.output + ".tree." + std::to_string(s) + ".tsv", tsv.str());
    }
    std::size_t total_len = 0, max_len = 0;
    for (const auto& l : pipe.lists) {
      total_len += l.entries.size();
      max_len = std::max(max_len, l.entries.size());
    }
    nlohmann::json sj;
    sj["sample"] = s;
    sj["iterations"] = pipe.iterations;
    sj["eps_hat"] = pipe.eps_hat;
    sj["d"] = pipe.d;
    sj["lambda_max"] = pipe.sim.levels.lambda_max;
    sj["hopset_fell_back"] = pipe.hopset_fell_back;
    sj["mean_list_length"] = static_cast<double>(total_len) / g.node_count();
    sj["max_list_length"] = max_len;
    if (stats) {
      StretchReport rep = stretch_report(tree, g);
      sj["mean_stretch"] = rep.mean_stretch;
      sj["max_stretch"] = rep.max_stretch;
      sj["domination_violations"] = rep.dominated_pairs;
      max_mean_stretch = std::max(max_mean_stretch, rep.mean_stretch);
      domination_violations += rep.dominated_pairs;
    }
    agg["samples"].push_back(std::move(sj));
  }
  if (stats) {
    agg["max_mean_stretch"] = max_mean_stretch;
    agg["domination_violations"] = domination_violations;
  }
  write_file(o.output + ".stats.json", agg.dump(2) + "\n");
  return 0;
}

int run_metric(const CommonOpts& o) {
  WeightedGraph g = load_graph(o.input);
  ApproxMetric m = approx_metric(g, to_config(o));
  Sink sink;
  std::ostream& os = sink.open(o.output);
  if (o.format == "tsv") {
    os << "# n=" << m.n << " eps_hat=" << format_double(m.eps_hat)
       << " lambda_max=" << m.lambda_max
       << " bound_factor=" << format_double(m.bound_factor) << "\n";
    for (NodeId u = 0; u < m.n; ++u)
      for (NodeId v = u + 1; v < m.n; ++v)
        os << u << "\t" << v << "\t" << format_double(m.at(u, v)) << "\n";
    return 0;
  }
  os << "{\"n\":" << m.n << ",\"eps_hat\":" << format_double(m.eps_hat)
     << ",\"lambda_max\":" << m.lambda_max
     << ",\"bound_factor\":" << json_num(m.bound_factor) << ",\"table\":[";
  for (NodeId u = 0; u < m.n; ++u) {
    if (u) os << ",";
    os << "[";
    for (NodeId v = 0; v < m.n; ++v) {
      if (v) os << ",";
      os << format_double(m.at(u, v));
    }
    os << "]";
  }
  os << "]}\n";
  return 0;
}

int run_lelists(const CommonOpts& o) {
  WeightedGraph g = load_graph(o.input);
  LePipeline pipe = compute_le_lists(g, to_config(o));
  Sink sink;
  std::ostream& os = sink.open(o.output);
  if (o.format == "tsv") {
    os << "# node\tdistance\tentry\n";
    for (std::size_t v = 0; v < pipe.lists.size(); ++v)
      for (const auto& e : pipe.lists[v].entries)
        os << v << "\t" << format_double(e.distance) << "\t" << e.node << "\n";
    return 0;
  }
  write_le_lists_jsonl(os, pipe.lists);
  return 0;
}

int run_kmedian(const CommonOpts& o, NodeId k) {
  WeightedGraph g = load_graph(o.input);
  KMedianResult r = kmedian(g, k, to_config(o));
  Sink sink;
  std::ostream& os = sink.open(o.output);
  if (o.format == "tsv") {
    os << "# objective\t" << format_double(r.objective) << "\n";
    for (NodeId f : r.facilities) os << f << "\n";
    return 0;
  }
  write_kmedian_json(os, r);
  return 0;
}

int run_bab(const CommonOpts& o, const std::string& instance) {
  WeightedGraph g = load_graph(o.input);
  BabInstanceFile inst = load_bab_instance(instance);
  BabResult r = buy_at_bulk(g, inst.demands, inst.cables, to_config(o));
  Sink sink;
  std::ostream& os = sink.open(o.output);
  if (o.format == "tsv") {
    os << "# cost\t" << format_double(r.cost) << "\n";
    for (const auto& e : r.installs)
      os << e.u << "\t" << e.v << "\t" << e.cable << "\t" << e.multiplicity << "\n";
    return 0;
  }
  write_bab_json(os, r);
  return 0;
}

int run_solve(const CommonOpts& o, const std::string& algo, NodeId source, std::size_t k,
              bool distinct) {
  WeightedGraph g = load_graph(o.input);
  NodeId n = g.node_count();
  AdjacencyOperator a{&g, 1.0};
  bool tsv = o.format == "tsv";
  Sink sink;
  std::ostream& os = sink.open(o.output);

  if (algo == "apsp" || algo == "kssp") {
    auto res = algo == "apsp" ? mbf_run(make_apsp(n), a) : mbf_run(make_kssp(n, k), a);
    if (tsv) {
      os << "# node\tdistance\tsource\n";
      for (NodeId v = 0; v < n; ++v)
        for (const auto& e : res.state[v].entries)
          os << v << "\t" << format_double(e.value) << "\t" << e.node << "\n";
      return 0;
    }
    for (NodeId v = 0; v < n; ++v) {
      os << "{\"node\":" << v << ",\"list\":[";
      bool first = true;
      for (const auto& e : res.state[v].entries) {
        if (!first) os << ",";
        first = false;
        os << "[" << format_double(e.value) << "," << e.node << "]";
      }
      os << "]}\n";
    }
    return 0;
  }
  if (algo == "sssp") {
    auto res = mbf_run(make_sssp(n, source), a);
    if (tsv) {
      os << "# node\tdistance\n";
      for (NodeId v = 0; v < n; ++v)
        os << v << "\t" << format_double(res.state[v]) << "\n";
      return 0;
    }
    for (NodeId v = 0; v < n; ++v)
      os << "{\"node\":" << v << ",\"dist\":" << json_num(res.state[v]) << "}\n";
    return 0;
  }
  if (algo == "widest") {
    auto res = mbf_run(make_sswp(n, source), a);
    if (tsv) {
      os << "# node\twidth\n";
      for (NodeId v = 0; v < n; ++v)
        os << v << "\t" << format_double(res.state[v]) << "\n";
      return 0;
    }
    for (NodeId v = 0; v < n; ++v)
      os << "{\"node\":" << v << ",\"width\":" << json_num(res.state[v]) << "}\n";
    return 0;
  }
  if (algo == "ksdp") {
    int h = o.d > 0 ? o.d : static_cast<int>(n);
    auto res = mbf_run(make_ksdp(n, source, k, distinct, h), a);
    if (tsv) {
      os << "# node\tweight\tpath\n";
      for (NodeId v = 0; v < n; ++v) {
        for (const auto& [path, w] : res.state[v].paths) {
          os << v << "\t" << format_double(w) << "\t";
          for (std::size_t i = 0; i < path.size(); ++i)
            os << (i ? "," : "") << path[i];
          os << "\n";
        }
      }
      return 0;
    }
    for (NodeId v = 0; v < n; ++v) {
      os << "{\"node\":" << v << ",\"paths\":[";
      bool first = true;
      for (const auto& [path, w] : res.state[v].paths) {
        if (!first) os << ",";
        first = false;
        os << "{\"weight\":" << format_double(w) << ",\"nodes\":[";
        for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << path[i];
        os << "]}";
      }
      os << "]}\n";
    }
    return 0;
  }
  // connectivity
  int h = o.d > 0 ? o.d : 0;
  auto res = mbf_run(make_connectivity(n, h), a);
  if (tsv) {
    os << "# node\treachable\n";
    for (NodeId v = 0; v < n; ++v) {
      os << v << "\t";
      const auto& ns = res.state[v].nodes;
      for (std::size_t i = 0; i < ns.size(); ++i) os << (i ? "," : "") << ns[i];
      os << "\n";
    }
    return 0;
  }
  for (NodeId v = 0; v < n; ++v) {
    os << "{\"node\":" << v << ",\"reachable\":[";
    const auto& ns = res.state[v].nodes;
    for (std::size_t i = 0; i < ns.size(); ++i) os << (i ? "," : "") << ns[i];
    os << "]}\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic path computations and low-stretch tree embeddings"};
  app.require_subcommand(1);

  CommonOpts o;
  int samples = 1;
  bool stats = false;
  NodeId k_facilities = 0;
  std::string bab_instance;
  std::string algo;
  NodeId source = 0;
  std::size_t k_paths = 1;
  bool distinct = false;

  CLI::App* embed = app.add_subcommand("embed", "sample tree embeddings");
  add_common(embed, o);
  embed->add_option("--samples", samples, "number of trees to sample")
      ->check(CLI::PositiveNumber);
  embed->add_flag("--stats", stats, "add stretch statistics (all-pairs work)");
  embed->get_option("--output")->required();

  CLI::App* metric = app.add_subcommand("metric", "tabulate the approximate metric");
  add_common(metric, o);

  CLI::App* lelists = app.add_subcommand("lelists", "compute least-element lists");
  add_common(lelists, o);

  CLI::App* kmed = app.add_subcommand("kmedian", "approximate k-median");
  add_common(kmed, o);
  kmed->add_option("--k", k_facilities, "number of facilities")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* bab = app.add_subcommand("bab", "buy-at-bulk network design");
  add_common(bab, o);
  bab->add_option("--instance", bab_instance, "demands and cable types (JSON)")->required();

  CLI::App* solve = app.add_subcommand("solve", "run one algebraic instance directly");
  add_common(solve, o);
  solve->add_option("--algo", algo, "instance to run")
      ->required()
      ->check(CLI::IsMember({"apsp", "sssp", "kssp", "widest", "ksdp", "connectivity"}));
  solve->add_option("--source", source, "source node (sssp, widest) or target (ksdp)");
  solve->add_option("--k", k_paths, "list size for kssp and ksdp")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--distinct", distinct, "ksdp: distinct path weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (o.threads > 0) set_thread_override(o.threads);
    if (embed->parsed()) return run_embed(o, samples, stats);
    if (metric->parsed()) return run_metric(o);
    if (lelists->parsed()) return run_lelists(o);
    if (kmed->parsed()) return run_kmedian(o, k_facilities);
    if (bab->parsed()) return run_bab(o, bab_instance);
    if (solve->parsed()) return run_solve(o, algo, source, k_paths, distinct);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceErrorBase& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
