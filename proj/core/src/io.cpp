#include "mbfkit/io.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace mbfkit {

namespace {

std::string read_all(const std::string& path) {
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw ParseError(path + ": cannot open");
    std::string out;
    char buf[1 << 16];
    int got;
    while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, got);
    bool bad = got < 0;
    gzclose(f);
    if (bad) throw ParseError(path + ": gzip inflation failed");
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void fail(const std::string& path, int lineno, const std::string& what) {
  std::ostringstream msg;
  msg << path << ":" << lineno << ": " << what;
  throw ParseError(msg.str());
}

}  // namespace

WeightedGraph load_graph(const std::string& path) {
  std::istringstream text(read_all(path));
  std::string line;
  int lineno = 0;
  bool have_header = false;
  unsigned long n = 0, m = 0;
  std::vector<EdgeTriple> edges;

  while (std::getline(text, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> n)) continue;  // blank or comment-only line
      if (!(ls >> m)) fail(path, lineno, "header needs a node and an edge count");
      std::string extra;
      if (ls >> extra) fail(path, lineno, "unexpected token '" + extra + "' after header");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    unsigned long u, v;
    double w;
    if (!(ls >> u)) continue;
    if (!(ls >> v >> w)) fail(path, lineno, "edge lines are 'u v w'");
    std::string extra;
    if (ls >> extra) fail(path, lineno, "unexpected token '" + extra + "' after edge");
    if (u >= n || v >= n) fail(path, lineno, "endpoint outside [0, n)");
    if (edges.size() == m) fail(path, lineno, "more edges than the header announced");
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
  }
  if (!have_header) fail(path, lineno, "missing 'n m' header");
  if (edges.size() != m) {
    std::ostringstream msg;
    msg << "header announced " << m << " edges, found " << edges.size();
    fail(path, lineno, msg.str());
  }
  try {
    return WeightedGraph(static_cast<NodeId>(n), edges);
  } catch (const InvariantError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_le_lists_jsonl(std::ostream& os, const std::vector<LeList>& lists) {
  for (std::size_t v = 0; v < lists.size(); ++v) {
    os << "{\"node\":" << v << ",\"list\":[";
    const auto& es = lists[v].entries;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (i) os << ",";
      os << "[" << format_double(es[i].distance) << "," << es[i].node << "]";
    }
    os << "]}\n";
  }
}

void write_tree_tsv(std::ostream& os, const FrtTree& t) {
  os << "# node\tparent\tweight\tleaf\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    os << i << "\t" << nd.parent << "\t" << format_double(nd.parent_weight) << "\t"
       << nd.leaf_graph_node << "\n";
  }
}

void write_kmedian_json(std::ostream& os, const KMedianResult& r) {
  nlohmann::json j;
  j["facilities"] = r.facilities;
  j["objective"] = r.objective;
  os << j.dump() << "\n";
}

void write_bab_json(std::ostream& os, const BabResult& r) {
  nlohmann::json j;
  j["cost"] = r.cost;
  j["edges"] = nlohmann::json::array();
  for (const auto& e : r.installs) {
    j["edges"].push_back(
        {{"u", e.u}, {"v", e.v}, {"cable", e.cable}, {"multiplicity", e.multiplicity}});
  }
  os << j.dump() << "\n";
}

BabInstanceFile load_bab_instance(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_all(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  BabInstanceFile out;
  try {
    for (const auto& d : j.at("demands")) {
      if (!d.is_array() || d.size() != 3)
        throw ParseError(path + ": demands are [s, t, amount] triples");
      out.demands.push_back({d[0].get<NodeId>(), d[1].get<NodeId>(), d[2].get<double>()});
    }
    for (const auto& c : j.at("cables")) {
      if (!c.is_array() || c.size() != 2)
        throw ParseError(path + ": cables are [capacity, cost] pairs");
      out.cables.push_back({c[0].get<double>(), c[1].get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return out;
}

}  // namespace mbfkit
