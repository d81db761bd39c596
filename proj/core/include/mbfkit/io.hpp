#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mbfkit/buyatbulk.hpp"
#include "mbfkit/frt.hpp"
#include "mbfkit/kmedian.hpp"

namespace mbfkit {

/// Reads a whitespace graph file: an "n m" header line, then m lines
/// "u v w" with 0-based endpoints and a positive weight. '#' starts a
/// comment. Files ending in .gz are inflated transparently.
WeightedGraph load_graph(const std::string& path);

/// %.17g, enough digits to round-trip a double exactly.
std::string format_double(double x);

/// One JSON object per node, in id order: {"node":id,"list":[[dist,id],...]}.
void write_le_lists_jsonl(std::ostream& os, const std::vector<LeList>& lists);

/// One row per tree node: index, parent index (-1 at the root), parent edge
/// weight, leaf graph id (-1 for internal nodes).
void write_tree_tsv(std::ostream& os, const FrtTree& t);

void write_kmedian_json(std::ostream& os, const KMedianResult& r);
void write_bab_json(std::ostream& os, const BabResult& r);

struct BabInstanceFile {
  std::vector<Demand> demands;
  std::vector<CableType> cables;
};

/// JSON file {"demands":[[s,t,amount],...],"cables":[[capacity,cost],...]}.
BabInstanceFile load_bab_instance(const std::string& path);

}  // namespace mbfkit
