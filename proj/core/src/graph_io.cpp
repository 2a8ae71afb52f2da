#include "tglab/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_util.hpp"
#include "tglab/errors.hpp"

namespace tglab {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

const json& require_field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw InvalidInputError(where + ": missing field \"" + name + "\"");
  }
  return *it;
}

int require_int(const json& j, const char* name, const std::string& where) {
  const json& field = require_field(j, name, where);
  if (!field.is_number_integer()) {
    throw InvalidInputError(where + ": field \"" + name + "\" must be an integer");
  }
  return field.get<int>();
}

}  // namespace

std::string temporal_graph_to_json(const TemporalGraph& g) {
  ordered_json j;
  j["version"] = kFormatVersion;
  j["directed"] = g.directed();
  j["num_nodes"] = g.num_nodes();
  j["horizon"] = g.horizon();
  ordered_json node_seqs = ordered_json::array();
  for (int i = 0; i < g.num_nodes(); ++i) {
    ordered_json seq = ordered_json::array();
    for (const AttrValue& v : g.node_seq(i)) seq.push_back(attr_to_json(v));
    node_seqs.push_back(std::move(seq));
  }
  j["node_seqs"] = std::move(node_seqs);
  ordered_json edges = ordered_json::array();
  for (const auto& [key, seq] : g.edges()) {
    if (!g.directed() && key.first > key.second) continue;
    ordered_json edge;
    edge["u"] = key.first;
    edge["v"] = key.second;
    ordered_json attr_seq = ordered_json::array();
    for (const AttrValue& v : seq) attr_seq.push_back(attr_to_json(v));
    edge["seq"] = std::move(attr_seq);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

TemporalGraph temporal_graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                            e.what());
  }
  if (!doc.is_object()) throw InvalidInputError("graph document must be a JSON object");
  const int version = require_int(doc, "version", "graph");
  if (version != kFormatVersion) {
    throw InvalidInputError("unsupported graph format version " + std::to_string(version));
  }
  const json& directed_field = require_field(doc, "directed", "graph");
  if (!directed_field.is_boolean()) {
    throw InvalidInputError("graph: field \"directed\" must be a boolean");
  }
  const bool directed = directed_field.get<bool>();
  const int num_nodes = require_int(doc, "num_nodes", "graph");
  const int horizon = require_int(doc, "horizon", "graph");
  if (num_nodes < 0) throw InvalidInputError("graph: num_nodes must be non-negative");
  if (horizon < 1) throw InvalidInputError("graph: horizon must be at least 1");

  TemporalGraph g(num_nodes, horizon, directed);

  const json& node_seqs = require_field(doc, "node_seqs", "graph");
  if (!node_seqs.is_array() || static_cast<int>(node_seqs.size()) != num_nodes) {
    throw InvalidInputError("graph: node_seqs must be an array of num_nodes sequences");
  }
  for (int i = 0; i < num_nodes; ++i) {
    const json& seq = node_seqs[i];
    const std::string where = "node " + std::to_string(i);
    if (!seq.is_array() || static_cast<int>(seq.size()) != horizon) {
      throw InvalidInputError(where + ": attribute sequence must have horizon entries");
    }
    for (int t = 1; t <= horizon; ++t) {
      AttrValue v = attr_from_json(seq[t - 1], where);
      if (!v.is_null()) g.set_node_attr(i, t, std::move(v));
    }
  }

  const json& edges = require_field(doc, "edges", "graph");
  if (!edges.is_array()) throw InvalidInputError("graph: edges must be an array");
  std::set<EdgeKey> seen;
  for (const json& edge : edges) {
    if (!edge.is_object()) throw InvalidInputError("graph: each edge must be an object");
    const int u = require_int(edge, "u", "edge");
    const int v = require_int(edge, "v", "edge");
    const std::string where = "edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u < 0 || u >= num_nodes || v < 0 || v >= num_nodes) {
      throw InvalidInputError(where + ": endpoint out of range");
    }
    if (u == v) throw InvalidInputError(where + ": self-loop");
    const EdgeKey key = directed ? EdgeKey{u, v} : EdgeKey{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) throw InvalidInputError(where + ": duplicate edge");
    const json& seq = require_field(edge, "seq", where);
    if (!seq.is_array() || static_cast<int>(seq.size()) != horizon) {
      throw InvalidInputError(where + ": attribute sequence must have horizon entries");
    }
    bool any_present = false;
    for (int t = 1; t <= horizon; ++t) {
      AttrValue attr = attr_from_json(seq[t - 1], where);
      if (attr.is_null()) continue;
      any_present = true;
      g.set_edge_attr(u, v, t, std::move(attr));
    }
    if (!any_present) {
      throw InvalidInputError(where + ": edge absent at every step should not be listed");
    }
  }
  return g;
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& file, std::string_view text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write file " + file.string());
  out << text;
  if (!out) throw InvalidInputError("failed while writing file " + file.string());
}

void save_temporal_graph(const TemporalGraph& g, const std::filesystem::path& file) {
  write_text_file(file, temporal_graph_to_json(g));
}

TemporalGraph load_temporal_graph(const std::filesystem::path& file) {
  try {
    return temporal_graph_from_json(read_text_file(file));
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(file.string() + ": " + e.what());
  }
}

}  // namespace tglab
