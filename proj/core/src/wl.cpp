#include "tglab/wl.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <nlohmann/json.hpp>

#include "tglab/errors.hpp"

namespace tglab::wl {
namespace {

// Per node, the (in-neighbor, edge color) pairs it receives messages from.
using Adjacency = std::vector<std::vector<std::pair<int, ColorId>>>;

ColorId attr_color(Interner& interner, const AttrValue& v) {
  return interner.intern(Sig().role(Role::kAttr).symbol(v));
}

std::vector<ColorId> attr_seed_colors(const TemporalGraph& g, int t, Interner& interner) {
  std::vector<ColorId> out(g.num_nodes());
  for (int i = 0; i < g.num_nodes(); ++i) {
    out[i] = attr_color(interner, g.node_attr(i, t));
  }
  return out;
}

Adjacency step_adjacency(const TemporalGraph& g, int t, Interner& interner) {
  Adjacency adj(g.num_nodes());
  for (const auto& [key, seq] : g.edges()) {
    const AttrValue& attr = seq[t - 1];
    if (attr.is_null()) continue;
    adj[key.second].emplace_back(key.first, attr_color(interner, attr));
  }
  return adj;
}

Adjacency snapshot_adjacency(const SnapshotGraph& g, Interner& interner) {
  Adjacency adj(g.num_nodes());
  for (const auto& [key, attr] : g.edges()) {
    adj[key.second].emplace_back(key.first, attr_color(interner, attr));
  }
  return adj;
}

Adjacency aggregated_adjacency(const TemporalGraph& g, Interner& interner) {
  Adjacency adj(g.num_nodes());
  for (const auto& [key, seq] : g.edges()) {
    adj[key.second].emplace_back(key.first,
                                 interner.intern(Sig().role(Role::kEdgeSeq).seq(seq)));
  }
  return adj;
}

std::vector<ColorId> refine_round(const Adjacency& adj, const std::vector<ColorId>& colors,
                                  Role role, std::uint32_t layer, Interner& interner) {
  std::vector<ColorId> out(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    std::vector<std::string> parts;
    parts.reserve(adj[i].size());
    for (const auto& [j, edge_color] : adj[i]) {
      parts.push_back(Sig::color_pair(colors[j], edge_color));
    }
    Sig sig;
    sig.role(role, layer).color(colors[i]).multiset(std::move(parts));
    out[i] = interner.intern(sig);
  }
  return out;
}

std::vector<ColorId> start_colors(int n, Interner& interner) {
  return std::vector<ColorId>(n, interner.intern(Sig().role(Role::kStart)));
}

ColorId merge_cell(Interner& interner, ColorId input, ColorId state) {
  return interner.intern(Sig().role(Role::kRnnCell).color(input).color(state));
}

void check_layers(const WlConfig& cfg) {
  if (cfg.layers < 1) throw InvalidInputError("layers must be at least 1");
  if (cfg.iterations && *cfg.iterations < 0) {
    throw InvalidInputError("iterations must be non-negative");
  }
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kStatic: return "static";
    case Variant::kTimeAnd: return "time-and";
    case Variant::kGraphThenTime: return "graph-then-time";
    case Variant::kTimeThen: return "time-then";
    case Variant::kScheduled: return "scheduled";
  }
  throw InvalidInputError("unknown variant");
}

Variant variant_from_name(std::string_view name) {
  if (name == "static") return Variant::kStatic;
  if (name == "time-and") return Variant::kTimeAnd;
  if (name == "graph-then-time") return Variant::kGraphThenTime;
  if (name == "time-then") return Variant::kTimeThen;
  if (name == "scheduled") return Variant::kScheduled;
  throw InvalidInputError(
      "unknown variant \"" + std::string(name) +
      "\"; expected static, time-and, graph-then-time, time-then or scheduled");
}

Coloring static_wl(const SnapshotGraph& g, int iters, Session& session) {
  if (iters < 0) throw InvalidInputError("iterations must be non-negative");
  Interner& interner = session.interner;
  std::vector<ColorId> colors(g.num_nodes());
  for (int i = 0; i < g.num_nodes(); ++i) {
    colors[i] = attr_color(interner, g.node_attr(i));
  }
  const Adjacency adj = snapshot_adjacency(g, interner);
  for (int l = 1; l <= iters; ++l) {
    colors = refine_round(adj, colors, Role::kGnnStatic, l, interner);
  }
  return {session.id, iters, std::move(colors)};
}

Coloring time_and_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session) {
  check_layers(cfg);
  Interner& interner = session.interner;
  std::vector<ColorId> state = start_colors(g.num_nodes(), interner);
  for (int t = 1; t <= g.horizon(); ++t) {
    const Adjacency adj = step_adjacency(g, t, interner);
    std::vector<ColorId> input = attr_seed_colors(g, t, interner);
    std::vector<ColorId> carried = state;
    for (int l = 1; l <= cfg.layers; ++l) {
      input = refine_round(adj, input, Role::kGnnIn, l, interner);
      carried = refine_round(adj, carried, Role::kGnnRec, l, interner);
    }
    for (int i = 0; i < g.num_nodes(); ++i) {
      state[i] = merge_cell(interner, input[i], carried[i]);
    }
  }
  return {session.id, g.horizon() * cfg.layers, std::move(state)};
}

Coloring graph_then_time_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session) {
  check_layers(cfg);
  Interner& interner = session.interner;
  std::vector<ColorId> state = start_colors(g.num_nodes(), interner);
  for (int t = 1; t <= g.horizon(); ++t) {
    const Adjacency adj = step_adjacency(g, t, interner);
    std::vector<ColorId> input = attr_seed_colors(g, t, interner);
    for (int l = 1; l <= cfg.layers; ++l) {
      input = refine_round(adj, input, Role::kGnnIn, l, interner);
    }
    for (int i = 0; i < g.num_nodes(); ++i) {
      state[i] = merge_cell(interner, input[i], state[i]);
    }
  }
  return {session.id, g.horizon() * cfg.layers, std::move(state)};
}

Coloring time_then_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session) {
  check_layers(cfg);
  Interner& interner = session.interner;
  const int iters = cfg.iterations.value_or(g.horizon() * cfg.layers);
  std::vector<ColorId> colors(g.num_nodes());
  for (int i = 0; i < g.num_nodes(); ++i) {
    colors[i] = interner.intern(Sig().role(Role::kNodeSeq).seq(g.node_seq(i)));
  }
  const Adjacency adj = aggregated_adjacency(g, interner);
  for (int l = 1; l <= iters; ++l) {
    colors = refine_round(adj, colors, Role::kGnnStatic, l, interner);
  }
  return {session.id, iters, std::move(colors)};
}

Coloring scheduled_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session) {
  check_layers(cfg);
  Interner& interner = session.interner;
  const int total = g.horizon() * cfg.layers;
  std::vector<ColorId> input = attr_seed_colors(g, 1, interner);
  std::vector<ColorId> state = start_colors(g.num_nodes(), interner);
  Adjacency adj;
  for (int l = 1; l <= total; ++l) {
    const int t = (l + cfg.layers - 1) / cfg.layers;
    const int block_layer = (l - 1) % cfg.layers + 1;
    if (block_layer == 1) adj = step_adjacency(g, t, interner);
    std::vector<ColorId> next_input =
        refine_round(adj, input, Role::kGnnIn, block_layer, interner);
    std::vector<ColorId> next_state =
        refine_round(adj, state, Role::kGnnRec, block_layer, interner);
    if (l % cfg.layers != 0) {
      input = std::move(next_input);
      state = std::move(next_state);
    } else {
      for (int i = 0; i < g.num_nodes(); ++i) {
        state[i] = merge_cell(interner, next_input[i], next_state[i]);
      }
      input = l < total ? attr_seed_colors(g, t + 1, interner) : std::move(next_input);
    }
  }
  return {session.id, total, std::move(state)};
}

Coloring run_variant(const TemporalGraph& g, const WlConfig& cfg, Session& session) {
  switch (cfg.variant) {
    case Variant::kStatic: {
      if (g.horizon() != 1) {
        throw InvalidInputError("static variant requires horizon 1");
      }
      check_layers(cfg);
      return static_wl(slice(g, 1), cfg.iterations.value_or(cfg.layers), session);
    }
    case Variant::kTimeAnd: return time_and_wl(g, cfg, session);
    case Variant::kGraphThenTime: return graph_then_time_wl(g, cfg, session);
    case Variant::kTimeThen: return time_then_wl(g, cfg, session);
    case Variant::kScheduled: return scheduled_wl(g, cfg, session);
  }
  throw InvalidInputError("unknown variant");
}

bool distinguish(const TemporalGraph& a, const TemporalGraph& b, const WlConfig& cfg) {
  if (a.horizon() != b.horizon()) {
    throw InvalidInputError("distinguish requires equal horizons");
  }
  const DisjointUnion u = disjoint_union(a, b);
  Session session;
  const Coloring joint = run_variant(u.graph, cfg, session);
  std::vector<ColorId> part_a, part_b;
  part_a.reserve(u.map_a.size());
  part_b.reserve(u.map_b.size());
  for (int i : u.map_a) part_a.push_back(joint.colors[i]);
  for (int i : u.map_b) part_b.push_back(joint.colors[i]);
  return sorted_colors(part_a) != sorted_colors(part_b);
}

std::vector<ColorId> sorted_colors(const std::vector<ColorId>& colors) {
  std::vector<ColorId> out = colors;
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t histogram_digest(const std::vector<ColorId>& colors) {
  const std::vector<ColorId> sorted = sorted_colors(colors);
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(sorted.size());
  for (ColorId c : sorted) mix(c);
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

std::string coloring_to_json(const Coloring& c, Variant variant) {
  nlohmann::ordered_json j;
  j["session"] = c.session_id;
  j["variant"] = std::string(variant_name(variant));
  j["colors"] = c.colors;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  std::map<ColorId, int> counts;
  for (ColorId color : c.colors) ++counts[color];
  for (const auto& [color, count] : counts) {
    hist[std::to_string(color)] = count;
  }
  j["histogram"] = std::move(hist);
  return j.dump() + "\n";
}

}  // namespace tglab::wl
