#ifndef TGLAB_WL_HPP_
#define TGLAB_WL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "tglab/coloring.hpp"
#include "tglab/graph.hpp"
#include "tglab/interner.hpp"

namespace tglab::wl {

enum class Variant {
  kStatic,         // plain refinement on a one-step graph
  kTimeAnd,        // per-step refinement of attributes and of carried state
  kGraphThenTime,  // per-step refinement of attributes, carried state unrefined
  kTimeThen,       // sequence-seeded refinement on the aggregated graph
  kScheduled,      // layer-scheduled emulation of the time-and update
};

std::string_view variant_name(Variant v);
Variant variant_from_name(std::string_view name);

struct WlConfig {
  Variant variant = Variant::kTimeAnd;
  // Refinement rounds per time step for the stepwise variants.
  int layers = 2;
  // Total rounds for the static and time-then variants; defaults to
  // horizon * layers.
  std::optional<int> iterations;
};

// Plain color refinement seeded from node attributes. Each round recolors a
// node by its previous color and the multiset of (neighbor color, edge color)
// pairs over in-neighbors; undirected graphs store both directions, so their
// neighborhoods are symmetric.
Coloring static_wl(const SnapshotGraph& g, int iters, Session& session);

// Runs cfg.layers refinement rounds per step on the step's snapshot, once
// seeded from the step's attributes and once from the carried state, then
// merges the two colors into the next carried state.
Coloring time_and_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session);

// Like time_and_wl but the carried state is merged in unrefined, so state
// only passes through node-local updates between steps.
Coloring graph_then_time_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session);

// Seeds each node with its interned full attribute sequence, colors each
// aggregated edge with its interned full sequence (Nulls included), and
// refines on the aggregated adjacency.
Coloring time_then_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session);

// Single-pass schedule over horizon * layers rounds that advances an input
// color and a state color per node through one snapshot block at a time,
// reproducing the time-and partition exactly.
Coloring scheduled_wl(const TemporalGraph& g, const WlConfig& cfg, Session& session);

// Dispatches on cfg.variant. The static variant requires horizon 1.
Coloring run_variant(const TemporalGraph& g, const WlConfig& cfg, Session& session);

// Joint run on the disjoint union; true when the two parts end with different
// whole-graph color histograms.
bool distinguish(const TemporalGraph& a, const TemporalGraph& b, const WlConfig& cfg);

// Ascending copy of the colors: the whole-graph histogram in canonical form.
std::vector<ColorId> sorted_colors(const std::vector<ColorId>& colors);

// FNV-1a digest of the canonical histogram. Digests are comparable between
// colorings from the same session.
std::uint64_t histogram_digest(const std::vector<ColorId>& colors);
std::string digest_hex(std::uint64_t digest);

// {"session":..,"variant":..,"colors":[..],"histogram":{color:count}}
std::string coloring_to_json(const Coloring& c, Variant variant);

}  // namespace tglab::wl

#endif  // TGLAB_WL_HPP_
