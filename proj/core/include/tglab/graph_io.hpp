#ifndef TGLAB_GRAPH_IO_HPP_
#define TGLAB_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "tglab/graph.hpp"

namespace tglab {

// Serializes to the versioned JSON graph format. Edges are emitted sorted by
// (u, v); undirected graphs list each edge once with u < v.
std::string temporal_graph_to_json(const TemporalGraph& g);

// Parses and structurally validates a graph document. Throws
// InvalidInputError naming the parse location or the offending field.
TemporalGraph temporal_graph_from_json(std::string_view text);

void save_temporal_graph(const TemporalGraph& g, const std::filesystem::path& file);
TemporalGraph load_temporal_graph(const std::filesystem::path& file);

// Reads a whole file into a string; throws InvalidInputError when unreadable.
std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view text);

}  // namespace tglab

#endif  // TGLAB_GRAPH_IO_HPP_
