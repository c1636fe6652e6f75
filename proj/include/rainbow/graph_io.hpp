#pragma once

#include <iosfwd>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

// Text format, one record per line:
//   ecg <n> <palette_size>
//   e <u> <v> <c>
// The JSON alternative mirrors the same fields. Both load paths rebuild the
// graph through EdgeColoredGraph::build, so the proper-coloring invariant is
// enforced on every load.

std::string graph_to_text(const EdgeColoredGraph& g);
EdgeColoredGraph graph_from_text(std::istream& in);
EdgeColoredGraph graph_from_text(const std::string& text);

std::string graph_to_json(const EdgeColoredGraph& g);
EdgeColoredGraph graph_from_json(const std::string& text);

// Dispatches on leading '{' for JSON, otherwise text format.
EdgeColoredGraph load_graph_file(const std::string& path);
void save_graph_file(const EdgeColoredGraph& g, const std::string& path, bool json = false);

} // namespace rainbow
