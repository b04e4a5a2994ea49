#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mban/digraph.hpp"

namespace mban {

/// Text encodings of a Digraph.
///
///  - Json:  {"format":"mban-graph-v1","n":N,"arcs":[[u,v],...]}
///  - Dot:   digraph { u -> v; ... } (nodes without any arc listed as `k;`)
///  - Edges: first token N, then one "u v" pair per line; '#' starts a comment
///
/// Every writer emits arcs sorted by (u, v), so equal graphs serialize to
/// identical bytes.
enum class GraphFormat { Json, Dot, Edges };

std::optional<GraphFormat> graph_format_from_name(std::string_view name);
std::string_view graph_format_name(GraphFormat format);

std::string format_graph(const Digraph& g, GraphFormat format);

/// Parses any of the three encodings, detected from the first
/// non-whitespace token. Throws ParseError with a line:column location.
Digraph parse_graph(std::string_view text);
Digraph parse_graph(std::string_view text, GraphFormat format);

}  // namespace mban
