#pragma once

#include <string>

#include <json.hpp>

#include "mbd/decomposition.hpp"
#include "mbd/gadgets.hpp"
#include "mbd/graph.hpp"
#include "mbd/hypergraph.hpp"
#include "mbd/rewrite.hpp"

namespace mbd {

// Graph JSON: {"n": int, "edges": [[u,v],...], "labels": [...]?}
// Hypergraph JSON: {"n": int, "edges": [[...],...]}
// Edge-list text: first line "n m", then m lines "u v".
// All three round-trip exactly (edges sorted canonically).

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const DecompNode& node);
DecompNode decomposition_from_json(const nlohmann::json& j);

nlohmann::json trace_step_to_json(const TraceStep& step);
std::string trace_to_json_lines(const ReductionTrace& trace);

nlohmann::json gadget_to_json(const GadgetInstance& instance);

/// Loads a graph file, sniffing JSON ('{' first) vs edge-list text.
Graph load_graph_file(const std::string& path);
Hypergraph load_hypergraph_file(const std::string& path);
DecompNode load_decomposition_file(const std::string& path);

} // namespace mbd
