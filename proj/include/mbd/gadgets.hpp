#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/hypergraph.hpp"

namespace mbd {

/// A constructed reduction instance: the output graph and a correspondence
/// from source objects ("vertex:3", "hyperedge:1", "universal") to output
/// vertices. Every output vertex appears in exactly one entry.
struct GadgetInstance {
    Graph graph;
    std::vector<std::pair<std::string, std::vector<int>>> correspondence;
    int parameter_k = -1;
};

/// Clique over the hypergraph's vertices plus k+2 fresh vertices per
/// hyperedge, each adjacent to exactly the clique vertices of the edge's
/// members. Maker wins H within k moves iff Staller isolates a vertex here
/// within k+1 moves (same first-player side). Isolated hypergraph vertices
/// are rejected.
GadgetInstance staller_hardness_gadget(const Hypergraph& h, int k);

/// Vertex duplication: x_i y_i matching edges plus, per edge v_i v_j, the
/// four cross pairs. A size-k dominating set of g gives Dominator a k-move
/// pairing win on the output.
GadgetInstance dominator_hardness_gadget(const Graph& g);

/// g plus one universal vertex; the output has domination number 1.
GadgetInstance universal_vertex_gadget(const Graph& g);

} // namespace mbd
