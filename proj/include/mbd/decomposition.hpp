#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

/// Node of a decomposition tree. Modular decompositions use Leaf / Union /
/// Join / Substitution; primeval-style trees for the P4-fewness algorithm
/// additionally use Spider / Separable / Small. Vertex ids always refer to
/// the decomposed graph.
struct DecompNode {
    enum class Kind { Leaf, Union, Join, Substitution, Spider, Separable, Small };

    Kind kind = Kind::Leaf;
    int vertex = -1;                 // Leaf
    std::vector<DecompNode> children; // Union/Join (>=2), Substitution (quotient order),
                                      // Spider/Separable (0 or 1: the R / inner subtree)
    Graph quotient;                  // Substitution: prime quotient, children in vertex order
    std::vector<int> clique;         // Spider: C, paired with stable by index
    std::vector<int> stable;         // Spider: S
    bool thin = true;                // Spider flavor
    std::vector<int> h1, h2;         // Separable: joined / anticomplete halves
    std::vector<int> small_vertices; // Small: explicit member list (<= q)

    /// Sorted vertex ids covered by this subtree.
    std::vector<int> covered() const;
};

/// Modular decomposition via naive refinement: union/join splits where the
/// graph or complement is disconnected, otherwise the prime partition found
/// by pairwise module closures. Quotients of substitution nodes are prime.
DecompNode modular_decomposition(const Graph& g);

/// Largest substitution quotient order in the tree (0 when none).
int decomposition_width(const DecompNode& node);

/// Rebuilds a graph from a Leaf/Union/Join/Substitution tree; the result has
/// the same vertex ids as the decomposed graph. Throws InputError on node
/// kinds whose edges are not determined by the tree alone.
Graph reconstruct(const DecompNode& node, int vertex_count);

/// Structural validation of a (possibly primeval-style) tree against g:
/// coverage, disjointness, and each node kind's adjacency pattern. q < 0
/// disables the size caps on Small/Separable nodes.
void validate_decomposition(const DecompNode& node, const Graph& g, int q = -1);

struct SpiderPartition {
    std::vector<int> r;
    std::vector<int> c; // clique, c[i] paired with s[i]
    std::vector<int> s; // stable set
    bool thin = true;
};

/// The unique spider partition of g if one exists. Thin spiders are detected
/// directly (the stable side is the leaf set); thick spiders are thin
/// spiders of the complement with the roles swapped. For |C| = 2 the two
/// flavors coincide and the partition is reported as thin.
std::optional<SpiderPartition> spider_detect(const Graph& g);

Graph complement_graph(const Graph& g);

} // namespace mbd
