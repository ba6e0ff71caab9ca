#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mbd {

/// Simple undirected graph over dense vertex indices 0..n-1.
/// Adjacency lists are kept sorted and duplicate-free; the structure is
/// immutable once built (builders return fresh graphs).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;

    bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Sorted open neighborhood.
    const std::vector<int>& neighbors(int v) const;

    /// Inserts the undirected edge {u,v}; duplicates collapse silently,
    /// self-loops and out-of-range endpoints throw InputError.
    void add_edge(int u, int v);

    /// Edges as (u,v) pairs with u < v, sorted lexicographically.
    std::vector<std::array<int, 2>> edges() const;

    /// Induced subgraph on `vertices` (order defines the new indices).
    Graph induced(const std::vector<int>& vertices) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

    std::vector<std::string> labels; // optional display names, may be empty

private:
    std::vector<std::vector<int>> adj_;
};

Graph build_graph(int n, const std::vector<std::array<int, 2>>& edges);

/// N[v] = {v} union N(v), sorted.
std::vector<int> closed_neighborhood(const Graph& g, int v);

/// True iff every vertex is in `set` or adjacent to a member of it.
bool is_dominating(const Graph& g, const std::vector<int>& set);

/// True iff all members of m share the same neighborhood outside m.
bool is_module(const Graph& g, const std::vector<int>& m);

enum class TwinKind { True, False, Singleton };

struct TwinClass {
    std::vector<int> vertices; // sorted
    TwinKind kind;
};

/// Partition of V into maximal classes of mutually true-twin or mutually
/// false-twin vertices (no vertex has twins of both kinds, so the partition
/// is canonical). Classes are ordered by smallest member.
struct TwinPartition {
    std::vector<TwinClass> classes;
    int class_count() const { return static_cast<int>(classes.size()); }
};

TwinPartition twin_partition(const Graph& g);

enum class ComposeKind { Union, Join };

/// Disjoint copies; vertex ids of h are shifted by g.vertex_count().
/// Join additionally adds all cross edges.
Graph compose(const Graph& g, const Graph& h, ComposeKind kind);

Graph make_path(int n);
Graph make_clique(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);

/// g plus a fresh k-vertex path whose first extremity is joined to u and
/// last to v (u == v is allowed and hangs a cycle on u).
Graph attach_path(const Graph& g, int u, int v, int k);

/// g plus a fresh k-vertex path joined to u at one extremity only.
Graph attach_pending_path(const Graph& g, int u, int k);

/// g plus one new vertex adjacent to all existing vertices.
Graph add_universal_vertex(const Graph& g);

/// Erdos-Renyi G(n,p): each pair u<v in lexicographic order draws one
/// Bernoulli(p) using Rng(seed); identical arguments give identical graphs.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

struct FeedbackEdgeSet {
    int count = 0;                            // |E| - |V| + components
    std::vector<std::array<int, 2>> edges;    // non-tree edges of a spanning forest
};

FeedbackEdgeSet feedback_edge_set(const Graph& g);

struct ClusterProfile {
    bool is_cluster = false; // every component a complete graph
    int isolated_count = 0;  // number of 1-vertex components
};

ClusterProfile cluster_profile(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

} // namespace mbd
