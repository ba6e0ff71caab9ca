#pragma once

#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

/// Arena of a generic Maker-Breaker positional game. Hyperedges are stored
/// sorted and deduplicated so hypergraph equality is syntactic.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges; // each sorted; list sorted lexicographically

    bool operator==(const Hypergraph& other) const = default;
};

/// Validates membership and rejects empty hyperedges (an empty edge would
/// make Maker win trivially and Breaker's game unwinnable). Isolated
/// vertices are accepted; they are irrelevant to both win conditions.
Hypergraph build_hypergraph(int n, std::vector<std::vector<int>> edges);

/// The closed-neighborhood hypergraph H_N(G): one hyperedge N[x] per vertex,
/// duplicates collapsed. Staller's win condition on G equals Maker's on this
/// hypergraph.
Hypergraph neighborhood_hypergraph(const Graph& g);

enum class WinStatus { MakerWon, BreakerWon, Undecided };

/// MakerWon iff some hyperedge is contained in maker_set; BreakerWon iff
/// breaker_set intersects every hyperedge. Overlapping sets are an input
/// error; a state satisfying both conditions is unreachable in play and
/// reported as an inconsistency.
WinStatus win_check(const Hypergraph& h, const std::vector<int>& maker_set,
                    const std::vector<int>& breaker_set);

} // namespace mbd
