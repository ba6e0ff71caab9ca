#pragma once

#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

enum class Player { Dominator, Staller };

Player opponent(Player p);
std::string to_string(Player p);

/// Three-valued outcome of a position: D = Dominator wins moving first or
/// second, S = Staller wins moving first or second, N = the next player to
/// move wins. "Second player wins both" cannot occur.
enum class Outcome { D, N, S };

std::string to_string(Outcome o);

/// A state of the Maker-Breaker domination game: the arena plus the two
/// disjoint claimed sets and whose turn it is.
struct Position {
    Graph graph;
    std::vector<int> dominator; // sorted, disjoint from staller
    std::vector<int> staller;   // sorted
    Player to_move = Player::Dominator;

    /// Throws InputError on overlap, duplicates or out-of-range claims.
    void validate() const;

    bool is_claimed(int v) const;
    std::vector<int> unclaimed() const;
};

Position make_position(Graph g, std::vector<int> dominator = {}, std::vector<int> staller = {},
                       Player to_move = Player::Dominator);

} // namespace mbd
