#pragma once

#include <cstdint>
#include <string>

#include "mbd/hypergraph.hpp"
#include "mbd/position.hpp"

namespace mbd {

/// A role in a short (bounded-move) game query.
enum class Role { Maker, Breaker, Dominator, Staller };

std::string to_string(Role r);

/// Bounded-move query: does `role` achieve its goal using at most `budget`
/// of its own moves, the opponent playing adversarially?
struct ShortQuery {
    Role role;
    int budget = 0;
    Role first_player; // Maker/Breaker on hypergraphs, Dominator/Staller on graphs
};

struct SearchConfig {
    /// Skip move u when an unclaimed v with N[u] subseteq N[v] exists
    /// (playing v is at least as good for either player). Only used by the
    /// unbounded solver.
    bool prune_dominated_moves = true;
    /// Explore one representative per class of unclaimed mutual twins; the
    /// twin swap is a board automorphism, so this is safe in every variant.
    bool prune_twins = true;
    /// Memoization entry budget; on exhaustion positions are recomputed.
    std::size_t memo_capacity = std::size_t(1) << 22;
    /// Hard cap on expanded nodes; exceeding it throws ResourceError rather
    /// than returning an approximation.
    std::uint64_t node_limit = 50'000'000;
};

/// The player with a winning strategy from p (p.to_move moves next).
Player solve_position(const Position& p, const SearchConfig& cfg = {});

/// Runs solve_position with each player moving first and maps the pair of
/// winners to {D, N, S}. "Second player wins both" raises InconsistencyError.
Outcome outcome(const Graph& g, const std::vector<int>& dominator = {},
                const std::vector<int>& staller = {}, const SearchConfig& cfg = {});

/// Short-game queries. Budgets above the vertex count clamp to it (the extra
/// budget is unusable). Roles must match the arena kind.
bool short_game_win(const Graph& g, const ShortQuery& q, const SearchConfig& cfg = {});
bool short_game_win(const Hypergraph& h, const ShortQuery& q, const SearchConfig& cfg = {});

/// An unclaimed vertex whose claim preserves the mover's win when the mover
/// wins; otherwise an unclaimed vertex minimizing the opponent's winning
/// replies. Ties break to the lowest index. Terminal positions are a state
/// error.
int best_move(const Position& p, const SearchConfig& cfg = {});

} // namespace mbd
