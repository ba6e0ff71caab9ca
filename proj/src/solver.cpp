#include "mbd/solver.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "mbd/errors.hpp"

namespace mbd {

std::string to_string(Role r) {
    switch (r) {
        case Role::Maker: return "Maker";
        case Role::Breaker: return "Breaker";
        case Role::Dominator: return "Dominator";
        case Role::Staller: return "Staller";
    }
    return "?";
}

namespace {

// States are memoized by the ternary claim word sum(t_v * 3^v) with
// t_v in {unclaimed=0, first-side=1, second-side=2}; n <= 40 keeps the word
// inside 64 bits, with one table per player to move.
constexpr int kMaxSolverVertices = 40;

std::uint64_t pow3(int v) {
    std::uint64_t x = 1;
    for (int i = 0; i < v; ++i) x *= 3;
    return x;
}

/// Open-addressing memo table with a hard entry budget. Inserts beyond the
/// budget are dropped; lookups of dropped states simply recompute.
class FlatMemo {
public:
    explicit FlatMemo(std::size_t entry_budget) : budget_(entry_budget) { rehash(1024); }

    const std::uint8_t* find(std::uint64_t key) const {
        std::size_t i = slot(key);
        while (vals_[i] != kEmpty) {
            if (keys_[i] == key) return &vals_[i];
            i = (i + 1) & mask_;
        }
        return nullptr;
    }

    void insert(std::uint64_t key, std::uint8_t val) {
        if (size_ >= budget_) return;
        if ((size_ + 1) * 10 >= keys_.size() * 7) rehash(keys_.size() * 2);
        std::size_t i = slot(key);
        while (vals_[i] != kEmpty) {
            if (keys_[i] == key) return;
            i = (i + 1) & mask_;
        }
        keys_[i] = key;
        vals_[i] = val;
        ++size_;
    }

private:
    static constexpr std::uint8_t kEmpty = 0xff;

    std::size_t slot(std::uint64_t key) const {
        key ^= key >> 33;
        key *= 0xff51afd7ed558ccdULL;
        key ^= key >> 33;
        return static_cast<std::size_t>(key) & mask_;
    }

    void rehash(std::size_t cap) {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<std::uint8_t> old_vals = std::move(vals_);
        keys_.assign(cap, 0);
        vals_.assign(cap, kEmpty);
        mask_ = cap - 1;
        for (std::size_t i = 0; i < old_keys.size(); ++i)
            if (old_vals[i] != kEmpty) {
                std::size_t j = slot(old_keys[i]);
                while (vals_[j] != kEmpty) j = (j + 1) & mask_;
                keys_[j] = old_keys[i];
                vals_[j] = old_vals[i];
            }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint8_t> vals_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
    std::size_t budget_;
};

std::uint64_t mask_of(const std::vector<int>& vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t(1) << v;
    return m;
}

/// Bitboard view of the domination game.
struct DomBoard {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> closed;    // N[v]
    std::vector<std::uint64_t> dom_skip;  // u -> strictly preferable unclaimed vertices
    std::vector<std::uint64_t> twin_skip; // u -> lower-index twins
    std::vector<std::uint64_t> p3;        // 3^v

    explicit DomBoard(const Graph& g) {
        n = g.vertex_count();
        if (n > kMaxSolverVertices)
            throw ResourceError("exact solver limited to " +
                                std::to_string(kMaxSolverVertices) + " vertices, got " +
                                std::to_string(n));
        full = (n == 0) ? 0 : (n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
        closed.resize(static_cast<std::size_t>(n));
        p3.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            closed[static_cast<std::size_t>(v)] =
                mask_of(g.neighbors(v)) | (std::uint64_t(1) << v);
            p3[static_cast<std::size_t>(v)] = pow3(v);
        }
        dom_skip.assign(static_cast<std::size_t>(n), 0);
        twin_skip.assign(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                std::uint64_t cu = closed[static_cast<std::size_t>(u)];
                std::uint64_t cv = closed[static_cast<std::size_t>(v)];
                bool subset = (cu & ~cv) == 0;
                if (subset && (cu != cv || v < u))
                    dom_skip[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
                std::uint64_t self = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
                bool twins = cu == cv || (cu & ~self) == (cv & ~self);
                if (twins && v < u)
                    twin_skip[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
            }
    }

    std::uint64_t ternary_key(std::uint64_t d, std::uint64_t s) const {
        std::uint64_t key = 0;
        for (std::uint64_t m = d; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            key += p3[static_cast<std::size_t>(v)];
        }
        for (std::uint64_t m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            key += 2 * p3[static_cast<std::size_t>(v)];
        }
        return key;
    }
};

struct DomSearch {
    const DomBoard& board;
    const SearchConfig& cfg;
    std::uint64_t nodes = 0;
    FlatMemo memo[2];

    DomSearch(const DomBoard& b, const SearchConfig& c)
        : board(b), cfg(c), memo{FlatMemo(c.memo_capacity / 2), FlatMemo(c.memo_capacity / 2)} {}

    void count_node() {
        if (++nodes > cfg.node_limit)
            throw ResourceError("solver node limit exceeded (" +
                                std::to_string(cfg.node_limit) + ")");
    }

    /// open = vertices whose closed neighborhood avoids D: simultaneously the
    /// set still to dominate and the set of live Staller targets.
    bool staller_completed(std::uint64_t open, std::uint64_t s) const {
        for (std::uint64_t m = open; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if ((board.closed[static_cast<std::size_t>(v)] & ~s) == 0) return true;
        }
        return false;
    }

    // True iff Dominator wins with `mover` to move (0 = Dominator).
    bool dominator_wins(std::uint64_t d, std::uint64_t s, std::uint64_t open, int mover,
                        std::uint64_t key) {
        count_node();
        if (open == 0) return true;
        if (staller_completed(open, s)) return false;
        std::uint64_t unclaimed = board.full & ~(d | s);
        if (unclaimed == 0) return false; // board exhausted, no domination
        if (const std::uint8_t* hit = memo[mover].find(key)) return *hit != 0;

        bool dominator_turn = mover == 0;
        bool result = !dominator_turn;
        for (std::uint64_t m = unclaimed; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (cfg.prune_twins &&
                (board.twin_skip[static_cast<std::size_t>(v)] & unclaimed))
                continue;
            if (cfg.prune_dominated_moves &&
                (board.dom_skip[static_cast<std::size_t>(v)] & unclaimed))
                continue;
            std::uint64_t bit = std::uint64_t(1) << v;
            bool child;
            if (dominator_turn) {
                child = dominator_wins(d | bit, s,
                                       open & ~board.closed[static_cast<std::size_t>(v)],
                                       1, key + board.p3[static_cast<std::size_t>(v)]);
                if (child) { result = true; break; }
            } else {
                child = dominator_wins(d, s | bit, open, 0,
                                       key + 2 * board.p3[static_cast<std::size_t>(v)]);
                if (!child) { result = false; break; }
            }
        }
        memo[mover].insert(key, result ? 1 : 0);
        return result;
    }
};

std::uint64_t open_mask(const DomBoard& b, std::uint64_t d) {
    std::uint64_t covered = 0;
    for (std::uint64_t m = d; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        covered |= b.closed[static_cast<std::size_t>(v)];
    }
    return b.full & ~covered;
}

/// Budgeted search for graph roles (Dominator/Staller). The goal predicate
/// only depends on the role's own claims, so it is checked on entry; once the
/// role has spent its budget the game is lost for it.
struct ShortDomSearch {
    const DomBoard& board;
    const SearchConfig& cfg;
    Role role;
    int budget;
    std::uint64_t nodes = 0;
    FlatMemo memo[2];

    ShortDomSearch(const DomBoard& b, const SearchConfig& c, Role r, int k)
        : board(b), cfg(c), role(r), budget(k),
          memo{FlatMemo(c.memo_capacity / 2), FlatMemo(c.memo_capacity / 2)} {}

    bool goal(std::uint64_t d, std::uint64_t s, std::uint64_t open) const {
        if (role == Role::Dominator) return open == 0;
        (void)d;
        for (std::uint64_t m = open; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if ((board.closed[static_cast<std::size_t>(v)] & ~s) == 0) return true;
        }
        return false;
    }

    // mover: 0 = role to move, 1 = opponent.
    bool role_wins(std::uint64_t d, std::uint64_t s, std::uint64_t open, int mover,
                   std::uint64_t key) {
        if (++nodes > cfg.node_limit)
            throw ResourceError("short-game node limit exceeded");
        if (goal(d, s, open)) return true;
        std::uint64_t own = role == Role::Dominator ? d : s;
        if (std::popcount(own) >= budget) return false;
        std::uint64_t unclaimed = board.full & ~(d | s);
        if (unclaimed == 0) return false;
        if (const std::uint8_t* hit = memo[mover].find(key)) return *hit != 0;

        bool role_turn = mover == 0;
        bool result = !role_turn;
        bool mover_is_dominator = (role == Role::Dominator) == role_turn;
        for (std::uint64_t m = unclaimed; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (cfg.prune_twins &&
                (board.twin_skip[static_cast<std::size_t>(v)] & unclaimed))
                continue;
            std::uint64_t bit = std::uint64_t(1) << v;
            bool child;
            if (mover_is_dominator) {
                child = role_wins(d | bit, s,
                                  open & ~board.closed[static_cast<std::size_t>(v)],
                                  1 - mover, key + board.p3[static_cast<std::size_t>(v)]);
            } else {
                child = role_wins(d, s | bit, open, 1 - mover,
                                  key + 2 * board.p3[static_cast<std::size_t>(v)]);
            }
            if (role_turn && child) { result = true; break; }
            if (!role_turn && !child) { result = false; break; }
        }
        memo[mover].insert(key, result ? 1 : 0);
        return result;
    }
};

/// Bitboard view of a positional game on a hypergraph.
struct HyperBoard {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> edges;
    std::vector<std::uint64_t> twin_skip; // same-incidence vertices of lower index
    std::vector<std::uint64_t> p3;

    explicit HyperBoard(const Hypergraph& h) {
        n = h.n;
        if (n > kMaxSolverVertices)
            throw ResourceError("exact solver limited to " +
                                std::to_string(kMaxSolverVertices) + " vertices, got " +
                                std::to_string(n));
        full = (n == 0) ? 0 : (std::uint64_t(1) << n) - 1;
        for (const auto& e : h.edges) edges.push_back(mask_of(e));
        p3.resize(static_cast<std::size_t>(n));
        twin_skip.assign(static_cast<std::size_t>(n), 0);
        std::vector<std::vector<int>> incidence(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (int v = 0; v < n; ++v)
                if (edges[i] & (std::uint64_t(1) << v))
                    incidence[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
        for (int v = 0; v < n; ++v) {
            p3[static_cast<std::size_t>(v)] = pow3(v);
            for (int u = 0; u < v; ++u)
                if (incidence[static_cast<std::size_t>(u)] ==
                    incidence[static_cast<std::size_t>(v)])
                    twin_skip[static_cast<std::size_t>(v)] |= std::uint64_t(1) << u;
        }
    }

    std::uint64_t ternary_key(std::uint64_t maker, std::uint64_t breaker) const {
        std::uint64_t key = 0;
        for (std::uint64_t m = maker; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            key += p3[static_cast<std::size_t>(v)];
        }
        for (std::uint64_t m = breaker; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            key += 2 * p3[static_cast<std::size_t>(v)];
        }
        return key;
    }
};

struct ShortHyperSearch {
    const HyperBoard& board;
    const SearchConfig& cfg;
    Role role;
    int budget;
    std::uint64_t nodes = 0;
    FlatMemo memo[2];

    ShortHyperSearch(const HyperBoard& b, const SearchConfig& c, Role r, int k)
        : board(b), cfg(c), role(r), budget(k),
          memo{FlatMemo(c.memo_capacity / 2), FlatMemo(c.memo_capacity / 2)} {}

    bool goal(std::uint64_t maker, std::uint64_t breaker) const {
        if (role == Role::Maker) {
            for (std::uint64_t e : board.edges)
                if ((e & ~maker) == 0) return true;
            return false;
        }
        for (std::uint64_t e : board.edges)
            if ((e & breaker) == 0) return false;
        return true;
    }

    bool role_wins(std::uint64_t maker, std::uint64_t breaker, int mover, std::uint64_t key) {
        if (++nodes > cfg.node_limit)
            throw ResourceError("short-game node limit exceeded");
        if (goal(maker, breaker)) return true;
        std::uint64_t own = role == Role::Maker ? maker : breaker;
        if (std::popcount(own) >= budget) return false;
        std::uint64_t unclaimed = board.full & ~(maker | breaker);
        if (unclaimed == 0) return false;
        if (const std::uint8_t* hit = memo[mover].find(key)) return *hit != 0;

        bool role_turn = mover == 0;
        bool result = !role_turn;
        bool mover_is_maker = (role == Role::Maker) == role_turn;
        for (std::uint64_t m = unclaimed; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (cfg.prune_twins &&
                (board.twin_skip[static_cast<std::size_t>(v)] & unclaimed))
                continue;
            std::uint64_t bit = std::uint64_t(1) << v;
            bool child;
            if (mover_is_maker)
                child = role_wins(maker | bit, breaker, 1 - mover,
                                  key + board.p3[static_cast<std::size_t>(v)]);
            else
                child = role_wins(maker, breaker | bit, 1 - mover,
                                  key + 2 * board.p3[static_cast<std::size_t>(v)]);
            if (role_turn && child) { result = true; break; }
            if (!role_turn && !child) { result = false; break; }
        }
        memo[mover].insert(key, result ? 1 : 0);
        return result;
    }
};

} // namespace

Player solve_position(const Position& p, const SearchConfig& cfg) {
    p.validate();
    DomBoard board(p.graph);
    DomSearch search(board, cfg);
    std::uint64_t d = mask_of(p.dominator);
    std::uint64_t s = mask_of(p.staller);
    int mover = p.to_move == Player::Dominator ? 0 : 1;
    bool dom = search.dominator_wins(d, s, open_mask(board, d), mover, board.ternary_key(d, s));
    return dom ? Player::Dominator : Player::Staller;
}

Outcome outcome(const Graph& g, const std::vector<int>& dominator,
                const std::vector<int>& staller, const SearchConfig& cfg) {
    Position base = make_position(g, dominator, staller, Player::Dominator);
    Player dom_first = solve_position(base, cfg);
    base.to_move = Player::Staller;
    Player staller_first = solve_position(base, cfg);
    if (dom_first == Player::Dominator && staller_first == Player::Dominator) return Outcome::D;
    if (dom_first == Player::Staller && staller_first == Player::Staller) return Outcome::S;
    if (dom_first == Player::Dominator && staller_first == Player::Staller) return Outcome::N;
    throw InconsistencyError("second player won with either side moving first");
}

bool short_game_win(const Graph& g, const ShortQuery& q, const SearchConfig& cfg) {
    if (q.role != Role::Dominator && q.role != Role::Staller)
        throw InputError("graph arenas take the Dominator or Staller role");
    if (q.first_player != Role::Dominator && q.first_player != Role::Staller)
        throw InputError("first player must be Dominator or Staller on a graph arena");
    if (q.budget < 0) throw InputError("short game budget must be nonnegative");
    int k = std::min(q.budget, g.vertex_count());
    DomBoard board(g);
    ShortDomSearch search(board, cfg, q.role, k);
    int mover = (q.first_player == q.role) ? 0 : 1;
    return search.role_wins(0, 0, board.full, mover, 0);
}

bool short_game_win(const Hypergraph& h, const ShortQuery& q, const SearchConfig& cfg) {
    if (q.role != Role::Maker && q.role != Role::Breaker)
        throw InputError("hypergraph arenas take the Maker or Breaker role");
    if (q.first_player != Role::Maker && q.first_player != Role::Breaker)
        throw InputError("first player must be Maker or Breaker on a hypergraph arena");
    if (q.budget < 0) throw InputError("short game budget must be nonnegative");
    int k = std::min(q.budget, h.n);
    HyperBoard board(h);
    ShortHyperSearch search(board, cfg, q.role, k);
    int mover = (q.first_player == q.role) ? 0 : 1;
    return search.role_wins(0, 0, mover, 0);
}

int best_move(const Position& p, const SearchConfig& cfg) {
    p.validate();
    DomBoard board(p.graph);
    std::uint64_t d = mask_of(p.dominator);
    std::uint64_t s = mask_of(p.staller);
    std::uint64_t open = open_mask(board, d);
    std::uint64_t unclaimed = board.full & ~(d | s);
    if (unclaimed == 0) throw StateError("best_move: no unclaimed vertex");
    {
        DomSearch probe(board, cfg);
        if (open == 0 || probe.staller_completed(open, s))
            throw StateError("best_move: position is terminal");
    }

    bool mover_is_dom = p.to_move == Player::Dominator;
    auto child_of = [&](int v) {
        std::uint64_t bit = std::uint64_t(1) << v;
        std::uint64_t cd = d | (mover_is_dom ? bit : 0);
        std::uint64_t cs = s | (mover_is_dom ? 0 : bit);
        return std::pair<std::uint64_t, std::uint64_t>(cd, cs);
    };
    DomSearch search(board, cfg);
    auto dominator_wins_state = [&](std::uint64_t cd, std::uint64_t cs, int mover) {
        return search.dominator_wins(cd, cs, open_mask(board, cd), mover,
                                     board.ternary_key(cd, cs));
    };

    bool mover_wins = mover_is_dom == dominator_wins_state(d, s, mover_is_dom ? 0 : 1);
    if (mover_wins) {
        for (std::uint64_t m = unclaimed; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            auto [cd, cs] = child_of(v);
            if (mover_is_dom == dominator_wins_state(cd, cs, mover_is_dom ? 1 : 0)) return v;
        }
        throw InconsistencyError("winning position without a winning move");
    }

    // Losing: pick the reply minimizing the opponent's winning continuations.
    int best = -1;
    int best_count = -1;
    for (std::uint64_t m = unclaimed; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        auto [cd, cs] = child_of(v);
        std::uint64_t rest = board.full & ~(cd | cs);
        std::uint64_t copen = open_mask(board, cd);
        int count = 0;
        if (copen != 0 && !search.staller_completed(copen, cs) && rest != 0) {
            for (std::uint64_t r = rest; r;) {
                int w = std::countr_zero(r);
                r &= r - 1;
                std::uint64_t gd = cd | (mover_is_dom ? 0 : std::uint64_t(1) << w);
                std::uint64_t gs = cs | (mover_is_dom ? std::uint64_t(1) << w : 0);
                bool opp_wins =
                    (!mover_is_dom) == dominator_wins_state(gd, gs, mover_is_dom ? 0 : 1);
                if (opp_wins) ++count;
            }
        }
        if (best == -1 || count < best_count) {
            best = v;
            best_count = count;
        }
    }
    return best;
}

} // namespace mbd
