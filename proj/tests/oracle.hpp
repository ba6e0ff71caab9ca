#pragma once

// Test-only reference implementations, kept structurally independent of the
// production solver: plain sets, ordinary recursion, map-based memo, no
// bitboards, no pruning. Everything the tests freeze as expected values is
// computed (or re-computable) through these.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/hypergraph.hpp"

namespace testoracle {

class NaiveGame {
public:
    explicit NaiveGame(const mbd::Graph& g) : g_(g) {}

    bool dominator_wins(std::set<int> d, std::set<int> s, bool dominator_to_move) {
        std::string key = encode(d, s, dominator_to_move);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        bool result;
        if (dominated(d)) {
            result = true;
        } else if (isolated_by(s)) {
            result = false;
        } else {
            std::vector<int> unclaimed;
            for (int v = 0; v < g_.vertex_count(); ++v)
                if (!d.count(v) && !s.count(v)) unclaimed.push_back(v);
            if (unclaimed.empty()) {
                result = false;
            } else {
                result = !dominator_to_move;
                for (int v : unclaimed) {
                    std::set<int> d2 = d, s2 = s;
                    (dominator_to_move ? d2 : s2).insert(v);
                    bool child = dominator_wins(d2, s2, !dominator_to_move);
                    if (dominator_to_move && child) {
                        result = true;
                        break;
                    }
                    if (!dominator_to_move && !child) {
                        result = false;
                        break;
                    }
                }
            }
        }
        memo_[key] = result;
        return result;
    }

    /// 'D', 'N' or 'S'.
    char outcome(const std::set<int>& d = {}, const std::set<int>& s = {}) {
        bool dom_first = dominator_wins(d, s, true);
        bool dom_second = dominator_wins(d, s, false);
        if (dom_first && dom_second) return 'D';
        if (!dom_first && !dom_second) return 'S';
        if (dom_first && !dom_second) return 'N';
        return '?'; // second player wins both: should never happen
    }

private:
    bool dominated(const std::set<int>& d) const {
        for (int v = 0; v < g_.vertex_count(); ++v) {
            bool covered = d.count(v) > 0;
            for (int w : g_.neighbors(v))
                if (d.count(w)) covered = true;
            if (!covered) return false;
        }
        return true;
    }

    bool isolated_by(const std::set<int>& s) const {
        for (int v = 0; v < g_.vertex_count(); ++v) {
            bool all = s.count(v) > 0;
            for (int w : g_.neighbors(v))
                if (!s.count(w)) all = false;
            if (all && s.count(v)) return true;
        }
        return false;
    }

    std::string encode(const std::set<int>& d, const std::set<int>& s, bool mover) const {
        std::string key(static_cast<std::size_t>(g_.vertex_count()) + 1, '.');
        for (int v : d) key[static_cast<std::size_t>(v)] = 'D';
        for (int v : s) key[static_cast<std::size_t>(v)] = 'S';
        key.back() = mover ? '1' : '0';
        return key;
    }

    const mbd::Graph& g_;
    std::map<std::string, bool> memo_;
};

inline char naive_outcome(const mbd::Graph& g) { return NaiveGame(g).outcome(); }

/// Budgeted search for any of the four roles, same naive style.
class NaiveShort {
public:
    NaiveShort(int n, std::vector<std::vector<int>> goal_edges, bool role_is_first_kind)
        : n_(n), edges_(std::move(goal_edges)), role_first_(role_is_first_kind) {}

    /// role "first kind" = the side that claims into `a` below (Maker /
    /// Staller); the other side is Breaker / Dominator.
    static NaiveShort maker_on(const mbd::Hypergraph& h) {
        return NaiveShort(h.n, h.edges, true);
    }
    static NaiveShort breaker_on(const mbd::Hypergraph& h) {
        return NaiveShort(h.n, h.edges, false);
    }
    static NaiveShort staller_on(const mbd::Graph& g) {
        std::vector<std::vector<int>> edges;
        for (int v = 0; v < g.vertex_count(); ++v)
            edges.push_back(mbd::closed_neighborhood(g, v));
        return NaiveShort(g.vertex_count(), std::move(edges), true);
    }
    static NaiveShort dominator_on(const mbd::Graph& g) {
        std::vector<std::vector<int>> edges;
        for (int v = 0; v < g.vertex_count(); ++v)
            edges.push_back(mbd::closed_neighborhood(g, v));
        return NaiveShort(g.vertex_count(), std::move(edges), false);
    }

    bool wins(int budget, bool role_moves_first) {
        budget_ = std::min(budget, n_);
        return rec({}, {}, role_moves_first);
    }

private:
    // a = Maker/Staller claims, b = Breaker/Dominator claims
    bool goal(const std::set<int>& a, const std::set<int>& b) const {
        if (role_first_) { // fill some edge
            for (const auto& e : edges_) {
                bool all = true;
                for (int v : e)
                    if (!a.count(v)) all = false;
                if (all) return true;
            }
            return false;
        }
        for (const auto& e : edges_) { // hit every edge
            bool hit = false;
            for (int v : e)
                if (b.count(v)) hit = true;
            if (!hit) return false;
        }
        return true;
    }

    bool rec(std::set<int> a, std::set<int> b, bool role_to_move) {
        if (goal(a, b)) return true;
        const std::set<int>& own = role_first_ ? a : b;
        if (static_cast<int>(own.size()) >= budget_) return false;
        std::vector<int> unclaimed;
        for (int v = 0; v < n_; ++v)
            if (!a.count(v) && !b.count(v)) unclaimed.push_back(v);
        if (unclaimed.empty()) return false;
        bool mover_claims_a = role_to_move == role_first_;
        for (int v : unclaimed) {
            std::set<int> a2 = a, b2 = b;
            (mover_claims_a ? a2 : b2).insert(v);
            bool child = rec(a2, b2, !role_to_move);
            if (role_to_move && child) return true;
            if (!role_to_move && !child) return false;
        }
        return !role_to_move;
    }

    int n_;
    std::vector<std::vector<int>> edges_;
    bool role_first_;
    int budget_ = 0;
};

} // namespace testoracle
