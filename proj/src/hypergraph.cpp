#include "mbd/hypergraph.hpp"

#include <algorithm>

#include "mbd/errors.hpp"

namespace mbd {

Hypergraph build_hypergraph(int n, std::vector<std::vector<int>> edges) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& e : edges) {
        if (e.empty()) throw InputError("empty hyperedge rejected");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e)
            if (v < 0 || v >= n) throw InputError("hyperedge member out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph{n, std::move(edges)};
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) edges.push_back(closed_neighborhood(g, v));
    return build_hypergraph(g.vertex_count(), std::move(edges));
}

WinStatus win_check(const Hypergraph& h, const std::vector<int>& maker_set,
                    const std::vector<int>& breaker_set) {
    std::vector<char> maker(static_cast<std::size_t>(h.n), 0);
    std::vector<char> breaker(static_cast<std::size_t>(h.n), 0);
    auto fill = [&](const std::vector<int>& set, std::vector<char>& flags) {
        for (int v : set) {
            if (v < 0 || v >= h.n) throw InputError("win_check: vertex out of range");
            flags[static_cast<std::size_t>(v)] = 1;
        }
    };
    fill(maker_set, maker);
    fill(breaker_set, breaker);
    for (int v = 0; v < h.n; ++v)
        if (maker[static_cast<std::size_t>(v)] && breaker[static_cast<std::size_t>(v)])
            throw InputError("win_check: claimed sets overlap");

    bool maker_won = false;
    bool breaker_won = true;
    for (const auto& e : h.edges) {
        bool filled = true, hit = false;
        for (int v : e) {
            if (!maker[static_cast<std::size_t>(v)]) filled = false;
            if (breaker[static_cast<std::size_t>(v)]) hit = true;
        }
        if (filled) maker_won = true;
        if (!hit) breaker_won = false;
    }
    if (maker_won && breaker_won)
        throw InconsistencyError("win_check: both players satisfy their win condition");
    if (maker_won) return WinStatus::MakerWon;
    if (breaker_won) return WinStatus::BreakerWon;
    return WinStatus::Undecided;
}

} // namespace mbd
