#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mbd/errors.hpp"
#include "mbd/gadgets.hpp"
#include "mbd/rng.hpp"
#include "mbd/solver.hpp"
#include "oracle.hpp"

using namespace mbd;

namespace {

void check_correspondence_covers(const GadgetInstance& gi) {
    std::set<int> seen;
    for (const auto& [key, verts] : gi.correspondence)
        for (int v : verts) {
            CHECK(seen.insert(v).second); // exactly once
            CHECK(gi.graph.has_vertex(v));
        }
    CHECK(static_cast<int>(seen.size()) == gi.graph.vertex_count());
}

} // namespace

TEST_CASE("staller hardness gadget shape") {
    // Figure 1: 4 hypergraph vertices, edges e={u3,u4}, f={u1,u2,u3}, k=2
    Hypergraph h = build_hypergraph(4, {{2, 3}, {0, 1, 2}});
    GadgetInstance gi = staller_hardness_gadget(h, 2);
    CHECK(gi.graph.vertex_count() == 12); // |X| + (k+2)|F| = 4 + 4*2
    check_correspondence_covers(gi);
    // the vertex part is a clique
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(gi.graph.has_edge(u, v));
    // each hyperedge copy is adjacent to exactly its members
    for (const auto& [key, verts] : gi.correspondence) {
        if (key.rfind("hyperedge:", 0) != 0) continue;
        std::size_t idx = std::stoul(key.substr(10));
        CHECK(verts.size() == 4); // k+2
        for (int copy : verts) {
            std::vector<int> nb = gi.graph.neighbors(copy);
            CHECK(nb == h.edges[idx]);
        }
    }

    GadgetInstance tiny = staller_hardness_gadget(build_hypergraph(1, {{0}}), 0);
    CHECK(tiny.graph.vertex_count() == 3);
    CHECK(tiny.graph.degree(0) == 2);

    Hypergraph isolated = build_hypergraph(2, {{0}});
    CHECK_THROWS_AS(staller_hardness_gadget(isolated, 1), InputError);
    CHECK_THROWS_AS(staller_hardness_gadget(build_hypergraph(1, {{0}}), -1), InputError);
}

TEST_CASE("staller gadget equivalence at small scale") {
    Rng rng(107);
    for (int t = 0; t < 12; ++t) {
        int n = rng.next_int(1, 5);
        int ne = rng.next_int(1, 3);
        std::vector<std::vector<int>> edges(static_cast<std::size_t>(ne));
        for (auto& e : edges) {
            for (int v = 0; v < n; ++v)
                if (rng.next_bool(0.5)) e.push_back(v);
            if (e.empty()) e.push_back(rng.next_int(0, n - 1));
        }
        std::vector<char> covered(static_cast<std::size_t>(n), 0);
        for (const auto& e : edges)
            for (int v : e) covered[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < n; ++v)
            if (!covered[static_cast<std::size_t>(v)])
                edges[static_cast<std::size_t>(v % ne)].push_back(v);
        Hypergraph h = build_hypergraph(n, edges);
        int k = rng.next_int(0, 2);
        GadgetInstance gi = staller_hardness_gadget(h, k);
        for (bool maker_first : {true, false}) {
            bool lhs = testoracle::NaiveShort::maker_on(h).wins(std::min(k, h.n), maker_first);
            bool rhs = short_game_win(gi.graph,
                                      ShortQuery{Role::Staller, k + 1,
                                                 maker_first ? Role::Staller : Role::Dominator});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dominator hardness gadget shape") {
    // Figure 5: G on 4 vertices with edges {12,23,13,24} (1-indexed)
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}});
    GadgetInstance gi = dominator_hardness_gadget(g);
    CHECK(gi.graph.vertex_count() == 8);
    check_correspondence_covers(gi);
    // per i: the matching edge x_i y_i; per edge v_i v_j the four cross pairs
    CHECK(gi.graph.edge_count() == 4 + 4 * g.edge_count());
    for (const auto& [key, verts] : gi.correspondence) {
        REQUIRE(verts.size() == 2);
        CHECK(gi.graph.has_edge(verts[0], verts[1]));
        CHECK(gi.graph.degree(verts[0]) == gi.graph.degree(verts[1]));
    }

    GadgetInstance k1 = dominator_hardness_gadget(build_graph(1, {}));
    CHECK(k1.graph.vertex_count() == 2);
    CHECK(k1.graph.edge_count() == 1);
}

TEST_CASE("dominator gadget forward direction") {
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        int n = rng.next_int(1, 5);
        Graph g = random_graph(n, 0.5, rng.next_u64());
        // exhaustive minimum dominating set
        int gamma = n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (mask & (std::uint64_t(1) << v)) subset.push_back(v);
            if (is_dominating(g, subset)) gamma = std::min(gamma, static_cast<int>(subset.size()));
        }
        if (gamma > 3) continue;
        GadgetInstance gi = dominator_hardness_gadget(g);
        for (bool dom_first : {true, false})
            CHECK(short_game_win(gi.graph,
                                 ShortQuery{Role::Dominator, gamma,
                                            dom_first ? Role::Dominator : Role::Staller}));
    }
}

TEST_CASE("universal vertex gadget") {
    GadgetInstance star = universal_vertex_gadget(build_graph(2, {}));
    CHECK(star.graph.vertex_count() == 3);
    CHECK(star.graph.degree(2) == 2);
    check_correspondence_covers(star);

    GadgetInstance wheel = universal_vertex_gadget(make_cycle(4));
    CHECK(wheel.graph.degree(4) == 4);
    CHECK(is_dominating(wheel.graph, {4})); // domination number 1

    Rng rng(127);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(rng.next_int(1, 8), 0.4, rng.next_u64());
        GadgetInstance gi = universal_vertex_gadget(g);
        int v0 = g.vertex_count();
        // after Staller's forced claim of the universal vertex the residual
        // game is G with Dominator to move
        Player with_gadget =
            solve_position(make_position(gi.graph, {}, {v0}, Player::Dominator));
        Player plain = solve_position(make_position(g, {}, {}, Player::Dominator));
        CHECK(with_gadget == plain);
    }
}
