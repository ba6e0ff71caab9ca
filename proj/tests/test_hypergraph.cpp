#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mbd/errors.hpp"
#include "mbd/hypergraph.hpp"
#include "mbd/rng.hpp"

using namespace mbd;

TEST_CASE("build_hypergraph") {
    Hypergraph fig1 = build_hypergraph(4, {{2, 3}, {0, 1, 2}});
    CHECK(fig1.edges.size() == 2);
    CHECK(fig1.edges[0] == std::vector<int>{0, 1, 2}); // sorted edge list

    Hypergraph tiny = build_hypergraph(1, {{0}});
    CHECK(tiny.edges.size() == 1);

    Hypergraph dedup = build_hypergraph(3, {{0, 1}, {1, 0}});
    CHECK(dedup.edges.size() == 1);

    CHECK_THROWS_AS(build_hypergraph(2, {{}}), InputError);
    CHECK_THROWS_AS(build_hypergraph(2, {{0, 2}}), InputError);
}

TEST_CASE("neighborhood hypergraph") {
    Hypergraph k2 = neighborhood_hypergraph(build_graph(2, {{0, 1}}));
    CHECK(k2.edges == std::vector<std::vector<int>>{{0, 1}});

    Hypergraph p3 = neighborhood_hypergraph(make_path(3));
    CHECK(p3.edges == std::vector<std::vector<int>>{{0, 1}, {0, 1, 2}, {1, 2}});

    Hypergraph c4 = neighborhood_hypergraph(make_cycle(4));
    CHECK(c4.edges.size() == 4);
    CHECK(c4.edges[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("win_check") {
    Hypergraph fig1 = build_hypergraph(4, {{2, 3}, {0, 1, 2}});
    CHECK(win_check(fig1, {2, 3}, {}) == WinStatus::MakerWon);
    CHECK(win_check(fig1, {}, {0, 1, 2, 3}) == WinStatus::BreakerWon);

    // the path center hits every closed neighborhood of P3, so a single
    // breaker claim there is already a transversal
    Hypergraph p3 = neighborhood_hypergraph(make_path(3));
    CHECK(win_check(p3, {0}, {1}) == WinStatus::BreakerWon);
    CHECK(win_check(p3, {0}, {2}) == WinStatus::Undecided);

    CHECK_THROWS_AS(win_check(fig1, {0}, {0}), InputError);
}

TEST_CASE("dominating sets are exactly the transversals of H_N") {
    Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        int n = rng.next_int(1, 7);
        Graph g = random_graph(n, 0.4, rng.next_u64());
        Hypergraph hn = neighborhood_hypergraph(g);
        std::uint64_t subsets = std::uint64_t(1) << n;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> a;
            for (int v = 0; v < n; ++v)
                if (mask & (std::uint64_t(1) << v)) a.push_back(v);
            bool dominating = is_dominating(g, a);
            bool transversal = true;
            for (const auto& e : hn.edges) {
                bool hit = false;
                for (int v : e)
                    if (mask & (std::uint64_t(1) << v)) hit = true;
                if (!hit) transversal = false;
            }
            CHECK(dominating == transversal);
            // complement of a non-dominating set fills the missed
            // neighborhood; complement of a dominating set fills none
            std::vector<int> complement;
            for (int v = 0; v < n; ++v)
                if (!(mask & (std::uint64_t(1) << v))) complement.push_back(v);
            bool fills = false;
            for (const auto& e : hn.edges) {
                bool all = true;
                for (int v : e)
                    if (mask & (std::uint64_t(1) << v)) all = false;
                if (all) fills = true;
            }
            CHECK(dominating == !fills);
            (void)complement;
        }
    }
}
