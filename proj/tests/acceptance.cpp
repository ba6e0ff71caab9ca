// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Seeds are pinned so runs are reproducible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mbd/errors.hpp"
#include "mbd/fpt.hpp"
#include "mbd/gadgets.hpp"
#include "mbd/harness.hpp"
#include "mbd/rewrite.hpp"
#include "mbd/rng.hpp"
#include "mbd/solver.hpp"

using namespace mbd;

namespace {

constexpr std::uint64_t kSeed = 20260809;

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("%s criterion %2d: %s (%s, %.2fs)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str(), seconds);
    if (!pass) ++failures;
}

void run(int index, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = body();
        pass = p;
        detail = d;
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(index, name, pass, detail, seconds);
}

std::pair<bool, std::string> from_suite(const std::string& suite, int count) {
    HarnessReport r = run_verification_harness(suite, kSeed, count);
    return {r.all_passed(),
            std::to_string(r.passed()) + "/" + std::to_string(r.records.size())};
}

} // namespace

int main() {
    // 1. the paper's figure outcomes
    run(1, "figure outcomes", [] { return from_suite("figure-outcomes", 3); });

    // 2. union / join tables on 100 seeded pairs, each side <= 8 vertices
    run(2, "union-join tables", [] { return from_suite("union-join-tables", 100); });

    // 3. cluster outcomes: solver vs the isolated-vertex rule on 50 seeded
    //    clusters of at most 12 vertices
    run(3, "cluster outcomes", []() -> std::pair<bool, std::string> {
        int pass = 0, total = 50;
        for (int i = 0; i < total; ++i) {
            Rng rng(kSeed + 31 * static_cast<std::uint64_t>(i) + 1);
            Graph g(0);
            int left = rng.next_int(1, 12);
            while (left > 0) {
                int s = std::min(left, rng.next_int(1, 5));
                g = compose(g, make_clique(s), ComposeKind::Union);
                left -= s;
            }
            if (outcome(g) == compose_outcome_cluster(cluster_profile(g))) ++pass;
        }
        return {pass == total, std::to_string(pass) + "/" + std::to_string(total)};
    });

    // 4. rewrite soundness: 200 applicable positions per rule (Lemmas 3, 4,
    //    5, 8 twin form, 9) on graphs of at most 12 vertices
    run(4, "rewrite soundness", [] { return from_suite("rewrite-soundness", 200); });

    // 5. path shortening: o(G^{u,v}_7) = o(G^{u,v}_9) for 50 seeded bases
    //    and all anchor pairs
    run(5, "path shortening", [] { return from_suite("path-shortening", 50); });

    // 6. Lemma 24: o(P_n, {endpoint}, {}) with Staller to move is a
    //    Dominator win for every n up to 12
    run(6, "claimed-endpoint paths", []() -> std::pair<bool, std::string> {
        int pass = 0;
        for (int n = 1; n <= 12; ++n)
            if (solve_position(make_position(make_path(n), {0}, {}, Player::Staller)) ==
                Player::Dominator)
                ++pass;
        return {pass == 12, std::to_string(pass) + "/12"};
    });

    // 7. neighborhood-diversity kernel: size and outcome on 100 seeded graphs
    run(7, "nd kernel", [] { return from_suite("nd-kernel", 100); });

    // 8. modular-width solver vs the unpruned search on 300 seeded graphs
    run(8, "modular-width solver", [] { return from_suite("mw-solver", 300); });

    // 9. feedback-edge-number solver on 200 seeded graphs with fen <= 3
    run(9, "fen solver", [] { return from_suite("fen-solver", 200); });

    // 10. distance-to-cluster kernel: outcome preserved, never grows, k <= 2
    run(10, "dtc kernel", [] { return from_suite("dtc-kernel", 100); });

    // 11. Staller hardness gadget biconditional on 50 seeded hypergraphs
    run(11, "staller gadget biconditional", [] { return from_suite("gadget-staller", 50); });

    // 12. Dominator hardness gadget forward direction on 50 seeded graphs
    //     (plus the empirical converse report)
    run(12, "dominator gadget forward", [] { return from_suite("gadget-dominator", 50); });

    // 13. universal-vertex continuation equality on 50 seeded graphs
    run(13, "universal-vertex continuation", [] { return from_suite("gadget-universal", 50); });

    // 14. solver self-checks: first-player advantage and free-vertex
    //     monotonicity, exhaustive over all edge subsets on up to 5
    //     vertices plus 500 seeded 6-7-vertex graphs
    run(14, "solver self-checks", []() -> std::pair<bool, std::string> {
        long checked = 0, good = 0;
        auto check_graph = [&](const Graph& g, Rng& rng) {
            ++checked;
            bool ok = true;
            try {
                outcome(g); // throws on "second player wins both"
            } catch (const InconsistencyError&) {
                ok = false;
            }
            for (int round = 0; round < 2 && ok; ++round) {
                std::vector<int> d, s, free;
                for (int v = 0; v < g.vertex_count(); ++v) {
                    int r = rng.next_int(0, 9);
                    if (r < 2)
                        d.push_back(v);
                    else if (r < 4)
                        s.push_back(v);
                    else
                        free.push_back(v);
                }
                if (free.empty()) continue;
                int v = free[rng.next_below(free.size())];
                for (Player mover : {Player::Dominator, Player::Staller}) {
                    Player w = solve_position(make_position(g, d, s, mover));
                    std::vector<int> d2 = d, s2 = s;
                    (w == Player::Dominator ? d2 : s2).push_back(v);
                    if (solve_position(make_position(g, d2, s2, mover)) != w) ok = false;
                }
            }
            if (ok) ++good;
        };
        // exhaustive: every labeled graph on 1..5 vertices
        for (int n = 1; n <= 5; ++n) {
            int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
                Graph g(n);
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v, ++bit)
                        if (mask & (std::uint64_t(1) << bit)) g.add_edge(u, v);
                Rng rng(kSeed ^ (mask * 67 + static_cast<std::uint64_t>(n)));
                check_graph(g, rng);
            }
        }
        // seeded 6- and 7-vertex graphs
        for (int t = 0; t < 500; ++t) {
            Rng rng(kSeed + 7919 * static_cast<std::uint64_t>(t) + 13);
            Graph g = random_graph(6 + (t % 2), rng.next_int(2, 8) / 10.0, rng.next_u64());
            check_graph(g, rng);
        }
        return {checked == good, std::to_string(good) + "/" + std::to_string(checked)};
    });

    if (failures > 0) {
        std::printf("acceptance: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all 14 criteria passed\n");
    return 0;
}
