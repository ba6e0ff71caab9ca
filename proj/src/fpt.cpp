#include "mbd/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include "mbd/runtime.hpp"

#include "mbd/errors.hpp"

namespace mbd {

namespace {

Graph shape_of(Outcome o) {
    switch (o) {
        case Outcome::D: return build_graph(2, {{0, 1}});
        case Outcome::S: return build_graph(2, {});
        case Outcome::N: return build_graph(3, {{0, 1}, {1, 2}});
    }
    throw InconsistencyError("unknown outcome shape");
}

} // namespace

KernelResult nd_kernel(const Graph& g) {
    KernelResult result{g, {}};
    while (true) {
        TwinPartition part = twin_partition(result.graph);
        const TwinClass* pick = nullptr;
        for (const auto& cls : part.classes)
            if (cls.vertices.size() >= 3) {
                pick = &cls;
                break;
            }
        if (!pick) break;
        // a twin class induces a clique (true twins) or a stable set (false
        // twins), so the module outcome is D or S without a solver call
        Outcome o = pick->kind == TwinKind::True ? Outcome::D : Outcome::S;
        GraphRewrite gr = replace_module(result.graph, pick->vertices, o);
        result.graph = std::move(gr.graph);
        result.trace.steps.push_back(std::move(gr.step));
    }
    return result;
}

namespace {

struct MwEval {
    const Graph& g;
    const SearchConfig& cfg;
    int direct_cap;

    Outcome eval(const DecompNode& node) const {
        std::vector<int> verts = node.covered();
        if (static_cast<int>(verts.size()) <= direct_cap)
            return outcome(g.induced(verts), {}, {}, cfg);
        switch (node.kind) {
            case DecompNode::Kind::Leaf: return Outcome::N;
            case DecompNode::Kind::Union: {
                Outcome acc = eval(node.children[0]);
                for (std::size_t i = 1; i < node.children.size(); ++i)
                    acc = compose_outcome_union(acc, eval(node.children[i]));
                return acc;
            }
            case DecompNode::Kind::Join: {
                Outcome acc = eval(node.children[0]);
                bool acc_k1 = node.children[0].covered().size() == 1;
                for (std::size_t i = 1; i < node.children.size(); ++i) {
                    const DecompNode& c = node.children[i];
                    acc = compose_outcome_join(acc, acc_k1, eval(c), c.covered().size() == 1);
                    acc_k1 = false;
                }
                return acc;
            }
            case DecompNode::Kind::Substitution: {
                // collapse children of order >= 3 to their outcome shapes,
                // keep smaller children verbatim, solve the quotient-sized
                // remainder exactly
                std::vector<Graph> blocks;
                for (const auto& c : node.children) {
                    std::vector<int> cv = c.covered();
                    if (cv.size() >= 3)
                        blocks.push_back(shape_of(eval(c)));
                    else
                        blocks.push_back(g.induced(cv));
                }
                int total = 0;
                std::vector<int> base;
                for (const auto& b : blocks) {
                    base.push_back(total);
                    total += b.vertex_count();
                }
                Graph collapsed(total);
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    for (const auto& e : blocks[i].edges())
                        collapsed.add_edge(base[i] + e[0], base[i] + e[1]);
                for (const auto& e : node.quotient.edges())
                    for (int u = 0; u < blocks[static_cast<std::size_t>(e[0])].vertex_count(); ++u)
                        for (int v = 0; v < blocks[static_cast<std::size_t>(e[1])].vertex_count();
                             ++v)
                            collapsed.add_edge(base[static_cast<std::size_t>(e[0])] + u,
                                               base[static_cast<std::size_t>(e[1])] + v);
                return outcome(collapsed, {}, {}, cfg);
            }
            default:
                throw InputError("modular-width evaluation works on modular trees only");
        }
    }
};

} // namespace

Outcome solve_via_modular_width(const Graph& g, const SearchConfig& cfg) {
    if (g.vertex_count() == 0) return Outcome::D; // empty domination requirement
    DecompNode tree = modular_decomposition(g);
    int width = std::max(decomposition_width(tree), 2);
    MwEval ev{g, cfg, 3 * width};
    return ev.eval(tree);
}

KernelResult mw_kernel(const Graph& g, const SearchConfig& cfg) {
    // iterated Lemma-9 collapse of proper modules located by pair closures;
    // reuses the engine's replace_module rule as the single active rule
    std::vector<RewriteRule> rules;
    for (auto& rule : default_rules(cfg))
        if (rule.name == "replace_module") rules.push_back(std::move(rule));
    auto [pos, trace] = reduce_fixpoint(make_position(g), rules);
    return KernelResult{std::move(pos.graph), std::move(trace)};
}

namespace {

struct P4Eval {
    const Graph& g;
    const SearchConfig& cfg;

    static Player staller_first_winner(Outcome o) {
        return o == Outcome::D ? Player::Dominator : Player::Staller;
    }

    Outcome replace_inner_and_solve(const DecompNode& node, const DecompNode& inner,
                                    Outcome inner_outcome) const {
        std::vector<int> w = node.covered();
        std::vector<int> iv = inner.covered();
        std::vector<int> positions;
        for (int v : iv)
            positions.push_back(static_cast<int>(
                std::lower_bound(w.begin(), w.end(), v) - w.begin()));
        GraphRewrite gr = replace_module(g.induced(w), positions, inner_outcome);
        return outcome(gr.graph, {}, {}, cfg);
    }

    Outcome eval(const DecompNode& node) const {
        switch (node.kind) {
            case DecompNode::Kind::Leaf: return Outcome::N;
            case DecompNode::Kind::Small:
                return outcome(g.induced(node.small_vertices), {}, {}, cfg);
            case DecompNode::Kind::Union: {
                Outcome acc = eval(node.children[0]);
                for (std::size_t i = 1; i < node.children.size(); ++i)
                    acc = compose_outcome_union(acc, eval(node.children[i]));
                return acc;
            }
            case DecompNode::Kind::Join: {
                Outcome acc = eval(node.children[0]);
                bool acc_k1 = node.children[0].covered().size() == 1;
                for (std::size_t i = 1; i < node.children.size(); ++i) {
                    const DecompNode& c = node.children[i];
                    acc = compose_outcome_join(acc, acc_k1, eval(c), c.covered().size() == 1);
                    acc_k1 = false;
                }
                return acc;
            }
            case DecompNode::Kind::Spider: {
                bool r_empty = node.children.empty() || node.children[0].covered().empty();
                if (node.thin) {
                    // Dominator first claims in C and pairs (s_i, c_i): a win.
                    // Staller first: iterated leaf-support exchanges strip S
                    // and C, leaving G[R] with Staller to move.
                    Player staller_first = r_empty
                                               ? Player::Dominator
                                               : staller_first_winner(eval(node.children[0]));
                    return staller_first == Player::Dominator ? Outcome::D : Outcome::N;
                }
                if (node.clique.size() >= 4) return Outcome::D; // pairing two disjoint C edges
                if (!r_empty && node.children[0].covered().size() >= 3)
                    return replace_inner_and_solve(node, node.children[0],
                                                   eval(node.children[0]));
                return outcome(g.induced(node.covered()), {}, {}, cfg);
            }
            case DecompNode::Kind::Separable: {
                const DecompNode& inner = node.children[0];
                if (inner.covered().size() >= 3)
                    return replace_inner_and_solve(node, inner, eval(inner));
                return outcome(g.induced(node.covered()), {}, {}, cfg);
            }
            default:
                throw InputError("p4 evaluation: substitution nodes are not part of "
                                 "primeval-style trees");
        }
    }
};

void reject_substitution(const DecompNode& node) {
    if (node.kind == DecompNode::Kind::Substitution)
        throw InputError("p4 decomposition must not contain substitution nodes");
    for (const auto& c : node.children) reject_substitution(c);
}

} // namespace

Outcome solve_via_p4_decomposition(const Graph& g, const DecompNode& tree, int q,
                                   const SearchConfig& cfg) {
    if (q < 4) throw InputError("p4-fewness parameter must be at least 4");
    reject_substitution(tree);
    validate_decomposition(tree, g, q);
    P4Eval ev{g, cfg};
    return ev.eval(tree);
}

namespace {

/// Lowest induced P3 (a-b-c with b the center) in the graph minus `deleted`.
std::optional<std::array<int, 3>> find_induced_p3(const Graph& g,
                                                  const std::vector<char>& deleted) {
    for (int b = 0; b < g.vertex_count(); ++b) {
        if (deleted[static_cast<std::size_t>(b)]) continue;
        const auto& nb = g.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (deleted[static_cast<std::size_t>(nb[i])]) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (deleted[static_cast<std::size_t>(nb[j])]) continue;
                if (!g.has_edge(nb[i], nb[j])) return std::array<int, 3>{nb[i], b, nb[j]};
            }
        }
    }
    return std::nullopt;
}

bool cds_branch(const Graph& g, std::vector<char>& deleted, int k, std::vector<int>& out) {
    auto p3 = find_induced_p3(g, deleted);
    if (!p3) {
        out.clear();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (deleted[static_cast<std::size_t>(v)]) out.push_back(v);
        return true;
    }
    if (k == 0) return false;
    for (int x : *p3) {
        deleted[static_cast<std::size_t>(x)] = 1;
        if (cds_branch(g, deleted, k - 1, out)) return true;
        deleted[static_cast<std::size_t>(x)] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> cluster_deletion_set(const Graph& g, int k) {
    if (k < 0) throw InputError("cluster_deletion_set: negative budget");
    std::vector<char> deleted(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> out;
    if (cds_branch(g, deleted, k, out)) return out;
    return std::nullopt;
}

std::optional<std::uint64_t> dtc_claim2_threshold(int k) {
    if (k < 0) return std::nullopt;
    if (k >= 6) return std::nullopt; // 3^(2^k) no longer fits; the rule never fires
    std::uint64_t exp = std::uint64_t(1) << k; // 2^k
    unsigned __int128 pw = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        pw *= 3;
        if (pw > static_cast<unsigned __int128>(~std::uint64_t(0))) return std::nullopt;
    }
    unsigned __int128 f = (static_cast<unsigned __int128>(exp) + 3) * pw + 2;
    if (f > static_cast<unsigned __int128>(~std::uint64_t(0))) return std::nullopt;
    return static_cast<std::uint64_t>(f);
}

namespace {

struct CliqueInfo {
    std::vector<int> vertices;                 // sorted
    std::vector<std::vector<int>> signature;   // sorted multiset of X-neighborhoods
};

std::vector<CliqueInfo> cluster_cliques(const Graph& g, const std::vector<int>& x) {
    std::vector<char> in_x(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : x) in_x[static_cast<std::size_t>(v)] = 1;
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_x[static_cast<std::size_t>(v)]) rest.push_back(v);

    // components of G - X
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<CliqueInfo> cliques;
    for (int root : rest) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        std::vector<int> comp, stack{root};
        visited[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!in_x[static_cast<std::size_t>(w)] && !visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.has_edge(comp[i], comp[j]))
                    throw InconsistencyError("dtc: component of G - X is not a clique");
        CliqueInfo info;
        info.vertices = comp;
        for (int v : comp) {
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                if (in_x[static_cast<std::size_t>(w)]) nb.push_back(w);
            info.signature.push_back(std::move(nb));
        }
        std::sort(info.signature.begin(), info.signature.end());
        cliques.push_back(std::move(info));
    }
    return cliques;
}

std::vector<int> remap_ids(const std::vector<int>& ids, const std::vector<int>& old_to_new) {
    std::vector<int> out;
    for (int v : ids) {
        int w = old_to_new[static_cast<std::size_t>(v)];
        if (w != -1) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<DtcKernel> dtc_kernel(const Graph& g, int k, const DtcOptions& options,
                                    const SearchConfig& cfg) {
    (void)cfg;
    auto x = cluster_deletion_set(g, k);
    if (!x) return std::nullopt;

    DtcKernel result{g, {}, *x};
    bool progressed = true;
    while (progressed) {
        progressed = false;
        std::vector<CliqueInfo> cliques = cluster_cliques(result.graph, result.deletion_set);

        // (c) >= 4 cliques of size >= 3 with one signature: the whole class
        // becomes one edge joined to the class neighborhood in X (the proof's
        // construction), or keeps three cliques under the statement variant.
        {
            std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> classes;
            for (std::size_t i = 0; i < cliques.size(); ++i)
                if (cliques[i].vertices.size() >= 3) classes[cliques[i].signature].push_back(i);
            for (const auto& [sig, members] : classes) {
                if (members.size() < 4) continue;
                std::vector<int> all;
                for (std::size_t idx : members)
                    all.insert(all.end(), cliques[idx].vertices.begin(),
                               cliques[idx].vertices.end());
                std::sort(all.begin(), all.end());
                if (!options.statement_variant) {
                    // class neighborhood Y in X
                    std::vector<int> y;
                    for (const auto& nb : sig) y.insert(y.end(), nb.begin(), nb.end());
                    std::sort(y.begin(), y.end());
                    y.erase(std::unique(y.begin(), y.end()), y.end());

                    int n = result.graph.vertex_count();
                    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
                    int next = 0;
                    std::size_t r = 0;
                    for (int v = 0; v < n; ++v) {
                        if (r < all.size() && all[r] == v) {
                            ++r;
                            continue;
                        }
                        old_to_new[static_cast<std::size_t>(v)] = next++;
                    }
                    Graph out(next + 2);
                    for (const auto& e : result.graph.edges()) {
                        int a = old_to_new[static_cast<std::size_t>(e[0])];
                        int b = old_to_new[static_cast<std::size_t>(e[1])];
                        if (a != -1 && b != -1) out.add_edge(a, b);
                    }
                    out.add_edge(next, next + 1);
                    for (int w : y) {
                        out.add_edge(next, old_to_new[static_cast<std::size_t>(w)]);
                        out.add_edge(next + 1, old_to_new[static_cast<std::size_t>(w)]);
                    }
                    TraceStep step{"dtc_replace_clique_class", all, all, {next, next + 1},
                                   old_to_new};
                    result.deletion_set = remap_ids(result.deletion_set, old_to_new);
                    result.graph = std::move(out);
                    result.trace.steps.push_back(std::move(step));
                } else {
                    std::vector<int> drop;
                    for (std::size_t t = 3; t < members.size(); ++t)
                        drop.insert(drop.end(), cliques[members[t]].vertices.begin(),
                                    cliques[members[t]].vertices.end());
                    std::sort(drop.begin(), drop.end());
                    int n = result.graph.vertex_count();
                    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
                    int next = 0;
                    std::size_t r = 0;
                    for (int v = 0; v < n; ++v) {
                        if (r < drop.size() && drop[r] == v) {
                            ++r;
                            continue;
                        }
                        old_to_new[static_cast<std::size_t>(v)] = next++;
                    }
                    Graph out(next);
                    for (const auto& e : result.graph.edges()) {
                        int a = old_to_new[static_cast<std::size_t>(e[0])];
                        int b = old_to_new[static_cast<std::size_t>(e[1])];
                        if (a != -1 && b != -1) out.add_edge(a, b);
                    }
                    TraceStep step{"dtc_trim_clique_class", all, drop, {}, old_to_new};
                    result.deletion_set = remap_ids(result.deletion_set, old_to_new);
                    result.graph = std::move(out);
                    result.trace.steps.push_back(std::move(step));
                }
                progressed = true;
                break;
            }
            if (progressed) continue;
        }

        // (a) within one clique, >= 3 vertices sharing an X-neighborhood form
        // a true-twin clique module: keep two.
        {
            bool fired = false;
            for (const auto& clique : cliques) {
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : clique.vertices) {
                    std::vector<int> nb;
                    for (int w : result.graph.neighbors(v))
                        if (std::binary_search(result.deletion_set.begin(),
                                               result.deletion_set.end(), w))
                            nb.push_back(w);
                    groups[nb].push_back(v);
                }
                for (const auto& [nb, members] : groups) {
                    if (members.size() < 3) continue;
                    GraphRewrite gr = replace_module(result.graph, members, Outcome::D);
                    result.deletion_set = remap_ids(result.deletion_set, gr.step.old_to_new);
                    result.graph = std::move(gr.graph);
                    gr.step.rule = "dtc_clique_twins";
                    result.trace.steps.push_back(std::move(gr.step));
                    fired = true;
                    break;
                }
                if (fired) break;
            }
            if (fired) {
                progressed = true;
                continue;
            }
        }

        // (b) singleton cliques with one signature form a stable module: keep
        // two.
        {
            std::map<std::vector<std::vector<int>>, std::vector<int>> groups;
            for (const auto& clique : cliques)
                if (clique.vertices.size() == 1)
                    groups[clique.signature].push_back(clique.vertices[0]);
            bool fired = false;
            for (const auto& [sig, members] : groups) {
                if (members.size() < 3) continue;
                GraphRewrite gr = replace_module(result.graph, members, Outcome::S);
                result.deletion_set = remap_ids(result.deletion_set, gr.step.old_to_new);
                result.graph = std::move(gr.graph);
                gr.step.rule = "dtc_singleton_twins";
                result.trace.steps.push_back(std::move(gr.step));
                fired = true;
                break;
            }
            if (fired) {
                progressed = true;
                continue;
            }
        }

        // (d) more than f(k) size-2 cliques with one signature: drop one.
        {
            auto threshold = dtc_claim2_threshold(k);
            if (!threshold) continue;
            std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> classes;
            for (std::size_t i = 0; i < cliques.size(); ++i)
                if (cliques[i].vertices.size() == 2) classes[cliques[i].signature].push_back(i);
            for (const auto& [sig, members] : classes) {
                if (static_cast<std::uint64_t>(members.size()) <= *threshold) continue;
                // drop the clique with the largest minimum vertex
                std::size_t victim = members[0];
                for (std::size_t idx : members)
                    if (cliques[idx].vertices[0] > cliques[victim].vertices[0]) victim = idx;
                const std::vector<int>& drop = cliques[victim].vertices;
                int n = result.graph.vertex_count();
                std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
                int next = 0;
                std::size_t r = 0;
                for (int v = 0; v < n; ++v) {
                    if (r < drop.size() && drop[r] == v) {
                        ++r;
                        continue;
                    }
                    old_to_new[static_cast<std::size_t>(v)] = next++;
                }
                Graph out(next);
                for (const auto& e : result.graph.edges()) {
                    int a = old_to_new[static_cast<std::size_t>(e[0])];
                    int b = old_to_new[static_cast<std::size_t>(e[1])];
                    if (a != -1 && b != -1) out.add_edge(a, b);
                }
                TraceStep step{"dtc_remove_size2_clique", drop, drop, {}, old_to_new};
                result.deletion_set = remap_ids(result.deletion_set, old_to_new);
                result.graph = std::move(out);
                result.trace.steps.push_back(std::move(step));
                progressed = true;
                break;
            }
        }
    }
    return result;
}

namespace {

/// Unclaimed leaf whose support is claimed by Dominator: the leaf is
/// dominated and useless to both players (its whole closed neighborhood is
/// dominated), so it can be dropped.
std::optional<RewriteResult> remove_dominated_leaf(const Position& p) {
    for (int v = 0; v < p.graph.vertex_count(); ++v) {
        if (p.graph.degree(v) != 1 || p.is_claimed(v)) continue;
        int support = p.graph.neighbors(v)[0];
        if (!std::binary_search(p.dominator.begin(), p.dominator.end(), support)) continue;
        std::vector<int> keep;
        for (int w = 0; w < p.graph.vertex_count(); ++w)
            if (w != v) keep.push_back(w);
        Graph out = p.graph.induced(keep);
        std::vector<int> old_to_new(static_cast<std::size_t>(p.graph.vertex_count()), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            old_to_new[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        RewriteResult result;
        result.position.graph = std::move(out);
        result.position.dominator = remap_ids(p.dominator, old_to_new);
        result.position.staller = remap_ids(p.staller, old_to_new);
        result.position.to_move = p.to_move;
        result.step = TraceStep{"remove_dominated_leaf", {v}, {v}, {}, std::move(old_to_new)};
        return result;
    }
    return std::nullopt;
}

std::optional<RewriteResult> split_claimed_rule(const Position& p) {
    for (int v : p.dominator)
        if (p.graph.degree(v) != 1) return split_dominator_vertex(p, v);
    return std::nullopt;
}

std::optional<RewriteResult> shorten_pending_rule(const Position& p) {
    for (int far : p.dominator) {
        if (p.graph.degree(far) != 1) continue;
        // walk back from the claimed leaf through unclaimed degree-2 vertices
        std::vector<int> back{far};
        int prev = far, cur = p.graph.neighbors(far)[0];
        while (!p.is_claimed(cur) && p.graph.degree(cur) == 2) {
            back.push_back(cur);
            int next = p.graph.neighbors(cur)[0] == prev ? p.graph.neighbors(cur)[1]
                                                         : p.graph.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        if (!p.is_claimed(cur) && p.graph.degree(cur) == 1) continue; // bare path component
        if (static_cast<int>(back.size()) < 4) continue;              // k <= 3 boundary
        std::vector<int> path(back.rbegin(), back.rend());
        auto result = shorten_pending_path(p, path);
        if (result) return result;
    }
    return std::nullopt;
}

std::optional<RewriteResult> shorten_internal_in_fen(const Position& p) {
    for (const auto& rule : default_rules())
        if (rule.name == "shorten_internal_path") return rule.apply(p);
    return std::nullopt;
}

} // namespace

std::pair<Position, ReductionTrace> fen_kernelize(Position p) {
    if (p.to_move != Player::Staller)
        throw InputError("fen_kernelize expects a Staller-to-move position");
    ReductionTrace trace;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        std::optional<RewriteResult> step;
        if ((step = force_leaf_support(p))) {
        } else if ((step = remove_dominated_staller_vertex(p))) {
        } else if ((step = remove_dominated_leaf(p))) {
        } else if ((step = split_claimed_rule(p))) {
        } else if ((step = shorten_pending_rule(p))) {
        } else if ((step = shorten_internal_in_fen(p))) {
        }
        if (step) {
            trace.steps.push_back(std::move(step->step));
            p = std::move(step->position);
            progressed = true;
        }
    }
    return {std::move(p), std::move(trace)};
}

Outcome solve_via_fen(const Graph& g, const SearchConfig& cfg) {
    if (g.vertex_count() == 0) return Outcome::D;

    auto winner_after = [&](Position p) {
        auto [reduced, trace] = fen_kernelize(std::move(p));
        return solve_position(reduced, cfg);
    };

    Player staller_first = winner_after(make_position(g, {}, {}, Player::Staller));

    // Dominator moving first wins iff some first move leads to a win with
    // Staller to move; the branches are independent subgames.
    int n = g.vertex_count();
    Player dominator_first = Player::Staller;
    int workers = std::min(env_worker_count(), n);
    if (workers <= 1) {
        for (int w = 0; w < n; ++w) {
            if (winner_after(make_position(g, {w}, {}, Player::Staller)) == Player::Dominator) {
                dominator_first = Player::Dominator;
                break;
            }
        }
    } else {
        std::vector<char> wins(static_cast<std::size_t>(n), 0);
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                int w;
                while ((w = next.fetch_add(1)) < n)
                    wins[static_cast<std::size_t>(w)] =
                        winner_after(make_position(g, {w}, {}, Player::Staller)) ==
                        Player::Dominator;
            });
        for (auto& t : pool) t.join();
        for (char c : wins)
            if (c) dominator_first = Player::Dominator;
    }
    if (dominator_first == Player::Dominator && staller_first == Player::Dominator)
        return Outcome::D;
    if (dominator_first == Player::Staller && staller_first == Player::Staller)
        return Outcome::S;
    if (dominator_first == Player::Dominator && staller_first == Player::Staller)
        return Outcome::N;
    throw InconsistencyError("fen solver: second player won with either side first");
}

} // namespace mbd
