#include "mbd/rewrite.hpp"

#include <algorithm>
#include <numeric>

#include "mbd/errors.hpp"

namespace mbd {

namespace {

struct Deletion {
    Graph graph;
    std::vector<int> old_to_new;
};

Deletion delete_vertices(const Graph& g, std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    int n = g.vertex_count();
    Deletion out;
    out.old_to_new.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::size_t r = 0;
    for (int v = 0; v < n; ++v) {
        if (r < removed.size() && removed[r] == v) {
            ++r;
            continue;
        }
        out.old_to_new[static_cast<std::size_t>(v)] = next++;
    }
    out.graph = Graph(next);
    for (const auto& e : g.edges()) {
        int a = out.old_to_new[static_cast<std::size_t>(e[0])];
        int b = out.old_to_new[static_cast<std::size_t>(e[1])];
        if (a != -1 && b != -1) out.graph.add_edge(a, b);
    }
    return out;
}

std::vector<int> remap_claims(const std::vector<int>& claims, const std::vector<int>& old_to_new) {
    std::vector<int> out;
    for (int v : claims) {
        int w = old_to_new[static_cast<std::size_t>(v)];
        if (w != -1) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> identity_map(int n) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    return map;
}

void insert_sorted(std::vector<int>& set, int v) {
    set.insert(std::lower_bound(set.begin(), set.end(), v), v);
}

bool contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Minimal module containing {u, v}: grow by absorbing splitters.
std::vector<int> module_closure(const Graph& g, int u, int v) {
    int n = g.vertex_count();
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    in[static_cast<std::size_t>(u)] = in[static_cast<std::size_t>(v)] = 1;
    int size = 2;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (in[static_cast<std::size_t>(x)]) continue;
            int adj = 0;
            for (int w : g.neighbors(x))
                if (in[static_cast<std::size_t>(w)]) ++adj;
            if (adj > 0 && adj < size) {
                in[static_cast<std::size_t>(x)] = 1;
                ++size;
                changed = true;
            }
        }
    }
    std::vector<int> m;
    for (int x = 0; x < n; ++x)
        if (in[static_cast<std::size_t>(x)]) m.push_back(x);
    return m;
}

bool induces_clique(const Graph& g, const std::vector<int>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!g.has_edge(m[i], m[j])) return false;
    return true;
}

bool induces_stable_set(const Graph& g, const std::vector<int>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.has_edge(m[i], m[j])) return false;
    return true;
}

} // namespace

std::vector<int> ReductionTrace::composed_map(int original_n) const {
    std::vector<int> map = identity_map(original_n);
    for (const auto& s : steps)
        for (auto& m : map) {
            if (m == -1) continue;
            if (m >= static_cast<int>(s.old_to_new.size()))
                throw InconsistencyError("trace step map does not cover its pre-graph");
            m = s.old_to_new[static_cast<std::size_t>(m)];
        }
    return map;
}

std::optional<RewriteResult> remove_dominated_staller_vertex(const Position& p) {
    for (int v : p.staller) {
        bool has_dom_neighbor = false;
        for (int w : p.graph.neighbors(v))
            if (contains(p.dominator, w)) {
                has_dom_neighbor = true;
                break;
            }
        if (!has_dom_neighbor) continue;
        Deletion del = delete_vertices(p.graph, {v});
        RewriteResult result;
        result.position.graph = std::move(del.graph);
        result.position.dominator = remap_claims(p.dominator, del.old_to_new);
        result.position.staller = remap_claims(p.staller, del.old_to_new);
        result.position.to_move = p.to_move;
        result.step = TraceStep{"remove_dominated_staller_vertex", {v}, {v}, {},
                                std::move(del.old_to_new)};
        return result;
    }
    return std::nullopt;
}

RewriteResult split_dominator_vertex(const Position& p, int v) {
    if (!contains(p.dominator, v))
        throw InputError("split_dominator_vertex: vertex not claimed by Dominator");
    std::vector<int> nbrs = p.graph.neighbors(v);
    Deletion del = delete_vertices(p.graph, {v});
    int base = del.graph.vertex_count();
    int d = static_cast<int>(nbrs.size());
    Graph out(base + d);
    for (const auto& e : del.graph.edges()) out.add_edge(e[0], e[1]);
    std::vector<int> added;
    for (int i = 0; i < d; ++i) {
        int leaf = base + i;
        out.add_edge(leaf, del.old_to_new[static_cast<std::size_t>(nbrs[static_cast<std::size_t>(i)])]);
        added.push_back(leaf);
    }
    RewriteResult result;
    result.position.graph = std::move(out);
    result.position.dominator = remap_claims(p.dominator, del.old_to_new);
    for (int leaf : added) insert_sorted(result.position.dominator, leaf);
    result.position.staller = remap_claims(p.staller, del.old_to_new);
    result.position.to_move = p.to_move;
    result.step =
        TraceStep{"split_dominator_vertex", {v}, {v}, added, std::move(del.old_to_new)};
    return result;
}

std::optional<RewriteResult> force_leaf_support(const Position& p) {
    if (p.to_move != Player::Staller) return std::nullopt;
    int n = p.graph.vertex_count();
    for (int v0 = 0; v0 < n; ++v0) {
        if (p.graph.degree(v0) != 1 || p.is_claimed(v0)) continue;
        int v1 = p.graph.neighbors(v0)[0];
        if (p.is_claimed(v1)) continue;
        Deletion del = delete_vertices(p.graph, {v0, v1});
        RewriteResult result;
        result.position.graph = std::move(del.graph);
        result.position.dominator = remap_claims(p.dominator, del.old_to_new);
        result.position.staller = remap_claims(p.staller, del.old_to_new);
        result.position.to_move = Player::Staller;
        result.step =
            TraceStep{"force_leaf_support", {v0, v1}, {v0, v1}, {}, std::move(del.old_to_new)};
        return result;
    }
    return std::nullopt;
}

RewriteResult assign_twins(const Position& p, int u, int v) {
    if (!p.graph.has_vertex(u) || !p.graph.has_vertex(v) || u == v)
        throw InputError("assign_twins: invalid vertex pair");
    if (p.is_claimed(u) || p.is_claimed(v))
        throw InputError("assign_twins: vertices must be unclaimed");
    std::vector<int> cu = closed_neighborhood(p.graph, u);
    std::vector<int> cv = closed_neighborhood(p.graph, v);
    bool true_twins = cu == cv;
    bool false_twins = p.graph.neighbors(u) == p.graph.neighbors(v);
    if (!true_twins && !false_twins)
        throw InputError("assign_twins: vertices are not twins");
    RewriteResult result;
    result.position = p;
    insert_sorted(result.position.dominator, u);
    insert_sorted(result.position.staller, v);
    result.step = TraceStep{"assign_twins", {u, v}, {}, {}, identity_map(p.graph.vertex_count())};
    return result;
}

GraphRewrite replace_module(const Graph& g, const std::vector<int>& m, Outcome module_outcome) {
    if (!is_module(g, m)) throw InputError("replace_module: set is not a module");
    std::vector<int> sorted = m;
    std::sort(sorted.begin(), sorted.end());

    // attachment = outside vertices adjacent to the module
    std::vector<int> attachment;
    if (!sorted.empty())
        for (int w : g.neighbors(sorted[0]))
            if (!contains(sorted, w)) attachment.push_back(w);

    Deletion del = delete_vertices(g, sorted);
    int replacement_size = module_outcome == Outcome::N ? 3 : 2;
    int base = del.graph.vertex_count();
    Graph out(base + replacement_size);
    for (const auto& e : del.graph.edges()) out.add_edge(e[0], e[1]);
    if (module_outcome == Outcome::D) out.add_edge(base, base + 1);          // P2
    if (module_outcome == Outcome::N) {                                      // P3
        out.add_edge(base, base + 1);
        out.add_edge(base + 1, base + 2);
    }
    std::vector<int> added;
    for (int i = 0; i < replacement_size; ++i) {
        added.push_back(base + i);
        for (int w : attachment)
            out.add_edge(base + i, del.old_to_new[static_cast<std::size_t>(w)]);
    }
    return GraphRewrite{std::move(out), TraceStep{"replace_module", sorted, sorted, added,
                                                  std::move(del.old_to_new)}};
}

std::optional<GraphRewrite> replace_module(const Graph& g, const std::vector<int>& m,
                                           const SearchConfig& cfg) {
    if (m.size() < 3) return std::nullopt;
    if (m.size() > 14) return std::nullopt; // solver refusal threshold
    if (!is_module(g, m)) throw InputError("replace_module: set is not a module");
    Outcome o;
    if (induces_clique(g, m))
        o = Outcome::D;
    else if (induces_stable_set(g, m))
        o = Outcome::S;
    else
        o = outcome(g.induced(m), {}, {}, cfg);
    return replace_module(g, m, o);
}

std::optional<GraphRewrite> shorten_internal_path(const Graph& g, const std::vector<int>& path,
                                                  const std::vector<int>& d_claimed) {
    std::vector<int> claimed = d_claimed;
    std::sort(claimed.begin(), claimed.end());
    for (int v : path)
        if (contains(claimed, v))
            throw InputError("shorten_internal_path: claimed vertex on the path");
    int k = static_cast<int>(path.size());
    if (k < 9) return std::nullopt;
    for (int i = 0; i < k; ++i) {
        if (g.degree(path[static_cast<std::size_t>(i)]) != 2)
            throw InputError("shorten_internal_path: path vertex of degree != 2");
        if (i + 1 < k && !g.has_edge(path[static_cast<std::size_t>(i)],
                                     path[static_cast<std::size_t>(i + 1)]))
            throw InputError("shorten_internal_path: vertices not consecutive");
    }
    // anchors: the outside neighbors of the extremities
    auto outside_neighbor = [&](int end, int inner) {
        for (int w : g.neighbors(end))
            if (w != inner) return w;
        throw InputError("shorten_internal_path: extremity has no anchor");
    };
    int v_anchor = outside_neighbor(path[static_cast<std::size_t>(k - 1)],
                                    path[static_cast<std::size_t>(k - 2)]);

    int drop1 = path[static_cast<std::size_t>(k - 1)];
    int drop2 = path[static_cast<std::size_t>(k - 2)];
    int bridge = path[static_cast<std::size_t>(k - 3)];
    Deletion del = delete_vertices(g, {drop1, drop2});
    del.graph.add_edge(del.old_to_new[static_cast<std::size_t>(bridge)],
                       del.old_to_new[static_cast<std::size_t>(v_anchor)]);
    return GraphRewrite{std::move(del.graph),
                        TraceStep{"shorten_internal_path", path, {std::min(drop1, drop2),
                                  std::max(drop1, drop2)}, {}, std::move(del.old_to_new)}};
}

std::optional<RewriteResult> shorten_pending_path(const Position& p,
                                                  const std::vector<int>& path) {
    int k = static_cast<int>(path.size());
    if (k < 1) throw InputError("shorten_pending_path: empty path");
    int far = path[static_cast<std::size_t>(k - 1)];
    if (!contains(p.dominator, far)) return std::nullopt; // far endpoint must be Dominator's
    if (p.graph.degree(far) != 1)
        throw InputError("shorten_pending_path: far endpoint is not a leaf");
    for (int i = 0; i + 1 < k; ++i) {
        int v = path[static_cast<std::size_t>(i)];
        if (p.is_claimed(v)) throw InputError("shorten_pending_path: claimed interior vertex");
        if (p.graph.degree(v) != 2)
            throw InputError("shorten_pending_path: interior vertex of degree != 2");
        if (!p.graph.has_edge(v, path[static_cast<std::size_t>(i + 1)]))
            throw InputError("shorten_pending_path: vertices not consecutive");
    }
    if (k <= 3) return std::nullopt;

    // keep v1, v2 and the claimed endpoint; drop v3..v(k-1)
    std::vector<int> drop(path.begin() + 2, path.end() - 1);
    Deletion del = delete_vertices(p.graph, drop);
    del.graph.add_edge(del.old_to_new[static_cast<std::size_t>(path[1])],
                       del.old_to_new[static_cast<std::size_t>(far)]);
    RewriteResult result;
    result.position.graph = std::move(del.graph);
    result.position.dominator = remap_claims(p.dominator, del.old_to_new);
    result.position.staller = remap_claims(p.staller, del.old_to_new);
    result.position.to_move = p.to_move;
    std::vector<int> removed = drop;
    std::sort(removed.begin(), removed.end());
    result.step = TraceStep{"shorten_pending_path", path, removed, {}, std::move(del.old_to_new)};
    return result;
}

Outcome compose_outcome_union(Outcome a, Outcome b) {
    if (a == Outcome::S || b == Outcome::S) return Outcome::S;
    if (a == Outcome::N && b == Outcome::N) return Outcome::S;
    if (a == Outcome::D && b == Outcome::D) return Outcome::D;
    return Outcome::N;
}

Outcome compose_outcome_join(Outcome a, bool a_is_k1, Outcome b, bool b_is_k1) {
    if (a_is_k1 && b == Outcome::S) return Outcome::N;
    if (b_is_k1 && a == Outcome::S) return Outcome::N;
    return Outcome::D;
}

Outcome compose_outcome_cluster(const ClusterProfile& profile) {
    if (!profile.is_cluster)
        throw InputError("compose_outcome_cluster: profile is not a cluster");
    if (profile.isolated_count == 0) return Outcome::D;
    if (profile.isolated_count == 1) return Outcome::N;
    return Outcome::S;
}

namespace {

std::optional<RewriteResult> split_rule(const Position& p) {
    // degree-1 Dominator vertices are already in final (split leaf) form;
    // re-splitting them would loop
    for (int v : p.dominator)
        if (p.graph.degree(v) != 1) return split_dominator_vertex(p, v);
    return std::nullopt;
}

bool is_path_shape(const Graph& g, const std::vector<int>& m) {
    // 3-vertex module inducing P3 (the N-outcome replacement itself)
    int deg1 = 0, deg2 = 0;
    for (int v : m) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (std::find(m.begin(), m.end(), w) != m.end()) ++d;
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
    }
    return m.size() == 3 && deg1 == 2 && deg2 == 1;
}

std::optional<RewriteResult> replace_module_rule(const Position& p, const SearchConfig& cfg) {
    int n = p.graph.vertex_count();
    std::vector<int> unclaimed = p.unclaimed();
    for (std::size_t i = 0; i < unclaimed.size(); ++i)
        for (std::size_t j = i + 1; j < unclaimed.size(); ++j) {
            std::vector<int> m = module_closure(p.graph, unclaimed[i], unclaimed[j]);
            if (static_cast<int>(m.size()) >= n) continue; // proper modules only
            if (m.size() < 3 || m.size() > 14) continue;
            bool clean = true;
            for (int v : m)
                if (p.is_claimed(v)) {
                    clean = false;
                    break;
                }
            if (!clean) continue;
            Outcome o;
            if (induces_clique(p.graph, m))
                o = Outcome::D;
            else if (induces_stable_set(p.graph, m))
                o = Outcome::S;
            else
                o = outcome(p.graph.induced(m), {}, {}, cfg);
            if (o == Outcome::N && is_path_shape(p.graph, m)) continue; // would be a no-op
            GraphRewrite gr = replace_module(p.graph, m, o);
            RewriteResult result;
            result.position.graph = std::move(gr.graph);
            result.position.dominator = remap_claims(p.dominator, gr.step.old_to_new);
            result.position.staller = remap_claims(p.staller, gr.step.old_to_new);
            result.position.to_move = p.to_move;
            result.step = std::move(gr.step);
            return result;
        }
    return std::nullopt;
}

/// Maximal runs of unclaimed degree-2 vertices, each reported in path order.
/// Cycle components (every vertex degree 2 and unclaimed) are reported with
/// designated anchors: the run excludes the component minimum and its
/// smallest neighbor.
struct Chain {
    std::vector<int> vertices;
};

std::vector<Chain> degree2_chains(const Position& p) {
    const Graph& g = p.graph;
    int n = g.vertex_count();
    std::vector<char> chain_vertex(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2 && !p.is_claimed(v)) chain_vertex[static_cast<std::size_t>(v)] = 1;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Chain> chains;

    auto walk = [&](int start, int from) {
        std::vector<int> run{start};
        used[static_cast<std::size_t>(start)] = 1;
        int prev = from, cur = start;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev && chain_vertex[static_cast<std::size_t>(w)] &&
                    !used[static_cast<std::size_t>(w)])
                    next = w;
            if (next == -1) break;
            run.push_back(next);
            used[static_cast<std::size_t>(next)] = 1;
            prev = cur;
            cur = next;
        }
        return run;
    };

    // path-like runs: start from chain vertices with an anchor neighbor
    for (int v = 0; v < n; ++v) {
        if (!chain_vertex[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(v)])
            continue;
        int anchor = -1;
        for (int w : g.neighbors(v))
            if (!chain_vertex[static_cast<std::size_t>(w)]) anchor = w;
        if (anchor == -1) continue; // interior of a run, or cycle component
        chains.push_back(Chain{walk(v, anchor)});
    }
    // remaining unused chain vertices form pure cycle components
    for (int v = 0; v < n; ++v) {
        if (!chain_vertex[static_cast<std::size_t>(v)] || used[static_cast<std::size_t>(v)])
            continue;
        // v is the component minimum (scan order); exclude v and its smallest
        // neighbor as anchors, walk the rest
        int u2 = std::min(g.neighbors(v)[0], g.neighbors(v)[1]);
        int start = std::max(g.neighbors(v)[0], g.neighbors(v)[1]);
        used[static_cast<std::size_t>(v)] = 1;
        used[static_cast<std::size_t>(u2)] = 1;
        if (start == u2 || !chain_vertex[static_cast<std::size_t>(start)]) continue;
        std::vector<int> run = walk(start, v);
        // the run ends next to u2; anchors are v and u2
        chains.push_back(Chain{std::move(run)});
    }
    return chains;
}

std::optional<RewriteResult> shorten_internal_rule(const Position& p) {
    if (!p.staller.empty()) return std::nullopt; // Staller claims break the lemma's premise
    for (const Chain& chain : degree2_chains(p)) {
        if (chain.vertices.size() < 9) continue;
        auto gr = shorten_internal_path(p.graph, chain.vertices, p.dominator);
        if (!gr) continue;
        RewriteResult result;
        result.position.graph = std::move(gr->graph);
        result.position.dominator = remap_claims(p.dominator, gr->step.old_to_new);
        result.position.staller = remap_claims(p.staller, gr->step.old_to_new);
        result.position.to_move = p.to_move;
        result.step = std::move(gr->step);
        return result;
    }
    return std::nullopt;
}

} // namespace

std::vector<RewriteRule> default_rules(const SearchConfig& solver_cfg) {
    std::vector<RewriteRule> rules;
    rules.push_back({"remove_dominated_staller_vertex",
                     [](const Position& p) { return remove_dominated_staller_vertex(p); }});
    rules.push_back({"force_leaf_support", [](const Position& p) { return force_leaf_support(p); }});
    rules.push_back({"split_dominator_vertex", [](const Position& p) { return split_rule(p); }});
    rules.push_back({"replace_module", [solver_cfg](const Position& p) {
                         return replace_module_rule(p, solver_cfg);
                     }});
    rules.push_back(
        {"shorten_internal_path", [](const Position& p) { return shorten_internal_rule(p); }});
    return rules;
}

RewriteRule assign_twins_rule() {
    return {"assign_twins", [](const Position& p) -> std::optional<RewriteResult> {
                std::vector<int> unclaimed = p.unclaimed();
                for (std::size_t i = 0; i < unclaimed.size(); ++i)
                    for (std::size_t j = i + 1; j < unclaimed.size(); ++j) {
                        int u = unclaimed[i], v = unclaimed[j];
                        bool true_twins = closed_neighborhood(p.graph, u) ==
                                          closed_neighborhood(p.graph, v);
                        bool false_twins = p.graph.neighbors(u) == p.graph.neighbors(v);
                        if (true_twins || false_twins) return assign_twins(p, u, v);
                    }
                return std::nullopt;
            }};
}

std::pair<Position, ReductionTrace> reduce_fixpoint(Position p,
                                                    const std::vector<RewriteRule>& rules) {
    ReductionTrace trace;
    std::size_t vertex_budget = static_cast<std::size_t>(p.graph.vertex_count());
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const auto& rule : rules) {
            std::optional<RewriteResult> result = rule.apply(p);
            if (!result) continue;
            vertex_budget += result->step.added.size();
            trace.steps.push_back(std::move(result->step));
            p = std::move(result->position);
            progressed = true;
            if (trace.steps.size() > 4 * vertex_budget + 16)
                throw InconsistencyError("reduce_fixpoint exceeded its step cap");
            break; // restart from the highest-priority rule
        }
    }
    return {std::move(p), std::move(trace)};
}

} // namespace mbd
