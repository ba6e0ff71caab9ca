#include "mbd/graph.hpp"

#include <algorithm>
#include <numeric>

#include "mbd/errors.hpp"
#include "mbd/rng.hpp"

namespace mbd {

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& nb : adj_) twice += static_cast<int>(nb.size());
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
    if (u == v) throw InputError("self-loop rejected at vertex " + std::to_string(u));
    auto insert_sorted = [](std::vector<int>& nb, int x) {
        auto it = std::lower_bound(nb.begin(), nb.end(), x);
        if (it == nb.end() || *it != x) nb.insert(it, x);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
}

std::vector<std::array<int, 2>> Graph::edges() const {
    std::vector<std::array<int, 2>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph sub(static_cast<int>(vertices.size()));
    std::vector<int> pos(static_cast<std::size_t>(vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (!has_vertex(v)) throw InputError("induced: vertex out of range");
        if (pos[static_cast<std::size_t>(v)] != -1) throw InputError("induced: duplicate vertex");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : neighbors(vertices[i])) {
            int j = pos[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
        }
    return sub;
}

Graph build_graph(int n, const std::vector<std::array<int, 2>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& set, const char* what) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : set) {
        if (!g.has_vertex(v)) throw InputError(std::string(what) + ": vertex out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

} // namespace

bool is_dominating(const Graph& g, const std::vector<int>& set) {
    std::vector<char> in = membership(g, set, "is_dominating");
    std::vector<char> covered = in;
    for (int v : set)
        for (int w : g.neighbors(v)) covered[static_cast<std::size_t>(w)] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_module(const Graph& g, const std::vector<int>& m) {
    std::vector<char> in = membership(g, m, "is_module");
    if (m.size() <= 1) return true;
    std::vector<int> reference;
    bool have_reference = false;
    for (int x : m) {
        std::vector<int> outside;
        for (int w : g.neighbors(x))
            if (!in[static_cast<std::size_t>(w)]) outside.push_back(w);
        if (!have_reference) {
            reference = std::move(outside);
            have_reference = true;
        } else if (outside != reference) {
            return false;
        }
    }
    return true;
}

TwinPartition twin_partition(const Graph& g) {
    int n = g.vertex_count();
    // Group by open and closed neighborhood; a vertex cannot have both a true
    // and a false twin, so size>=2 groups of the two kinds never overlap.
    std::vector<int> assigned(static_cast<std::size_t>(n), 0);
    TwinPartition part;

    auto collect = [&](bool closed) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            keys[static_cast<std::size_t>(v)] = closed ? closed_neighborhood(g, v) : g.neighbors(v);
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
        });
        for (std::size_t i = 0; i < order.size();) {
            std::size_t j = i;
            while (j < order.size() &&
                   keys[static_cast<std::size_t>(order[j])] == keys[static_cast<std::size_t>(order[i])])
                ++j;
            if (j - i >= 2) {
                TwinClass cls;
                cls.kind = closed ? TwinKind::True : TwinKind::False;
                for (std::size_t t = i; t < j; ++t) cls.vertices.push_back(order[t]);
                std::sort(cls.vertices.begin(), cls.vertices.end());
                for (int v : cls.vertices) assigned[static_cast<std::size_t>(v)] = 1;
                part.classes.push_back(std::move(cls));
            }
            i = j;
        }
    };

    collect(true);
    collect(false);
    for (int v = 0; v < n; ++v)
        if (!assigned[static_cast<std::size_t>(v)])
            part.classes.push_back(TwinClass{{v}, TwinKind::Singleton});

    std::sort(part.classes.begin(), part.classes.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.vertices[0] < b.vertices[0]; });
    return part;
}

Graph compose(const Graph& g, const Graph& h, ComposeKind kind) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng + nh);
    for (const auto& e : g.edges()) out.add_edge(e[0], e[1]);
    for (const auto& e : h.edges()) out.add_edge(e[0] + ng, e[1] + ng);
    if (kind == ComposeKind::Join)
        for (int u = 0; u < ng; ++u)
            for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    return out;
}

Graph make_path(int n) {
    if (n < 0) throw InputError("path: negative order");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_clique(int n) {
    if (n < 0) throw InputError("clique: negative order");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle: order must be at least 3");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_star(int leaves) {
    if (leaves < 0) throw InputError("star: negative leaf count");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph attach_path(const Graph& g, int u, int v, int k) {
    if (k < 1) throw InputError("attach_path: k must be at least 1");
    if (!g.has_vertex(u) || !g.has_vertex(v)) throw InputError("attach_path: anchor out of range");
    int n = g.vertex_count();
    Graph out(n + k);
    for (const auto& e : g.edges()) out.add_edge(e[0], e[1]);
    for (int i = 0; i + 1 < k; ++i) out.add_edge(n + i, n + i + 1);
    out.add_edge(n, u);
    if (k == 1 && u == v) return out; // single internal vertex, both ends meet u
    out.add_edge(n + k - 1, v);
    return out;
}

Graph attach_pending_path(const Graph& g, int u, int k) {
    if (k < 1) throw InputError("attach_pending_path: k must be at least 1");
    if (!g.has_vertex(u)) throw InputError("attach_pending_path: anchor out of range");
    int n = g.vertex_count();
    Graph out(n + k);
    for (const auto& e : g.edges()) out.add_edge(e[0], e[1]);
    for (int i = 0; i + 1 < k; ++i) out.add_edge(n + i, n + i + 1);
    out.add_edge(n, u);
    return out;
}

Graph add_universal_vertex(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n + 1);
    for (const auto& e : g.edges()) out.add_edge(e[0], e[1]);
    for (int v = 0; v < n; ++v) out.add_edge(n, v);
    return out;
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 0) throw InputError("random_graph: negative order");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw InputError("random_graph: probability outside [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(edge_probability)) g.add_edge(u, v);
    return g;
}

FeedbackEdgeSet feedback_edge_set(const Graph& g) {
    int n = g.vertex_count();
    FeedbackEdgeSet result;
    int ncomp = 0;
    // Iterative DFS building a spanning forest; edges not used by the forest
    // are the feedback edges. Each non-tree edge {u,w} is recorded exactly
    // once, from the endpoint with the smaller index.
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        ++ncomp;
        std::vector<int> stack{root};
        visited[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    stack.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)] && u < w) {
                    result.edges.push_back({u, w});
                }
            }
        }
    }
    result.count = g.edge_count() - n + ncomp;
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        std::vector<int> comp, stack{root};
        visited[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!visited[static_cast<std::size_t>(w)]) {
                    visited[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

ClusterProfile cluster_profile(const Graph& g) {
    ClusterProfile profile;
    profile.is_cluster = true;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) ++profile.isolated_count;
        int want = static_cast<int>(comp.size()) - 1;
        for (int v : comp)
            if (g.degree(v) != want) profile.is_cluster = false;
    }
    return profile;
}

} // namespace mbd
