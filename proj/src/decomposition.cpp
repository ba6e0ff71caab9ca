#include "mbd/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "mbd/errors.hpp"

namespace mbd {

namespace {

/// Components of the subgraph induced by verts (ids stay global).
std::vector<std::vector<int>> sub_components(const Graph& g, const std::vector<int>& verts,
                                             bool in_complement) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : verts) in[static_cast<std::size_t>(v)] = 1;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> comps;
    for (int root : verts) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        std::vector<int> comp, stack{root};
        visited[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            if (!in_complement) {
                for (int w : g.neighbors(u))
                    if (in[static_cast<std::size_t>(w)] && !visited[static_cast<std::size_t>(w)]) {
                        visited[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            } else {
                for (int w : verts)
                    if (w != u && !g.has_edge(u, w) && !visited[static_cast<std::size_t>(w)]) {
                        visited[static_cast<std::size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

/// Minimal module of g[verts] containing {a, b}.
std::vector<int> closure_within(const Graph& g, const std::vector<int>& verts, int a, int b) {
    std::vector<char> in_sub(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : verts) in_sub[static_cast<std::size_t>(v)] = 1;
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    in[static_cast<std::size_t>(a)] = in[static_cast<std::size_t>(b)] = 1;
    int size = 2;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : verts) {
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
    for (int v : verts)
        if (in[static_cast<std::size_t>(v)]) m.push_back(v);
    return m;
}

DecompNode decompose(const Graph& g, const std::vector<int>& verts) {
    if (verts.size() == 1) {
        DecompNode leaf;
        leaf.kind = DecompNode::Kind::Leaf;
        leaf.vertex = verts[0];
        return leaf;
    }
    auto comps = sub_components(g, verts, false);
    if (comps.size() >= 2) {
        DecompNode node;
        node.kind = DecompNode::Kind::Union;
        for (const auto& c : comps) node.children.push_back(decompose(g, c));
        return node;
    }
    auto cocomps = sub_components(g, verts, true);
    if (cocomps.size() >= 2) {
        DecompNode node;
        node.kind = DecompNode::Kind::Join;
        for (const auto& c : cocomps) node.children.push_back(decompose(g, c));
        return node;
    }

    // Prime: vertices a, b share a child iff their pair closure is proper.
    int n = static_cast<int>(verts.size());
    std::vector<int> cls(static_cast<std::size_t>(n));
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (cls[static_cast<std::size_t>(x)] != x) {
            cls[static_cast<std::size_t>(x)] =
                cls[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])];
            x = cls[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            std::vector<int> m = closure_within(g, verts, verts[static_cast<std::size_t>(i)],
                                                verts[static_cast<std::size_t>(j)]);
            if (static_cast<int>(m.size()) < n) cls[static_cast<std::size_t>(find(j))] = find(i);
        }
    std::vector<std::vector<int>> classes;
    std::vector<int> root_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_of[static_cast<std::size_t>(r)] == -1) {
            root_of[static_cast<std::size_t>(r)] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(root_of[static_cast<std::size_t>(r)])].push_back(
            verts[static_cast<std::size_t>(i)]);
    }
    std::sort(classes.begin(), classes.end());

    DecompNode node;
    node.kind = DecompNode::Kind::Substitution;
    node.quotient = Graph(static_cast<int>(classes.size()));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (g.has_edge(classes[i][0], classes[j][0]))
                node.quotient.add_edge(static_cast<int>(i), static_cast<int>(j));
    for (const auto& c : classes) node.children.push_back(decompose(g, c));
    return node;
}

} // namespace

std::vector<int> DecompNode::covered() const {
    std::vector<int> out;
    switch (kind) {
        case Kind::Leaf: out.push_back(vertex); break;
        case Kind::Union:
        case Kind::Join:
        case Kind::Substitution:
            for (const auto& c : children) {
                auto sub = c.covered();
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
        case Kind::Spider: {
            out = clique;
            out.insert(out.end(), stable.begin(), stable.end());
            for (const auto& c : children) {
                auto sub = c.covered();
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
        }
        case Kind::Separable: {
            out = h1;
            out.insert(out.end(), h2.begin(), h2.end());
            for (const auto& c : children) {
                auto sub = c.covered();
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
        }
        case Kind::Small: out = small_vertices; break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

DecompNode modular_decomposition(const Graph& g) {
    if (g.vertex_count() < 1)
        throw InputError("modular_decomposition: graph must have at least one vertex");
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return decompose(g, all);
}

int decomposition_width(const DecompNode& node) {
    int w = node.kind == DecompNode::Kind::Substitution ? node.quotient.vertex_count() : 0;
    for (const auto& c : node.children) w = std::max(w, decomposition_width(c));
    return w;
}

namespace {

void collect_edges(const DecompNode& node, Graph& out) {
    switch (node.kind) {
        case DecompNode::Kind::Leaf: return;
        case DecompNode::Kind::Union:
            for (const auto& c : node.children) collect_edges(c, out);
            return;
        case DecompNode::Kind::Join: {
            for (const auto& c : node.children) collect_edges(c, out);
            std::vector<std::vector<int>> sets;
            for (const auto& c : node.children) sets.push_back(c.covered());
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j)
                    for (int u : sets[i])
                        for (int v : sets[j]) out.add_edge(u, v);
            return;
        }
        case DecompNode::Kind::Substitution: {
            if (static_cast<int>(node.children.size()) != node.quotient.vertex_count())
                throw InputError("substitution node: child count differs from quotient order");
            for (const auto& c : node.children) collect_edges(c, out);
            std::vector<std::vector<int>> sets;
            for (const auto& c : node.children) sets.push_back(c.covered());
            for (const auto& e : node.quotient.edges())
                for (int u : sets[static_cast<std::size_t>(e[0])])
                    for (int v : sets[static_cast<std::size_t>(e[1])]) out.add_edge(u, v);
            return;
        }
        default:
            throw InputError("reconstruct: node kind requires the original graph's edges");
    }
}

} // namespace

Graph reconstruct(const DecompNode& node, int vertex_count) {
    Graph out(vertex_count);
    collect_edges(node, out);
    return out;
}

namespace {

void validate_node(const DecompNode& node, const Graph& g, int q) {
    std::vector<int> cov = node.covered();
    if (cov.empty()) throw InputError("decomposition node covers no vertices");
    for (std::size_t i = 0; i + 1 < cov.size(); ++i)
        if (cov[i] == cov[i + 1]) throw InputError("decomposition node repeats a vertex");
    for (int v : cov)
        if (!g.has_vertex(v)) throw InputError("decomposition node: vertex out of range");

    switch (node.kind) {
        case DecompNode::Kind::Leaf:
            if (!g.has_vertex(node.vertex)) throw InputError("leaf vertex out of range");
            return;
        case DecompNode::Kind::Small:
            if (node.small_vertices.empty()) throw InputError("small node without vertices");
            if (q >= 0 && static_cast<int>(node.small_vertices.size()) > q)
                throw InputError("small node exceeds the size cap");
            return;
        case DecompNode::Kind::Union: {
            if (node.children.size() < 2) throw InputError("union node needs >= 2 children");
            std::vector<std::vector<int>> sets;
            for (const auto& c : node.children) {
                validate_node(c, g, q);
                sets.push_back(c.covered());
            }
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j)
                    for (int u : sets[i])
                        for (int v : sets[j])
                            if (g.has_edge(u, v))
                                throw InputError("union node children are joined by an edge");
            return;
        }
        case DecompNode::Kind::Join: {
            if (node.children.size() < 2) throw InputError("join node needs >= 2 children");
            std::vector<std::vector<int>> sets;
            for (const auto& c : node.children) {
                validate_node(c, g, q);
                sets.push_back(c.covered());
            }
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j)
                    for (int u : sets[i])
                        for (int v : sets[j])
                            if (!g.has_edge(u, v))
                                throw InputError("join node children miss a cross edge");
            return;
        }
        case DecompNode::Kind::Substitution: {
            if (static_cast<int>(node.children.size()) != node.quotient.vertex_count())
                throw InputError("substitution node: child count differs from quotient order");
            std::vector<std::vector<int>> sets;
            for (const auto& c : node.children) {
                validate_node(c, g, q);
                sets.push_back(c.covered());
            }
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j) {
                    bool want = node.quotient.has_edge(static_cast<int>(i), static_cast<int>(j));
                    for (int u : sets[i])
                        for (int v : sets[j])
                            if (g.has_edge(u, v) != want)
                                throw InputError(
                                    "substitution node: cross edges disagree with quotient");
                }
            return;
        }
        case DecompNode::Kind::Spider: {
            std::size_t m = node.clique.size();
            if (m < 2 || node.stable.size() != m)
                throw InputError("spider node: need |C| = |S| >= 2");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) {
                    if (!g.has_edge(node.clique[i], node.clique[j]))
                        throw InputError("spider node: C is not a clique");
                    if (g.has_edge(node.stable[i], node.stable[j]))
                        throw InputError("spider node: S is not stable");
                }
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    bool want = node.thin ? i == j : i != j;
                    if (g.has_edge(node.stable[i], node.clique[j]) != want)
                        throw InputError("spider node: C-S pattern violated");
                }
            if (node.children.size() > 1) throw InputError("spider node: at most one R subtree");
            if (!node.children.empty()) {
                validate_node(node.children[0], g, q);
                for (int r : node.children[0].covered()) {
                    for (int c : node.clique)
                        if (!g.has_edge(r, c))
                            throw InputError("spider node: R not joined to C");
                    for (int s : node.stable)
                        if (g.has_edge(r, s))
                            throw InputError("spider node: R adjacent to S");
                }
            }
            return;
        }
        case DecompNode::Kind::Separable: {
            if (node.h1.empty() && node.h2.empty())
                throw InputError("separable node: H must be non-empty");
            if (node.children.size() != 1)
                throw InputError("separable node: exactly one inner subtree");
            if (q >= 0 && static_cast<int>(node.h1.size() + node.h2.size()) >= q)
                throw InputError("separable node: |H| must be smaller than q");
            validate_node(node.children[0], g, q);
            for (int v : node.children[0].covered()) {
                for (int a : node.h1)
                    if (!g.has_edge(v, a))
                        throw InputError("separable node: inner part not joined to H1");
                for (int b : node.h2)
                    if (g.has_edge(v, b))
                        throw InputError("separable node: inner part adjacent to H2");
            }
            return;
        }
    }
}

} // namespace

void validate_decomposition(const DecompNode& node, const Graph& g, int q) {
    validate_node(node, g, q);
    std::vector<int> cov = node.covered();
    if (static_cast<int>(cov.size()) != g.vertex_count())
        throw InputError("decomposition does not cover the whole vertex set");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cov[static_cast<std::size_t>(v)] != v)
            throw InputError("decomposition does not cover the whole vertex set");
}

Graph complement_graph(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

namespace {

std::optional<SpiderPartition> thin_spider_detect(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> stable, clique;
    std::vector<char> is_leaf(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) {
            stable.push_back(v);
            is_leaf[static_cast<std::size_t>(v)] = 1;
        }
    std::size_t m = stable.size();
    if (m < 2) return std::nullopt;
    std::vector<char> in_clique(static_cast<std::size_t>(n), 0);
    for (int s : stable) {
        int c = g.neighbors(s)[0];
        if (is_leaf[static_cast<std::size_t>(c)] || in_clique[static_cast<std::size_t>(c)])
            return std::nullopt; // shared support or support that is itself a leaf
        in_clique[static_cast<std::size_t>(c)] = 1;
        clique.push_back(c);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!g.has_edge(clique[i], clique[j])) return std::nullopt;
    SpiderPartition part;
    part.thin = true;
    part.c = clique;
    part.s = stable;
    for (int v = 0; v < n; ++v) {
        if (is_leaf[static_cast<std::size_t>(v)] || in_clique[static_cast<std::size_t>(v)])
            continue;
        for (int c : clique)
            if (!g.has_edge(v, c)) return std::nullopt;
        for (int s : stable)
            if (g.has_edge(v, s)) return std::nullopt;
        part.r.push_back(v);
    }
    return part;
}

} // namespace

std::optional<SpiderPartition> spider_detect(const Graph& g) {
    if (auto thin = thin_spider_detect(g)) return thin;
    auto co = thin_spider_detect(complement_graph(g));
    if (!co) return std::nullopt;
    SpiderPartition part;
    part.thin = false;
    part.r = co->r;
    part.c = co->s; // complement swaps the clique and stable sides
    part.s = co->c;
    return part;
}

} // namespace mbd
