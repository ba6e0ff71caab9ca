#include "mbd/gadgets.hpp"

#include "mbd/errors.hpp"

namespace mbd {

GadgetInstance staller_hardness_gadget(const Hypergraph& h, int k) {
    if (k < 0) throw InputError("staller_hardness_gadget: negative budget");
    std::vector<char> covered(static_cast<std::size_t>(h.n), 0);
    for (const auto& e : h.edges)
        for (int v : e) covered[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < h.n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            throw InputError("staller_hardness_gadget: vertex " + std::to_string(v) +
                             " lies in no hyperedge");

    int copies = k + 2;
    int total = h.n + copies * static_cast<int>(h.edges.size());
    GadgetInstance out;
    out.parameter_k = k;
    out.graph = Graph(total);
    for (int u = 0; u < h.n; ++u) {
        out.correspondence.push_back({"vertex:" + std::to_string(u), {u}});
        for (int v = u + 1; v < h.n; ++v) out.graph.add_edge(u, v);
    }
    int next = h.n;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        std::vector<int> fresh;
        for (int c = 0; c < copies; ++c) {
            for (int member : h.edges[e]) out.graph.add_edge(next, member);
            fresh.push_back(next++);
        }
        out.correspondence.push_back({"hyperedge:" + std::to_string(e), std::move(fresh)});
    }
    return out;
}

GadgetInstance dominator_hardness_gadget(const Graph& g) {
    int n = g.vertex_count();
    GadgetInstance out;
    out.graph = Graph(2 * n);
    auto x = [](int i) { return 2 * i; };
    auto y = [](int i) { return 2 * i + 1; };
    for (int i = 0; i < n; ++i) {
        out.graph.add_edge(x(i), y(i));
        out.correspondence.push_back({"vertex:" + std::to_string(i), {x(i), y(i)}});
    }
    for (const auto& e : g.edges()) {
        out.graph.add_edge(x(e[0]), x(e[1]));
        out.graph.add_edge(y(e[0]), y(e[1]));
        out.graph.add_edge(x(e[0]), y(e[1]));
        out.graph.add_edge(x(e[1]), y(e[0]));
    }
    return out;
}

GadgetInstance universal_vertex_gadget(const Graph& g) {
    GadgetInstance out;
    out.graph = add_universal_vertex(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        out.correspondence.push_back({"vertex:" + std::to_string(v), {v}});
    out.correspondence.push_back({"universal", {g.vertex_count()}});
    return out;
}

} // namespace mbd
