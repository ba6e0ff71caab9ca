#include "mbd/io.hpp"

#include <fstream>
#include <sstream>

#include "mbd/errors.hpp"

namespace mbd {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e[0], e[1]});
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

Graph graph_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<std::array<int, 2>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("graph json: edge entries must be pairs");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        Graph g = build_graph(n, edges);
        if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
        return g;
    } catch (const json::exception& ex) {
        throw InputError(std::string("graph json: ") + ex.what());
    }
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) out << e[0] << ' ' << e[1] << '\n';
    return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
    std::vector<std::array<int, 2>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw InputError("edge list: truncated edge section");
        edges.push_back({u, v});
    }
    return build_graph(n, edges);
}

json hypergraph_to_json(const Hypergraph& h) {
    json j;
    j["n"] = h.n;
    j["edges"] = h.edges;
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    try {
        return build_hypergraph(j.at("n").get<int>(),
                                j.at("edges").get<std::vector<std::vector<int>>>());
    } catch (const json::exception& ex) {
        throw InputError(std::string("hypergraph json: ") + ex.what());
    }
}

json decomposition_to_json(const DecompNode& node) {
    json j;
    switch (node.kind) {
        case DecompNode::Kind::Leaf:
            j["kind"] = "leaf";
            j["vertex"] = node.vertex;
            break;
        case DecompNode::Kind::Union:
        case DecompNode::Kind::Join: {
            j["kind"] = node.kind == DecompNode::Kind::Union ? "union" : "join";
            j["children"] = json::array();
            for (const auto& c : node.children) j["children"].push_back(decomposition_to_json(c));
            break;
        }
        case DecompNode::Kind::Substitution: {
            j["kind"] = "substitution";
            j["quotient"] = graph_to_json(node.quotient);
            j["children"] = json::array();
            for (const auto& c : node.children) j["children"].push_back(decomposition_to_json(c));
            break;
        }
        case DecompNode::Kind::Spider: {
            j["kind"] = "spider";
            j["thin"] = node.thin;
            j["c"] = node.clique;
            j["s"] = node.stable;
            if (!node.children.empty()) j["r"] = decomposition_to_json(node.children[0]);
            break;
        }
        case DecompNode::Kind::Separable: {
            j["kind"] = "separable";
            j["h1"] = node.h1;
            j["h2"] = node.h2;
            j["inner"] = decomposition_to_json(node.children[0]);
            break;
        }
        case DecompNode::Kind::Small:
            j["kind"] = "small";
            j["vertices"] = node.small_vertices;
            break;
    }
    return j;
}

DecompNode decomposition_from_json(const json& j) {
    try {
        DecompNode node;
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "leaf") {
            node.kind = DecompNode::Kind::Leaf;
            node.vertex = j.at("vertex").get<int>();
        } else if (kind == "union" || kind == "join") {
            node.kind = kind == "union" ? DecompNode::Kind::Union : DecompNode::Kind::Join;
            for (const auto& c : j.at("children"))
                node.children.push_back(decomposition_from_json(c));
        } else if (kind == "substitution") {
            node.kind = DecompNode::Kind::Substitution;
            node.quotient = graph_from_json(j.at("quotient"));
            for (const auto& c : j.at("children"))
                node.children.push_back(decomposition_from_json(c));
        } else if (kind == "spider") {
            node.kind = DecompNode::Kind::Spider;
            node.thin = j.at("thin").get<bool>();
            node.clique = j.at("c").get<std::vector<int>>();
            node.stable = j.at("s").get<std::vector<int>>();
            if (j.contains("r")) node.children.push_back(decomposition_from_json(j.at("r")));
        } else if (kind == "separable") {
            node.kind = DecompNode::Kind::Separable;
            node.h1 = j.at("h1").get<std::vector<int>>();
            node.h2 = j.at("h2").get<std::vector<int>>();
            node.children.push_back(decomposition_from_json(j.at("inner")));
        } else if (kind == "small") {
            node.kind = DecompNode::Kind::Small;
            node.small_vertices = j.at("vertices").get<std::vector<int>>();
        } else {
            throw InputError("decomposition json: unknown node kind '" + kind + "'");
        }
        return node;
    } catch (const json::exception& ex) {
        throw InputError(std::string("decomposition json: ") + ex.what());
    }
}

json trace_step_to_json(const TraceStep& step) {
    json j;
    j["rule"] = step.rule;
    j["matched"] = step.matched;
    j["removed"] = step.removed;
    j["added"] = step.added;
    j["map"] = step.old_to_new;
    return j;
}

std::string trace_to_json_lines(const ReductionTrace& trace) {
    std::ostringstream out;
    for (const auto& step : trace.steps) out << trace_step_to_json(step).dump() << '\n';
    return out.str();
}

json gadget_to_json(const GadgetInstance& instance) {
    json j;
    j["graph"] = graph_to_json(instance.graph);
    json corr = json::object();
    for (const auto& [key, verts] : instance.correspondence) corr[key] = verts;
    j["correspondence"] = corr;
    if (instance.parameter_k >= 0) j["k"] = instance.parameter_k;
    return j;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

json parse_json(const std::string& text, const std::string& path) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed json in " + path);
    return j;
}

} // namespace

Graph load_graph_file(const std::string& path) {
    std::string text = read_file(path);
    if (looks_like_json(text)) return graph_from_json(parse_json(text, path));
    return graph_from_edge_list(text);
}

Hypergraph load_hypergraph_file(const std::string& path) {
    std::string text = read_file(path);
    if (!looks_like_json(text))
        throw InputError("hypergraph files must be json: " + path);
    return hypergraph_from_json(parse_json(text, path));
}

DecompNode load_decomposition_file(const std::string& path) {
    std::string text = read_file(path);
    if (!looks_like_json(text))
        throw InputError("decomposition files must be json: " + path);
    return decomposition_from_json(parse_json(text, path));
}

} // namespace mbd
