#include "mbd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbd/errors.hpp"
#include "mbd/fpt.hpp"
#include "mbd/gadgets.hpp"
#include "mbd/harness.hpp"
#include "mbd/io.hpp"
#include "mbd/rewrite.hpp"
#include "mbd/solver.hpp"

namespace mbd {

namespace {

using nlohmann::json;

Role parse_role(const std::string& name) {
    if (name == "maker") return Role::Maker;
    if (name == "breaker") return Role::Breaker;
    if (name == "dominator") return Role::Dominator;
    if (name == "staller") return Role::Staller;
    throw InputError("unknown role: " + name);
}

int cmd_solve(const std::string& file, const std::vector<int>& dom, const std::vector<int>& stal,
              const std::string& first, bool as_json, std::ostream& out) {
    Graph g = load_graph_file(file);
    if (first.empty()) {
        Outcome o = outcome(g, dom, stal);
        if (as_json)
            out << json{{"outcome", to_string(o)}}.dump() << "\n";
        else
            out << "outcome: " << to_string(o) << "\n";
        return 0;
    }
    Player mover;
    if (first == "dominator")
        mover = Player::Dominator;
    else if (first == "staller")
        mover = Player::Staller;
    else
        throw InputError("--first must be dominator or staller");
    Player w = solve_position(make_position(g, dom, stal, mover));
    if (as_json)
        out << json{{"winner", to_string(w)}}.dump() << "\n";
    else
        out << "winner: " << to_string(w) << "\n";
    return 0;
}

int cmd_short(const std::string& file, const std::string& role_name, int k,
              const std::string& first_name, bool as_json, std::ostream& out) {
    Role role = parse_role(role_name);
    Role first = parse_role(first_name);
    bool result;
    if (role == Role::Maker || role == Role::Breaker)
        result = short_game_win(load_hypergraph_file(file), ShortQuery{role, k, first});
    else
        result = short_game_win(load_graph_file(file), ShortQuery{role, k, first});
    if (as_json)
        out << json{{"win", result}}.dump() << "\n";
    else
        out << (result ? "true" : "false") << "\n";
    return 0;
}

int cmd_kernelize(const std::string& file, const std::string& param, int k, bool as_json,
                  std::ostream& out) {
    Graph g = load_graph_file(file);
    Graph reduced;
    ReductionTrace trace;
    json extra = json::object();
    if (param == "nd") {
        KernelResult kr = nd_kernel(g);
        reduced = std::move(kr.graph);
        trace = std::move(kr.trace);
    } else if (param == "mw") {
        KernelResult kr = mw_kernel(g);
        reduced = std::move(kr.graph);
        trace = std::move(kr.trace);
    } else if (param == "dtc") {
        if (k < 0) throw InputError("kernelize --param dtc requires --k");
        auto kr = dtc_kernel(g, k);
        if (!kr) {
            if (as_json)
                out << json{{"infeasible", true}}.dump() << "\n";
            else
                out << "infeasible\n";
            return 0;
        }
        reduced = std::move(kr->graph);
        trace = std::move(kr->trace);
        extra["deletion_set"] = kr->deletion_set;
    } else if (param == "fen") {
        // Staller-to-move kernel of the bare position: preserves the winner
        // with Staller moving first
        auto [pos, tr] = fen_kernelize(make_position(g, {}, {}, Player::Staller));
        reduced = std::move(pos.graph);
        trace = std::move(tr);
    } else {
        throw InputError("kernelize --param must be one of nd|mw|dtc|fen");
    }
    if (as_json) {
        json j;
        j["graph"] = graph_to_json(reduced);
        j["trace"] = json::array();
        for (const auto& s : trace.steps) j["trace"].push_back(trace_step_to_json(s));
        for (auto& [key, value] : extra.items()) j[key] = value;
        out << j.dump() << "\n";
    } else {
        out << graph_to_json(reduced).dump() << "\n";
        out << trace_to_json_lines(trace);
        if (extra.contains("deletion_set"))
            out << "deletion_set: " << json(extra["deletion_set"]).dump() << "\n";
    }
    return 0;
}

int cmd_gadget(const std::string& kind, const std::string& file, int k,
               const std::string& out_prefix, std::ostream& out) {
    GadgetInstance gi;
    if (kind == "staller") {
        if (k < 0) throw InputError("gadget staller requires --k");
        gi = staller_hardness_gadget(load_hypergraph_file(file), k);
    } else if (kind == "dominator") {
        gi = dominator_hardness_gadget(load_graph_file(file));
    } else if (kind == "universal") {
        gi = universal_vertex_gadget(load_graph_file(file));
    } else {
        throw InputError("gadget kind must be staller|dominator|universal");
    }
    if (out_prefix.empty()) {
        out << gadget_to_json(gi).dump() << "\n";
        return 0;
    }
    json full = gadget_to_json(gi);
    std::ofstream gf(out_prefix + ".graph.json");
    if (!gf) throw InputError("cannot write " + out_prefix + ".graph.json");
    gf << full["graph"].dump() << "\n";
    std::ofstream cf(out_prefix + ".correspondence.json");
    if (!cf) throw InputError("cannot write " + out_prefix + ".correspondence.json");
    json sidecar = json::object();
    sidecar["correspondence"] = full["correspondence"];
    if (full.contains("k")) sidecar["k"] = full["k"];
    cf << sidecar.dump() << "\n";
    out << "wrote " << out_prefix << ".graph.json and " << out_prefix
        << ".correspondence.json\n";
    return 0;
}

int cmd_gen(const std::vector<std::string>& spec, bool edge_list, std::ostream& out) {
    if (spec.empty()) throw InputError("gen: missing family name");
    const std::string& family = spec[0];
    auto need = [&](std::size_t n) {
        if (spec.size() != n + 1)
            throw InputError("gen " + family + ": expected " + std::to_string(n) + " argument(s)");
    };
    auto arg_int = [&](std::size_t i) { return std::stoi(spec.at(i)); };
    Graph g;
    if (family == "path") {
        need(1);
        g = make_path(arg_int(1));
    } else if (family == "clique") {
        need(1);
        g = make_clique(arg_int(1));
    } else if (family == "star") {
        need(1);
        g = make_star(arg_int(1));
    } else if (family == "cycle") {
        need(1);
        g = make_cycle(arg_int(1));
    } else if (family == "random") {
        need(3);
        g = random_graph(arg_int(1), std::stod(spec.at(2)),
                         static_cast<std::uint64_t>(std::stoull(spec.at(3))));
    } else if (family == "attach_path") {
        need(4);
        g = attach_path(load_graph_file(spec.at(1)), arg_int(2), arg_int(3), arg_int(4));
    } else if (family == "attach_pending_path") {
        need(3);
        g = attach_pending_path(load_graph_file(spec.at(1)), arg_int(2), arg_int(3));
    } else if (family == "add_universal_vertex" || family == "universal") {
        need(1);
        g = add_universal_vertex(load_graph_file(spec.at(1)));
    } else {
        throw InputError("gen: unknown family '" + family + "'");
    }
    if (edge_list)
        out << graph_to_edge_list(g);
    else
        out << graph_to_json(g).dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int count, bool as_json,
               std::ostream& out) {
    HarnessReport report = run_verification_harness(suite, seed, count);
    if (as_json)
        out << report_to_json(report).dump() << "\n";
    else
        out << report_to_text(report);
    return report.all_passed() ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maker-Breaker domination game solver and kernelization toolkit"};
    app.require_subcommand(1);

    // solve
    std::string solve_file, solve_first;
    std::vector<int> solve_dom, solve_stal;
    bool solve_json = false;
    auto* solve = app.add_subcommand("solve", "winner or outcome of a position");
    solve->add_option("graph", solve_file, "graph file (json or edge list)")->required();
    solve->add_option("--dominator", solve_dom, "Dominator's claimed vertices")->delimiter(',');
    solve->add_option("--staller", solve_stal, "Staller's claimed vertices")->delimiter(',');
    solve->add_option("--first", solve_first, "who moves next (dominator|staller)");
    solve->add_flag("--json", solve_json, "machine-readable output");

    // short
    std::string short_file, short_role, short_first;
    int short_k = 0;
    bool short_json = false;
    auto* shortc = app.add_subcommand("short", "bounded-move game query");
    shortc->add_option("arena", short_file, "graph or hypergraph file")->required();
    shortc->add_option("--role", short_role, "maker|breaker|dominator|staller")->required();
    shortc->add_option("--k", short_k, "move budget for the role")->required();
    shortc->add_option("--first", short_first, "who moves first")->required();
    shortc->add_flag("--json", short_json, "machine-readable output");

    // kernelize
    std::string kern_file, kern_param;
    int kern_k = -1;
    bool kern_json = false;
    auto* kern = app.add_subcommand("kernelize", "outcome-preserving reduction");
    kern->add_option("graph", kern_file, "graph file")->required();
    kern->add_option("--param", kern_param, "nd|mw|dtc|fen")->required();
    kern->add_option("--k", kern_k, "budget for dtc");
    kern->add_flag("--json", kern_json, "machine-readable output");

    // gadget
    std::string gadget_kind, gadget_file, gadget_out;
    int gadget_k = -1;
    auto* gadget = app.add_subcommand("gadget", "hardness gadget construction");
    gadget->add_option("kind", gadget_kind, "staller|dominator|universal")->required();
    gadget->add_option("input", gadget_file, "hypergraph (staller) or graph file")->required();
    gadget->add_option("--k", gadget_k, "budget parameter for the staller gadget");
    gadget->add_option("--out", gadget_out, "write <prefix>.graph.json and sidecar instead");

    // gen
    std::vector<std::string> gen_spec;
    bool gen_edge_list = false;
    auto* gen = app.add_subcommand("gen", "graph family generator");
    gen->add_option("spec", gen_spec, "family and arguments, e.g. path 4 | random 10 0.3 7")
        ->required()
        ->expected(-1);
    gen->add_flag("--edge-list", gen_edge_list, "emit edge-list text instead of json");

    // verify
    std::string verify_suite;
    std::uint64_t verify_seed = 1;
    int verify_count = 50;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run an oracle-backed verification suite");
    verify->add_option("--suite", verify_suite, "suite name")->required();
    verify->add_option("--seed", verify_seed, "rng seed");
    verify->add_option("--count", verify_count, "instance budget");
    verify->add_flag("--json", verify_json, "machine-readable output");

    std::vector<std::string> args = argv;
    std::vector<const char*> cargv;
    cargv.push_back("mbdom");
    for (const auto& a : args) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_file, solve_dom, solve_stal, solve_first, solve_json, out);
        if (shortc->parsed())
            return cmd_short(short_file, short_role, short_k, short_first, short_json, out);
        if (kern->parsed()) return cmd_kernelize(kern_file, kern_param, kern_k, kern_json, out);
        if (gadget->parsed()) return cmd_gadget(gadget_kind, gadget_file, gadget_k, gadget_out, out);
        if (gen->parsed()) return cmd_gen(gen_spec, gen_edge_list, out);
        if (verify->parsed())
            return cmd_verify(verify_suite, verify_seed, verify_count, verify_json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ResourceError& ex) {
        err << "resource error: " << ex.what() << "\n";
        return 3;
    } catch (const InconsistencyError& ex) {
        err << "internal error: " << ex.what() << "\n";
        return 4;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace mbd
