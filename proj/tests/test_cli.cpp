#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mbd/cli.hpp"

using mbd::run_command;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_command(args, out, err);
    return {status, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

} // namespace

TEST_CASE("solve subcommand") {
    write_file("/tmp/mbd_cli_c4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
    Run r = run({"solve", "/tmp/mbd_cli_c4.json"});
    CHECK(r.status == 0);
    CHECK(r.out == "outcome: D\n");

    Run winner = run({"solve", "/tmp/mbd_cli_c4.json", "--first", "staller"});
    CHECK(winner.status == 0);
    CHECK(winner.out == "winner: Dominator\n");

    Run claims = run({"solve", "/tmp/mbd_cli_c4.json", "--dominator", "0", "--staller", "1",
                      "--first", "dominator", "--json"});
    CHECK(claims.status == 0);
    CHECK(claims.out.find("winner") != std::string::npos);

    Run overlap = run({"solve", "/tmp/mbd_cli_c4.json", "--dominator", "0", "--staller", "0"});
    CHECK(overlap.status == 2);
    CHECK(overlap.err.find("error") != std::string::npos);
}

TEST_CASE("short subcommand") {
    write_file("/tmp/mbd_cli_fig1.json", R"({"n":4,"edges":[[2,3],[0,1,2]]})");
    // the budgeted search refutes Maker here (u3 blocks both edges)
    Run r = run({"short", "/tmp/mbd_cli_fig1.json", "--role", "maker", "--k", "2", "--first",
                 "maker"});
    CHECK(r.status == 0);
    CHECK(r.out == "false\n");

    write_file("/tmp/mbd_cli_star.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3]]})");
    Run dom = run({"short", "/tmp/mbd_cli_star.json", "--role", "dominator", "--k", "1",
                   "--first", "dominator"});
    CHECK(dom.status == 0);
    CHECK(dom.out == "true\n");
}

TEST_CASE("kernelize subcommand") {
    write_file("/tmp/mbd_cli_k5.json", R"({"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
    Run nd = run({"kernelize", "/tmp/mbd_cli_k5.json", "--param", "nd", "--json"});
    CHECK(nd.status == 0);
    CHECK(nd.out.find("\"n\":2") != std::string::npos);

    Run dtc_missing_k = run({"kernelize", "/tmp/mbd_cli_k5.json", "--param", "dtc"});
    CHECK(dtc_missing_k.status == 2);

    write_file("/tmp/mbd_cli_c5.json", R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]})");
    Run infeasible = run({"kernelize", "/tmp/mbd_cli_c5.json", "--param", "dtc", "--k", "0"});
    CHECK(infeasible.status == 0);
    CHECK(infeasible.out == "infeasible\n");

    Run bad_param = run({"kernelize", "/tmp/mbd_cli_k5.json", "--param", "vc"});
    CHECK(bad_param.status == 2);
}

TEST_CASE("gadget subcommand") {
    write_file("/tmp/mbd_cli_h.json", R"({"n":2,"edges":[[0],[0,1]]})");
    Run st = run({"gadget", "staller", "/tmp/mbd_cli_h.json", "--k", "1"});
    CHECK(st.status == 0);
    CHECK(st.out.find("correspondence") != std::string::npos);

    Run missing_k = run({"gadget", "staller", "/tmp/mbd_cli_h.json"});
    CHECK(missing_k.status == 2);

    write_file("/tmp/mbd_cli_p2.json", R"({"n":2,"edges":[[0,1]]})");
    Run sidecar = run({"gadget", "dominator", "/tmp/mbd_cli_p2.json", "--out",
                       "/tmp/mbd_cli_gadget"});
    CHECK(sidecar.status == 0);
    std::ifstream gf("/tmp/mbd_cli_gadget.graph.json");
    CHECK(gf.good());
    std::ifstream cf("/tmp/mbd_cli_gadget.correspondence.json");
    CHECK(cf.good());
}

TEST_CASE("gen subcommand") {
    Run path = run({"gen", "path", "4"});
    CHECK(path.status == 0);
    CHECK(path.out.find("[2,3]") != std::string::npos);

    Run edge_list = run({"gen", "cycle", "4", "--edge-list"});
    CHECK(edge_list.status == 0);
    CHECK(edge_list.out.substr(0, 3) == "4 4");

    Run rnd1 = run({"gen", "random", "8", "0.5", "42"});
    Run rnd2 = run({"gen", "random", "8", "0.5", "42"});
    CHECK(rnd1.out == rnd2.out);

    Run unknown = run({"gen", "hypercube", "3"});
    CHECK(unknown.status == 2);
}

TEST_CASE("verify subcommand exit codes") {
    Run ok = run({"verify", "--suite", "figure-outcomes", "--seed", "1", "--count", "3"});
    CHECK(ok.status == 0);
    CHECK(ok.out.find("summary: 3/3 passed") != std::string::npos);

    Run json_mode =
        run({"verify", "--suite", "union-join-tables", "--seed", "5", "--count", "4", "--json"});
    CHECK(json_mode.status == 0);
    CHECK(json_mode.out.find("\"failed\":0") != std::string::npos);

    Run repeat =
        run({"verify", "--suite", "union-join-tables", "--seed", "5", "--count", "4", "--json"});
    CHECK(repeat.out == json_mode.out); // byte-identical reports

    Run unknown = run({"verify", "--suite", "no-such-suite"});
    CHECK(unknown.status == 2);
}

TEST_CASE("error stream and exit codes") {
    Run nocmd = run({});
    CHECK(nocmd.status == 2);

    Run unknown = run({"frobnicate"});
    CHECK(unknown.status == 2);
    CHECK_FALSE(unknown.err.empty());

    write_file("/tmp/mbd_cli_bad.json", "{broken");
    Run bad = run({"solve", "/tmp/mbd_cli_bad.json"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("error") != std::string::npos);

    // a graph past the solver's vertex cap raises the distinct resource code
    std::ostringstream big;
    big << "45 44\n";
    for (int i = 0; i + 1 < 45; ++i) big << i << ' ' << i + 1 << '\n';
    write_file("/tmp/mbd_cli_big.txt", big.str());
    Run resource = run({"solve", "/tmp/mbd_cli_big.txt"});
    CHECK(resource.status == 3);

    Run help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("solve") != std::string::npos);
}
