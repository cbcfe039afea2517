#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "toricgm/ci_ideal.hpp"
#include "toricgm/commands.hpp"
#include "toricgm/error.hpp"
#include "toricgm/poly.hpp"

using namespace toricgm;
using json = nlohmann::ordered_json;

namespace {

RunConfig config(const std::string& command, const std::string& graph) {
    RunConfig cfg;
    cfg.command = command;
    cfg.graph = graph;
    cfg.output = "json";
    return cfg;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "toricgm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::set<std::string> sign_keys(const json& gens) {
    std::set<std::string> out;
    for (const auto& g : gens) out.insert(sign_key(parse_polynomial(g["polynomial"].get<std::string>())));
    return out;
}

}  // namespace

TEST_CASE("command list") {
    CHECK(command_names() ==
          std::vector<std::string>{"classify", "ci", "verify", "counterexamples", "adjugate", "maps", "sagbi"});
}

TEST_CASE("classify") {
    auto r = run_command(config("classify", "fig1"))["result"];
    CHECK(r["block"] == true);
    CHECK(r["centers"] == json::array({3}));
    CHECK(r["partitions"] == 1);
    CHECK(r["partition_list"][0]["c"] == 3);
    CHECK(r["blocks"] == json::parse("[[1,2,3],[3,4]]"));
    CHECK(r["non_clique_block"].is_null());

    r = run_command(config("classify", "ex14"))["result"];
    CHECK(r["partitions"] == 4);
    CHECK(r["centers"] == json::array({3, 4}));

    r = run_command(config("classify", "triangle"))["result"];
    CHECK(r["partitions"] == 0);
    CHECK(r["centers"].empty());

    r = run_command(config("classify", "fig2"))["result"];
    CHECK(r["block"] == false);
    CHECK(r["non_clique_block"] == json::array({3, 4, 5, 6}));

    r = run_command(config("classify", "cycle4"))["result"];
    CHECK(r["block"] == false);
    CHECK(r["partitions"] == 0);
}

TEST_CASE("classify a disconnected graph file") {
    const auto path = std::filesystem::temp_directory_path() / "toricgm_cli_disconnected.json";
    {
        std::ofstream f(path);
        f << R"({"n": 7, "edges": [[1,2],[2,3],[1,3],[3,4],[5,6],[6,7]]})";
    }
    const auto r = run_command(config("classify", path.string()))["result"];
    std::filesystem::remove(path);
    CHECK(r["connected"] == false);
    CHECK(r["components"].size() == 2);
    // one partition in {1,2,3,4} and one centred at 6 in the path 5-6-7
    CHECK(r["partitions"] == 2);
    std::set<int> centers;
    for (const auto& p : r["partition_list"]) centers.insert(p["c"].get<int>());
    CHECK(centers == std::set<int>{3, 6});
}

TEST_CASE("ci") {
    auto r = run_command(config("ci", "ex14"))["result"];
    CHECK(r["one_clique"].size() == 34);
    CHECK(sign_keys(r["one_clique"]).size() == 34);
    CHECK(r["one_clique_degree2_dim"] == 31);
    CHECK(r["max_c"] == 4);
    r = run_command(config("ci", "fig1"))["result"];
    CHECK(r["one_clique"].size() == 3);
    CHECK(r["full"].size() == 5);
    CHECK(r["one_clique"][0]["polynomial"] == "s13*s24 - s14*s23");
    auto cfg = config("ci", "fig1");
    cfg.max_c = 1;
    CHECK(run_command(cfg)["result"]["full"].size() == 3);

    const auto path = std::filesystem::temp_directory_path() / "toricgm_cli_fig1.m2";
    cfg = config("ci", "fig1");
    cfg.export_cas = path.string();
    r = run_command(cfg)["result"];
    CHECK(r["exported"] == path.string());
    std::ifstream f(path);
    std::stringstream text;
    text << f.rdbuf();
    CHECK(text.str().find("eliminate") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("verify") {
    auto report = run_command(config("verify", "fig1"));
    CHECK(report["degree_bound"] == 3);
    CHECK(report["trials"] == 16);
    CHECK(report["seed"].get<std::uint64_t>() != 0);
    auto r = report["result"];
    CHECK(r["verdict"] == "CONFIRMED");
    CHECK(r["markov"]["fibers_checked"] == 254);
    CHECK(r["dimension"] == 8);
    CHECK(r["all_vanish"] == true);
    r = run_command(config("verify", "fig2"))["result"];
    CHECK(r["verdict"] == "NOT_BLOCK");
    r = run_command(config("verify", "k5"))["result"];
    CHECK(r["verdict"] == "CONFIRMED");
    CHECK(r["generators"] == 0);
}

TEST_CASE("seed handling") {
    auto a = config("verify", "fig1");
    auto b = a;
    CHECK(run_command(a).dump() == run_command(b).dump());
    b.trials = 8;
    CHECK(run_command(a)["seed"] != run_command(b)["seed"]);
    b = a;
    b.seed = 42;
    CHECK(run_command(b)["seed"] == 42);
    CHECK(derive_seed(a, json::object()) != 0);
}

TEST_CASE("counterexamples") {
    const auto report = run_command(config("counterexamples", ""));
    CHECK(report["graph"].is_null());
    const auto& r = report["result"];
    CHECK(r["a"]["cubics"][0]["rho_star"]["vanishes"] == true);
    CHECK(r["a"]["cubics"][1]["rho_star"]["vanishes"] == true);
    CHECK(r["a"]["rg_generators"] == 19);
    CHECK(r["b"]["ci_dim_d2"] == 5);
    CHECK(r["b"]["rg_dim_d2"] == 4);
    CHECK(r["c"]["terms"] == 20);
    CHECK(r["c"]["passed"] == true);
}

TEST_CASE("adjugate") {
    auto r = run_command(config("adjugate", "fig1"))["result"];
    CHECK(r["entries"].size() == 10);
    CHECK(r["all_shortest_path_terms_leading"] == true);
    CHECK(r["all_path_expansions"] == true);
    for (const auto& e : r["entries"])
        if (e["i"] == 3 && e["j"] == 4) {
            CHECK(parse_polynomial(e["f"].get<std::string>()) == parse_polynomial("-k34*k11*k22 + k34*k12^2"));
            CHECK(e["shortest_path_term"] == "-k11*k22*k34");
        }
    // non-unique shortest paths report null
    r = run_command(config("adjugate", "cycle4"))["result"];
    bool saw_null = false;
    for (const auto& e : r["entries"]) saw_null = saw_null || e["shortest_path_term"].is_null();
    CHECK(saw_null);
    bool limited = false;
    try {
        run_command(config("adjugate", "k9"));
    } catch (const Error& e) {
        limited = e.code() == ErrorCode::SizeLimit;
    }
    CHECK(limited);
}

TEST_CASE("maps and sagbi") {
    auto r = run_command(config("maps", "fig1"))["result"];
    CHECK(r["row_space_equal"] == true);
    CHECK(r["kii_relation"] == true);
    CHECK(r["psi_rank"] == 8);
    CHECK(r["phi_rank"] == 8);
    CHECK(r["psi"]["data"].size() == 8);
    r = run_command(config("sagbi", "k2"))["result"];
    CHECK(r["holds"] == true);
    CHECK(r["checked"] == 0);
    r = run_command(config("sagbi", "ex14"))["result"];
    CHECK(r["checked"] == 34);
    CHECK(r["first_failure"].is_null());
}

TEST_CASE("exit codes") {
    auto run = cli({"classify", "--graph", "fig1", "--output", "json"});
    CHECK(run.code == kExitOk);
    CHECK(json::parse(run.out)["result"]["partitions"] == 1);
    run = cli({"classify", "--graph", "fig1"});
    CHECK(run.code == kExitOk);
    CHECK(run.out.find("partitions") != std::string::npos);
    CHECK(cli({"classify", "--graph", "no_such_graph"}).code == kExitInput);
    CHECK(cli({"adjugate", "--graph", "k9"}).code == kExitSizeLimit);
    CHECK(cli({}).code == kExitInput);
    CHECK(cli({"verify", "--graph", "/nonexistent/graph.json"}).code == kExitInput);
    CHECK(cli({"classify", "--graph", "fig1", "--output", "yaml"}).code == kExitInput);
    CHECK(cli({"--help"}).code == kExitOk);

    const auto path = std::filesystem::temp_directory_path() / "toricgm_cli_split.json";
    {
        std::ofstream f(path);
        f << R"({"n": 4, "edges": [[1,2],[3,4]]})";
    }
    run = cli({"verify", "--graph", path.string()});
    CHECK(run.code == kExitInput);
    CHECK_FALSE(run.err.empty());
    {
        std::ofstream f(path);
        f << R"({"n": 3, "edges": [[1,2],[2,2]]})";
    }
    CHECK(cli({"classify", "--graph", path.string()}).code == kExitInput);
    std::filesystem::remove(path);
}

TEST_CASE("human rendering keeps the payload") {
    const auto report = run_command(config("sagbi", "fig1"));
    const auto text = render_human(report);
    CHECK(text.find("holds") != std::string::npos);
    CHECK(text.find("checked") != std::string::npos);
    CHECK(text.find('3') != std::string::npos);
}
