#include "toricgm/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "toricgm/ci_ideal.hpp"
#include "toricgm/error.hpp"
#include "toricgm/fixtures.hpp"
#include "toricgm/graph.hpp"
#include "toricgm/monomial_maps.hpp"
#include "toricgm/sym_linalg.hpp"
#include "toricgm/toric_engine.hpp"

namespace toricgm {

namespace {

using json = nlohmann::ordered_json;

json vertex_sets(const std::vector<VertexSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

json cmd_classify(const Graph& g) {
    json j;
    j["block"] = is_block_graph(g);
    j["connected"] = is_connected(g);
    const auto comps = connected_components(g);
    j["components"] = vertex_sets(comps);
    j["blocks"] = vertex_sets(biconnected_components(g));
    j["centers"] = central_vertices(g);
    const auto bad = first_non_clique_block(g);
    j["non_clique_block"] = bad.empty() ? json(nullptr) : json(bad);
    // Partitions are taken per connected component, in original labels.
    json parts = json::array();
    for (const auto& comp : comps) {
        if (comp.size() < 3) continue;
        for (const auto& p : one_clique_partitions(g.induced(comp))) {
            auto lift = [&](const VertexSet& vs) {
                VertexSet out;
                for (Vertex v : vs) out.push_back(comp[v - 1]);
                return out;
            };
            json pj;
            pj["a"] = lift(p.a);
            pj["b"] = lift(p.b);
            pj["c"] = comp[p.c - 1];
            parts.push_back(std::move(pj));
        }
    }
    j["partitions"] = parts.size();
    j["partition_list"] = std::move(parts);
    return j;
}

json cmd_ci(const Graph& g, const RunConfig& cfg) {
    const GeneratorSet one = ci_generators_1clique(g);
    const GeneratorSet full = ci_generators_full(g, cfg.max_c);
    json j;
    j["one_clique"] = to_json(one);
    j["one_clique_degree2_dim"] = graded_piece_dim(one, 2);
    j["max_c"] = cfg.max_c.value_or(std::max(0, g.n() - 2));
    j["full"] = to_json(full);
    if (!cfg.export_cas.empty()) {
        std::ofstream file(cfg.export_cas);
        if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + cfg.export_cas + "'");
        file << export_macaulay2(g, one);
        j["exported"] = cfg.export_cas;
    }
    return j;
}

json cmd_adjugate(const Graph& g) {
    if (g.n() > kSymbolicLimit) throw Error(ErrorCode::SizeLimit, "adjugate entries are symbolic only for n <= 8");
    json entries = json::array();
    bool all_terms = true;
    bool all_jones = true;
    const bool run_jones = g.n() <= 6;
    for (Vertex i = 1; i <= g.n(); ++i) {
        for (Vertex j = i; j <= g.n(); ++j) {
            json e;
            e["i"] = i;
            e["j"] = j;
            e["f"] = adjugate_entry(g, i, j).to_string();
            try {
                const auto sm = shortest_path_monomial(g, i, j);
                e["shortest_path_term"] = (sm.sign < 0 ? "-" : "") + sm.monomial.to_string();
                const bool ok = check_shortest_path_term(g, i, j);
                e["shortest_path_term_leading"] = ok;
                all_terms = all_terms && ok;
            } catch (const Error& err) {
                if (err.code() != ErrorCode::NotUnique && err.code() != ErrorCode::NotConnected) throw;
                e["shortest_path_term"] = nullptr;
                e["shortest_path_term_leading"] = nullptr;
            }
            if (run_jones) {
                const bool ok = jones_expansion_check(g, i, j);
                e["path_expansion"] = ok;
                all_jones = all_jones && ok;
            } else {
                e["path_expansion"] = nullptr;
            }
            entries.push_back(std::move(e));
        }
    }
    json j;
    j["entries"] = std::move(entries);
    j["all_shortest_path_terms_leading"] = all_terms;
    j["all_path_expansions"] = run_jones ? json(all_jones) : json(nullptr);
    return j;
}

json cmd_maps(const Graph& g) {
    const auto psi = build_matrix(g, MapKind::Psi);
    const auto phi = build_matrix(g, MapKind::Phi);
    json j;
    j["psi"] = to_json(psi);
    j["phi"] = to_json(phi);
    j["psi_rank"] = rank(psi.data);
    j["phi_rank"] = rank(phi.data);
    j["row_space_equal"] = row_space_equal(psi, phi);
    j["kii_relation"] = kii_relation_check(g);
    return j;
}

json cmd_sagbi(const Graph& g) {
    const auto r = sagbi_homogeneity(g);
    json j;
    j["holds"] = r.holds;
    j["checked"] = r.checked;
    j["first_failure"] = r.first_failure ? json(r.first_failure->to_string()) : json(nullptr);
    return j;
}

void fnv_mix(std::uint64_t& h, const std::string& text) {
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
}

void append_human(std::ostringstream& out, const json& value, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto is_flat = [](const json& v) {
        return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
                   return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) {
                                                   return y.is_primitive();
                                               }));
               });
    };
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) {
            if (v.is_primitive() || (is_flat(v) && v.dump().size() <= 100)) {
                out << pad << key << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
            } else {
                out << pad << key << ":" << (v.empty() ? " (none)" : "") << '\n';
                append_human(out, v, indent + 1);
            }
        }
    } else if (value.is_array()) {
        for (const auto& v : value) {
            if (v.is_primitive() || (is_flat(v) && v.dump().size() <= 100)) {
                out << pad << "- " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
            } else {
                out << pad << "-\n";
                append_human(out, v, indent + 1);
            }
        }
    } else {
        out << pad << scalar(value) << '\n';
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"classify", "ci", "verify", "counterexamples",
                                                "adjugate", "maps", "sagbi"};
    return names;
}

std::uint64_t derive_seed(const RunConfig& cfg, const json& graph) {
    std::uint64_t h = 14695981039346656037ull;
    fnv_mix(h, cfg.command);
    fnv_mix(h, graph.dump());
    fnv_mix(h, std::to_string(cfg.degree_bound));
    fnv_mix(h, std::to_string(cfg.trials));
    fnv_mix(h, cfg.max_c ? std::to_string(*cfg.max_c) : "-");
    return h == 0 ? 1 : h;
}

json run_command(const RunConfig& cfg) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), cfg.command) == names.end())
        throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
    if (cfg.degree_bound < 2) throw Error(ErrorCode::InvalidArgument, "--degree-bound must be at least 2");
    if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "--trials must be at least 1");
    if (cfg.max_c && *cfg.max_c < 0) throw Error(ErrorCode::InvalidArgument, "--max-c must be nonnegative");

    json report;
    report["command"] = cfg.command;
    if (cfg.command == "counterexamples") {
        const std::uint64_t seed = cfg.seed ? cfg.seed : derive_seed(cfg, json(nullptr));
        report["graph"] = nullptr;
        report["seed"] = seed;
        report["trials"] = cfg.trials;
        report["result"] = to_json(counterexample_suite(cfg.trials, seed));
        return report;
    }
    if (cfg.graph.empty()) throw Error(ErrorCode::InvalidArgument, "--graph is required for '" + cfg.command + "'");
    const Graph g = load_graph(cfg.graph);
    const json graph_json = to_json(g);
    const std::uint64_t seed = cfg.seed ? cfg.seed : derive_seed(cfg, graph_json);
    report["graph"] = graph_json;
    if (cfg.command == "classify") {
        report["result"] = cmd_classify(g);
    } else if (cfg.command == "ci") {
        report["result"] = cmd_ci(g, cfg);
    } else if (cfg.command == "verify") {
        report["seed"] = seed;
        report["degree_bound"] = cfg.degree_bound;
        report["trials"] = cfg.trials;
        report["result"] = to_json(check_degree2_theorem(g, cfg.degree_bound, cfg.trials, seed), g.n());
    } else if (cfg.command == "adjugate") {
        report["result"] = cmd_adjugate(g);
    } else if (cfg.command == "maps") {
        report["result"] = cmd_maps(g);
    } else {
        report["result"] = cmd_sagbi(g);
    }
    return report;
}

std::string render_human(const json& report) {
    std::ostringstream out;
    append_human(out, report, 0);
    return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toric and conditional-independence ideals of Gaussian graphical models on block graphs"};
    app.require_subcommand(1);
    RunConfig cfg;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--graph", cfg.graph, "fixture name (fig1..fig4, ex14, path4, kN, pathN, cycleN, starN) or graph JSON path");
        sub->add_option("--degree-bound", cfg.degree_bound, "largest fiber degree to check")->capture_default_str();
        sub->add_option("--trials", cfg.trials, "random evaluation trials")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "random seed, 0 derives one from the inputs")->capture_default_str();
        sub->add_option("--max-c", cfg.max_c, "largest separator size for the full CI ideal");
        sub->add_option("--output", cfg.output, "human or json")
            ->check(CLI::IsMember({"human", "json"}))
            ->capture_default_str();
        sub->add_option("--export-cas", cfg.export_cas, "write a Macaulay2 cross-check script");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        const json report = run_command(cfg);
        if (cfg.output == "json")
            out << report.dump(2) << '\n';
        else
            out << render_human(report);
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::SizeLimit ? kExitSizeLimit : kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace toricgm
