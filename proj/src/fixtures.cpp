#include "toricgm/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <set>

#include "toricgm/error.hpp"

namespace toricgm {

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(ErrorCode::ParseError, "graph JSON needs \"n\" and \"edges\"");
    if (!j.at("n").is_number_integer()) throw Error(ErrorCode::ParseError, "\"n\" must be an integer");
    const int n = j.at("n").get<int>();
    if (n < 1) throw Error(ErrorCode::ParseError, "\"n\" must be positive");
    std::vector<Edge> edges;
    if (!j.at("edges").is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(ErrorCode::ParseError, "each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const Error& err) {
        throw Error(ErrorCode::ParseError, err.what());
    }
}

nlohmann::ordered_json to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    auto edges = nlohmann::ordered_json::array();
    for (auto [i, j2] : g.edges()) edges.push_back({i, j2});
    j["edges"] = std::move(edges);
    return j;
}

Graph load_graph(const std::string& source) {
    if (fixtures::is_named(source)) return fixtures::named(source);
    std::ifstream in(source);
    if (!in) throw Error(ErrorCode::ParseError, "no fixture or readable file named '" + source + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid graph JSON: ") + e.what());
    }
    return graph_from_json(j);
}

namespace fixtures {

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return Graph(leaves + 1, std::move(edges));
}

namespace {

std::optional<int> family_size(std::string_view name, std::string_view prefix) {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto digits = name.substr(prefix.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 1 || value > 64) return std::nullopt;
    return value;
}

}  // namespace

bool is_named(std::string_view name) {
    static const std::set<std::string_view> fixed{"fig1", "fig2", "fig3", "fig4", "ex14", "path4", "triangle"};
    if (fixed.count(name)) return true;
    for (std::string_view prefix : {"k", "path", "cycle", "star"})
        if (family_size(name, prefix)) return true;
    return false;
}

Graph named(std::string_view name) {
    if (name == "fig1") return Graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    if (name == "fig2") return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
    if (name == "fig3") return Graph(7, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
    if (name == "fig4") return Graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {3, 5}});
    if (name == "ex14") return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
    if (name == "path4") return path(4);
    if (name == "triangle") return complete(3);
    if (auto n = family_size(name, "k")) return complete(*n);
    if (auto n = family_size(name, "path")) return path(*n);
    if (auto n = family_size(name, "cycle"); n && *n >= 3) return cycle(*n);
    if (auto n = family_size(name, "star")) return star(*n);
    throw Error(ErrorCode::ParseError, "unknown graph fixture '" + std::string(name) + "'");
}

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig3", "fig4", "ex14", "path4"}; }

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % range;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % range;
}

Graph random_block_graph(std::mt19937_64& rng, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    std::vector<Edge> edges;
    auto add_clique = [&](const std::vector<int>& vs) {
        for (std::size_t p = 0; p < vs.size(); ++p)
            for (std::size_t q = p + 1; q < vs.size(); ++q) edges.emplace_back(vs[p], vs[q]);
    };
    int count = 1 + static_cast<int>(uniform(rng, static_cast<std::uint64_t>(std::min(4, n))));
    std::vector<int> first(count);
    for (int v = 0; v < count; ++v) first[v] = v + 1;
    add_clique(first);
    while (count < n) {
        const int anchor = 1 + static_cast<int>(uniform(rng, static_cast<std::uint64_t>(count)));
        const int room = std::min(3, n - count);
        const int extra = 1 + static_cast<int>(uniform(rng, static_cast<std::uint64_t>(room)));
        std::vector<int> clique{anchor};
        for (int t = 0; t < extra; ++t) clique.push_back(++count);
        add_clique(clique);
    }
    std::vector<int> label(n + 1);
    for (int v = 1; v <= n; ++v) label[v] = v;
    for (int v = n; v > 1; --v) std::swap(label[v], label[1 + static_cast<int>(uniform(rng, static_cast<std::uint64_t>(v)))]);
    for (auto& [i, j] : edges) {
        i = label[i];
        j = label[j];
    }
    return Graph(n, std::move(edges));
}

std::vector<Polynomial> fig2_cubics() {
    return {
        parse_polynomial("s14*s25*s46 - s14*s26*s45 - s15*s24*s46 + s15*s26*s44 + s16*s24*s45 - s16*s25*s44"),
        parse_polynomial("s24*s45*s56 - s24*s46*s55 - s25*s44*s56 + s25*s46*s45 + s26*s44*s55 - s26*s45^2"),
    };
}

Polynomial fig3_quartic() {
    return parse_polynomial(
        "s17^2*s23*s56 - s13*s17*s27*s56 - s12*s17*s37*s56 + s11*s27*s37*s56 - s16*s17*s23*s57"
        " + s13*s16*s27*s57 + s12*s16*s37*s57 - s11*s26*s37*s57 - s15*s17*s23*s67 + s13*s15*s27*s67"
        " + s12*s15*s37*s67 - s11*s25*s37*s67 - s12*s13*s57*s67 + s11*s23*s57*s67 + s15*s16*s23*s77"
        " - s13*s15*s26*s77 - s12*s15*s36*s77 + s11*s25*s36*s77 + s12*s13*s56*s77 - s11*s23*s56*s77");
}

std::vector<Polynomial> fig4_quadrics() {
    std::vector<Polynomial> out;
    for (const char* text : {"s34*s35 - s33*s45", "s24*s35 - s23*s45", "s14*s35 - s13*s45", "s25*s34 - s23*s45",
                             "s15*s34 - s13*s45", "s25*s33 - s23*s35", "s24*s33 - s23*s34", "s15*s33 - s13*s35",
                             "s14*s33 - s13*s34", "s15*s24 - s14*s25", "s15*s23 - s13*s25", "s14*s23 - s13*s24"})
        out.push_back(parse_polynomial(text));
    return out;
}

}  // namespace fixtures

}  // namespace toricgm
