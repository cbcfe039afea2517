#ifndef TORICGM_FIXTURES_HPP
#define TORICGM_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toricgm/graph.hpp"
#include "toricgm/poly.hpp"

namespace toricgm {

// {"n": int, "edges": [[i, j], ...]}. ParseError on malformed input.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Graph& g);

// A fixture name (see fixtures::named) or a path to a graph JSON file.
Graph load_graph(const std::string& source);

namespace fixtures {

// fig1, fig2, fig3, fig4, ex14, path4, triangle, and the families kN,
// pathN, cycleN, starN (N leaves). ParseError for unknown names.
Graph named(std::string_view name);
bool is_named(std::string_view name);
std::vector<std::string> figure_names();

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);

// Connected block graph on exactly n vertices: cliques of size 2..4 glued at
// existing vertices, then randomly relabeled.
Graph random_block_graph(std::mt19937_64& rng, int n);
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t range);

// Degree-3 elements of P_G for fig2.
std::vector<Polynomial> fig2_cubics();
// The 20-term degree-4 element of P_G for fig3.
Polynomial fig3_quartic();
// The 12 quadrics generating SP_G for fig4.
std::vector<Polynomial> fig4_quadrics();

}  // namespace fixtures

}  // namespace toricgm

#endif  // TORICGM_FIXTURES_HPP
