#ifndef TORICGM_TORIC_ENGINE_HPP
#define TORICGM_TORIC_ENGINE_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "toricgm/graph.hpp"
#include "toricgm/monomial_maps.hpp"
#include "toricgm/poly.hpp"

namespace toricgm {

struct Move {
    ExponentVector vec;

    ExponentVector positive() const;
    ExponentVector negative() const;
};

// sigma^u - sigma^v with the common part cancelled. InvalidArgument unless p
// is a binomial with coefficients +1 and -1 in sigma variables of 1..n.
Move move_from_binomial(const Polynomial& p, int n);
Polynomial binomial_from_move(const Move& m, int n);

struct Fiber {
    ExponentVector b;
    std::vector<ExponentVector> elements;  // sorted
};

Fiber enumerate_fiber(const ExponentMatrix& m, const ExponentVector& b);

bool fiber_graph_connected(const Fiber& fiber, const std::vector<Move>& moves);

struct MarkovFailure {
    ExponentVector b;
    std::size_t fiber_size = 0;
    std::size_t components = 0;
    // one element per connected component, sorted
    std::vector<ExponentVector> representatives;
};

struct MarkovReport {
    int verified_degree = 0;
    std::size_t fibers_checked = 0;
    std::size_t max_fiber_size = 0;
    bool all_connected = true;
    std::vector<MarkovFailure> failures;  // sorted by b
    const MarkovFailure* first_failure() const { return failures.empty() ? nullptr : &failures.front(); }
};

// Checks every fiber M_psi u = b with deg(u) <= degree_bound.
MarkovReport verify_markov(const Graph& g, const std::vector<Move>& moves, int degree_bound);

nlohmann::ordered_json to_json(const MarkovReport& r, int n);

struct CircularEmbedding {
    int n = 0;
    std::vector<Vertex> order;  // vertices in circular order

    static CircularEmbedding identity(int n);
    int position(Vertex v) const;
};

// Both arguments are edges of K_n° (i == j is the loop at i).
bool edges_intersect(const CircularEmbedding& emb, Edge e, Edge f);

// Number of edges of K_n°, loops included, that do not intersect (i, j).
int circular_weight(const CircularEmbedding& emb, Vertex i, Vertex j);

// Weight order on sigma from the embedding, refined by grevlex.
TermOrder circular_order(const CircularEmbedding& emb);

// Binomials sigma_e sigma_f - (crossing re-pairing) for every non-intersecting
// pair of edges of K_n°; the first term is the leading one.
std::vector<Polynomial> nonintersecting_basis(int n);
std::vector<Polynomial> nonintersecting_basis(const CircularEmbedding& emb);

struct GCircle {
    Vertex center = 0;
    CircularEmbedding embedding;
    std::vector<Var> removed;        // D: sigma_pq whose shortest path misses the center
    std::vector<Polynomial> basis;   // members of S' free of D
};

// g must have exactly one central vertex, c. MultipleCenters / NotCentral.
GCircle restrict_to_gcircle(const Graph& g, Vertex c);

struct GroebnerReport {
    std::vector<Polynomial> basis;  // reduced, monic, sorted by leading monomial
    bool input_is_groebner = false;  // every S-pair of the input reduced to 0
    bool input_is_reduced = false;   // reduced basis equals the input up to sign
    std::size_t pairs_processed = 0;
    std::size_t pairs_skipped = 0;   // coprime leading terms
};

inline constexpr std::size_t kGroebnerLimit = 5000;

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& order);

// Buchberger completion. SizeLimit once the basis exceeds kGroebnerLimit.
GroebnerReport buchberger_binomial(const std::vector<Polynomial>& gens, const TermOrder& order);

}  // namespace toricgm

#endif  // TORICGM_TORIC_ENGINE_HPP
