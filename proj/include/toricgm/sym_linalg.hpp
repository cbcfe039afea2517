#ifndef TORICGM_SYM_LINALG_HPP
#define TORICGM_SYM_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "toricgm/exact_linalg.hpp"
#include "toricgm/graph.hpp"
#include "toricgm/poly.hpp"

namespace toricgm {

// Symbolic K for a graph: k_ij on edges and the diagonal, 0 elsewhere.
class SymConcentration {
public:
    explicit SymConcentration(Graph g) : graph_(std::move(g)) {}
    const Graph& graph() const { return graph_; }
    int n() const { return graph_.n(); }
    bool structural(Vertex i, Vertex j) const { return i == j || graph_.has_edge(i, j); }
    Polynomial entry(Vertex i, Vertex j) const;
    // k_11..k_nn, then the edge variables k_ij in lex order.
    std::vector<Var> parameters() const;

private:
    Graph graph_;
};

// Determinant of a square matrix of polynomials by Laplace expansion along
// rows, memoized on the set of remaining columns. Size limit 12.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

// det of K restricted to rows `rows` and columns `cols` (same size).
Polynomial k_minor(const SymConcentration& k, const VertexSet& rows, const VertexSet& cols);

inline constexpr int kSymbolicLimit = 8;

// f_ij = (-1)^(i+j) det(K without row j and column i). SizeLimit for n > 8.
Polynomial adjugate_entry(const Graph& g, Vertex i, Vertex j);

struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

// (-1)^l times path edges times k_tt for t off the path.
SignedMonomial shortest_path_monomial(const Graph& g, Vertex i, Vertex j);

int diagonal_count(const Monomial& m);

bool check_shortest_path_term(const Graph& g, Vertex i, Vertex j);

std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex x, Vertex y);

// f_xy against the signed sum over all simple x-y paths of path weight times
// the complementary principal minor.
bool jones_expansion_check(const Graph& g, Vertex x, Vertex y);

struct ExpansionGuard {
    int max_degree = 3;
    int max_n = 5;
};

// sigma_ij -> f_ij, fully expanded. SizeLimit beyond the guard.
Polynomial rho_star_substitute(const Polynomial& p, const Graph& g, ExpansionGuard guard = {});

struct SamplingScheme {
    long long offdiag_radius = 10;  // off-diagonal entries from [-M, M]
    long long diag_low = 0;         // diagonal entries from [low, high]
    long long diag_high = 0;
    std::size_t min_set_size() const;
};

// Sample ranges wide enough that a numerator of degree `degree` has a
// per-trial false-zero probability below 1.
SamplingScheme sampling_scheme(int n, int numerator_degree);

// A random point of the model: structural k_ij drawn from the scheme.
// Returns nullopt if K is singular.
std::optional<Assignment> random_point(const Graph& g, const SamplingScheme& scheme, std::uint64_t seed,
                                       std::uint64_t stream, std::uint64_t attempt);

DenseMatrix numeric_k(const Graph& g, const Assignment& point);

struct VanishingReport {
    bool vanishes = true;
    int trials = 0;
    int numerator_degree = 0;       // degree bound of det(K)^d * p(K^-1)
    std::size_t sample_set_size = 0;
    double per_trial_error = 0;      // D / (s - n)
    double error_bound = 0;          // per_trial_error^trials when vanishes, else 0
    std::optional<Assignment> witness;  // a point where p(K^-1) != 0
    std::optional<Rational> witness_value;
};

inline constexpr int kRetryBudget = 64;

// Evaluates p at Sigma = K^-1 for random nonsingular K. DegenerateSampling
// when the retry budget runs out.
VanishingReport rho_star_vanishes(const Polynomial& p, const Graph& g, int trials, std::uint64_t seed);

// Same test for several polynomials, sharing the random points.
std::vector<VanishingReport> rho_star_vanishes_batch(const std::vector<Polynomial>& ps, const Graph& g, int trials,
                                                     std::uint64_t seed);

struct DimensionReport {
    int rank = 0;
    int bound = 0;  // n + |E|
};

// Rank of the Jacobian of k -> K^-1 at a random nonsingular point.
DimensionReport model_dimension(const Graph& g, std::uint64_t seed);

}  // namespace toricgm

#endif  // TORICGM_SYM_LINALG_HPP
