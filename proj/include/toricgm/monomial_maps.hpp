#ifndef TORICGM_MONOMIAL_MAPS_HPP
#define TORICGM_MONOMIAL_MAPS_HPP

#include <vector>

#include <json.hpp>

#include "toricgm/exact_linalg.hpp"
#include "toricgm/graph.hpp"
#include "toricgm/poly.hpp"

namespace toricgm {

enum class MapKind { Psi, Phi };

using ExponentVector = std::vector<long long>;

// sigma_ij, i <= j, in lex order: s11, s12, ..., s1n, s22, ..., snn.
std::vector<Var> sigma_columns(int n);
std::size_t sigma_index(int n, Vertex i, Vertex j);
std::size_t sigma_count(int n);

// Exponent vector over sigma_columns(n); InvalidArgument for non-sigma variables.
ExponentVector exponent_vector(const Monomial& m, int n);
Monomial sigma_monomial(const ExponentVector& u, int n);

// a_i a_j times the k-variables on the shortest path (a_i^2 for i == j).
Monomial psi_image(const Graph& g, Var sigma);
// Path edges times k_tt for every t off the path, unsigned.
Monomial phi_image(const Graph& g, Var sigma);

struct ExponentMatrix {
    std::vector<Var> rows;
    std::vector<Var> cols;
    IntMatrix data;  // rows x cols

    ExponentVector apply(const ExponentVector& u) const;
};

// Rows a_1..a_n, k_ij (edges, lex) for psi; k_11..k_nn, k_ij for phi.
ExponentMatrix build_matrix(const Graph& g, MapKind which);

// ColumnMismatch when the column labels differ.
bool row_space_equal(const ExponentMatrix& m1, const ExponentMatrix& m2);

// 2 (k_ii row of M_phi) == sum_{j != i} (a_j row of M_psi) - sum_{s ~ i} (k_is row of M_psi).
bool kii_relation_check(const Graph& g);

// M_psi u == M_psi v. DimensionMismatch on wrong lengths.
bool kernel_member(const Graph& g, const ExponentVector& u, const ExponentVector& v);
bool kernel_member(const ExponentMatrix& m, const ExponentVector& u, const ExponentVector& v);

// Restricts u, v to coordinates whose shortest path passes through c, pushes
// them through rho_c and compares their psi images on the contracted graph.
// NotCentral, NotInKernel.
bool contraction_check(const Graph& g, Vertex c, const ExponentVector& u, const ExponentVector& v);

nlohmann::ordered_json to_json(const ExponentMatrix& m);

}  // namespace toricgm

#endif  // TORICGM_MONOMIAL_MAPS_HPP
