#ifndef TORICGM_CI_IDEAL_HPP
#define TORICGM_CI_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toricgm/graph.hpp"
#include "toricgm/poly.hpp"
#include "toricgm/sym_linalg.hpp"
#include "toricgm/toric_engine.hpp"

namespace toricgm {

struct Generator {
    Polynomial poly;
    std::string provenance;  // e.g. "{1,2}|{4}|{3}"
};

// Generators deduplicated up to sign; the first provenance seen is kept.
class GeneratorSet {
public:
    bool add(const Polynomial& p, const std::string& provenance);
    void merge(const GeneratorSet& other);
    const std::vector<Generator>& items() const& { return items_; }
    // Safe to range-for over a temporary set.
    std::vector<Generator> items() && { return std::move(items_); }
    std::vector<Polynomial> polynomials() const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool contains_up_to_sign(const Polynomial& p) const;

private:
    std::vector<Generator> items_;
    std::set<std::string> keys_;
};

// Sign-normalized text: the polynomial or its negative, whichever has a
// positive coefficient on its first term in canonical order.
std::string sign_key(const Polynomial& p);

// Submatrix of the symmetric Sigma with the given row and column labels.
std::vector<std::vector<Polynomial>> sigma_submatrix(const VertexSet& rows, const VertexSet& cols);

// All k x k minors of sigma_submatrix(rows, cols).
std::vector<Polynomial> minors(const VertexSet& rows, const VertexSet& cols, std::size_t k);

// (|C|+1)-minors of Sigma_{A u C, B u C}.
GeneratorSet partition_minors(const Graph& g, const Separation& s);

GeneratorSet ci_generators_1clique(const Graph& g);

// max_c defaults to n - 2.
GeneratorSet ci_generators_full(const Graph& g, std::optional<int> max_c = std::nullopt);

inline constexpr std::size_t kGradedLimit = 2'000'000;

// Dimension of the degree-d piece of the ideal generated by gens.
// DegreeTooLow when a generator has degree > d.
std::size_t graded_piece_dim(const std::vector<Polynomial>& gens, int d);
std::size_t graded_piece_dim(const GeneratorSet& gens, int d);

// p (homogeneous of degree d) lies in the degree-d piece of <gens>.
bool graded_membership(const Polynomial& p, const std::vector<Polynomial>& gens);
bool graded_membership(const Polynomial& p, const GeneratorSet& gens);

struct TheoremVerdict {
    bool block = false;
    std::string verdict;  // CONFIRMED, REFUTED or NOT_BLOCK
    VertexSet offending_block;
    std::size_t generator_count = 0;
    std::optional<MarkovReport> markov;
    std::optional<DimensionReport> dimension;
    std::size_t psi_rank = 0;
    bool dimension_matches = false;
    std::size_t vanishing_checked = 0;
    bool all_vanish = false;
    double vanishing_error_bound = 0;
    bool sagbi_homogeneous = false;
};

TheoremVerdict check_degree2_theorem(const Graph& g, int degree_bound, int trials = 16, std::uint64_t seed = 1);

struct SagbiReport {
    bool holds = true;
    std::size_t checked = 0;
    std::optional<Polynomial> first_failure;
};

// M_phi u == M_phi v for every 1-clique CI generator sigma^u - sigma^v.
SagbiReport sagbi_homogeneity(const Graph& g);
bool sagbi_homogeneity_check(const Graph& g);

struct CounterexampleReport {
    // (a) cubics on the Fig 2 graph
    std::vector<Polynomial> cubics;
    std::vector<VanishingReport> cubics_vanish;
    std::vector<bool> cubics_in_rg;
    std::size_t rg_generators = 0;
    Polynomial pg2_generator;
    VanishingReport pg2_vanishes;
    DimensionReport g2_dimension;
    std::size_t g2_sigma_count = 0;
    bool a_passed = false;
    // (b) path on four vertices
    std::size_t path_ci_dim = 0;
    std::size_t path_rg_dim = 0;
    bool b_passed = false;
    // (c) degree-4 element on the Fig 3 graph
    Polynomial m;
    VanishingReport m_vanishes;
    std::size_t full_generators = 0;
    bool m_in_ci = false;
    std::size_t low_degree_generators = 0;
    bool m_in_low_degree = true;
    bool c_passed = false;
};

CounterexampleReport counterexample_suite(int trials = 16, std::uint64_t seed = 1);

nlohmann::ordered_json to_json(const GeneratorSet& gens);
nlohmann::ordered_json to_json(const TheoremVerdict& v, int n);
nlohmann::ordered_json to_json(const CounterexampleReport& r);
nlohmann::ordered_json to_json(const VanishingReport& r);

// Macaulay2 script: the ring, the ideal, and the elimination ideal P_G of g
// for an independent comparison.
std::string export_macaulay2(const Graph& g, const GeneratorSet& gens);

}  // namespace toricgm

#endif  // TORICGM_CI_IDEAL_HPP
