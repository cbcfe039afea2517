#include <doctest.h>

#include "figure_data.hpp"
#include "oracles.hpp"
#include "toricgm/ci_ideal.hpp"
#include "toricgm/error.hpp"
#include "toricgm/fixtures.hpp"
#include "toricgm/monomial_maps.hpp"
#include "toricgm/sym_linalg.hpp"

using namespace toricgm;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

Polynomial s(Vertex i, Vertex j) { return Polynomial(Var::sigma(i, j)); }

Polynomial minor2(Vertex r1, Vertex r2, Vertex c1, Vertex c2) { return s(r1, c1) * s(r2, c2) - s(r1, c2) * s(r2, c1); }

std::set<std::string> keys(const std::vector<Polynomial>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(sign_key(p));
    return out;
}

// R_G for the six-vertex graph with blocks {1,2,3} and the 4-cycle-plus-chord on {3,4,5,6}.
std::vector<Polynomial> fig2_rg() {
    std::vector<Polynomial> out{oracle::leibniz({{s(3, 4), s(3, 5), s(3, 6)},
                                                 {s(4, 4), s(4, 5), s(4, 6)},
                                                 {s(5, 4), s(5, 5), s(5, 6)}})};
    const VertexSet rows{1, 2, 3}, cols{3, 4, 5, 6};
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t d = c + 1; d < cols.size(); ++d) {
                    auto m = minor2(rows[a], rows[b], cols[c], cols[d]);
                    if (!m.is_zero()) out.push_back(m);
                }
    return out;
}

}  // namespace

TEST_CASE("minors of separation submatrices") {
    const Graph fig1 = fixtures::named("fig1");
    const auto gens = partition_minors(fig1, {{1, 2}, {4}, {3}});
    CHECK(keys(gens.polynomials()) == keys({P("s13*s24 - s14*s23"), P("s13*s34 - s14*s33"), P("s23*s34 - s24*s33")}));
    for (const auto& g : gens.items()) CHECK(g.provenance == "{1,2}|{4}|{3}");

    // first partition of the six-vertex example: rows {1,2,3}, columns {3,4,5,6}
    const Graph ex14 = fixtures::named("ex14");
    std::vector<Polynomial> expected;
    for (Vertex r1 = 1; r1 <= 3; ++r1)
        for (Vertex r2 = r1 + 1; r2 <= 3; ++r2)
            for (Vertex c1 = 3; c1 <= 6; ++c1)
                for (Vertex c2 = c1 + 1; c2 <= 6; ++c2) expected.push_back(minor2(r1, r2, c1, c2));
    CHECK(keys(partition_minors(ex14, {{1, 2}, {4, 5, 6}, {3}}).polynomials()) == keys(expected));

    const Graph split(3, {{1, 2}});
    CHECK(keys(partition_minors(split, {{1, 2}, {3}, {}}).polynomials()) == keys({P("s13"), P("s23")}));
    bool invalid = false;
    try {
        partition_minors(fig1, {{1}, {2}, {}});
    } catch (const Error& e) {
        invalid = e.code() == ErrorCode::InvalidArgument;
    }
    CHECK(invalid);
    CHECK(minors({1, 2}, {1, 2}, 2) == std::vector<Polynomial>{P("s11*s22 - s12^2")});
    CHECK(sigma_submatrix({2}, {1, 3}) == std::vector<std::vector<Polynomial>>{{s(1, 2), s(2, 3)}});
}

TEST_CASE("generator sets deduplicate up to sign") {
    GeneratorSet set;
    CHECK(set.add(P("s12*s34 - s13*s24"), "x"));
    CHECK_FALSE(set.add(P("s13*s24 - s12*s34"), "y"));
    CHECK(set.size() == 1);
    CHECK(set.items().front().provenance == "x");
    CHECK(set.contains_up_to_sign(P("s13*s24 - s12*s34")));
    CHECK(sign_key(P("-s11 + s22")) == sign_key(P("s11 - s22")));
    const auto j = to_json(set);
    CHECK(j[0]["degree"] == 2);
    CHECK(j[0]["provenance"] == "x");
}

TEST_CASE("one-clique CI generators") {
    const Graph ex14 = fixtures::named("ex14");
    const auto gens = ci_generators_1clique(ex14);
    std::vector<Polynomial> listed;
    for (const char* t : figure_data::ex14_generators()) listed.push_back(P(t));
    CHECK(listed.size() == 35);
    CHECK(keys(listed).size() == 34);  // one generator is printed twice
    CHECK(keys(gens.polynomials()) == keys(listed));
    CHECK(graded_piece_dim(gens, 2) == graded_piece_dim(listed, 2));

    CHECK(ci_generators_1clique(fixtures::complete(3)).empty());

    const Graph fig4 = fixtures::named("fig4");
    auto ci = ci_generators_1clique(fig4).polynomials();
    auto quadrics = fixtures::fig4_quadrics();
    auto both = ci;
    both.insert(both.end(), quadrics.begin(), quadrics.end());
    CHECK(graded_piece_dim(ci, 2) == graded_piece_dim(quadrics, 2));
    CHECK(graded_piece_dim(both, 2) == graded_piece_dim(ci, 2));
}

TEST_CASE("degree-2 CI span equals the degree-2 kernel of psi") {
    for (const auto& name : {"fig1", "fig4", "ex14", "path4"}) {
        const Graph g = fixtures::named(name);
        const auto monos = oracle::sigma_monomials(g.n(), 2);
        const auto kernel_dim = monos.size() - oracle::psi_fibers(g, 2).size();
        const auto gens = ci_generators_1clique(g);
        CHECK_MESSAGE(graded_piece_dim(gens, 2) == kernel_dim, name);
        for (const auto& gen : gens.items()) {
            const auto terms = gen.poly.terms();
            CHECK(oracle::psi_of(g, exponent_vector(terms.begin()->first, g.n())) ==
                  oracle::psi_of(g, exponent_vector(terms.rbegin()->first, g.n())));
        }
    }
}

TEST_CASE("full CI generators") {
    const auto path = ci_generators_full(fixtures::path(4), 2);
    bool rank_two = false;
    for (const auto& g : path.items())
        if (g.provenance == "{1}|{4}|{2,3}") {
            rank_two = true;
            CHECK(g.poly.total_degree() == 3);
            CHECK(sign_key(g.poly) ==
                  sign_key(oracle::leibniz({{s(1, 2), s(1, 3), s(1, 4)},
                                            {s(2, 2), s(2, 3), s(2, 4)},
                                            {s(3, 2), s(3, 3), s(3, 4)}})));
        }
    CHECK(rank_two);
    const auto fig3 = ci_generators_full(fixtures::named("fig3"), 2);
    bool found = false;
    for (const auto& g : fig3.items()) found = found || g.provenance == "{1}|{4,5,6,7}|{2,3}";
    CHECK(found);
    CHECK(ci_generators_full(fixtures::complete(5)).empty());
    bool disconnected = false;
    try {
        ci_generators_full(Graph(4, {{1, 2}, {3, 4}}));
    } catch (const Error& e) {
        disconnected = e.code() == ErrorCode::NotConnected;
    }
    CHECK(disconnected);
}

TEST_CASE("graded pieces") {
    // path on four vertices: 5 CI quadrics versus 4 from the clique-sum construction
    std::vector<Polynomial> ci2;
    for (const auto& g : ci_generators_full(fixtures::path(4)).items())
        if (g.poly.total_degree() == 2) ci2.push_back(g.poly);
    CHECK(graded_piece_dim(ci2, 2) == 5);
    // minors of [[s12, s13], [s22, s23]] and [[s13, s14], [s23, s24], [s33, s34]]
    const std::vector<Polynomial> rg{minor2(1, 2, 2, 3), minor2(1, 2, 3, 4), minor2(1, 3, 3, 4), minor2(2, 3, 3, 4)};
    CHECK(graded_piece_dim(rg, 2) == 4);
    CHECK(graded_piece_dim(std::vector<Polynomial>{}, 3) == 0);
    CHECK(graded_piece_dim(std::vector<Polynomial>{P("s11")}, 2) == 1);  // ambient ring from the largest index
    CHECK(graded_piece_dim(std::vector<Polynomial>{P("s11"), P("s22")}, 2) == 5);  // all quadrics but s12^2
    bool too_low = false;
    try {
        graded_piece_dim(std::vector<Polynomial>{P("s11*s22*s12")}, 2);
    } catch (const Error& e) {
        too_low = e.code() == ErrorCode::DegreeTooLow;
    }
    CHECK(too_low);
    // monotone under adding generators
    CHECK(graded_piece_dim(std::vector<Polynomial>{minor2(1, 2, 3, 4)}, 3) <=
          graded_piece_dim(std::vector<Polynomial>{minor2(1, 2, 3, 4), minor2(1, 3, 3, 4)}, 3));
}

TEST_CASE("graded membership") {
    const auto cubics = fixtures::fig2_cubics();
    const auto rg = fig2_rg();
    CHECK(rg.size() == 19);
    for (const auto& g : rg) CHECK(graded_membership(g, rg));
    // The first cubic is a 3x3 minor whose expansion along its bottom row uses
    // 2x2 minors on rows {1,2} only, so it lies in R_G; the second does not.
    const Polynomial expansion = s(4, 4) * minor2(1, 2, 5, 6) - s(4, 5) * minor2(1, 2, 4, 6) + s(4, 6) * minor2(1, 2, 4, 5);
    CHECK(cubics[0] == expansion);
    CHECK(graded_membership(cubics[0], rg));
    CHECK_FALSE(graded_membership(cubics[1], rg));

    const Polynomial m = fixtures::fig3_quartic();
    CHECK(m.size() == 20);
    CHECK(graded_membership(m, ci_generators_full(fixtures::named("fig3"), 3)));
    CHECK_FALSE(graded_membership(m, ci_generators_full(fixtures::named("fig3"), 2)));
    const std::vector<Polynomial> single{minor2(1, 2, 3, 4)};
    CHECK(graded_membership(minor2(1, 2, 3, 4) * P("s11 + s23"), single));
    bool inhomogeneous = false;
    try {
        graded_membership(minor2(1, 2, 3, 4) + P("s11"), single);
    } catch (const Error& e) {
        inhomogeneous = e.code() == ErrorCode::InvalidArgument;
    }
    CHECK(inhomogeneous);
}

TEST_CASE("degree-two theorem verdicts") {
    auto v = check_degree2_theorem(fixtures::named("fig1"), 3);
    CHECK(v.verdict == "CONFIRMED");
    REQUIRE(v.dimension.has_value());
    CHECK(v.dimension->rank == 8);
    REQUIRE(v.markov.has_value());
    CHECK(v.markov->all_connected);
    CHECK(v.all_vanish);
    CHECK(v.sagbi_homogeneous);
    v = check_degree2_theorem(fixtures::named("fig2"), 3);
    CHECK(v.verdict == "NOT_BLOCK");
    CHECK(v.offending_block == VertexSet{3, 4, 5, 6});
    v = check_degree2_theorem(fixtures::complete(5), 3);
    CHECK(v.verdict == "CONFIRMED");
    CHECK(v.generator_count == 0);
    CHECK(v.psi_rank == sigma_count(5));  // full column rank: no kernel
    bool disconnected = false;
    try {
        check_degree2_theorem(Graph(4, {{1, 2}, {3, 4}}), 3);
    } catch (const Error& e) {
        disconnected = e.code() == ErrorCode::NotConnected;
    }
    CHECK(disconnected);
    const auto j = to_json(check_degree2_theorem(fixtures::named("fig1"), 3), 4);
    CHECK(j["verdict"] == "CONFIRMED");
}

TEST_CASE("SAGBI homogeneity") {
    auto r = sagbi_homogeneity(fixtures::named("fig1"));
    CHECK(r.holds);
    CHECK(r.checked == 3);
    r = sagbi_homogeneity(fixtures::named("ex14"));
    CHECK(r.holds);
    CHECK(r.checked == 34);
    r = sagbi_homogeneity(fixtures::complete(2));
    CHECK(r.holds);
    CHECK(r.checked == 0);
    // independent check: phi images of both terms agree as monomials
    const Graph g = fixtures::named("fig4");
    for (const auto& gen : ci_generators_1clique(g).items()) {
        Monomial lhs, rhs;
        for (const auto& [v, e] : gen.poly.terms().begin()->first.factors())
            for (int t = 0; t < e; ++t) lhs = lhs * phi_image(g, v);
        for (const auto& [v, e] : gen.poly.terms().rbegin()->first.factors())
            for (int t = 0; t < e; ++t) rhs = rhs * phi_image(g, v);
        CHECK(lhs == rhs);
    }
    CHECK(sagbi_homogeneity_check(g));
}

TEST_CASE("CI generators vanish on the model") {
    for (const auto& name : {"fig2", "fig3", "path4"}) {
        const Graph g = fixtures::named(name);
        const auto polys = ci_generators_full(g, 2).polynomials();
        for (const auto& r : rho_star_vanishes_batch(polys, g, 4, 17)) CHECK_MESSAGE(r.vanishes, name);
    }
}

TEST_CASE("counterexample suite") {
    const auto r = counterexample_suite(16, 1);
    CHECK(r.path_ci_dim == 5);
    CHECK(r.path_rg_dim == 4);
    CHECK(r.b_passed);
    REQUIRE(r.cubics_vanish.size() == 2);
    CHECK(r.cubics_vanish[0].vanishes);
    CHECK(r.cubics_vanish[1].vanishes);
    CHECK(r.cubics_in_rg == std::vector<bool>{true, false});
    CHECK(r.pg2_vanishes.vanishes);
    CHECK(r.g2_dimension.rank + 1 == static_cast<int>(r.g2_sigma_count));
    CHECK(r.m_vanishes.vanishes);
    CHECK(r.m_in_ci);
    CHECK_FALSE(r.m_in_low_degree);
    CHECK(r.c_passed);
    const auto j = to_json(r);
    CHECK(j["b"]["ci_dim_d2"] == 5);
}

TEST_CASE("Macaulay2 export") {
    const Graph g = fixtures::named("fig1");
    const auto text = export_macaulay2(g, ci_generators_1clique(g));
    CHECK(text.find("R = QQ[") != std::string::npos);
    CHECK(text.find("eliminate") != std::string::npos);
    CHECK(text.find("s_(1,3)*s_(3,4)") != std::string::npos);
    CHECK(text.find("I == PG") != std::string::npos);
}
