#include <doctest.h>

#include "figure_data.hpp"
#include "oracles.hpp"
#include "toricgm/ci_ideal.hpp"
#include "toricgm/error.hpp"
#include "toricgm/fixtures.hpp"
#include "toricgm/monomial_maps.hpp"
#include "toricgm/sym_linalg.hpp"
#include "toricgm/toric_engine.hpp"

using namespace toricgm;

namespace {

const Graph fig1 = fixtures::named("fig1");

ExponentVector vec(const char* monomial, int n) {
    return exponent_vector(parse_polynomial(monomial).terms().begin()->first, n);
}

template <class F>
bool throws_code(ErrorCode code, F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("sigma column order") {
    const auto cols = sigma_columns(3);
    CHECK(cols == std::vector<Var>{Var::sigma(1, 1), Var::sigma(1, 2), Var::sigma(1, 3), Var::sigma(2, 2),
                                   Var::sigma(2, 3), Var::sigma(3, 3)});
    CHECK(sigma_count(4) == 10);
    for (Vertex i = 1; i <= 4; ++i)
        for (Vertex j = i; j <= 4; ++j) CHECK(sigma_columns(4)[sigma_index(4, i, j)] == Var::sigma(i, j));
    CHECK(sigma_index(4, 4, 2) == sigma_index(4, 2, 4));
    const auto u = vec("s12^2*s34", 4);
    CHECK(sigma_monomial(u, 4) == parse_polynomial("s12^2*s34").terms().begin()->first);
    CHECK(throws_code(ErrorCode::InvalidArgument, [] { exponent_vector(Monomial(Var::k(1, 2)), 4); }));
}

TEST_CASE("psi and phi images") {
    CHECK(psi_image(fig1, Var::sigma(1, 2)) == Monomial({{Var::a(1), 1}, {Var::a(2), 1}, {Var::k(1, 2), 1}}));
    CHECK(psi_image(fig1, Var::sigma(3, 3)) == Monomial(Var::a(3), 2));
    CHECK(psi_image(fig1, Var::sigma(2, 4)) ==
          Monomial({{Var::a(2), 1}, {Var::a(4), 1}, {Var::k(2, 3), 1}, {Var::k(3, 4), 1}}));
    CHECK(phi_image(fig1, Var::sigma(1, 1)) == Monomial({{Var::k(2, 2), 1}, {Var::k(3, 3), 1}, {Var::k(4, 4), 1}}));
    CHECK(phi_image(fig1, Var::sigma(1, 2)) == Monomial({{Var::k(1, 2), 1}, {Var::k(3, 3), 1}, {Var::k(4, 4), 1}}));
    CHECK(phi_image(fixtures::complete(2), Var::sigma(1, 2)) == Monomial(Var::k(1, 2)));
    // phi agrees with the shortest-path term of the adjugate entry
    for (const auto& name : {"fig1", "fig4", "ex14"}) {
        const Graph g = fixtures::named(name);
        for (Vertex i = 1; i <= g.n(); ++i)
            for (Vertex j = i; j <= g.n(); ++j)
                CHECK(phi_image(g, Var::sigma(i, j)) == shortest_path_monomial(g, i, j).monomial);
    }
    CHECK(throws_code(ErrorCode::NotUnique, [] { psi_image(fixtures::cycle(4), Var::sigma(1, 3)); }));
}

TEST_CASE("exponent matrices of the four-vertex example") {
    const auto psi = build_matrix(fig1, MapKind::Psi);
    const auto phi = build_matrix(fig1, MapKind::Phi);
    CHECK(psi.data == figure_data::fig1_m_psi());
    CHECK(phi.data == figure_data::fig1_m_phi());
    CHECK(psi.rows == std::vector<Var>{Var::a(1), Var::a(2), Var::a(3), Var::a(4), Var::k(1, 2), Var::k(1, 3),
                                       Var::k(2, 3), Var::k(3, 4)});
    CHECK(phi.rows == std::vector<Var>{Var::k(1, 1), Var::k(2, 2), Var::k(3, 3), Var::k(4, 4), Var::k(1, 2),
                                       Var::k(1, 3), Var::k(2, 3), Var::k(3, 4)});
    CHECK(psi.cols == sigma_columns(4));
    const auto k2 = build_matrix(fixtures::complete(2), MapKind::Psi);
    CHECK(k2.data == IntMatrix{{2, 1, 0}, {0, 1, 2}, {0, 1, 0}});
    // column sums: 2 + path length for psi, n - 1 for phi
    for (const auto& name : {"fig1", "fig4", "ex14", "path4"}) {
        const Graph g = fixtures::named(name);
        const auto mp = build_matrix(g, MapKind::Psi);
        const auto mf = build_matrix(g, MapKind::Phi);
        for (std::size_t c = 0; c < mp.cols.size(); ++c) {
            long long sp = 0, sf = 0;
            for (const auto& row : mp.data) sp += row[c];
            for (const auto& row : mf.data) sf += row[c];
            const Var v = mp.cols[c];
            const auto path = oracle::shortest_paths(g, v.i(), v.j()).front();
            CHECK(sp == 2 + static_cast<long long>(path.size()) - 1);
            CHECK(sf == g.n() - 1);
        }
    }
}

TEST_CASE("row spaces") {
    const auto psi = build_matrix(fig1, MapKind::Psi);
    const auto phi = build_matrix(fig1, MapKind::Phi);
    CHECK(row_space_equal(psi, phi));
    CHECK(row_space_equal(psi, psi));
    auto cut = psi;
    cut.data[4].assign(cut.data[4].size(), 0);  // zero the k12 row
    CHECK_FALSE(row_space_equal(psi, cut));
    CHECK(throws_code(ErrorCode::ColumnMismatch,
                      [&] { row_space_equal(psi, build_matrix(fixtures::named("fig4"), MapKind::Psi)); }));
    const Graph k1(1, {});
    CHECK(row_space_equal(build_matrix(k1, MapKind::Psi), build_matrix(k1, MapKind::Phi)));
}

TEST_CASE("diagonal row relation") {
    CHECK(kii_relation_check(fig1));
    CHECK(kii_relation_check(fixtures::complete(2)));
    CHECK(kii_relation_check(fixtures::named("ex14")));
    CHECK(kii_relation_check(fixtures::named("fig4")));
}

TEST_CASE("kernel membership") {
    const int n = 4;
    CHECK(kernel_member(fig1, vec("s13*s34", n), vec("s14*s33", n)));
    CHECK(kernel_member(fig1, vec("s12*s34", n), vec("s12*s34", n)));
    CHECK_FALSE(kernel_member(fig1, vec("s13*s34", n), vec("s13*s44", n)));
    CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { kernel_member(fig1, ExponentVector(3, 0), vec("s12", n)); }));
    // kernel membership agrees with the independent psi oracle on all degree-2 pairs
    const auto monos = oracle::sigma_monomials(n, 2);
    for (std::size_t p = 0; p < monos.size(); ++p)
        for (std::size_t q = p; q < monos.size(); ++q)
            CHECK(kernel_member(fig1, monos[p], monos[q]) ==
                  (oracle::psi_of(fig1, monos[p]) == oracle::psi_of(fig1, monos[q])));
    const auto m = build_matrix(fig1, MapKind::Psi);
    CHECK(m.apply(vec("s13*s34", n)) == m.apply(vec("s14*s33", n)));
}

TEST_CASE("contraction to the central vertex") {
    const Graph ex14 = fixtures::named("ex14");
    for (const auto& gen : ci_generators_1clique(ex14).items()) {
        const Move mv = move_from_binomial(gen.poly, 6);
        for (Vertex c : {3, 4}) CHECK(contraction_check(ex14, c, mv.positive(), mv.negative()));
    }
    CHECK(contraction_check(ex14, 4, vec("s12*s56", 6), vec("s12*s56", 6)));
    const Graph fig4 = fixtures::named("fig4");
    CHECK(contraction_check(fig4, 3, vec("s14*s25", 5), vec("s15*s24", 5)));
    CHECK(throws_code(ErrorCode::NotCentral, [&] { contraction_check(fig4, 1, vec("s14*s25", 5), vec("s15*s24", 5)); }));
    CHECK(throws_code(ErrorCode::NotInKernel, [&] { contraction_check(fig4, 3, vec("s14*s25", 5), vec("s11*s24", 5)); }));
}

TEST_CASE("exponent matrix JSON") {
    const auto j = to_json(build_matrix(fixtures::complete(2), MapKind::Psi));
    CHECK(j.dump() == R"({"rows":["a1","a2","k12"],"cols":["s11","s12","s22"],"data":[[2,1,0],[0,1,2],[0,1,0]]})");
}
