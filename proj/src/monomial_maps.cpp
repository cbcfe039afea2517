#include "toricgm/monomial_maps.hpp"

#include <algorithm>

#include "toricgm/error.hpp"

namespace toricgm {

std::vector<Var> sigma_columns(int n) {
    std::vector<Var> out;
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i; j <= n; ++j) out.push_back(Var::sigma(i, j));
    return out;
}

std::size_t sigma_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2; }

std::size_t sigma_index(int n, Vertex i, Vertex j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw Error(ErrorCode::InvalidArgument, "sigma index out of range");
    // rows 1..i-1 contribute n, n-1, ..., n-i+2 entries
    const std::size_t before = static_cast<std::size_t>((i - 1) * n - (i - 1) * (i - 2) / 2);
    return before + static_cast<std::size_t>(j - i);
}

ExponentVector exponent_vector(const Monomial& m, int n) {
    ExponentVector u(sigma_count(n), 0);
    for (const auto& [v, e] : m.factors()) {
        if (v.kind() != VarKind::Sigma) throw Error(ErrorCode::InvalidArgument, v.name() + " is not a sigma variable");
        u[sigma_index(n, v.i(), v.j())] += e;
    }
    return u;
}

Monomial sigma_monomial(const ExponentVector& u, int n) {
    if (u.size() != sigma_count(n)) throw Error(ErrorCode::DimensionMismatch, "exponent vector length");
    auto cols = sigma_columns(n);
    std::vector<Monomial::Factor> factors;
    for (std::size_t c = 0; c < u.size(); ++c) {
        if (u[c] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
        if (u[c] > 0) factors.emplace_back(cols[c], static_cast<int>(u[c]));
    }
    return Monomial(std::move(factors));
}

namespace {

void require_sigma(const Graph& g, Var v) {
    if (v.kind() != VarKind::Sigma || v.j() > g.n())
        throw Error(ErrorCode::InvalidArgument, v.name() + " is not a sigma variable of this graph");
}

std::vector<Monomial::Factor> path_factors(const std::vector<Vertex>& path) {
    std::vector<Monomial::Factor> out;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) out.emplace_back(Var::k(path[t], path[t + 1]), 1);
    return out;
}

}  // namespace

Monomial psi_image(const Graph& g, Var sigma) {
    require_sigma(g, sigma);
    auto factors = path_factors(shortest_path(g, sigma.i(), sigma.j()));
    factors.emplace_back(Var::a(sigma.i()), 1);
    factors.emplace_back(Var::a(sigma.j()), 1);
    return Monomial(std::move(factors));
}

Monomial phi_image(const Graph& g, Var sigma) {
    require_sigma(g, sigma);
    auto path = shortest_path(g, sigma.i(), sigma.j());
    auto factors = path_factors(path);
    for (Vertex t = 1; t <= g.n(); ++t)
        if (std::find(path.begin(), path.end(), t) == path.end()) factors.emplace_back(Var::k(t, t), 1);
    return Monomial(std::move(factors));
}

ExponentVector ExponentMatrix::apply(const ExponentVector& u) const {
    if (u.size() != cols.size()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match columns");
    ExponentVector out(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out[r] += data[r][c] * u[c];
    return out;
}

ExponentMatrix build_matrix(const Graph& g, MapKind which) {
    ExponentMatrix m;
    for (Vertex i = 1; i <= g.n(); ++i) m.rows.push_back(which == MapKind::Psi ? Var::a(i) : Var::k(i, i));
    for (auto [i, j] : g.edges()) m.rows.push_back(Var::k(i, j));
    m.cols = sigma_columns(g.n());
    m.data.assign(m.rows.size(), std::vector<long long>(m.cols.size(), 0));
    for (std::size_t c = 0; c < m.cols.size(); ++c) {
        Monomial image = which == MapKind::Psi ? psi_image(g, m.cols[c]) : phi_image(g, m.cols[c]);
        for (std::size_t r = 0; r < m.rows.size(); ++r) m.data[r][c] = image.exponent(m.rows[r]);
    }
    return m;
}

bool row_space_equal(const ExponentMatrix& m1, const ExponentMatrix& m2) {
    if (m1.cols != m2.cols) throw Error(ErrorCode::ColumnMismatch, "exponent matrices have different columns");
    // One vertex: phi(s11) is the empty product, so only the kernels are compared, and both are zero.
    if (m1.cols.size() == 1) return true;
    IntMatrix stacked = m1.data;
    stacked.insert(stacked.end(), m2.data.begin(), m2.data.end());
    const std::size_t r1 = rank(m1.data);
    const std::size_t r2 = rank(m2.data);
    const std::size_t r12 = rank(stacked);
    return r1 == r12 && r2 == r12;
}

bool kii_relation_check(const Graph& g) {
    const int n = g.n();
    auto psi = build_matrix(g, MapKind::Psi);
    auto phi = build_matrix(g, MapKind::Phi);
    auto row_of = [](const ExponentMatrix& m, Var v) -> const std::vector<long long>& {
        auto it = std::find(m.rows.begin(), m.rows.end(), v);
        return m.data[static_cast<std::size_t>(it - m.rows.begin())];
    };
    for (Vertex i = 1; i <= n; ++i) {
        std::vector<long long> rhs(psi.cols.size(), 0);
        for (Vertex j = 1; j <= n; ++j) {
            if (j == i) continue;
            const auto& row = row_of(psi, Var::a(j));
            for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] += row[c];
        }
        for (Vertex s : g.neighbors(i)) {
            const auto& row = row_of(psi, Var::k(i, s));
            for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] -= row[c];
        }
        const auto& lhs = row_of(phi, Var::k(i, i));
        for (std::size_t c = 0; c < rhs.size(); ++c)
            if (2 * lhs[c] != rhs[c]) return false;
    }
    return true;
}

bool kernel_member(const ExponentMatrix& m, const ExponentVector& u, const ExponentVector& v) {
    if (u.size() != m.cols.size() || v.size() != m.cols.size())
        throw Error(ErrorCode::DimensionMismatch, "exponent vectors must have one entry per sigma column");
    return m.apply(u) == m.apply(v);
}

bool kernel_member(const Graph& g, const ExponentVector& u, const ExponentVector& v) {
    return kernel_member(build_matrix(g, MapKind::Psi), u, v);
}

bool contraction_check(const Graph& g, Vertex c, const ExponentVector& u, const ExponentVector& v) {
    auto contraction = contract_to_center(g, c);
    if (!kernel_member(g, u, v)) throw Error(ErrorCode::NotInKernel, "u - v is not in the kernel of M_psi");
    const int n = g.n();
    const int m = contraction.image.n();
    auto cols = sigma_columns(n);
    ExponentVector uc(sigma_count(m), 0), vc(sigma_count(m), 0);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (u[k] == 0 && v[k] == 0) continue;
        auto path = shortest_path(g, cols[k].i(), cols[k].j());
        if (std::find(path.begin(), path.end(), c) == path.end()) continue;
        const Vertex p = contraction.image_vertex(contraction.rho[cols[k].i()]);
        const Vertex q = contraction.image_vertex(contraction.rho[cols[k].j()]);
        const std::size_t target = sigma_index(m, p, q);
        uc[target] += u[k];
        vc[target] += v[k];
    }
    return kernel_member(contraction.image, uc, vc);
}

nlohmann::ordered_json to_json(const ExponentMatrix& m) {
    nlohmann::ordered_json j;
    auto names = [](const std::vector<Var>& vs) {
        auto out = nlohmann::ordered_json::array();
        for (Var v : vs) out.push_back(v.name());
        return out;
    };
    j["rows"] = names(m.rows);
    j["cols"] = names(m.cols);
    j["data"] = m.data;
    return j;
}

}  // namespace toricgm
