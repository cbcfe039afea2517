#include "toricgm/sym_linalg.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>

#include "toricgm/error.hpp"

namespace toricgm {

Polynomial SymConcentration::entry(Vertex i, Vertex j) const {
    if (!structural(i, j)) return Polynomial();
    return Polynomial(Var::k(i, j));
}

std::vector<Var> SymConcentration::parameters() const {
    std::vector<Var> out;
    for (Vertex i = 1; i <= n(); ++i) out.push_back(Var::k(i, i));
    for (auto [i, j] : graph_.edges()) out.push_back(Var::k(i, j));
    return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(1);
    if (n > 12) throw Error(ErrorCode::SizeLimit, "symbolic determinant limited to 12x12");
    // memo[mask] = det of the rows n-|mask|..n-1 against the columns in mask
    std::unordered_map<unsigned, Polynomial> memo;
    std::function<Polynomial(unsigned)> det = [&](unsigned mask) -> Polynomial {
        const int count = std::popcount(mask);
        if (count == 0) return Polynomial(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const std::size_t row = n - static_cast<std::size_t>(count);
        Polynomial out;
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!((mask >> c) & 1u)) continue;
            if (!m[row][c].is_zero()) {
                Polynomial sub = det(mask & ~(1u << c));
                if (!sub.is_zero()) {
                    Polynomial term = m[row][c] * sub;
                    if (position % 2) out -= term;
                    else out += term;
                }
            }
            ++position;
        }
        memo.emplace(mask, out);
        return out;
    };
    return det((1u << n) - 1);
}

Polynomial k_minor(const SymConcentration& k, const VertexSet& rows, const VertexSet& cols) {
    if (rows.size() != cols.size()) throw Error(ErrorCode::InvalidArgument, "minor must be square");
    std::vector<std::vector<Polynomial>> m(rows.size(), std::vector<Polynomial>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = k.entry(rows[r], cols[c]);
    return determinant(m);
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 1 || v > g.n()) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

VertexSet all_but(int n, Vertex skip) {
    VertexSet out;
    for (Vertex v = 1; v <= n; ++v)
        if (v != skip) out.push_back(v);
    return out;
}

}  // namespace

Polynomial adjugate_entry(const Graph& g, Vertex i, Vertex j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (g.n() > kSymbolicLimit)
        throw Error(ErrorCode::SizeLimit, "symbolic adjugate limited to n <= " + std::to_string(kSymbolicLimit));
    SymConcentration k(g);
    Polynomial minor = k_minor(k, all_but(g.n(), j), all_but(g.n(), i));
    return (i + j) % 2 ? -minor : minor;
}

SignedMonomial shortest_path_monomial(const Graph& g, Vertex i, Vertex j) {
    auto path = shortest_path(g, i, j);
    std::vector<Monomial::Factor> factors;
    std::vector<char> on_path(g.n() + 1, 0);
    for (Vertex v : path) on_path[v] = 1;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) factors.emplace_back(Var::k(path[t], path[t + 1]), 1);
    for (Vertex t = 1; t <= g.n(); ++t)
        if (!on_path[t]) factors.emplace_back(Var::k(t, t), 1);
    const int length = static_cast<int>(path.size()) - 1;
    return {length % 2 ? -1 : 1, Monomial(std::move(factors))};
}

int diagonal_count(const Monomial& m) {
    int count = 0;
    for (const auto& [v, e] : m.factors())
        if (v.kind() == VarKind::K && v.is_diagonal()) count += e;
    return count;
}

bool check_shortest_path_term(const Graph& g, Vertex i, Vertex j) {
    auto [sign, mono] = shortest_path_monomial(g, i, j);
    Polynomial f = adjugate_entry(g, i, j);
    if (f.coefficient(mono) != sign) return false;
    const int best = diagonal_count(mono);
    for (const auto& [m, c] : f.terms())
        if (m != mono && diagonal_count(m) >= best) return false;
    return true;
}

std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex x, Vertex y) {
    check_vertex(g, x);
    check_vertex(g, y);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{x};
    std::vector<char> used(g.n() + 1, 0);
    used[x] = 1;
    std::function<void(Vertex)> walk = [&](Vertex v) {
        if (v == y) {
            out.push_back(path);
            return;
        }
        for (Vertex w : g.neighbors(v)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            walk(w);
            path.pop_back();
            used[w] = 0;
        }
    };
    walk(x);
    std::sort(out.begin(), out.end());
    return out;
}

bool jones_expansion_check(const Graph& g, Vertex x, Vertex y) {
    Polynomial f = adjugate_entry(g, x, y);
    SymConcentration k(g);
    Polynomial sum;
    for (const auto& path : simple_paths(g, x, y)) {
        Polynomial weight(1);
        for (std::size_t t = 0; t + 1 < path.size(); ++t) weight = weight * k.entry(path[t], path[t + 1]);
        VertexSet rest;
        for (Vertex v = 1; v <= g.n(); ++v)
            if (std::find(path.begin(), path.end(), v) == path.end()) rest.push_back(v);
        Polynomial term = weight * k_minor(k, rest, rest);
        // (-1)^(m+1) with m the number of path vertices
        if (path.size() % 2 == 0) sum -= term;
        else sum += term;
    }
    return sum == f;
}

Polynomial rho_star_substitute(const Polynomial& p, const Graph& g, ExpansionGuard guard) {
    if (p.total_degree() > guard.max_degree || g.n() > guard.max_n)
        throw Error(ErrorCode::SizeLimit, "symbolic pullback guard exceeded (degree " +
                                              std::to_string(p.total_degree()) + ", n " + std::to_string(g.n()) +
                                              "); use the randomized test");
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) {
        if (v.kind() != VarKind::Sigma)
            throw Error(ErrorCode::InvalidArgument, "pullback expects a polynomial in sigma, found " + v.name());
        images.emplace(v, adjugate_entry(g, v.i(), v.j()));
    }
    return substitute(p, images);
}

std::size_t SamplingScheme::min_set_size() const {
    return static_cast<std::size_t>(std::min(2 * offdiag_radius + 1, diag_high - diag_low + 1));
}

SamplingScheme sampling_scheme(int n, int degree) {
    SamplingScheme s;
    s.offdiag_radius = std::max<long long>(10, 2LL * degree);
    s.diag_low = static_cast<long long>(std::max(n, 1)) * s.offdiag_radius;
    s.diag_high = 2 * s.diag_low;
    return s;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range) {
    // Rejection sampling keeps the draw uniform and library-independent.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % range;
}

}  // namespace

std::optional<Assignment> random_point(const Graph& g, const SamplingScheme& scheme, std::uint64_t seed,
                                       std::uint64_t stream, std::uint64_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    Assignment point;
    for (Vertex i = 1; i <= g.n(); ++i) {
        const auto span = static_cast<std::uint64_t>(scheme.diag_high - scheme.diag_low + 1);
        point[Var::k(i, i)] = Rational(static_cast<long>(scheme.diag_low + static_cast<long long>(draw(rng, span))));
    }
    for (auto [i, j] : g.edges()) {
        const auto span = static_cast<std::uint64_t>(2 * scheme.offdiag_radius + 1);
        point[Var::k(i, j)] =
            Rational(static_cast<long>(static_cast<long long>(draw(rng, span)) - scheme.offdiag_radius));
    }
    if (determinant(numeric_k(g, point)) == 0) return std::nullopt;
    return point;
}

DenseMatrix numeric_k(const Graph& g, const Assignment& point) {
    const int n = g.n();
    DenseMatrix k(n, std::vector<Rational>(n));
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = 1; j <= n; ++j)
            if (i == j || g.has_edge(i, j)) k[i - 1][j - 1] = point.at(Var::k(i, j));
    return k;
}

namespace {

struct SigmaPoint {
    Assignment k;
    Assignment sigma;
};

SigmaPoint sample_sigma(const Graph& g, const SamplingScheme& scheme, std::uint64_t seed, std::uint64_t trial) {
    for (std::uint64_t attempt = 0; attempt < kRetryBudget; ++attempt) {
        auto point = random_point(g, scheme, seed, trial, attempt);
        if (!point) continue;
        auto inv = inverse(numeric_k(g, *point));
        if (!inv) continue;
        SigmaPoint out{*point, {}};
        for (Vertex i = 1; i <= g.n(); ++i)
            for (Vertex j = i; j <= g.n(); ++j) out.sigma[Var::sigma(i, j)] = (*inv)[i - 1][j - 1];
        return out;
    }
    throw Error(ErrorCode::DegenerateSampling, "singular K persisted for " + std::to_string(kRetryBudget) + " draws");
}

}  // namespace

std::vector<VanishingReport> rho_star_vanishes_batch(const std::vector<Polynomial>& ps, const Graph& g, int trials,
                                                     std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
    int max_degree = 0;
    for (const auto& p : ps) {
        max_degree = std::max(max_degree, p.total_degree());
        for (Var v : p.variables())
            if (v.kind() != VarKind::Sigma || v.j() > g.n())
                throw Error(ErrorCode::InvalidArgument, "variable " + v.name() + " is not a sigma of this graph");
    }
    const SamplingScheme scheme = sampling_scheme(g.n(), max_degree * g.n());
    const std::size_t s = scheme.min_set_size();

    std::vector<VanishingReport> reports(ps.size());
    for (std::size_t t = 0; t < ps.size(); ++t) {
        auto& r = reports[t];
        r.numerator_degree = std::max(0, ps[t].total_degree()) * g.n();
        r.sample_set_size = s;
        r.per_trial_error = static_cast<double>(r.numerator_degree) / static_cast<double>(s - g.n());
    }
    for (int trial = 0; trial < trials; ++trial) {
        bool pending = false;
        for (const auto& r : reports) pending = pending || r.vanishes;
        if (!pending) break;
        SigmaPoint point = sample_sigma(g, scheme, seed, static_cast<std::uint64_t>(trial));
        for (std::size_t t = 0; t < ps.size(); ++t) {
            auto& r = reports[t];
            if (!r.vanishes) continue;
            ++r.trials;
            Rational value = evaluate(ps[t], point.sigma);
            if (value != 0) {
                r.vanishes = false;
                r.witness = point.k;
                r.witness_value = value;
            }
        }
    }
    for (auto& r : reports)
        r.error_bound = r.vanishes ? std::pow(std::min(1.0, r.per_trial_error), r.trials) : 0.0;
    return reports;
}

VanishingReport rho_star_vanishes(const Polynomial& p, const Graph& g, int trials, std::uint64_t seed) {
    return rho_star_vanishes_batch({p}, g, trials, seed).front();
}

DimensionReport model_dimension(const Graph& g, std::uint64_t seed) {
    const int n = g.n();
    DimensionReport out;
    out.bound = n + static_cast<int>(g.edge_count());
    if (n == 0) return out;
    const SamplingScheme scheme = sampling_scheme(n, 2 * n);
    SigmaPoint point = sample_sigma(g, scheme, seed, 0);
    DenseMatrix sigma(n, std::vector<Rational>(n));
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = 1; j <= n; ++j) sigma[i - 1][j - 1] = point.sigma.at(Var::sigma(i, j));

    std::vector<Edge> params;
    for (Vertex i = 1; i <= n; ++i) params.emplace_back(i, i);
    for (auto e : g.edges()) params.push_back(e);

    // Column per parameter e: upper triangle of -Sigma (dK/dk_e) Sigma.
    // (Sigma E_ab Sigma)_pq = S_pa S_bq + S_pb S_aq for a != b, S_pa S_aq for a == b.
    DenseMatrix jac(static_cast<std::size_t>(n * (n + 1) / 2), std::vector<Rational>(params.size()));
    for (std::size_t c = 0; c < params.size(); ++c) {
        auto [a, b] = params[c];
        std::size_t r = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q, ++r) {
                Rational v = sigma[p][a - 1] * sigma[b - 1][q];
                if (a != b) v += sigma[p][b - 1] * sigma[a - 1][q];
                jac[r][c] = -v;
            }
    }
    out.rank = static_cast<int>(rank(std::move(jac)));
    return out;
}

}  // namespace toricgm
