#include "toricgm/toric_engine.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <set>

#include "toricgm/error.hpp"

namespace toricgm {

ExponentVector Move::positive() const {
    ExponentVector out(vec.size());
    for (std::size_t c = 0; c < vec.size(); ++c) out[c] = std::max(0LL, vec[c]);
    return out;
}

ExponentVector Move::negative() const {
    ExponentVector out(vec.size());
    for (std::size_t c = 0; c < vec.size(); ++c) out[c] = std::max(0LL, -vec[c]);
    return out;
}

Move move_from_binomial(const Polynomial& p, int n) {
    if (p.size() != 2) throw Error(ErrorCode::InvalidArgument, "not a binomial: " + p.to_string());
    auto first = p.terms().begin();
    auto second = std::next(first);
    if (first->second + second->second != 0 || abs(first->second) != 1)
        throw Error(ErrorCode::InvalidArgument, "binomial coefficients must be +1 and -1: " + p.to_string());
    const auto& plus = first->second > 0 ? first->first : second->first;
    const auto& minus = first->second > 0 ? second->first : first->first;
    ExponentVector u = exponent_vector(plus, n);
    ExponentVector v = exponent_vector(minus, n);
    Move m{ExponentVector(u.size())};
    for (std::size_t c = 0; c < u.size(); ++c) m.vec[c] = u[c] - v[c];
    return m;
}

Polynomial binomial_from_move(const Move& m, int n) {
    return Polynomial(sigma_monomial(m.positive(), n)) - Polynomial(sigma_monomial(m.negative(), n));
}

Fiber enumerate_fiber(const ExponentMatrix& m, const ExponentVector& b) {
    const std::size_t rows = m.rows.size();
    const std::size_t cols = m.cols.size();
    if (b.size() != rows) throw Error(ErrorCode::DimensionMismatch, "b must have one entry per row");
    Fiber fiber{b, {}};
    if (std::any_of(b.begin(), b.end(), [](long long x) { return x < 0; })) return fiber;
    for (std::size_t c = 0; c < cols; ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < rows; ++r) {
            if (m.data[r][c] < 0) throw Error(ErrorCode::InvalidArgument, "exponent matrix must be nonnegative");
            nonzero = nonzero || m.data[r][c] > 0;
        }
        if (!nonzero) throw Error(ErrorCode::InvalidArgument, "zero column makes the fiber infinite");
    }
    // covered[c][r]: some column >= c has a positive entry in row r
    std::vector<std::vector<char>> covered(cols + 1, std::vector<char>(rows, 0));
    for (std::size_t c = cols; c-- > 0;)
        for (std::size_t r = 0; r < rows; ++r) covered[c][r] = covered[c + 1][r] || m.data[r][c] > 0;

    ExponentVector residual = b;
    ExponentVector u(cols, 0);
    std::function<void(std::size_t)> dfs = [&](std::size_t c) {
        for (std::size_t r = 0; r < rows; ++r)
            if (residual[r] > 0 && !covered[c][r]) return;
        if (c == cols) {
            fiber.elements.push_back(u);
            return;
        }
        long long most = std::numeric_limits<long long>::max();
        for (std::size_t r = 0; r < rows; ++r)
            if (m.data[r][c] > 0) most = std::min(most, residual[r] / m.data[r][c]);
        for (long long t = most; t >= 0; --t) {
            u[c] = t;
            for (std::size_t r = 0; r < rows; ++r) residual[r] -= t * m.data[r][c];
            dfs(c + 1);
            for (std::size_t r = 0; r < rows; ++r) residual[r] += t * m.data[r][c];
        }
        u[c] = 0;
    };
    dfs(0);
    std::sort(fiber.elements.begin(), fiber.elements.end());
    return fiber;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
    std::vector<std::size_t> parent;
};

// Component label per fiber element.
std::vector<std::size_t> fiber_components(const Fiber& fiber, const std::vector<Move>& moves) {
    std::map<ExponentVector, std::size_t> index;
    for (std::size_t t = 0; t < fiber.elements.size(); ++t) index.emplace(fiber.elements[t], t);
    UnionFind uf(fiber.elements.size());
    for (std::size_t t = 0; t < fiber.elements.size(); ++t) {
        const auto& x = fiber.elements[t];
        for (const auto& move : moves) {
            if (move.vec.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "move length");
            for (int dir : {1, -1}) {
                ExponentVector y(x.size());
                bool ok = true;
                for (std::size_t c = 0; c < x.size() && ok; ++c) {
                    y[c] = x[c] - dir * move.vec[c];
                    ok = y[c] >= 0;
                }
                if (!ok) continue;
                auto it = index.find(y);
                if (it != index.end()) uf.unite(t, it->second);
            }
        }
    }
    std::vector<std::size_t> out(fiber.elements.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = uf.find(t);
    return out;
}

void monomials_of_degree(std::size_t vars, int degree, std::size_t start, ExponentVector& u,
                         const std::function<void(const ExponentVector&)>& visit) {
    if (degree == 0) {
        visit(u);
        return;
    }
    for (std::size_t c = start; c < vars; ++c) {
        ++u[c];
        monomials_of_degree(vars, degree - 1, c, u, visit);
        --u[c];
    }
}

}  // namespace

bool fiber_graph_connected(const Fiber& fiber, const std::vector<Move>& moves) {
    if (fiber.elements.size() <= 1) return true;
    auto labels = fiber_components(fiber, moves);
    return std::all_of(labels.begin(), labels.end(), [&](std::size_t l) { return l == labels.front(); });
}

MarkovReport verify_markov(const Graph& g, const std::vector<Move>& moves, int degree_bound) {
    if (degree_bound < 2) throw Error(ErrorCode::InvalidArgument, "degree bound must be >= 2");
    auto m = build_matrix(g, MapKind::Psi);
    std::set<ExponentVector> targets;
    ExponentVector u(m.cols.size(), 0);
    for (int d = 1; d <= degree_bound; ++d)
        monomials_of_degree(m.cols.size(), d, 0, u, [&](const ExponentVector& x) { targets.insert(m.apply(x)); });

    MarkovReport report;
    report.verified_degree = degree_bound;
    for (const auto& b : targets) {
        Fiber fiber = enumerate_fiber(m, b);
        ++report.fibers_checked;
        report.max_fiber_size = std::max(report.max_fiber_size, fiber.elements.size());
        if (fiber.elements.size() <= 1) continue;
        auto labels = fiber_components(fiber, moves);
        std::map<std::size_t, ExponentVector> reps;
        for (std::size_t t = 0; t < labels.size(); ++t) reps.try_emplace(labels[t], fiber.elements[t]);
        if (reps.size() == 1) continue;
        MarkovFailure failure;
        failure.b = b;
        failure.fiber_size = fiber.elements.size();
        failure.components = reps.size();
        for (auto& [label, rep] : reps) failure.representatives.push_back(rep);
        std::sort(failure.representatives.begin(), failure.representatives.end());
        report.failures.push_back(std::move(failure));
    }
    report.all_connected = report.failures.empty();
    return report;
}

nlohmann::ordered_json to_json(const MarkovReport& r, int n) {
    nlohmann::ordered_json j;
    j["degree_bound"] = r.verified_degree;
    j["fibers_checked"] = r.fibers_checked;
    j["max_fiber_size"] = r.max_fiber_size;
    j["all_connected"] = r.all_connected;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
        nlohmann::ordered_json fj;
        fj["b"] = f.b;
        fj["fiber_size"] = f.fiber_size;
        fj["components"] = f.components;
        auto reps = nlohmann::ordered_json::array();
        for (const auto& rep : f.representatives) reps.push_back(sigma_monomial(rep, n).to_string());
        fj["representatives"] = std::move(reps);
        failures.push_back(std::move(fj));
    }
    j["failures"] = std::move(failures);
    return j;
}

// ---------------------------------------------------------------- circular embedding

CircularEmbedding CircularEmbedding::identity(int n) {
    CircularEmbedding e;
    e.n = n;
    for (Vertex v = 1; v <= n; ++v) e.order.push_back(v);
    return e;
}

int CircularEmbedding::position(Vertex v) const {
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end()) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " not embedded");
    return static_cast<int>(it - order.begin());
}

bool edges_intersect(const CircularEmbedding& emb, Edge e, Edge f) {
    auto [i, j] = e;
    auto [k, l] = f;
    if (i == k || i == l || j == k || j == l) return true;
    if (i == j || k == l) return false;  // a loop meets only edges at its vertex
    int a = emb.position(i), b = emb.position(j);
    if (a > b) std::swap(a, b);
    const int p = emb.position(k), q = emb.position(l);
    const bool p_inside = a < p && p < b;
    const bool q_inside = a < q && q < b;
    return p_inside != q_inside;
}

int circular_weight(const CircularEmbedding& emb, Vertex i, Vertex j) {
    int count = 0;
    for (Vertex p = 1; p <= emb.n; ++p)
        for (Vertex q = p; q <= emb.n; ++q)
            if (!edges_intersect(emb, {i, j}, {p, q})) ++count;
    return count;
}

TermOrder circular_order(const CircularEmbedding& emb) {
    auto table = std::make_shared<std::map<std::pair<int, int>, long long>>();
    for (Vertex p = 1; p <= emb.n; ++p)
        for (Vertex q = p; q <= emb.n; ++q) (*table)[{p, q}] = circular_weight(emb, p, q);
    return TermOrder::weighted(
        [table](const Var& v) -> long long {
            if (v.kind() != VarKind::Sigma) return 0;
            auto it = table->find({v.i(), v.j()});
            return it == table->end() ? 0 : it->second;
        },
        "circular");
}

std::vector<Polynomial> nonintersecting_basis(const CircularEmbedding& emb) {
    if (emb.n < 2) throw Error(ErrorCode::InvalidArgument, "non-intersecting basis needs n >= 2");
    const auto& o = emb.order;
    const int n = emb.n;
    auto s = [](Vertex x, Vertex y) { return Polynomial(Var::sigma(x, y)); };
    std::vector<Polynomial> out;
    for (int q1 = 0; q1 < n; ++q1)
        for (int q2 = q1 + 1; q2 < n; ++q2)
            for (int q3 = q2 + 1; q3 < n; ++q3)
                for (int q4 = q3 + 1; q4 < n; ++q4) {
                    const Vertex x1 = o[q1], x2 = o[q2], x3 = o[q3], x4 = o[q4];
                    Polynomial crossing = s(x1, x3) * s(x2, x4);
                    out.push_back(s(x1, x2) * s(x3, x4) - crossing);
                    out.push_back(s(x1, x4) * s(x2, x3) - crossing);
                }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int z = 0; z < n; ++z) {
                if (z == p || z == q) continue;
                const Vertex x = o[p], y = o[q], w = o[z];
                out.push_back(s(x, y) * s(w, w) - s(x, w) * s(y, w));
            }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const Vertex x = o[p], y = o[q];
            out.push_back(s(x, x) * s(y, y) - s(x, y) * s(x, y));
        }
    return out;
}

std::vector<Polynomial> nonintersecting_basis(int n) { return nonintersecting_basis(CircularEmbedding::identity(n)); }

GCircle restrict_to_gcircle(const Graph& g, Vertex c) {
    auto centers = central_vertices(g);
    if (centers.size() > 1)
        throw Error(ErrorCode::MultipleCenters, "graph has central vertices " + to_string(centers));
    if (centers.empty() || centers.front() != c)
        throw Error(ErrorCode::NotCentral, std::to_string(c) + " is not the central vertex");
    GCircle out;
    out.center = c;
    out.embedding.n = g.n();
    std::vector<VertexSet> arcs;
    for (auto block : biconnected_components(g)) {
        block.erase(std::remove(block.begin(), block.end(), c), block.end());
        arcs.push_back(std::move(block));
    }
    std::sort(arcs.begin(), arcs.end());
    for (const auto& arc : arcs) out.embedding.order.insert(out.embedding.order.end(), arc.begin(), arc.end());
    out.embedding.order.push_back(c);

    std::set<Var> removed;
    for (Vertex p = 1; p <= g.n(); ++p)
        for (Vertex q = p; q <= g.n(); ++q) {
            auto path = shortest_path(g, p, q);
            if (std::find(path.begin(), path.end(), c) == path.end()) removed.insert(Var::sigma(p, q));
        }
    out.removed.assign(removed.begin(), removed.end());
    for (auto& b : nonintersecting_basis(out.embedding)) {
        auto vars = b.variables();
        if (std::none_of(vars.begin(), vars.end(), [&](Var v) { return removed.count(v) > 0; }))
            out.basis.push_back(std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------- Buchberger

namespace {

Polynomial monic(const Polynomial& p, const TermOrder& order) {
    Term lt = leading_term(p, order);
    return p * (Rational(1) / lt.coefficient);
}

std::vector<std::string> canonical_strings(const std::vector<Polynomial>& ps, const TermOrder& order) {
    std::vector<std::string> out;
    for (const auto& p : ps)
        if (!p.is_zero()) out.push_back(monic(p, order).to_string());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& order) {
    std::vector<Term> leads;
    for (const auto& g : basis) leads.push_back(leading_term(g, order));
    Polynomial rem;
    Polynomial work = p;
    while (!work.is_zero()) {
        Term lt = leading_term(work, order);
        std::size_t k = 0;
        while (k < basis.size() && !leads[k].monomial.divides(lt.monomial)) ++k;
        if (k < basis.size()) {
            Polynomial shift(lt.monomial.quotient(leads[k].monomial), lt.coefficient / leads[k].coefficient);
            work -= shift * basis[k];
        } else {
            rem.add_term(lt.monomial, lt.coefficient);
            work.add_term(lt.monomial, -lt.coefficient);
        }
    }
    return rem;
}

GroebnerReport buchberger_binomial(const std::vector<Polynomial>& gens, const TermOrder& order) {
    GroebnerReport report;
    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;
    {
        std::set<std::string> seen;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            Polynomial m = monic(g, order);
            if (!seen.insert(m.to_string()).second) continue;
            leads.push_back(leading_term(m, order).monomial);
            basis.push_back(std::move(m));
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    bool added = false;
    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        std::size_t best = 0;
        Monomial best_lcm = lcm(leads[pairs[0].first], leads[pairs[0].second]);
        for (std::size_t t = 1; t < pairs.size(); ++t) {
            Monomial l = lcm(leads[pairs[t].first], leads[pairs[t].second]);
            if (order.less(l, best_lcm)) {
                best = t;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();
        if (gcd(leads[i], leads[j]).is_one()) {
            ++report.pairs_skipped;
            continue;
        }
        ++report.pairs_processed;
        Polynomial s = Polynomial(best_lcm.quotient(leads[i])) * basis[i] -
                       Polynomial(best_lcm.quotient(leads[j])) * basis[j];
        Polynomial r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        added = true;
        r = monic(r, order);
        if (basis.size() >= kGroebnerLimit)
            throw Error(ErrorCode::SizeLimit, "Groebner basis exceeded " + std::to_string(kGroebnerLimit) + " elements");
        leads.push_back(leading_term(r, order).monomial);
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
    report.input_is_groebner = !added;

    // Minimize, then interreduce tails.
    std::vector<std::size_t> keep;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        bool redundant = false;
        for (std::size_t u = 0; u < basis.size() && !redundant; ++u) {
            if (u == t || !leads[u].divides(leads[t])) continue;
            redundant = leads[u] != leads[t] || u < t;
        }
        if (!redundant) keep.push_back(t);
    }
    std::vector<Polynomial> minimal;
    for (std::size_t t : keep) minimal.push_back(basis[t]);
    std::vector<Polynomial> reduced;
    for (std::size_t t = 0; t < minimal.size(); ++t) {
        std::vector<Polynomial> others;
        for (std::size_t u = 0; u < minimal.size(); ++u)
            if (u != t) others.push_back(minimal[u]);
        Term lt = leading_term(minimal[t], order);
        Polynomial tail = minimal[t];
        tail.add_term(lt.monomial, -lt.coefficient);
        Polynomial r = normal_form(tail, others, order);
        r.add_term(lt.monomial, lt.coefficient);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
        return order.less(leading_term(x, order).monomial, leading_term(y, order).monomial);
    });
    report.basis = std::move(reduced);
    report.input_is_reduced = report.input_is_groebner &&
                              canonical_strings(report.basis, order) == canonical_strings(gens, order);
    return report;
}

}  // namespace toricgm
