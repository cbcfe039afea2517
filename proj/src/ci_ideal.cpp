#include "toricgm/ci_ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "toricgm/error.hpp"
#include "toricgm/exact_linalg.hpp"
#include "toricgm/fixtures.hpp"
#include "toricgm/monomial_maps.hpp"

namespace toricgm {

std::string sign_key(const Polynomial& p) {
    if (p.is_zero()) return "0";
    return p.terms().begin()->second > 0 ? p.to_string() : (-p).to_string();
}

bool GeneratorSet::add(const Polynomial& p, const std::string& provenance) {
    if (p.is_zero()) return false;
    if (!keys_.insert(sign_key(p)).second) return false;
    items_.push_back({p, provenance});
    return true;
}

void GeneratorSet::merge(const GeneratorSet& other) {
    for (const auto& g : other.items()) add(g.poly, g.provenance);
}

std::vector<Polynomial> GeneratorSet::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(items_.size());
    for (const auto& g : items_) out.push_back(g.poly);
    return out;
}

bool GeneratorSet::contains_up_to_sign(const Polynomial& p) const { return keys_.count(sign_key(p)) > 0; }

std::vector<std::vector<Polynomial>> sigma_submatrix(const VertexSet& rows, const VertexSet& cols) {
    std::vector<std::vector<Polynomial>> m(rows.size(), std::vector<Polynomial>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = Polynomial(Var::sigma(rows[r], cols[c]));
    return m;
}

namespace {

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == k) {
            visit(pick);
            return;
        }
        for (std::size_t t = start; t + (k - pick.size()) <= n; ++t) {
            pick.push_back(t);
            rec(t + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<Polynomial> minors(const VertexSet& rows, const VertexSet& cols, std::size_t k) {
    std::vector<Polynomial> out;
    if (k == 0 || k > rows.size() || k > cols.size()) return out;
    subsets(rows.size(), k, [&](const std::vector<std::size_t>& rs) {
        subsets(cols.size(), k, [&](const std::vector<std::size_t>& cs) {
            VertexSet r, c;
            for (auto t : rs) r.push_back(rows[t]);
            for (auto t : cs) c.push_back(cols[t]);
            Polynomial d = determinant(sigma_submatrix(r, c));
            if (!d.is_zero()) out.push_back(std::move(d));
        });
    });
    return out;
}

namespace {

VertexSet merged(const VertexSet& x, const VertexSet& y) {
    VertexSet out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

GeneratorSet partition_minors(const Graph& g, const Separation& s) {
    if (!separates(g, s.c, s.a, s.b))
        throw Error(ErrorCode::InvalidArgument, to_string(s) + " is not a separation of the graph");
    GeneratorSet out;
    const std::string tag = to_string(s);
    for (auto& p : minors(merged(s.a, s.c), merged(s.b, s.c), s.c.size() + 1)) out.add(p, tag);
    return out;
}

GeneratorSet ci_generators_1clique(const Graph& g) {
    GeneratorSet out;
    for (const auto& p : one_clique_partitions(g)) out.merge(partition_minors(g, Separation{p.a, p.b, {p.c}}));
    return out;
}

GeneratorSet ci_generators_full(const Graph& g, std::optional<int> max_c) {
    if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "ci_generators_full needs a connected graph");
    const int bound = max_c.value_or(std::max(0, g.n() - 2));
    GeneratorSet out;
    for (const auto& s : separations(g, bound)) out.merge(partition_minors(g, s));
    return out;
}

// ---------------------------------------------------------------- graded linear algebra

namespace {

using Multidegree = std::vector<int>;

int max_index(const std::vector<Polynomial>& ps) {
    int n = 0;
    for (const auto& p : ps)
        for (Var v : p.variables()) {
            if (v.kind() != VarKind::Sigma) throw Error(ErrorCode::InvalidArgument, "expected sigma variables, got " + v.name());
            n = std::max(n, v.j());
        }
    return n;
}

Multidegree multidegree(const Monomial& m, int n) {
    Multidegree out(n + 1, 0);
    for (const auto& [v, e] : m.factors()) {
        out[v.i()] += e;
        out[v.j()] += e;
    }
    return out;
}

std::optional<Multidegree> homogeneous_multidegree(const Polynomial& p, int n) {
    if (p.is_zero()) return std::nullopt;
    Multidegree d = multidegree(p.terms().begin()->first, n);
    for (const auto& [m, c] : p.terms())
        if (multidegree(m, n) != d) return std::nullopt;
    return d;
}

// Every sigma monomial over 1..n of the given degree, or only those with the
// given multidegree.
void sigma_monomials(int n, int degree, const Multidegree* target, const std::function<void(const Monomial&)>& visit) {
    std::vector<Var> vars;
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i; j <= n; ++j) vars.push_back(Var::sigma(i, j));
    Multidegree residual = target ? *target : Multidegree(n + 1, 0);
    std::vector<Monomial::Factor> factors;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
        if (left == 0) {
            if (!target || std::all_of(residual.begin(), residual.end(), [](int x) { return x == 0; }))
                visit(Monomial(factors));
            return;
        }
        for (std::size_t t = start; t < vars.size(); ++t) {
            const Var v = vars[t];
            if (target) {
                // everything before row v.i() must already be used up
                bool dead = false;
                for (Vertex u = 1; u < v.i() && !dead; ++u) dead = residual[u] != 0;
                if (dead) return;
                if (residual[v.i()] < 1 || residual[v.j()] < 1 || (v.i() == v.j() && residual[v.i()] < 2)) continue;
                --residual[v.i()];
                --residual[v.j()];
            }
            factors.emplace_back(v, 1);
            rec(t, left - 1);
            factors.pop_back();
            if (target) {
                ++residual[v.i()];
                ++residual[v.j()];
            }
        }
    };
    rec(0, degree);
}

class Coordinates {
public:
    SparseVector of(const Polynomial& p) {
        SparseVector out;
        for (const auto& [m, c] : p.terms()) {
            auto [it, inserted] = index_.try_emplace(m, index_.size());
            out.emplace_back(it->second, c);
        }
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

private:
    std::map<Monomial, std::size_t> index_;
};

struct GradedSystem {
    int n = 0;
    int d = 0;
    bool multigraded = true;
    std::vector<std::pair<Polynomial, std::optional<Multidegree>>> gens;
};

GradedSystem prepare(const std::vector<Polynomial>& gens, int d, int n) {
    GradedSystem sys;
    sys.n = n;
    sys.d = d;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto md = homogeneous_multidegree(g, n);
        sys.multigraded = sys.multigraded && md.has_value();
        sys.gens.emplace_back(g, md);
    }
    return sys;
}

}  // namespace

std::size_t graded_piece_dim(const std::vector<Polynomial>& gens, int d) {
    if (d < 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 0");
    for (const auto& g : gens)
        if (g.total_degree() > d)
            throw Error(ErrorCode::DegreeTooLow, "generator of degree " + std::to_string(g.total_degree()) +
                                                     " exceeds d = " + std::to_string(d));
    const int n = max_index(gens);
    GradedSystem sys = prepare(gens, d, n);
    Coordinates coords;
    std::map<Multidegree, EchelonBasis> blocks;
    std::size_t produced = 0;
    for (const auto& [g, md] : sys.gens) {
        sigma_monomials(n, d - g.total_degree(), nullptr, [&](const Monomial& m) {
            if (++produced > kGradedLimit) throw Error(ErrorCode::SizeLimit, "graded system too large");
            Polynomial mg = Polynomial(m) * g;
            Multidegree key = sys.multigraded ? multidegree(m, n) : Multidegree{};
            if (sys.multigraded)
                for (std::size_t t = 0; t < key.size(); ++t) key[t] += (*md)[t];
            blocks[key].insert(coords.of(mg));
        });
    }
    std::size_t dim = 0;
    for (const auto& [key, basis] : blocks) dim += basis.size();
    return dim;
}

std::size_t graded_piece_dim(const GeneratorSet& gens, int d) { return graded_piece_dim(gens.polynomials(), d); }

bool graded_membership(const Polynomial& p, const std::vector<Polynomial>& gens) {
    if (p.is_zero()) return true;
    const int d = p.total_degree();
    if (!p.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "membership test needs a homogeneous polynomial");
    std::vector<Polynomial> usable;
    for (const auto& g : gens)
        if (!g.is_zero() && g.total_degree() <= d) usable.push_back(g);
    std::vector<Polynomial> all = usable;
    all.push_back(p);
    const int n = max_index(all);
    GradedSystem sys = prepare(usable, d, n);
    Coordinates coords;
    std::size_t produced = 0;

    if (!sys.multigraded) {
        EchelonBasis basis;
        for (const auto& [g, md] : sys.gens)
            sigma_monomials(n, d - g.total_degree(), nullptr, [&](const Monomial& m) {
                if (++produced > kGradedLimit) throw Error(ErrorCode::SizeLimit, "graded system too large");
                basis.insert(coords.of(Polynomial(m) * g));
            });
        return basis.contains(coords.of(p));
    }

    // Split p into multihomogeneous parts; each must lie in its own block.
    std::map<Multidegree, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) parts[multidegree(m, n)].add_term(m, c);
    for (const auto& [beta, part] : parts) {
        EchelonBasis basis;
        for (const auto& [g, md] : sys.gens) {
            Multidegree rest(beta.size());
            bool fits = true;
            for (std::size_t t = 0; t < beta.size() && fits; ++t) {
                rest[t] = beta[t] - (*md)[t];
                fits = rest[t] >= 0;
            }
            if (!fits) continue;
            sigma_monomials(n, d - g.total_degree(), &rest, [&](const Monomial& m) {
                if (++produced > kGradedLimit) throw Error(ErrorCode::SizeLimit, "graded system too large");
                basis.insert(coords.of(Polynomial(m) * g));
            });
        }
        if (!basis.contains(coords.of(part))) return false;
    }
    return true;
}

bool graded_membership(const Polynomial& p, const GeneratorSet& gens) { return graded_membership(p, gens.polynomials()); }

// ---------------------------------------------------------------- theorem check

SagbiReport sagbi_homogeneity(const Graph& g) {
    SagbiReport report;
    auto phi = build_matrix(g, MapKind::Phi);
    const GeneratorSet gens = ci_generators_1clique(g);
    for (const auto& gen : gens.items()) {
        ++report.checked;
        Move m = move_from_binomial(gen.poly, g.n());
        if (phi.apply(m.positive()) != phi.apply(m.negative())) {
            report.holds = false;
            if (!report.first_failure) report.first_failure = gen.poly;
        }
    }
    return report;
}

bool sagbi_homogeneity_check(const Graph& g) { return sagbi_homogeneity(g).holds; }

TheoremVerdict check_degree2_theorem(const Graph& g, int degree_bound, int trials, std::uint64_t seed) {
    if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "the theorem check needs a connected graph");
    TheoremVerdict v;
    v.block = is_block_graph(g);
    if (!v.block) {
        v.verdict = "NOT_BLOCK";
        v.offending_block = first_non_clique_block(g);
        return v;
    }
    GeneratorSet gens = ci_generators_1clique(g);
    v.generator_count = gens.size();
    std::vector<Move> moves;
    for (const auto& gen : gens.items()) moves.push_back(move_from_binomial(gen.poly, g.n()));
    v.markov = verify_markov(g, moves, degree_bound);
    v.dimension = model_dimension(g, seed);
    v.psi_rank = rank(build_matrix(g, MapKind::Psi).data);
    v.dimension_matches = v.dimension->rank == v.dimension->bound &&
                          static_cast<std::size_t>(v.dimension->bound) == v.psi_rank;
    auto polys = gens.polynomials();
    v.vanishing_checked = polys.size();
    v.all_vanish = true;
    if (!polys.empty()) {
        for (const auto& r : rho_star_vanishes_batch(polys, g, trials, seed)) {
            v.all_vanish = v.all_vanish && r.vanishes;
            v.vanishing_error_bound = std::max(v.vanishing_error_bound, r.error_bound);
        }
    }
    v.sagbi_homogeneous = sagbi_homogeneity_check(g);
    const bool ok = v.markov->all_connected && v.dimension_matches && v.all_vanish && v.sagbi_homogeneous;
    v.verdict = ok ? "CONFIRMED" : "REFUTED";
    return v;
}

// ---------------------------------------------------------------- counterexamples

namespace {

Polynomial relabel(const Polynomial& p, const std::map<Vertex, Vertex>& label) {
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) images.emplace(v, Polynomial(Var::sigma(label.at(v.i()), label.at(v.j()))));
    return substitute(p, images);
}

std::vector<Polynomial> with_degree_at_most(const GeneratorSet& gens, int d) {
    std::vector<Polynomial> out;
    for (const auto& g : gens.items())
        if (g.poly.total_degree() <= d) out.push_back(g.poly);
    return out;
}

}  // namespace

CounterexampleReport counterexample_suite(int trials, std::uint64_t seed) {
    CounterexampleReport r;

    // (a) clique sum of a triangle and a non-block graph on {3,4,5,6}
    const Graph fig2 = fixtures::named("fig2");
    r.cubics = fixtures::fig2_cubics();
    r.cubics_vanish = rho_star_vanishes_batch(r.cubics, fig2, trials, seed);
    r.pg2_generator = determinant(sigma_submatrix({3, 4, 5}, {4, 5, 6}));
    std::vector<Polynomial> rg{r.pg2_generator};
    for (auto& p : minors({1, 2, 3}, {3, 4, 5, 6}, 2)) rg.push_back(std::move(p));
    r.rg_generators = rg.size();
    for (const auto& c : r.cubics) r.cubics_in_rg.push_back(graded_membership(c, rg));
    const Graph g2 = fig2.induced({3, 4, 5, 6});
    r.pg2_vanishes = rho_star_vanishes(relabel(r.pg2_generator, {{3, 1}, {4, 2}, {5, 3}, {6, 4}}), g2, trials, seed);
    r.g2_dimension = model_dimension(g2, seed);
    r.g2_sigma_count = sigma_count(g2.n());
    r.a_passed = std::all_of(r.cubics_vanish.begin(), r.cubics_vanish.end(), [](const auto& x) { return x.vanishes; }) &&
                 std::none_of(r.cubics_in_rg.begin(), r.cubics_in_rg.end(), [](bool x) { return x; }) &&
                 r.pg2_vanishes.vanishes && r.g2_sigma_count - static_cast<std::size_t>(r.g2_dimension.rank) == 1;

    // (b) path on four vertices
    const Graph path4 = fixtures::named("path4");
    r.path_ci_dim = graded_piece_dim(with_degree_at_most(ci_generators_full(path4), 2), 2);
    std::vector<Polynomial> path_rg = minors({1, 2}, {2, 3}, 2);
    for (auto& p : minors({1, 2, 3}, {3, 4}, 2)) path_rg.push_back(std::move(p));
    r.path_rg_dim = graded_piece_dim(path_rg, 2);
    r.b_passed = r.path_ci_dim == 5 && r.path_rg_dim == 4;

    // (c) degree-4 minimal generator on the Fig 3 graph
    const Graph fig3 = fixtures::named("fig3");
    r.m = fixtures::fig3_quartic();
    r.m_vanishes = rho_star_vanishes(r.m, fig3, trials, seed);
    GeneratorSet full = ci_generators_full(fig3);
    r.full_generators = full.size();
    r.m_in_ci = graded_membership(r.m, full);
    auto low = with_degree_at_most(full, 3);
    r.low_degree_generators = low.size();
    r.m_in_low_degree = graded_membership(r.m, low);
    r.c_passed = r.m_vanishes.vanishes && r.m_in_ci && !r.m_in_low_degree;
    return r;
}

// ---------------------------------------------------------------- JSON

nlohmann::ordered_json to_json(const GeneratorSet& gens) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& g : gens.items()) {
        nlohmann::ordered_json j;
        j["polynomial"] = g.poly.to_string();
        j["degree"] = g.poly.total_degree();
        j["provenance"] = g.provenance;
        out.push_back(std::move(j));
    }
    return out;
}

namespace {

std::string format_bound(double x) {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific << x;
    return os.str();
}

}  // namespace

nlohmann::ordered_json to_json(const VanishingReport& r) {
    nlohmann::ordered_json j;
    j["vanishes"] = r.vanishes;
    j["trials"] = r.trials;
    j["numerator_degree"] = r.numerator_degree;
    j["sample_set_size"] = r.sample_set_size;
    j["error_bound"] = format_bound(r.error_bound);
    if (r.witness) {
        nlohmann::ordered_json w;
        for (const auto& [v, x] : *r.witness) w[v.name()] = x.get_str();
        j["witness_point"] = std::move(w);
        j["witness_value"] = r.witness_value->get_str();
    }
    return j;
}

nlohmann::ordered_json to_json(const TheoremVerdict& v, int n) {
    nlohmann::ordered_json j;
    j["verdict"] = v.verdict;
    j["block"] = v.block;
    if (!v.block) {
        j["offending_block"] = v.offending_block;
        return j;
    }
    j["generators"] = v.generator_count;
    j["markov"] = to_json(*v.markov, n);
    j["dimension"] = v.dimension->rank;
    j["dimension_bound"] = v.dimension->bound;
    j["psi_rank"] = v.psi_rank;
    j["dimension_matches"] = v.dimension_matches;
    j["vanishing_checked"] = v.vanishing_checked;
    j["all_vanish"] = v.all_vanish;
    j["vanishing_error_bound"] = format_bound(v.vanishing_error_bound);
    j["sagbi_homogeneous"] = v.sagbi_homogeneous;
    return j;
}

nlohmann::ordered_json to_json(const CounterexampleReport& r) {
    nlohmann::ordered_json a;
    auto cubics = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < r.cubics.size(); ++t) {
        nlohmann::ordered_json c;
        c["polynomial"] = r.cubics[t].to_string();
        c["rho_star"] = to_json(r.cubics_vanish[t]);
        c["in_rg_degree3"] = static_cast<bool>(r.cubics_in_rg[t]);
        cubics.push_back(std::move(c));
    }
    a["graph"] = "fig2";
    a["cubics"] = std::move(cubics);
    a["rg_generators"] = r.rg_generators;
    a["pg2_generator"] = r.pg2_generator.to_string();
    a["pg2_rho_star_on_g2"] = to_json(r.pg2_vanishes);
    a["g2_model_dimension"] = r.g2_dimension.rank;
    a["g2_sigma_count"] = r.g2_sigma_count;
    a["passed"] = r.a_passed;

    nlohmann::ordered_json b;
    b["graph"] = "path4";
    b["ci_dim_d2"] = r.path_ci_dim;
    b["rg_dim_d2"] = r.path_rg_dim;
    b["passed"] = r.b_passed;

    nlohmann::ordered_json c;
    c["graph"] = "fig3";
    c["polynomial"] = r.m.to_string();
    c["terms"] = r.m.size();
    c["rho_star"] = to_json(r.m_vanishes);
    c["ci_generators"] = r.full_generators;
    c["in_ci_degree4"] = r.m_in_ci;
    c["low_degree_generators"] = r.low_degree_generators;
    c["in_low_degree_span"] = r.m_in_low_degree;
    c["passed"] = r.c_passed;

    nlohmann::ordered_json j;
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    j["c"] = std::move(c);
    return j;
}

// ---------------------------------------------------------------- Macaulay2 export

namespace {

std::string m2_var(Var v) {
    const char* prefix = v.kind() == VarKind::Sigma ? "s" : v.kind() == VarKind::K ? "k" : "a";
    if (v.kind() == VarKind::A) return std::string(prefix) + "_" + std::to_string(v.i());
    return std::string(prefix) + "_(" + std::to_string(v.i()) + "," + std::to_string(v.j()) + ")";
}

std::string m2_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        Rational mag = abs(c);
        std::string body;
        for (const auto& [v, e] : m.factors()) {
            if (!body.empty()) body += "*";
            body += m2_var(v);
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) out += mag.get_str();
        else if (mag == 1) out += body;
        else out += mag.get_str() + "*" + body;
    }
    return out;
}

template <typename T, typename F>
std::string join(const std::vector<T>& xs, const std::string& sep, F f) {
    std::string out;
    for (std::size_t t = 0; t < xs.size(); ++t) out += (t ? sep : "") + f(xs[t]);
    return out;
}

}  // namespace

std::string export_macaulay2(const Graph& g, const GeneratorSet& gens) {
    const int n = g.n();
    auto sigmas = sigma_columns(n);
    SymConcentration k(g);
    auto params = k.parameters();
    std::ostringstream os;
    os << "-- graph: n = " << n << ", edges ";
    for (auto [i, j] : g.edges()) os << "{" << i << "," << j << "} ";
    os << "\n";
    os << "R = QQ[" << join(sigmas, ", ", m2_var) << "];\n";
    if (gens.empty()) {
        os << "I = ideal(0_R);\n";
    } else {
        os << "I = ideal(\n";
        for (std::size_t t = 0; t < gens.size(); ++t)
            os << "  " << m2_poly(gens.items()[t].poly) << (t + 1 < gens.size() ? ",\n" : "\n");
        os << ");\n";
    }
    os << "-- vanishing ideal of the model by elimination of K from K*Sigma = Id\n";
    os << "S = QQ[" << join(params, ", ", m2_var) << ", " << join(sigmas, ", ", m2_var)
       << ", MonomialOrder => Eliminate " << params.size() << "];\n";
    auto row = [&](Vertex i, bool conc) {
        std::vector<std::string> cells;
        for (Vertex j = 1; j <= n; ++j) {
            if (conc) cells.push_back(k.structural(i, j) ? m2_var(Var::k(i, j)) : "0");
            else cells.push_back(m2_var(Var::sigma(i, j)));
        }
        return "{" + join(cells, ", ", [](const std::string& s) { return s; }) + "}";
    };
    std::vector<Vertex> idx;
    for (Vertex i = 1; i <= n; ++i) idx.push_back(i);
    os << "Kmat = matrix {" << join(idx, ", ", [&](Vertex i) { return row(i, true); }) << "};\n";
    os << "Smat = matrix {" << join(idx, ", ", [&](Vertex i) { return row(i, false); }) << "};\n";
    os << "J = ideal flatten entries (Kmat * Smat - id_(S^" << n << "));\n";
    os << "PG = sub(eliminate({" << join(params, ", ", m2_var) << "}, J), R);\n";
    os << "print(I == PG);\n";
    return os.str();
}

}  // namespace toricgm
