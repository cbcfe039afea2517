#include "toricgm/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "toricgm/error.hpp"

namespace toricgm {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    for (auto& [i, j] : edges) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw Error(ErrorCode::InvalidArgument,
                        "edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range 1.." +
                            std::to_string(n));
        if (i == j) throw Error(ErrorCode::InvalidArgument, "self-loops are implicit and must not be listed");
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(ErrorCode::InvalidArgument, "duplicate edge");
    edges_ = std::move(edges);

    adjacency_.assign(n + 1, {});
    matrix_.assign(n + 1, std::vector<char>(n + 1, 0));
    for (auto [i, j] : edges_) {
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
        matrix_[i][j] = matrix_[j][i] = 1;
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(Vertex i, Vertex j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return matrix_[i][j] != 0;
}

Graph Graph::induced(const VertexSet& vs) const {
    std::vector<Edge> out;
    for (std::size_t p = 0; p < vs.size(); ++p)
        for (std::size_t q = p + 1; q < vs.size(); ++q)
            if (has_edge(vs[p], vs[q])) out.emplace_back(static_cast<Vertex>(p + 1), static_cast<Vertex>(q + 1));
    return Graph(static_cast<int>(vs.size()), std::move(out));
}

std::string to_string(const VertexSet& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < vs.size(); ++k) os << (k ? "," : "") << vs[k];
    os << '}';
    return os.str();
}

std::string to_string(const Separation& s) {
    return to_string(s.a) + "|" + to_string(s.b) + "|" + to_string(s.c);
}

namespace {

// Components of g with the vertices in `removed` deleted.
std::vector<VertexSet> components_without(const Graph& g, const std::vector<char>& removed) {
    std::vector<char> seen(g.n() + 1, 0);
    std::vector<VertexSet> out;
    for (Vertex s = 1; s <= g.n(); ++s) {
        if (removed[s] || seen[s]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (removed[w] || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
    VertexSet out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_without(g, std::vector<char>(g.n() + 1, 0));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexSet> biconnected_components(const Graph& g) {
    const int n = g.n();
    std::vector<int> disc(n + 1, 0), low(n + 1, 0);
    std::vector<Edge> stack;
    std::vector<VertexSet> blocks;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[v] = low[v] = ++timer;
        for (Vertex w : g.neighbors(v)) {
            if (w == parent) continue;
            if (!disc[w]) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::set<Vertex> block;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == Edge{v, w}) break;
                    }
                    blocks.emplace_back(block.begin(), block.end());
                }
            } else if (disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (Vertex v = 1; v <= n; ++v)
        if (!disc[v]) dfs(v, 0);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

VertexSet cut_vertices(const Graph& g) {
    std::vector<int> count(g.n() + 1, 0);
    for (const auto& block : biconnected_components(g))
        for (Vertex v : block) ++count[v];
    VertexSet out;
    for (Vertex v = 1; v <= g.n(); ++v)
        if (count[v] > 1) out.push_back(v);
    return out;
}

bool is_clique(const Graph& g, const VertexSet& vs) {
    for (std::size_t p = 0; p < vs.size(); ++p)
        for (std::size_t q = p + 1; q < vs.size(); ++q)
            if (!g.has_edge(vs[p], vs[q])) return false;
    return true;
}

bool is_block_graph(const Graph& g) { return first_non_clique_block(g).empty(); }

std::vector<Vertex> first_non_clique_block(const Graph& g) {
    for (const auto& block : biconnected_components(g))
        if (!is_clique(g, block)) return block;
    return {};
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex i, Vertex j) {
    if (i < 1 || j < 1 || i > g.n() || j > g.n())
        throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    // BFS from i counting shortest paths, capped at 2.
    std::vector<int> dist(g.n() + 1, -1), ways(g.n() + 1, 0), parent(g.n() + 1, 0);
    std::deque<Vertex> queue{i};
    dist[i] = 0;
    ways[i] = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                ways[w] = ways[v];
                parent[w] = v;
                queue.push_back(w);
            } else if (dist[w] == dist[v] + 1) {
                ways[w] = std::min(2, ways[w] + ways[v]);
            }
        }
    }
    if (dist[j] < 0)
        throw Error(ErrorCode::NotConnected, std::to_string(i) + " and " + std::to_string(j) + " are not connected");
    if (ways[j] > 1)
        throw Error(ErrorCode::NotUnique,
                    "multiple shortest paths between " + std::to_string(i) + " and " + std::to_string(j));
    std::vector<Vertex> path{j};
    while (path.back() != i) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet central_vertices(const Graph& g) { return cut_vertices(g); }

std::vector<OneCliquePartition> one_clique_partitions(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "one_clique_partitions needs a connected graph");
    std::vector<OneCliquePartition> out;
    for (Vertex c : cut_vertices(g)) {
        std::vector<char> removed(g.n() + 1, 0);
        removed[c] = 1;
        auto comps = components_without(g, removed);
        const std::size_t k = comps.size();
        // Component 0 holds the smallest remaining vertex, so fixing it in A
        // enumerates each unordered split exactly once with min(A) < min(B).
        for (unsigned long mask = 0; mask + 1 < (1ul << (k - 1)); ++mask) {
            OneCliquePartition p;
            p.c = c;
            p.a = comps[0];
            for (std::size_t t = 1; t < k; ++t) {
                auto& side = (mask >> (t - 1)) & 1ul ? p.a : p.b;
                side = set_union(side, comps[t]);
            }
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.c, x.a, x.b) < std::tie(y.c, y.a, y.b);
    });
    return out;
}

bool separates(const Graph& g, const VertexSet& c, const VertexSet& a, const VertexSet& b) {
    std::vector<char> removed(g.n() + 1, 0);
    for (Vertex v : c) removed[v] = 1;
    std::vector<int> label(g.n() + 1, -1);
    auto comps = components_without(g, removed);
    for (std::size_t t = 0; t < comps.size(); ++t)
        for (Vertex v : comps[t]) label[v] = static_cast<int>(t);
    for (Vertex x : a)
        for (Vertex y : b)
            if (label[x] == label[y]) return false;
    return true;
}

std::vector<Separation> separations(const Graph& g, int max_c) {
    if (max_c < 0) throw Error(ErrorCode::InvalidArgument, "max_c must be >= 0");
    const int n = g.n();
    if (n > 20) throw Error(ErrorCode::SizeLimit, "separation enumeration is limited to n <= 20");
    std::vector<Separation> out;
    for (unsigned long cmask = 0; cmask < (1ul << n); ++cmask) {
        if (std::popcount(cmask) > max_c) continue;
        std::vector<char> removed(n + 1, 0);
        VertexSet c;
        for (int v = 1; v <= n; ++v)
            if ((cmask >> (v - 1)) & 1ul) {
                removed[v] = 1;
                c.push_back(v);
            }
        auto comps = components_without(g, removed);
        const std::size_t k = comps.size();
        if (k < 2) continue;
        if (k > 20) throw Error(ErrorCode::SizeLimit, "too many components to split");
        for (unsigned long mask = 0; mask + 1 < (1ul << (k - 1)); ++mask) {
            Separation s;
            s.c = c;
            s.a = comps[0];
            for (std::size_t t = 1; t < k; ++t) {
                auto& side = (mask >> (t - 1)) & 1ul ? s.a : s.b;
                side = set_union(side, comps[t]);
            }
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::make_tuple(x.c.size(), std::cref(x.c), std::cref(x.a)) <
               std::make_tuple(y.c.size(), std::cref(y.c), std::cref(y.a));
    });
    return out;
}

Vertex Contraction::image_vertex(Vertex original) const {
    auto it = std::lower_bound(image_labels.begin(), image_labels.end(), original);
    if (it == image_labels.end() || *it != original)
        throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(original) + " is not in the image");
    return static_cast<Vertex>(it - image_labels.begin()) + 1;
}

Contraction contract_to_center(const Graph& g, Vertex c) {
    auto cuts = cut_vertices(g);
    if (!std::binary_search(cuts.begin(), cuts.end(), c))
        throw Error(ErrorCode::NotCentral, std::to_string(c) + " is not a central vertex");
    Contraction out;
    out.center = c;
    out.rho.assign(g.n() + 1, 0);
    for (Vertex i = 1; i <= g.n(); ++i) {
        if (i == c || g.has_edge(i, c)) {
            out.rho[i] = i;
        } else {
            auto path = shortest_path(g, i, c);
            out.rho[i] = path[path.size() - 2];
        }
    }
    out.image_labels.push_back(c);
    for (Vertex w : g.neighbors(c)) out.image_labels.push_back(w);
    std::sort(out.image_labels.begin(), out.image_labels.end());
    out.image = g.induced(out.image_labels);
    return out;
}

}  // namespace toricgm
