#ifndef TORICGM_GRAPH_HPP
#define TORICGM_GRAPH_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace toricgm {

using Vertex = int;
// Sorted, duplicate-free list of 1-based vertex labels.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 1..n. Self-loops are implicit: every
// consumer treats k_ii as present, so they are never stored.
class Graph {
public:
    Graph() = default;
    // Throws Error(InvalidArgument) on out-of-range endpoints or i == j.
    // Edges may be given in either orientation; duplicates are rejected.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(Vertex i, Vertex j) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    // Graph induced on `vs`, relabeled to 1..|vs| in ascending order of vs.
    Graph induced(const VertexSet& vs) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;                  // i < j, sorted
    std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
    std::vector<std::vector<char>> matrix_;
};

struct OneCliquePartition {
    VertexSet a;
    VertexSet b;
    Vertex c = 0;

    auto operator<=>(const OneCliquePartition&) const = default;
};

struct Separation {
    VertexSet a;
    VertexSet b;
    VertexSet c;

    auto operator<=>(const Separation&) const = default;
};

std::string to_string(const VertexSet& vs);
std::string to_string(const Separation& s);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Maximal 2-connected blocks; a bridge is its own block. Sorted by vertex list.
std::vector<VertexSet> biconnected_components(const Graph& g);

// Cut vertices in ascending order.
VertexSet cut_vertices(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& vs);

// Every biconnected component induces a complete graph (checked per component).
bool is_block_graph(const Graph& g);

// First biconnected component that is not a clique, if any.
std::vector<Vertex> first_non_clique_block(const Graph& g);

// Unique shortest path i -> j. Throws NotConnected or NotUnique.
std::vector<Vertex> shortest_path(const Graph& g, Vertex i, Vertex j);

// Vertices c with some 1-clique partition ({c} separating); equal to the cut vertices.
VertexSet central_vertices(const Graph& g);

// All 1-clique partitions, canonicalized with min(A) < min(B), sorted by (c, A).
// Throws NotConnected on disconnected input.
std::vector<OneCliquePartition> one_clique_partitions(const Graph& g);

// All separations (A, B, C) with |C| <= max_c, A and B nonempty, min(A) < min(B),
// sorted by (|C|, C, A).
std::vector<Separation> separations(const Graph& g, int max_c);

bool separates(const Graph& g, const VertexSet& c, const VertexSet& a, const VertexSet& b);

struct Contraction {
    Vertex center = 0;
    // rho[i] for i in 1..n; rho[0] unused.
    std::vector<Vertex> rho;
    // Image graph on {c} ∪ N(c), relabeled 1..m in ascending label order.
    Graph image;
    // image_labels[k-1] is the original label of image vertex k.
    std::vector<Vertex> image_labels;

    Vertex image_vertex(Vertex original) const;
};

// rho_c: c and its neighbors are fixed; any other vertex goes to the neighbor of c
// on its shortest path to c. Throws NotCentral if c is not a cut vertex.
Contraction contract_to_center(const Graph& g, Vertex c);

}  // namespace toricgm

#endif  // TORICGM_GRAPH_HPP
