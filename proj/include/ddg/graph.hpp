#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddg/errors.hpp"

namespace ddg {

// Vertices are 0-based ints; a VertexSet is sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Checks that `s` is sorted, duplicate-free and within [0, n). Throws
// InvalidVertexSet otherwise.
void validate_vertex_set(const VertexSet& s, int n);

// Simple undirected graph: no loops, no multi-edges, at most kMaxVertices
// vertices. Adjacency is stored as bit-packed rows (64 vertices per word) so
// a common-neighbour count is a word-parallel AND + popcount. Immutable after
// construction; use GraphBuilder or the factories.
class Graph {
public:
    static constexpr int kMaxVertices = 4096;

    // Edgeless graph on n vertices.
    static Graph empty(int n);
    // Validates a full 0/1 matrix: symmetric, zero diagonal, binary entries.
    static Graph from_matrix(const std::vector<std::vector<int>>& rows);
    // Builds from an edge list; endpoints must be distinct and in range.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    int words_per_row() const { return words_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int u) const;
    int common_neighbours(int u, int v) const;
    long long edge_count() const;
    std::vector<int> neighbours(int u) const;
    std::span<const uint64_t> row(int u) const {
        return {bits_.data() + static_cast<size_t>(u) * words_, static_cast<size_t>(words_)};
    }

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    // Structural equality on the same vertex count (label ignored).
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;
    Graph(int n, std::vector<uint64_t> bits);

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;  // n_ * words_ words, row-major
    std::string label_;
};

// Mutable staging area for building a Graph; add_edge sets both directions,
// so the result is symmetric with zero diagonal by construction.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int size() const { return n_; }
    Graph build();

private:
    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

// Complement: flips every off-diagonal bit.
Graph complement(const Graph& g);

// Induced subgraph on a nonempty sorted vertex set (vertices renumbered in
// set order). Throws EmptySet / InvalidVertexSet.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

std::vector<int> degree_sequence(const Graph& g);

// k if the graph is k-regular, nullopt otherwise.
std::optional<int> is_k_regular(const Graph& g);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Largest BFS eccentricity; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);

// Lexicographic product g[h]: vertex (u,v) is u*|V(h)|+v, and (u1,v1)~(u2,v2)
// iff u1~u2, or u1=u2 and v1~v2. Throws SizeOverflow past kMaxVertices.
Graph lexicographic_product(const Graph& g, const Graph& h);

}  // namespace ddg
