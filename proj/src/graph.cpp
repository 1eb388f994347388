#include "ddg/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace ddg {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_vertex_count(int n) {
    if (n < 1 || n > Graph::kMaxVertices)
        throw SizeOverflow("vertex count " + std::to_string(n) + " outside [1, " +
                           std::to_string(Graph::kMaxVertices) + "]");
}

}  // namespace

void validate_vertex_set(const VertexSet& s, int n) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw InvalidVertexSet("vertex " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw InvalidVertexSet("vertex set not sorted or has duplicates");
    }
}

Graph::Graph(int n, std::vector<uint64_t> bits)
    : n_(n), words_(words_for(n)), bits_(std::move(bits)) {}

Graph Graph::empty(int n) {
    check_vertex_count(n);
    return Graph(n, std::vector<uint64_t>(static_cast<size_t>(n) * words_for(n), 0));
}

Graph Graph::from_matrix(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    check_vertex_count(n);
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw NotSymmetric("matrix is not square");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int e = rows[i][j];
            if (e != 0 && e != 1)
                throw NonBinaryEntry("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") = " + std::to_string(e));
            if (i == j && e != 0)
                throw NonzeroDiagonal("diagonal entry at " + std::to_string(i));
            if (rows[j][i] != e)
                throw NotSymmetric("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") and transpose differ");
            if (e == 1 && i < j) b.add_edge(i, j);
        }
    }
    return b.build();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    check_vertex_count(n);
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

int Graph::degree(int u) const {
    int d = 0;
    for (uint64_t w : row(u)) d += std::popcount(w);
    return d;
}

int Graph::common_neighbours(int u, int v) const {
    const uint64_t* a = bits_.data() + static_cast<size_t>(u) * words_;
    const uint64_t* b = bits_.data() + static_cast<size_t>(v) * words_;
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

std::vector<int> Graph::neighbours(int u) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(degree(u)));
    auto r = row(u);
    for (int w = 0; w < words_; ++w) {
        uint64_t x = r[w];
        while (x) {
            out.push_back(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
    check_vertex_count(n);
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InvalidVertexSet("edge endpoint out of range");
    if (u == v) throw NonzeroDiagonal("loop at vertex " + std::to_string(u));
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

bool GraphBuilder::has_edge(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
}

Graph GraphBuilder::build() { return Graph(n_, std::move(bits_)); }

Graph complement(const Graph& g) {
    const int n = g.size();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw EmptySet("induced subgraph on empty vertex set");
    validate_vertex_set(s, g.size());
    const int m = static_cast<int>(s.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
    return b.build();
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<size_t>(g.size()));
    for (int u = 0; u < g.size(); ++u) d[static_cast<size_t>(u)] = g.degree(u);
    return d;
}

std::optional<int> is_k_regular(const Graph& g) {
    const int k = g.degree(0);
    for (int u = 1; u < g.size(); ++u)
        if (g.degree(u) != k) return std::nullopt;
    return k;
}

namespace {

// BFS distances from s; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(static_cast<size_t>(g.size()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbours(u)) {
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(static_cast<size_t>(g.size()), false);
    for (int s = 0; s < g.size(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        auto dist = bfs_distances(g, s);
        VertexSet comp;
        for (int v = 0; v < g.size(); ++v) {
            if (dist[static_cast<size_t>(v)] >= 0) {
                comp.push_back(v);
                seen[static_cast<size_t>(v)] = true;
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> diameter(const Graph& g) {
    int diam = 0;
    for (int s = 0; s < g.size(); ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    const long long n = static_cast<long long>(g.size()) * h.size();
    if (n > Graph::kMaxVertices)
        throw SizeOverflow("lexicographic product has " + std::to_string(n) + " vertices");
    const int nh = h.size();
    GraphBuilder b(static_cast<int>(n));
    for (int u1 = 0; u1 < g.size(); ++u1) {
        for (int v1 = 0; v1 < nh; ++v1) {
            const int a = u1 * nh + v1;
            // same g-vertex: copy of h
            for (int v2 = v1 + 1; v2 < nh; ++v2)
                if (h.adjacent(v1, v2)) b.add_edge(a, u1 * nh + v2);
            // adjacent g-vertices: complete join between the copies
            for (int u2 = u1 + 1; u2 < g.size(); ++u2)
                if (g.adjacent(u1, u2))
                    for (int v2 = 0; v2 < nh; ++v2) b.add_edge(a, u2 * nh + v2);
        }
    }
    return b.build();
}

}  // namespace ddg
