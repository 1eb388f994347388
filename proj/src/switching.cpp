#include "ddg/switching.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ddg/analysis.hpp"
#include "ddg/constructions.hpp"
#include "ddg/errors.hpp"

namespace ddg {

namespace {

constexpr int kMaxSearchVertices = 64;

// Iterated refinement: start from degrees, then repeatedly split classes by
// the multiset of neighbour colours until the class count is stable. Colour
// ids are assigned in signature order, so two graphs with the same signature
// structure get matching ids.
std::vector<int> refinement_colours(const Graph& g) {
    const int n = g.size();
    std::vector<int> col(n, 0);
    {
        std::map<int, int> ids;
        for (int v = 0; v < n; ++v) ids.emplace(g.degree(v), 0);
        int next = 0;
        for (auto& [deg, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) col[v] = ids.at(g.degree(v));
    }
    int classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            for (int u : g.neighbours(v)) around.push_back(col[u]);
            std::sort(around.begin(), around.end());
            sig[v] = {col[v], std::move(around)};
            ids.emplace(sig[v], 0);
        }
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        if (next == classes) break;
        classes = next;
        for (int v = 0; v < n; ++v) col[v] = ids.at(sig[v]);
    }
    return col;
}

void check_search_size(const Graph& g) {
    if (g.size() > kMaxSearchVertices)
        throw TooLarge("automorphism search supports at most 64 vertices, got " +
                       std::to_string(g.size()));
}

// Maps vertices 0..n-1 of `a` onto `b` in order; `col_a`/`col_b` come from
// refinement_colours and images must stay inside the matching colour class.
struct MappingSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& col_a;
    const std::vector<int>& col_b;
    std::vector<int> image;
    std::vector<char> used;
    long long limit;            // < 0: unlimited
    std::vector<std::vector<int>>* out;  // null: stop at first full map
    bool found = false;

    bool full() const { return out && limit >= 0 && static_cast<long long>(out->size()) >= limit; }

    void run(int depth) {
        const int n = a.size();
        if (depth == n) {
            found = true;
            if (out) out->push_back(image);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || col_b[w] != col_a[depth]) continue;
            bool ok = true;
            for (int x = 0; x < depth; ++x)
                if (a.adjacent(depth, x) != b.adjacent(w, image[x])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[depth] = w;
            used[w] = 1;
            run(depth + 1);
            used[w] = 0;
            if (full() || (found && !out)) return;
        }
    }
};

// Backtracking over partial involutions: the smallest unassigned vertex is
// either fixed or paired with a later non-adjacent unassigned vertex of the
// same colour, keeping adjacency consistent with everything assigned so far.
struct InvolutionSearch {
    const Graph& g;
    const std::vector<int>& col;
    std::vector<int> match;  // sigma image, -1 while unassigned
    std::vector<Involution>* out;

    bool consistent(int u, int w) const {
        const int n = g.size();
        for (int x = 0; x < n; ++x) {
            if (match[x] < 0) continue;
            if (g.adjacent(u, x) != g.adjacent(w, match[x])) return false;
            if (w != u && g.adjacent(w, x) != g.adjacent(u, match[x])) return false;
        }
        return true;
    }

    void emit() {
        Involution s;
        s.perm = match;
        for (int v = 0; v < g.size(); ++v) {
            if (match[v] == v) s.fixed.push_back(v);
            else if (match[v] > v) s.moved.emplace_back(v, match[v]);
        }
        if (!s.moved.empty()) out->push_back(std::move(s));
    }

    void run() {
        const int n = g.size();
        int u = 0;
        while (u < n && match[u] >= 0) ++u;
        if (u == n) {
            emit();
            return;
        }
        if (consistent(u, u)) {
            match[u] = u;
            run();
            match[u] = -1;
        }
        for (int w = u + 1; w < n; ++w) {
            if (match[w] >= 0 || col[w] != col[u] || g.adjacent(u, w)) continue;
            if (!consistent(u, w)) continue;
            match[u] = w;
            match[w] = u;
            run();
            match[u] = match[w] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g, long long limit) {
    check_search_size(g);
    const std::vector<int> col = refinement_colours(g);
    std::vector<std::vector<int>> out;
    if (limit == 0) return out;
    MappingSearch s{g, g, col, col,
                    std::vector<int>(g.size(), -1), std::vector<char>(g.size(), 0),
                    limit, &out};
    s.run(0);
    return out;
}

std::vector<Involution> seidel_automorphisms(const Graph& g) {
    check_search_size(g);
    const std::vector<int> col = refinement_colours(g);
    std::vector<Involution> out;
    InvolutionSearch s{g, col, std::vector<int>(g.size(), -1), &out};
    s.run();
    return out;
}

Graph dual_seidel_switch(const Graph& g, const Involution& sigma) {
    const int n = g.size();
    const std::vector<int>& p = sigma.perm;
    if (static_cast<int>(p.size()) != n) throw NotSeidel("permutation length != vertex count");
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (p[v] < 0 || p[v] >= n || seen[p[v]])
            throw NotSeidel("not a permutation");
        seen[p[v]] = 1;
    }
    bool moves = false;
    for (int v = 0; v < n; ++v) {
        if (p[p[v]] != v) throw NotSeidel("not an involution");
        if (p[v] == v) continue;
        moves = true;
        if (g.adjacent(v, p[v])) throw NotSeidel("moves an adjacent pair");
    }
    if (!moves) throw NotSeidel("identity has order 1");
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (g.adjacent(u, w) != g.adjacent(p[u], p[w]))
                throw NotSeidel("not an automorphism");
    {
        VertexSet fixed;
        std::vector<std::pair<int, int>> moved;
        for (int v = 0; v < n; ++v) {
            if (p[v] == v) fixed.push_back(v);
            else if (p[v] > v) moved.emplace_back(v, p[v]);
        }
        if (fixed != sigma.fixed || moved != sigma.moved)
            throw NotSeidel("fixed/moved lists disagree with the permutation");
    }

    // row u of the result is row p[u] of g; Seidel property makes this
    // symmetric with an empty diagonal
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) rows[u][w] = g.adjacent(p[u], w) ? 1 : 0;
    for (int u = 0; u < n; ++u) {
        internal_check(rows[u][u] == 0, "row switch produced a loop");
        for (int w = u + 1; w < n; ++w)
            internal_check(rows[u][w] == rows[w][u], "row switch broke symmetry");
    }
    Graph h = Graph::from_matrix(rows);
    for (int v = 0; v < n; ++v)
        internal_check(h.degree(v) == g.degree(v), "row switch changed a degree");
    return h;
}

bool graph_isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    const std::vector<int> col_a = refinement_colours(a);
    const std::vector<int> col_b = refinement_colours(b);
    {
        std::vector<int> ha = col_a, hb = col_b;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    MappingSearch s{a, b, col_a, col_b,
                    std::vector<int>(a.size(), -1), std::vector<char>(a.size(), 0),
                    -1, nullptr};
    s.run(0);
    return s.found;
}

std::vector<Graph> switched_doubles(const Graph& g) {
    const Construction doubled = lexicographic_double(g);
    std::vector<Graph> out;
    for (const Involution& sigma : seidel_automorphisms(doubled.graph)) {
        Graph h = dual_seidel_switch(doubled.graph, sigma);
        bool fresh = true;
        for (const Graph& kept : out)
            if (graph_isomorphic(kept, h)) {
                fresh = false;
                break;
            }
        if (fresh) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace ddg
