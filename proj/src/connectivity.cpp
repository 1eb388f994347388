#include "ddg/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ddg/constructions.hpp"
#include "ddg/errors.hpp"
#include "json.hpp"

namespace ddg {

namespace {

// Unit-capacity Dinic on the vertex-split network: vertex v becomes
// in(v) = 2v -> out(v) = 2v+1 with capacity 1 (n for the terminals), each
// edge {u,w} becomes out(u) -> in(w) and out(w) -> in(u) with capacity n.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
    };

    int nodes;
    std::vector<Arc> arcs;  // paired: arc i's reverse is i^1
    std::vector<std::vector<int>> adj;
    std::vector<int> level, it;

    explicit FlowNetwork(int nodes)
        : nodes(nodes), adj(nodes), level(nodes), it(nodes) {}

    void add_arc(int u, int v, int cap) {
        adj[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        adj[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int id : adj[u]) {
                const Arc& a = arcs[id];
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int f) {
        if (u == t) return f;
        for (int& i = it[u]; i < static_cast<int>(adj[u].size()); ++i) {
            const int id = adj[u][i];
            Arc& a = arcs[id];
            if (a.cap > 0 && level[a.to] == level[u] + 1) {
                const int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    // limit < 0: run to optimality; otherwise stop once `limit` is reached
    // (the caller only needs to know the value is not smaller).
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while ((limit < 0 || flow < limit) && bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (int f = dfs(s, t, nodes)) {
                flow += f;
                if (limit >= 0 && flow >= limit) break;
            }
        }
        return flow;
    }
};

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

FlowNetwork split_network(const Graph& g, int s, int t) {
    const int n = g.size();
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v) net.add_arc(in_node(v), out_node(v), v == s || v == t ? n : 1);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbours(u)) net.add_arc(out_node(u), in_node(w), n);
    return net;
}

void require_flow_pair(const Graph& g, int s, int t) {
    if (s < 0 || s >= g.size() || t < 0 || t >= g.size())
        throw InvalidVertexSet("flow endpoint out of range");
    if (s == t) throw AdjacentEndpoints("endpoints must be distinct");
    if (g.adjacent(s, t))
        throw AdjacentEndpoints("no vertex cut separates adjacent vertices " +
                                std::to_string(s) + " and " + std::to_string(t));
}

int st_cut_size(const Graph& g, int s, int t, int limit) {
    FlowNetwork net = split_network(g, s, t);
    return net.max_flow(out_node(s), in_node(t), limit);
}

std::vector<char> residual_reach(const FlowNetwork& net, int from) {
    std::vector<char> seen(net.nodes, 0);
    std::queue<int> q;
    seen[from] = 1;
    q.push(from);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int id : net.adj[u]) {
            const FlowNetwork::Arc& a = net.arcs[id];
            if (a.cap > 0 && !seen[a.to]) {
                seen[a.to] = 1;
                q.push(a.to);
            }
        }
    }
    return seen;
}

bool brute_disconnects(const Graph& g, const std::vector<int>& keep) {
    // BFS inside `keep` (indicator form) from its first member
    const int n = g.size();
    int start = -1, total = 0;
    for (int v = 0; v < n; ++v)
        if (keep[v]) {
            if (start < 0) start = v;
            ++total;
        }
    if (total < 2) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbours(u))
            if (keep[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached < total;
}

bool is_complete_graph(const Graph& g) {
    const long long n = g.size();
    return g.edge_count() == n * (n - 1) / 2;
}

// every flow pair the min-degree reduction has to consider
std::vector<std::pair<int, int>> reduction_pairs(const Graph& g) {
    const int n = g.size();
    int s = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(s)) s = v;
    std::vector<std::pair<int, int>> pairs;
    for (int t = 0; t < n; ++t)
        if (t != s && !g.adjacent(s, t)) pairs.emplace_back(s, t);
    const std::vector<int> nb = g.neighbours(s);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) pairs.emplace_back(nb[i], nb[j]);
    return pairs;
}

}  // namespace

void check_cut_certificate(const Graph& g, const CutCertificate& c) {
    const int n = g.size();
    internal_check(c.kappa == static_cast<int>(c.cut.size()), "kappa != |cut|");
    internal_check(!c.side_a.empty() && !c.side_b.empty(), "cut certificate side empty");
    std::vector<int> owner(n, 0);  // 1 cut, 2 side_a, 3 side_b
    for (const auto* set : {&c.cut, &c.side_a, &c.side_b}) validate_vertex_set(*set, n);
    for (int v : c.cut) owner[v] = 1;
    for (int v : c.side_a) {
        internal_check(owner[v] == 0, "cut certificate sets overlap");
        owner[v] = 2;
    }
    for (int v : c.side_b) {
        internal_check(owner[v] == 0, "cut certificate sets overlap");
        owner[v] = 3;
    }
    for (int v = 0; v < n; ++v) internal_check(owner[v] != 0, "cut certificate misses a vertex");
    // reachability: nothing in side_b can be reached from side_a once the
    // cut is removed
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    for (int v : c.side_a) {
        seen[v] = 1;
        q.push(v);
    }
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbours(u)) {
            internal_check(owner[w] != 3, "edge crosses the cut certificate");
            if (owner[w] == 2 && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
}

void check_path_system(const Graph& g, const PathSystem& p) {
    const auto [x, y] = p.endpoints;
    internal_check(x >= 0 && x < g.size() && y >= 0 && y < g.size() && x != y,
                   "bad path endpoints");
    std::vector<char> used(g.size(), 0);
    for (const std::vector<int>& path : p.paths) {
        internal_check(path.size() >= 2, "path too short");
        internal_check(path.front() == x && path.back() == y, "path endpoints wrong");
        for (size_t i = 0; i + 1 < path.size(); ++i)
            internal_check(g.adjacent(path[i], path[i + 1]), "path edge missing");
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            const int v = path[i];
            internal_check(v != x && v != y, "endpoint repeated inside a path");
            internal_check(!used[v], "paths share an internal vertex");
            used[v] = 1;
        }
    }
}

StCut min_vertex_cut_st(const Graph& g, int s, int t) {
    require_flow_pair(g, s, t);
    const int n = g.size();
    FlowNetwork net = split_network(g, s, t);
    const std::vector<int> base_caps = [&] {
        std::vector<int> caps(net.arcs.size());
        for (size_t i = 0; i < caps.size(); ++i) caps[i] = net.arcs[i].cap;
        return caps;
    }();
    const int flow = net.max_flow(out_node(s), in_node(t), -1);

    StCut result;
    result.kappa = flow;

    // cut = vertices whose split arc crosses the residual reachability line
    const std::vector<char> reach = residual_reach(net, out_node(s));
    internal_check(!reach[in_node(t)], "sink still reachable after max flow");
    std::vector<char> in_cut(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        if (reach[in_node(v)] && !reach[out_node(v)]) {
            in_cut[v] = 1;
            result.cut.cut.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (in_cut[v]) continue;
        if (v == s || reach[in_node(v)])
            result.cut.side_a.push_back(v);
        else
            result.cut.side_b.push_back(v);
    }
    result.cut.kappa = static_cast<int>(result.cut.cut.size());
    internal_check(result.cut.kappa == flow, "cut size differs from flow value");
    check_cut_certificate(g, result.cut);

    // peel one unit of flow per path; unit vertex capacities make the walks
    // simple and pairwise internally disjoint
    std::vector<int> flow_left(net.arcs.size());
    for (size_t i = 0; i < flow_left.size(); ++i)
        flow_left[i] = base_caps[i] - net.arcs[i].cap;
    result.paths.endpoints = {s, t};
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path{s};
        int cur = out_node(s);
        long long guard = 4LL * net.arcs.size() + 4;
        while (cur != in_node(t)) {
            internal_check(--guard > 0, "flow walk does not terminate");
            bool advanced = false;
            for (int id : net.adj[cur]) {
                if ((id & 1) || flow_left[id] <= 0) continue;  // reverse or dry
                --flow_left[id];
                cur = net.arcs[id].to;
                if (cur % 2 == 0 && cur != in_node(t)) path.push_back(cur / 2);
                advanced = true;
                break;
            }
            internal_check(advanced, "flow walk is stuck");
        }
        path.push_back(t);
        result.paths.paths.push_back(std::move(path));
    }
    internal_check(static_cast<int>(result.paths.paths.size()) == flow,
                   "path count differs from flow value");  // Menger equality
    check_path_system(g, result.paths);
    return result;
}

KappaResult vertex_connectivity(const Graph& g, int threads) {
    const int n = g.size();  // Graph guarantees n >= 1
    KappaResult result;
    if (is_complete_graph(g)) {
        result.kappa = n - 1;
        result.complete = true;
        return result;
    }
    const std::vector<VertexSet> comps = connected_components(g);
    if (comps.size() > 1) {
        result.kappa = 0;
        CutCertificate cert;
        cert.side_a = comps[0];
        for (size_t i = 1; i < comps.size(); ++i)
            cert.side_b.insert(cert.side_b.end(), comps[i].begin(), comps[i].end());
        std::sort(cert.side_b.begin(), cert.side_b.end());
        cert.kappa = 0;
        check_cut_certificate(g, cert);
        result.cert = std::move(cert);
        return result;
    }

    const std::vector<std::pair<int, int>> pairs = reduction_pairs(g);
    internal_check(!pairs.empty(), "connected non-complete graph with no flow pair");
    int min_degree = g.degree(0);
    for (int v = 1; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));

    std::atomic<int> best{min_degree};  // kappa <= min degree always
    const int workers =
        std::max(1, std::min<int>(threads, static_cast<int>(pairs.size())));
    if (workers == 1) {
        for (const auto& [s, t] : pairs) {
            const int value = st_cut_size(g, s, t, best.load());
            if (value < best.load()) best.store(value);
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < pairs.size(); i = next.fetch_add(1)) {
                    const int value =
                        st_cut_size(g, pairs[i].first, pairs[i].second, best.load());
                    int seen = best.load();
                    while (value < seen && !best.compare_exchange_weak(seen, value)) {
                    }
                }
            });
        for (std::thread& th : pool) th.join();
    }

    result.kappa = best.load();
    // deterministic certificate: first pair in fixed order attaining the
    // minimum, recomputed with a full flow
    for (const auto& [s, t] : pairs) {
        if (st_cut_size(g, s, t, result.kappa + 1) != result.kappa) continue;
        StCut cut = min_vertex_cut_st(g, s, t);
        internal_check(cut.kappa == result.kappa, "certificate flow disagrees");
        result.cert = std::move(cut.cut);
        break;
    }
    internal_check(result.cert.has_value(), "no pair reproduced the minimum");
    return result;
}

int vertex_connectivity_bruteforce(const Graph& g) {
    const int n = g.size();
    if (n > 14)
        throw TooLarge("exhaustive connectivity supports at most 14 vertices, got " +
                       std::to_string(n));
    if (is_complete_graph(g)) return n - 1;
    if (!is_connected(g)) return 0;
    std::vector<int> keep(n, 1);
    for (int size = 1; size <= n - 2; ++size) {
        // Gosper's hack over all removal sets of the given size
        const uint32_t limit = 1u << n;
        uint32_t mask = (1u << size) - 1;
        while (mask < limit) {
            for (int v = 0; v < n; ++v) keep[v] = (mask >> v) & 1u ? 0 : 1;
            if (brute_disconnects(g, keep)) return size;
            const uint32_t c = mask & -mask;
            const uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    internal_check(false, "non-complete graph had no disconnecting set");
    return -1;
}

CertificateOutcome neighbourhood_certificate(const Graph& g, long long b, long long q_squared) {
    const std::optional<int> k = is_k_regular(g);
    if (!k) throw NotRegular("neighbourhood certificate needs a regular graph");
    if (!is_connected(g)) throw DisconnectedInput("neighbourhood certificate needs a connected graph");
    if (b < 0 || q_squared < 0) throw ParameterMismatch("b and q^2 must be nonnegative");
    const long long gap = *k - b;  // k - 2q > b  <=>  k - b > 2q >= 0
    if (gap <= 0) return CertificateOutcome::Inconclusive;
    return gap * gap > 4 * q_squared ? CertificateOutcome::Certified
                                     : CertificateOutcome::Inconclusive;
}

int connectivity_via_lexicographic(const Graph& g1, const Graph& g2) {
    if (!is_connected(g1)) throw DisconnectedBase("base graph must be connected");
    if (is_complete_graph(g1)) throw CompleteBase("base graph must not be complete");
    return vertex_connectivity(g1).kappa * g2.size();
}

GammaBoundReport gamma_connectivity_bound_check(int t, int threads) {
    if (t < 1 || t > 3) throw BadOrder("bound check covers orders 1..3, got " + std::to_string(t));
    const GammaFamily fam = gamma_family(t);
    GammaBoundReport rep;
    rep.t = t;
    rep.l = 1 << t;
    const int ll = rep.l * rep.l;  // 4^t
    rep.kappa_gamma1 = vertex_connectivity(fam.gamma1.graph, threads).kappa;
    rep.kappa_gamma2 = vertex_connectivity(fam.gamma2.graph, threads).kappa;
    rep.gamma1_bound = rep.kappa_gamma1 >= ll;
    rep.gamma2_bound = rep.kappa_gamma2 >= ll - rep.l;
    rep.sum_bound = rep.kappa_gamma1 + rep.kappa_gamma2 >= 2 * ll;

    // dropping the middle third must leave exactly the two halves
    const int v = fam.gamma.params.v;
    VertexSet outer;
    for (int u = 0; u < v / 3; ++u) outer.push_back(u);
    for (int u = 2 * v / 3; u < v; ++u) outer.push_back(u);
    const Graph rest = induced_subgraph(fam.gamma.graph, outer);
    const std::vector<VertexSet> comps = connected_components(rest);
    rep.middle_components = static_cast<int>(comps.size());
    if (comps.size() == 2) {
        VertexSet first, second;
        for (int u = 0; u < v / 3; ++u) first.push_back(u);
        for (int u = v / 3; u < 2 * v / 3; ++u) second.push_back(u);
        rep.middle_splits_halves = comps[0] == first && comps[1] == second;
    }

    rep.kappa_gamma = vertex_connectivity(fam.gamma.graph, threads).kappa;
    return rep;
}

std::string kappa_report_json(const KappaResult& r, const std::string& method) {
    nlohmann::json doc;
    doc["kappa"] = r.kappa;
    doc["method"] = method;
    if (r.complete) doc["complete"] = true;
    if (r.cert) {
        doc["cut"] = r.cert->cut;
        doc["sides"] = {r.cert->side_a, r.cert->side_b};
    }
    // compact so stream consumers get one report per line
    return doc.dump();
}

}  // namespace ddg
