#include "ddg/constructions.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <optional>

namespace ddg {

namespace {

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

Partition contiguous_classes(int m, int n) {
    Partition p;
    for (int i = 0; i < m; ++i) {
        VertexSet cls(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) cls[static_cast<size_t>(j)] = i * n + j;
        p.classes.push_back(std::move(cls));
    }
    return p;
}

struct VklParams {
    int n, k, lambda;
};

// a (n,k,lambda)-graph: regular and every distinct pair has lambda common
// neighbours; nullopt with `why` set otherwise
std::optional<VklParams> as_vkl(const Graph& g, std::string& why) {
    const auto k = is_k_regular(g);
    if (!k) {
        why = "graph is not regular";
        return std::nullopt;
    }
    int lambda = 0;
    bool seen = false;
    for (int u = 0; u < g.size(); ++u)
        for (int w = u + 1; w < g.size(); ++w) {
            const int c = g.common_neighbours(u, w);
            if (!seen) {
                lambda = c;
                seen = true;
            } else if (c != lambda) {
                why = "common-neighbour counts are not constant (" + std::to_string(lambda) +
                      " and " + std::to_string(c) + ")";
                return std::nullopt;
            }
        }
    return VklParams{g.size(), *k, lambda};
}

}  // namespace

Design Design::from_incidence(const IntMatrix& n) {
    if (n.rows() != n.cols())
        throw NotSymmetricDesign("incidence matrix must be square (points = blocks), got " +
                                 std::to_string(n.rows()) + "x" + std::to_string(n.cols()));
    const int v = n.rows();
    if (v < 2) throw NotSymmetricDesign("design needs at least 2 points");
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (n.at(i, j) != 0 && n.at(i, j) != 1)
                throw NotSymmetricDesign("incidence entries must be 0 or 1");
    const IntMatrix nt = transpose(n);
    BigInt k = 0;
    for (int j = 0; j < v; ++j) k += n.at(0, j);
    for (const IntMatrix* mat : {&n, &nt})
        for (int i = 0; i < v; ++i) {
            BigInt s = 0;
            for (int j = 0; j < v; ++j) s += mat->at(i, j);
            if (s != k)
                throw NotSymmetricDesign("row and column sums must all equal the block size");
        }
    // two distinct points in lambda common blocks, and dually for blocks
    BigInt lambda = -1;
    for (const IntMatrix* mat : {&n, &nt}) {
        const IntMatrix gram = mat_mul(*mat, transpose(*mat));
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < v; ++j) {
                if (i == j) continue;
                if (lambda < 0) lambda = gram.at(i, j);
                if (gram.at(i, j) != lambda)
                    throw NotSymmetricDesign("pairwise intersection numbers are not constant");
            }
    }
    return Design(n, static_cast<int>(k), static_cast<int>(lambda));
}

Design Design::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotSymmetricDesign("cannot open design file: " + path);
    int v = 0, k = 0, lambda = 0;
    if (!(in >> v >> k >> lambda) || v < 2 || v > IntMatrix::kMaxDim)
        throw NotSymmetricDesign("design file must start with 'v k lambda'");
    IntMatrix n(v, v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            char c = 0;
            if (!(in >> c) || (c != '0' && c != '1'))
                throw NotSymmetricDesign("design file needs " + std::to_string(v) + " rows of " +
                                         std::to_string(v) + " 0/1 digits");
            n.at(i, j) = c - '0';
        }
    Design d = from_incidence(n);
    if (d.block_size() != k || d.index() != lambda)
        throw NotSymmetricDesign("declared parameters 2-(" + std::to_string(v) + "," +
                                 std::to_string(k) + "," + std::to_string(lambda) +
                                 ") do not match the incidence matrix");
    return d;
}

Design Design::projective_plane_order2() {
    IntMatrix n(7, 7);
    for (int j = 0; j < 7; ++j)
        for (int d : {1, 2, 4}) n.at((j + d) % 7, j) = 1;
    return from_incidence(n);
}

Design Design::complete_design(int n) {
    if (n < 2) throw BadOrder("complete design needs n >= 2");
    return from_incidence(IntMatrix::ones(n));
}

Construction design_incidence_graph(const Design& d) {
    const int v = d.points();
    const int k = d.block_size();
    if (k < 2) throw NotSymmetricDesign("incidence graph needs block size k > 1");
    GraphBuilder b(2 * v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            if (d.incidence().at(i, j) == 1) b.add_edge(i, v + j);
    return Construction{b.build(), DdgParams{2 * v, k, d.index(), 0, 2, v},
                        contiguous_classes(2, v)};
}

Construction vkl_blowup(const Graph& g, int n) {
    std::string why;
    const auto p = as_vkl(g, why);
    if (!p) throw NotVKLGraph(why);
    if (!is_connected(g)) throw DisconnectedInput("blowup ingredient must be connected");
    if (p->k <= 1 || p->k >= p->n)
        throw ParameterMismatch("blowup needs 1 < k' < m, got k'=" + std::to_string(p->k) +
                                ", m=" + std::to_string(p->n));
    if (n <= 1) throw ParameterMismatch("blowup factor must exceed 1");
    Graph out = lexicographic_product(g, Graph::empty(n));
    return Construction{std::move(out),
                        DdgParams{p->n * n, n * p->k, n * p->k, n * p->lambda, p->n, n},
                        contiguous_classes(p->n, n)};
}

Construction join_of_vkl_graphs(const std::vector<Graph>& parts) {
    const int m = static_cast<int>(parts.size());
    if (m < 2) throw ParameterMismatch("join needs at least 2 parts");
    std::string why;
    const auto first = as_vkl(parts[0], why);
    if (!first) throw NotVKLGraph("part 0: " + why);
    for (int i = 1; i < m; ++i) {
        const auto p = as_vkl(parts[static_cast<size_t>(i)], why);
        if (!p) throw NotVKLGraph("part " + std::to_string(i) + ": " + why);
        if (p->n != first->n || p->k != first->k || p->lambda != first->lambda)
            throw ParameterMismatch("part " + std::to_string(i) + " is a (" +
                                    std::to_string(p->n) + "," + std::to_string(p->k) + "," +
                                    std::to_string(p->lambda) + ")-graph, part 0 a (" +
                                    std::to_string(first->n) + "," + std::to_string(first->k) +
                                    "," + std::to_string(first->lambda) + ")-graph");
    }
    const int n = first->n;
    if (first->k > n - 2)
        throw ParameterMismatch("parts must satisfy k' <= n-2, got k'=" +
                                std::to_string(first->k));
    if (static_cast<long long>(m) * n > Graph::kMaxVertices)
        throw SizeOverflow("join would have " + std::to_string(static_cast<long long>(m) * n) +
                           " vertices");
    GraphBuilder b(m * n);
    for (int i = 0; i < m; ++i) {
        const Graph& part = parts[static_cast<size_t>(i)];
        for (int u = 0; u < n; ++u)
            for (int w : part.neighbours(u))
                if (u < w) b.add_edge(i * n + u, i * n + w);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int u = 0; u < n; ++u)
                for (int w = 0; w < n; ++w) b.add_edge(i * n + u, j * n + w);
    const int k = first->k + n * (m - 1);
    return Construction{b.build(),
                        DdgParams{m * n, k, first->lambda + n * (m - 1), 2 * k - m * n, m, n},
                        contiguous_classes(m, n)};
}

Construction lexicographic_double(const Graph& g) {
    const auto k = is_k_regular(g);
    if (!k) throw NotSrgMuLambdaPlusOne("input is not regular");
    std::optional<int> lambda, mu;
    for (int u = 0; u < g.size(); ++u)
        for (int w = u + 1; w < g.size(); ++w) {
            const int c = g.common_neighbours(u, w);
            auto& slot = g.adjacent(u, w) ? lambda : mu;
            if (!slot) slot = c;
            if (*slot != c)
                throw NotSrgMuLambdaPlusOne("common-neighbour count is not determined by "
                                            "adjacency");
        }
    if (!lambda || !mu)
        throw NotSrgMuLambdaPlusOne("input must have both adjacent and non-adjacent pairs");
    if (*mu != *lambda + 1)
        throw NotSrgMuLambdaPlusOne("need mu = lambda+1, got lambda=" + std::to_string(*lambda) +
                                    ", mu=" + std::to_string(*mu));
    Graph out = lexicographic_product(g, complete_graph(2));
    return Construction{std::move(out),
                        DdgParams{2 * g.size(), 2 * *k + 1, 2 * *k, 2 * *lambda + 2, g.size(), 2},
                        contiguous_classes(g.size(), 2)};
}

IntMatrix hadamard_tower(int t) {
    if (t < 1) throw BadOrder("tower level must be at least 1");
    if (t > 6) throw SizeOverflow("tower level " + std::to_string(t) + " exceeds order 4096");
    // seed: J - 2I (diagonal -1); expansion factor: J - 2R with R the
    // anti-diagonal permutation (diagonal +1, so the -1 diagonal survives)
    IntMatrix h(4, 4), hp(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            h.at(i, j) = i == j ? -1 : 1;
            hp.at(i, j) = i + j == 3 ? -1 : 1;
        }
    for (int s = 2; s <= t; ++s) h = kronecker(hp, h);
    return h;
}

namespace {

// order l^2, entries +-1, symmetric, HH^T = l^2 I, diagonal -1, row sums l>0
int validate_hadamard(const IntMatrix& h) {
    if (h.rows() != h.cols()) throw NotRegularGraphicalHadamard("matrix must be square");
    const int n = h.rows();
    std::vector<int> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (h.at(i, j) != 1 && h.at(i, j) != -1)
                throw NotRegularGraphicalHadamard("entries must be +1 or -1");
            e[static_cast<size_t>(i) * n + j] = static_cast<int>(h.at(i, j));
        }
    const auto at = [&](int i, int j) { return e[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i))
                throw NotRegularGraphicalHadamard("matrix must be symmetric");
    for (int i = 1; i < n; ++i)
        if (at(i, i) != at(0, 0))
            throw NotRegularGraphicalHadamard("diagonal must be constant");
    if (at(0, 0) == 1) throw WrongDiagonalSign("diagonal must be -1, got +1");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long dot = 0;
            for (int x = 0; x < n; ++x) dot += at(i, x) * at(j, x);
            if (dot != (i == j ? n : 0))
                throw NotRegularGraphicalHadamard("rows are not orthogonal of norm order");
        }
    long long sum0 = 0;
    for (int j = 0; j < n; ++j) sum0 += at(0, j);
    for (int i = 1; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += at(i, j);
        if (s != sum0) throw NotRegularGraphicalHadamard("row sums must be constant");
    }
    if (sum0 <= 0) throw NotRegularGraphicalHadamard("row sum must be positive");
    const int l = static_cast<int>(sum0);
    if (static_cast<long long>(l) * l != n)
        throw NotRegularGraphicalHadamard("order must be the square of the row sum");
    return l;
}

}  // namespace

Construction hadamard_block_graph(const IntMatrix& h) {
    const int l = validate_hadamard(h);
    const int l2 = l * l;
    const int v = 6 * l2;
    if (v > Graph::kMaxVertices)
        throw SizeOverflow("output would have " + std::to_string(v) + " vertices");
    // vertex = group*2l^2 + sub*l^2 + i; blocks between groups:
    //   M on (0,0),(1,2),(2,1); N on (0,1),(1,0),(2,2); O elsewhere.
    // M always links via P = (J+H)/2; N links via P for equal subs, Q = (J-H)/2
    // for distinct subs.
    const auto p = [&](int i, int j) { return h.at(i, j) == 1; };
    const auto q = [&](int i, int j) { return h.at(i, j) == -1; };
    static constexpr int kBlock[3][3] = {{'M', 'N', 'O'}, {'N', 'O', 'M'}, {'O', 'M', 'N'}};
    GraphBuilder b(v);
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w) {
            const int gu = u / (2 * l2), su = u / l2 % 2, iu = u % l2;
            const int gw = w / (2 * l2), sw = w / l2 % 2, iw = w % l2;
            const int block = kBlock[gu][gw];
            bool edge = false;
            if (block == 'M')
                edge = p(iu, iw);
            else if (block == 'N')
                edge = su == sw ? p(iu, iw) : q(iu, iw);
            if (edge) b.add_edge(u, w);
        }
    return Construction{b.build(),
                        DdgParams{v, 2 * l2 + l, l2 + l, (l2 + l) / 2, 3, 2 * l2},
                        contiguous_classes(3, 2 * l2)};
}

BlockWord BlockWord::expand() const {
    internal_check(level >= 2, "block word expansion below base level");
    BlockWord out;
    out.level = level - 1;
    const size_t rows = cells.size();
    const size_t cols = rows ? cells[0].size() : 0;
    out.cells.assign(4 * rows, std::vector<Letter>(4 * cols, Letter::O));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            const Letter c = cells[i][j];
            if (c == Letter::O) continue;
            for (size_t r = 0; r < 4; ++r)
                for (size_t s = 0; s < 4; ++s) {
                    // D expands to D with I on the anti-diagonal; I to the
                    // letter-complement of that
                    const bool anti = r + s == 3;
                    out.cells[4 * i + r][4 * j + s] =
                        (c == Letter::D) == anti ? Letter::I : Letter::D;
                }
        }
    return out;
}

Graph BlockWord::to_graph() const {
    internal_check(level == 1, "block word must be expanded to base level");
    const size_t rows = cells.size();
    internal_check(rows > 0 && cells[0].size() == rows, "block word must be square");
    const long long n = 4 * static_cast<long long>(rows);
    if (n > Graph::kMaxVertices)
        throw SizeOverflow("block word graph would have " + std::to_string(n) + " vertices");
    GraphBuilder b(static_cast<int>(n));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) {
            const Letter c = cells[i][j];
            if (c == Letter::O) continue;
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y)
                    if ((x != y) == (c == Letter::D))
                        b.add_edge(static_cast<int>(4 * i) + x, static_cast<int>(4 * j) + y);
        }
    return b.build();
}

BlockWord recursive_family_word(int t) {
    if (t < 1) throw BadOrder("family level must be at least 1");
    BlockWord w;
    w.level = t;
    const Letter D = Letter::D, I = Letter::I, O = Letter::O;
    w.cells = {{D, D, D, I, O, O}, {D, D, I, D, O, O}, {D, I, O, O, D, D},
               {I, D, O, O, D, D}, {O, O, D, D, D, I}, {O, O, D, D, I, D}};
    return w;
}

GammaFamily gamma_family(int t) {
    if (t < 1) throw BadOrder("family level must be at least 1");
    long long v = 6;
    for (int s = 0; s < t; ++s) v *= 4;
    if (v > Graph::kMaxVertices)
        throw SizeOverflow("level " + std::to_string(t) + " needs " + std::to_string(v) +
                           " vertices");
    Construction whole = hadamard_block_graph(hadamard_tower(t));

    BlockWord w = recursive_family_word(t);
    while (w.level > 1) w = w.expand();
    if (!(w.to_graph() == whole.graph))
        throw CrossCheckMismatch("symbolic expansion disagrees with the Hadamard build at t=" +
                                 std::to_string(t));

    const int q = whole.params.v / 6;  // 4^t
    const int e = 1 << t;              // 2^t
    const int sub = 2 * q;             // vertices per induced subgraph
    VertexSet top(static_cast<size_t>(sub)), bottom(static_cast<size_t>(sub));
    for (int i = 0; i < sub; ++i) {
        top[static_cast<size_t>(i)] = i;
        bottom[static_cast<size_t>(i)] = whole.params.v - sub + i;
    }
    Partition pairs;  // vertex j with its repeated/complemented partner j + 4^t
    for (int j = 0; j < q; ++j) pairs.classes.push_back({j, j + q});
    Construction first{induced_subgraph(whole.graph, top),
                       DdgParams{sub, q + e, q + e, 2 * (q / 4 + e / 2), q, 2}, pairs};
    Construction last{induced_subgraph(whole.graph, bottom), DdgParams{sub, q, 0, q / 2, q, 2},
                      std::move(pairs)};
    return GammaFamily{std::move(whole), std::move(first), std::move(last)};
}

namespace {

using BitRow = std::vector<std::uint64_t>;

long long row_popcount(const BitRow& r) {
    long long c = 0;
    for (std::uint64_t w : r) c += std::popcount(w);
    return c;
}

long long and_popcount(const BitRow& a, const BitRow& b) {
    long long c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// rows of the expanded D word (D=1, I=0) at level t: width 4^(t-1) letters
std::vector<BitRow> d_word_rows(int t) {
    std::vector<BitRow> rows{{1}};
    int width = 1;
    for (int s = 1; s < t; ++s) {
        std::vector<BitRow> next;
        next.reserve(rows.size() * 4);
        const int nw = 4 * width;
        for (const BitRow& r : rows)
            for (int j = 0; j < 4; ++j) {
                BitRow nr(static_cast<size_t>((nw + 63) / 64), 0);
                for (int i = 0; i < width; ++i) {
                    const bool d = (r[static_cast<size_t>(i) / 64] >> (i % 64)) & 1;
                    for (int c = 0; c < 4; ++c) {
                        const bool bit = (c == 3 - j) ? !d : d;
                        if (bit) {
                            const int pos = 4 * i + c;
                            nr[static_cast<size_t>(pos) / 64] |= std::uint64_t(1) << (pos % 64);
                        }
                    }
                }
                next.push_back(std::move(nr));
            }
        rows = std::move(next);
        width = nw;
    }
    return rows;
}

BitRow concat_rows(const BitRow& a, const BitRow& b, int width, bool flip_a, bool flip_b) {
    const int total = 2 * width;
    BitRow out(static_cast<size_t>((total + 63) / 64), 0);
    for (int i = 0; i < total; ++i) {
        const bool second = i >= width;
        const BitRow& src = second ? b : a;
        const int pos = second ? i - width : i;
        bool bit = (src[static_cast<size_t>(pos) / 64] >> (pos % 64)) & 1;
        if (second ? flip_b : flip_a) bit = !bit;
        if (bit) out[static_cast<size_t>(i) / 64] |= std::uint64_t(1) << (i % 64);
    }
    return out;
}

WordCensus word_census(const std::vector<BitRow>& rows, int width) {
    WordCensus c;
    c.rows = static_cast<int>(rows.size());
    c.width = width;
    c.row_d = row_popcount(rows[0]);
    c.row_i = width - c.row_d;
    for (const BitRow& r : rows)
        internal_check(row_popcount(r) == c.row_d, "block word rows have unequal letter counts");
    std::vector<int> partners(rows.size(), 0);
    bool have_partner = false, have_other = false;
    bool partner_equal = false;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) {
            const long long dd = and_popcount(rows[i], rows[j]);
            PairCounts pc{dd, width - 2 * c.row_d + dd, c.row_d - dd, c.row_d - dd};
            const bool equal = dd == c.row_d;
            const bool opposite = dd == 0 && pc.ii == 0;
            if (equal || opposite) {
                ++partners[i];
                ++partners[j];
                if (!have_partner) {
                    c.partner = pc;
                    partner_equal = equal;
                    have_partner = true;
                }
                internal_check(pc == c.partner && equal == partner_equal,
                               "partner rows of mixed kinds");
                ++c.partner_pairs;
            } else {
                if (!have_other) {
                    c.other = pc;
                    have_other = true;
                }
                internal_check(pc == c.other, "distinct row pairs have unequal pair counts");
                ++c.other_pairs;
            }
        }
    for (int p : partners) internal_check(p == 1, "each row must have exactly one partner");
    return c;
}

}  // namespace

BlockCensus block_census(int t) {
    if (t < 1) throw BadOrder("census level must be at least 1");
    if (t > 6) throw SizeOverflow("census level " + std::to_string(t) + " is beyond desk scale");
    const std::vector<BitRow> d = d_word_rows(t);
    int width = 1;
    for (int s = 1; s < t; ++s) width *= 4;
    // a1 rows: (r, r) twice over; a2 rows: (r, ~r) then (~r, r)
    std::vector<BitRow> a1, a2;
    for (int rep = 0; rep < 2; ++rep)
        for (const BitRow& r : d) a1.push_back(concat_rows(r, r, width, false, false));
    for (const BitRow& r : d) a2.push_back(concat_rows(r, r, width, false, true));
    for (const BitRow& r : d) a2.push_back(concat_rows(r, r, width, true, false));
    BlockCensus out;
    out.t = t;
    out.a1 = word_census(a1, 2 * width);
    out.a2 = word_census(a2, 2 * width);
    return out;
}

Graph paley(int q) {
    if (q < 5) throw BadOrder("paley graph needs q >= 5");
    if (q % 4 != 1) throw BadOrder("paley graph needs q = 1 mod 4");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw BadOrder("paley graph needs prime q, got " + std::to_string(q));
    std::vector<bool> residue(static_cast<size_t>(q), false);
    for (int x = 1; x < q; ++x)
        residue[static_cast<size_t>(static_cast<long long>(x) * x % q)] = true;
    GraphBuilder b(q);
    for (int u = 0; u < q; ++u)
        for (int w = u + 1; w < q; ++w)
            if (residue[static_cast<size_t>(w - u)]) b.add_edge(u, w);
    return b.build();
}

Graph lattice(int n) {
    if (n < 2) throw BadOrder("lattice graph needs n >= 2");
    GraphBuilder b(n * n);
    for (int u = 0; u < n * n; ++u)
        for (int w = u + 1; w < n * n; ++w)
            if (u / n == w / n || u % n == w % n) b.add_edge(u, w);
    return b.build();
}

Graph lattice_complement(int n) { return complement(lattice(n)); }

Graph triangular(int n) {
    if (n < 2) throw BadOrder("triangular graph needs n >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) pairs.push_back({a, c});
    GraphBuilder b(static_cast<int>(pairs.size()));
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            const auto [a, c] = pairs[i];
            const auto [x, y] = pairs[j];
            if (a == x || a == y || c == x || c == y)
                b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return b.build();
}

Graph petersen() { return complement(triangular(5)); }

}  // namespace ddg
