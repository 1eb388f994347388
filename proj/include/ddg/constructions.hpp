#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddg/analysis.hpp"
#include "ddg/graph.hpp"
#include "ddg/intmatrix.hpp"

namespace ddg {

// Incidence structure of a symmetric 2-(v,k,lambda) design: rows are points,
// columns are blocks. Validated on construction: square, 0/1, constant row
// and column sums k, and any two distinct points (and any two distinct
// blocks) lie in exactly lambda common blocks (points).
class Design {
public:
    static Design from_incidence(const IntMatrix& n);
    // File format: first line "v k lambda", then v rows of v 0/1 digits
    // (spaces between digits optional).
    static Design from_file(const std::string& path);
    static Design projective_plane_order2();  // 2-(7,3,1), blocks {j+1,j+2,j+4} mod 7
    static Design complete_design(int n);     // all-ones incidence, 2-(n,n,n)

    const IntMatrix& incidence() const { return n_; }
    int points() const { return n_.rows(); }
    int block_size() const { return k_; }
    int index() const { return lambda_; }

private:
    Design(IntMatrix n, int k, int lambda) : n_(std::move(n)), k_(k), lambda_(lambda) {}
    IntMatrix n_;
    int k_;
    int lambda_;
};

// A generated graph together with its predicted parameters and canonical
// partition; every generator's output is expected to pass verify_ddg.
struct Construction {
    Graph graph;
    DdgParams params;
    Partition partition;
};

// Bipartite incidence graph [[O,N],[N^T,O]] of a symmetric design with block
// size k > 1: points first, then blocks. Yields (2v, k, lambda, 0, 2, v).
Construction design_incidence_graph(const Design& d);

// A (x) J_n for a connected graph in which every distinct vertex pair has the
// same number of common neighbours (a (m,k',lambda')-graph) with 1 < k' < m
// and n > 1. Yields (mn, nk', nk', n lambda', m, n).
Construction vkl_blowup(const Graph& g, int n);

// Join of m >= 2 graphs with identical (n,k',lambda')-graph parameters,
// 0 <= k' <= n-2: all edges between parts plus each part's own edges.
// Yields (mn, k'+n(m-1), lambda'+n(m-1), 2k-v, m, n).
Construction join_of_vkl_graphs(const std::vector<Graph>& parts);

// G[K2] for a strongly regular g with mu = lambda+1. Yields
// (2v', 2k'+1, 2k', 2 lambda + 2, v', 2).
Construction lexicographic_double(const Graph& g);

// Symmetric Hadamard matrix of order 4^t with constant diagonal -1 and row
// sums 2^t, built as a Kronecker tower from two order-4 seeds.
IntMatrix hadamard_tower(int t);

// 6l^2-vertex graph [[M,N,O],[N,O,M],[O,M,N]] with M = J_2 (x) P and
// N = [[P,Q],[Q,P]], where P = (J+H)/2, Q = (J-H)/2 for a regular graphical
// Hadamard matrix H of order l^2, diagonal -1, row sum l > 0. Yields
// (6l^2, 2l^2+l, l^2+l, (l^2+l)/2, 3, 2l^2).
Construction hadamard_block_graph(const IntMatrix& h);

// Symbolic block matrix over the alphabet {D, I, O}: a letter at level s
// stands for a concrete block of order 4^s (D_1 = J_4 - I_4, I_1 = I_4,
// O_1 = O_4). expand() rewrites every letter into its defining 4x4 grid of
// level s-1 letters; to_graph() substitutes the base tiles at level 1.
enum class Letter : std::uint8_t { D, I, O };

struct BlockWord {
    int level = 1;
    std::vector<std::vector<Letter>> cells;

    BlockWord expand() const;
    Graph to_graph() const;
};

// Top-level 6x6 word [[M,N,O],[N,O,M],[O,M,N]] with M = [[D,D],[D,D]] and
// N = [[D,I],[I,D]], letters at level t.
BlockWord recursive_family_word(int t);

// The graph of recursive_family_word(t) built twice: by symbolic expansion
// and as hadamard_block_graph(hadamard_tower(t)). The two adjacency matrices
// must agree bit for bit (CrossCheckMismatch otherwise). gamma1/gamma2 are
// the subgraphs induced on the first and last 2*4^t vertices.
struct GammaFamily {
    Construction gamma;   // (6*4^t, 2*4^t+2^t, 4^t+2^t, 2*4^(t-1)+2^(t-1), 3, 2*4^t)
    Construction gamma1;  // (2*4^t, 4^t+2^t, 4^t+2^t, 2*(4^(t-1)+2^(t-1)), 4^t, 2)
    Construction gamma2;  // (2*4^t, 4^t, 0, 2*4^(t-1), 4^t, 2)
};

GammaFamily gamma_family(int t);

// Letter statistics of the expanded words of gamma1 (a1: [[D,D],[D,D]]) and
// gamma2 (a2: [[D,I],[I,D]]) at level t. Every row of a1 has exactly one
// equal partner row; every row of a2 has exactly one complementary partner
// row; all remaining distinct row pairs share one count tuple per word.
struct PairCounts {
    long long dd = 0, ii = 0, di = 0, id = 0;
    bool operator==(const PairCounts&) const = default;
};

struct WordCensus {
    int rows = 0;
    int width = 0;           // letters per row
    long long row_d = 0;     // D letters in every row
    long long row_i = 0;     // I letters in every row
    long long partner_pairs = 0;
    PairCounts partner;      // counts within an equal/complementary pair
    long long other_pairs = 0;
    PairCounts other;        // counts for every remaining distinct pair
};

struct BlockCensus {
    int t = 0;
    WordCensus a1, a2;
};

BlockCensus block_census(int t);

// Named strongly regular graphs.
Graph paley(int q);               // q prime, q = 1 mod 4: (q, (q-1)/2, (q-5)/4, (q-1)/4)
Graph lattice(int n);             // rook's graph: (n^2, 2(n-1), n-2, 2)
Graph lattice_complement(int n);
Graph triangular(int n);          // 2-subsets meeting: (C(n,2), 2(n-2), n-2, 4) for n >= 4
Graph petersen();                 // (10, 3, 0, 1)

}  // namespace ddg
