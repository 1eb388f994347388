#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddg/graph.hpp"

namespace ddg {

// Witness that removing `cut` splits the remaining vertices into the two
// given sides with no edge between them.
struct CutCertificate {
    VertexSet cut;
    VertexSet side_a, side_b;  // nonempty, disjoint, cover V with cut
    int kappa = 0;             // |cut|
};

// Internally disjoint x-y paths: no two share a vertex other than x and y.
struct PathSystem {
    std::pair<int, int> endpoints{-1, -1};
    std::vector<std::vector<int>> paths;  // each runs from x to y
};

// Re-derive every invariant from the graph; throws std::logic_error on any
// violation. Used on every certificate before it is returned.
void check_cut_certificate(const Graph& g, const CutCertificate& c);
void check_path_system(const Graph& g, const PathSystem& p);

// Minimum vertex cut and a maximum system of internally disjoint paths
// between distinct non-adjacent vertices (AdjacentEndpoints otherwise),
// computed as max-flow on the in/out vertex-split network with unit vertex
// capacities. |cut| == |paths| always holds on return.
struct StCut {
    int kappa = 0;
    CutCertificate cut;
    PathSystem paths;
};

StCut min_vertex_cut_st(const Graph& g, int s, int t);

// Global vertex connectivity. Complete graphs report kappa = n-1 and no
// certificate; anything else carries a verified CutCertificate. The flow
// phase fixes a minimum-degree vertex s and takes the minimum over s against
// every non-neighbour and every non-adjacent pair inside N(s); with
// threads > 1 those flows run in parallel and the certificate is rebuilt
// deterministically afterwards.
struct KappaResult {
    int kappa = 0;
    bool complete = false;
    std::optional<CutCertificate> cert;
};

KappaResult vertex_connectivity(const Graph& g, int threads = 1);

// Exhaustive oracle: smallest removal set that disconnects the rest, by
// increasing size; n-1 for complete graphs. Limited to 14 vertices
// (TooLarge).
int vertex_connectivity_bruteforce(const Graph& g);

// Spectral shortcut for a connected k-regular graph: if k - 2q > b, where b
// is the largest common-neighbour count and q >= 0 the second-largest
// eigenvalue (supplied squared, compared exactly via
// k - b > 0 and (k-b)^2 > 4 q^2), then every minimum disconnecting set is a
// vertex neighbourhood and kappa = k. Returns Inconclusive otherwise; b and
// q^2 are trusted caller data.
enum class CertificateOutcome { Certified, Inconclusive };

CertificateOutcome neighbourhood_certificate(const Graph& g, long long b, long long q_squared);

// kappa(g1[g2]) = kappa(g1) * |V(g2)| for a connected non-complete base
// (DisconnectedBase / CompleteBase otherwise).
int connectivity_via_lexicographic(const Graph& g1, const Graph& g2);

// Connectivity audit of the recursive 6*4^t family: connectivities of both
// halves, the three half-bounds with l = 2^t, the middle-third removal
// witness, and the direct connectivity of the whole graph.
struct GammaBoundReport {
    int t = 0;
    int l = 0;                        // 2^t
    int kappa_gamma1 = 0;             // expected 4^t + 2^t
    int kappa_gamma2 = 0;             // expected 4^t
    int kappa_gamma = 0;              // expected 2*4^t
    bool gamma1_bound = false;        // kappa_gamma1 >= l^2
    bool gamma2_bound = false;        // kappa_gamma2 >= l^2 - l
    bool sum_bound = false;           // kappa_gamma1 + kappa_gamma2 >= 2 l^2
    int middle_components = 0;        // components once the middle third is removed
    bool middle_splits_halves = false;  // the components are exactly the outer thirds

    bool ok() const {
        return gamma1_bound && gamma2_bound && sum_bound && middle_components == 2 &&
               middle_splits_halves && kappa_gamma == 2 * l * l;
    }
};

GammaBoundReport gamma_connectivity_bound_check(int t, int threads = 1);

// {kappa, cut, sides, method} with cut/sides present iff a certificate is.
std::string kappa_report_json(const KappaResult& r, const std::string& method);

}  // namespace ddg
