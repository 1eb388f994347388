#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddg/graph.hpp"
#include "ddg/intmatrix.hpp"

namespace ddg {

// Parameter tuple of a divisible design graph: v vertices split into m
// classes of size n (v = m*n), k-regular, lambda1 common neighbours for
// distinct vertices in the same class, lambda2 across classes.
struct DdgParams {
    int v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;

    // Degenerate cases (single class, singleton classes, lambda1 = lambda2)
    // are exactly the (v,k,lambda)-graphs.
    bool proper() const { return m > 1 && n > 1 && lambda1 != lambda2; }

    bool operator==(const DdgParams&) const = default;
};

// Ordered vertex partition into m classes of size n; classes are sorted sets
// ordered by smallest member.
struct Partition {
    std::vector<VertexSet> classes;

    int class_count() const { return static_cast<int>(classes.size()); }
    int class_size() const { return classes.empty() ? 0 : static_cast<int>(classes[0].size()); }
    // class index of each vertex, or throws PartitionMismatch if the classes
    // do not partition {0..v-1} into equal parts.
    std::vector<int> class_of(int v) const;
};

// Outcome of checking A^2 = k*I + lambda1*(K - I) + lambda2*(J - K) entry by
// entry (K = class-partition matrix). On failure, the first violating pair in
// row-major order is reported with the observed and required value.
struct VerifyReport {
    bool ok = false;
    std::string message;           // empty when ok
    int u = -1, v = -1;            // first violating pair (or degree witness)
    long long observed = 0, required = 0;
};

VerifyReport verify_ddg(const Graph& g, const DdgParams& p, const Partition& part);

// Recognition from scratch. A regular graph with one common-neighbour value
// is an improper DDG (a (v,k,lambda)-graph); with two values each may act as
// lambda1, and an assignment is kept when its same-class relation is an
// equivalence with uniform class size and the full identity verifies. More
// than two values: MoreThanTwoValues. Non-regular input: NotRegular.
struct Recognition {
    enum class Kind { Proper, Improper, NotDdg };
    Kind kind = Kind::NotDdg;
    // Proper: the valid readings (mathematically at most one can exist).
    std::vector<std::pair<DdgParams, Partition>> readings;
    // Improper: the (v,k,lambda) triple.
    int v = 0, k = 0, lambda = 0;
    // Distinct off-diagonal common-neighbour values, ascending (diagnostics).
    std::vector<int> common_values;
};

Recognition recognize_ddg(const Graph& g);

// Quotient matrix of an equitable partition: entry (i,j) is the number of
// neighbours every vertex of class i has in class j. Throws NotEquitable
// (naming the class and a witness pair) when the count is not constant.
IntMatrix canonical_quotient(const Graph& g, const Partition& part);

// Exact spectrum of a proper DDG. Eigenvalues besides k are ±sqrt(d1) and
// ±sqrt(d2) with d1 = k - lambda1, d2 = k^2 - lambda2*v; multiplicities are
// computed by exact rank when sqrt(d) is an integer and fixed by parity
// otherwise. A pair with d = 0 collapses onto the eigenvalue 0.
struct SpectrumPair {
    long long d = 0;        // radicand
    bool square = false;
    long long root = 0;     // sqrt(d) when square
    int total = 0;          // combined multiplicity of +sqrt(d) and -sqrt(d)
    int mult_plus = 0;      // all of `total` sits here when d = 0
    int mult_minus = 0;
};

struct DdgSpectrum {
    int v = 0, k = 0;
    SpectrumPair f;  // radicand k - lambda1, total m(n-1)
    SpectrumPair g;  // radicand k^2 - lambda2*v, total m-1

    // q^2 for the second largest eigenvalue q when q >= 0 (always the case
    // for a connected non-complete graph); nullopt when every non-valency
    // eigenvalue is negative.
    std::optional<long long> second_largest_squared() const;
};

DdgSpectrum ddg_spectrum(const DdgParams& p, const Graph& g);

// A proper DDG is walk-regular exactly when its quotient matrix has constant
// diagonal.
bool is_walk_regular_ddg(const Graph& g, const DdgParams& p, const Partition& part);

// Full JSON report {params, partition, spectrum, quotient, walk_regular} for
// a graph; improper and non-DDG inputs are reported, not rejected.
std::string analysis_report_json(const Graph& g);

}  // namespace ddg
