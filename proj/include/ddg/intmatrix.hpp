#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "ddg/errors.hpp"
#include "ddg/graph.hpp"

namespace ddg {

// Exact integer scalar. cpp_int keeps word-sized values in inline storage, so
// small arithmetic stays fast while Bareiss-style intermediate growth is safe.
using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arithmetic throughout. No floating point
// anywhere: ranks and eigenvalue multiplicities are certificates, not
// approximations.
class IntMatrix {
public:
    static constexpr int kMaxDim = 8192;

    IntMatrix() = default;
    IntMatrix(int rows, int cols);  // zero-filled

    static IntMatrix identity(int n);
    static IntMatrix constant(int rows, int cols, const BigInt& value);
    static IntMatrix ones(int n) { return constant(n, n, 1); }
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> e_;
};

// 0/1 adjacency matrix of a graph.
IntMatrix adjacency_matrix(const Graph& g);

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_scale(const IntMatrix& a, const BigInt& c);
IntMatrix transpose(const IntMatrix& a);
bool is_symmetric(const IntMatrix& a);
BigInt trace(const IntMatrix& a);

// Kronecker product: block (i,j) of the result is a(i,j) * b. Throws
// SizeOverflow when a dimension would exceed kMaxDim.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Square blocks along the diagonal, zeros elsewhere.
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

// Exact rank by fraction-free Bareiss elimination with full pivoting.
// Intermediate entries are minors of the input, so every division is exact.
int rank_exact(IntMatrix a);

// Multiplicity of theta as an eigenvalue of square a: n - rank(a - theta*I).
int eigen_multiplicity(const IntMatrix& a, const BigInt& theta);

}  // namespace ddg
