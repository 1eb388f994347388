#include "ddg/intmatrix.hpp"

namespace ddg {

namespace {

void check_dim(long long rows, long long cols) {
    if (rows < 0 || cols < 0 || rows > IntMatrix::kMaxDim || cols > IntMatrix::kMaxDim)
        throw SizeOverflow("matrix dimension " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " outside [0, " +
                           std::to_string(IntMatrix::kMaxDim) + "]");
}

void check_same_shape(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()) + " differ");
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dim(rows, cols);
    e_.assign(static_cast<size_t>(rows) * cols, BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::constant(int rows, int cols, const BigInt& value) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = value;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw DimensionMismatch("ragged row " + std::to_string(i));
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) m.at(i, j) = 1;
    return m;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    check_same_shape(a, b);
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
    check_same_shape(a, b);
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + " differ");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

IntMatrix mat_scale(const IntMatrix& a, const BigInt& c) {
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) * c;
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

bool is_symmetric(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (a.at(i, j) != a.at(j, i)) return false;
    return true;
}

BigInt trace(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw NotSquare("trace of non-square matrix");
    BigInt t = 0;
    for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    const long long rows = static_cast<long long>(a.rows()) * b.rows();
    const long long cols = static_cast<long long>(a.cols()) * b.cols();
    check_dim(rows, cols);
    IntMatrix out(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const BigInt& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    out.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
        }
    return out;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    long long n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw NotSquare("block_diag needs square blocks");
        n += b.rows();
    }
    check_dim(n, n);
    IntMatrix out(static_cast<int>(n), static_cast<int>(n));
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return out;
}

int rank_exact(IntMatrix a) {
    const int n = a.rows(), m = a.cols();
    BigInt prev = 1;
    int r = 0;
    while (r < n && r < m) {
        // smallest-magnitude nonzero pivot keeps intermediate growth down
        int pi = -1, pj = -1;
        for (int i = r; i < n; ++i)
            for (int j = r; j < m; ++j) {
                const BigInt& v = a.at(i, j);
                if (v == 0) continue;
                if (pi < 0 || abs(v) < abs(a.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != r)
            for (int j = r; j < m; ++j) a.at(r, j).swap(a.at(pi, j));
        if (pj != r)
            for (int i = 0; i < n; ++i) a.at(i, r).swap(a.at(i, pj));
        // Bareiss step: entries stay (r+1)x(r+1) minors, divisions are exact
        const BigInt pivot = a.at(r, r);
        for (int i = r + 1; i < n; ++i) {
            const BigInt air = a.at(i, r);
            for (int j = r + 1; j < m; ++j)
                a.at(i, j) = (pivot * a.at(i, j) - air * a.at(r, j)) / prev;
            a.at(i, r) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

int eigen_multiplicity(const IntMatrix& a, const BigInt& theta) {
    if (a.rows() != a.cols()) throw NotSquare("eigenvalue multiplicity of non-square matrix");
    IntMatrix shifted = a;
    for (int i = 0; i < a.rows(); ++i) shifted.at(i, i) -= theta;
    return a.rows() - rank_exact(std::move(shifted));
}

}  // namespace ddg
