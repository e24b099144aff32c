#include "plab/intmatrix.hpp"

#include <stdexcept>

namespace plab {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("IntMat: shape mismatch");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("IntMat::apply: size mismatch");
    std::vector<Int> r(rows, Int(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Int IntMat::det() const {
    if (rows != cols) throw std::invalid_argument("IntMat::det: not square");
    // Bareiss fraction-free elimination
    IntMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < rows - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < rows; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < rows; ++i)
            for (int j = k + 1; j < cols; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(rows - 1, rows - 1);
}

namespace {

struct Work {
    IntMat D, U, V, Vinv;

    void swap_rows(int i, int j) {
        for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    // row_i -= q * row_t
    void row_op(int i, int t, const Int& q) {
        for (int c = 0; c < D.cols; ++c) D.at(i, c) -= q * D.at(t, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) -= q * U.at(t, c);
    }
    // col_j -= q * col_t; Vinv gets the inverse op (row_t += q * row_j)
    void col_op(int j, int t, const Int& q) {
        for (int r = 0; r < D.rows; ++r) D.at(r, j) -= q * D.at(r, t);
        for (int r = 0; r < V.rows; ++r) V.at(r, j) -= q * V.at(r, t);
        for (int c = 0; c < Vinv.cols; ++c) Vinv.at(t, c) += q * Vinv.at(j, c);
    }
    void negate_row(int i) {
        for (int c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& M) {
    Work w;
    w.D = M;
    w.U = IntMat::identity(M.rows);
    w.V = IntMat::identity(M.cols);
    w.Vinv = IntMat::identity(M.cols);
    const int n = std::min(M.rows, M.cols);

    for (int t = 0; t < n; ++t) {
        while (true) {
            // locate minimal nonzero entry in the trailing block
            int bi = -1, bj = -1;
            for (int i = t; i < M.rows; ++i)
                for (int j = t; j < M.cols; ++j)
                    if (w.D.at(i, j) != 0 &&
                        (bi < 0 || abs(w.D.at(i, j)) < abs(w.D.at(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) { bi = t; break; }
            if (bi != t) w.swap_rows(t, bi);
            if (bj != t) w.swap_cols(t, bj);

            bool clean = true;
            for (int i = t + 1; i < M.rows; ++i) {
                if (w.D.at(i, t) == 0) continue;
                Int q = w.D.at(i, t) / w.D.at(t, t);
                w.row_op(i, t, q);
                if (w.D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < M.cols; ++j) {
                if (w.D.at(t, j) == 0) continue;
                Int q = w.D.at(t, j) / w.D.at(t, t);
                w.col_op(j, t, q);
                if (w.D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the whole trailing block for the divisor chain
            bool divides = true;
            for (int i = t + 1; i < M.rows && divides; ++i)
                for (int j = t + 1; j < M.cols && divides; ++j)
                    if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                        w.row_op(t, i, Int(-1));  // row_t += row_i
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.D.at(t, t) < 0) w.negate_row(t);
        if (w.D.at(t, t) == 0) break;  // remaining block is zero
    }

    SmithResult r{w.D, w.U, w.V, w.Vinv};
    return r;
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> f;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i)
        if (D.at(i, i) != 0) f.push_back(D.at(i, i));
    return f;
}

IntMat integer_kernel(const IntMat& M) {
    SmithResult s = smith_normal_form(M);
    int rank = static_cast<int>(s.invariant_factors().size());
    IntMat K(M.cols, M.cols - rank);
    for (int j = rank; j < M.cols; ++j)
        for (int i = 0; i < M.cols; ++i) K.at(i, j - rank) = s.V.at(i, j);
    return K;
}

}  // namespace plab
