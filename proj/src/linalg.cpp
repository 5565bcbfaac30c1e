#include "mcdg/linalg.hpp"

#include "mcdg/error.hpp"

namespace mcdg {

KMatrix kmat_identity(std::size_t n) {
    KMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

KMatrix kmat_mul(const Field& k, const KMatrix& A, const KMatrix& B) {
    require(A.cols == B.rows, "kmat_mul: shape mismatch");
    KMatrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t l = 0; l < A.cols; ++l) {
            const Scalar& v = A.at(i, l);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                if (!B.at(l, j).is_zero()) k.mul_add(C.at(i, j), v, B.at(l, j));
        }
    return C;
}

KMatrix kmat_add(const Field& k, const KMatrix& A, const KMatrix& B) {
    require(A.rows == B.rows && A.cols == B.cols, "kmat_add: shape mismatch");
    KMatrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = k.add(C.a[i], B.a[i]);
    return C;
}

KMatrix kmat_sub(const Field& k, const KMatrix& A, const KMatrix& B) {
    require(A.rows == B.rows && A.cols == B.cols, "kmat_sub: shape mismatch");
    KMatrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = k.sub(C.a[i], B.a[i]);
    return C;
}

KMatrix kmat_kron(const Field& k, const KMatrix& A, const KMatrix& B) {
    KMatrix C(A.rows * B.rows, A.cols * B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) {
            const Scalar& v = A.at(i, j);
            if (v.is_zero()) continue;
            for (std::size_t r = 0; r < B.rows; ++r)
                for (std::size_t c = 0; c < B.cols; ++c)
                    if (!B.at(r, c).is_zero())
                        k.mul_add(C.at(i * B.rows + r, j * B.cols + c), v, B.at(r, c));
        }
    return C;
}

bool kmat_is_zero(const KMatrix& A) {
    for (const Scalar& v : A.a)
        if (!v.is_zero()) return false;
    return true;
}

std::vector<Scalar> kmat_apply(const Field& k, const KMatrix& A, const std::vector<Scalar>& x) {
    require(A.cols == x.size(), "kmat_apply: shape mismatch");
    std::vector<Scalar> y(A.rows, Scalar(0));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (!A.at(i, j).is_zero() && !x[j].is_zero()) k.mul_add(y[i], A.at(i, j), x[j]);
    return y;
}

KMatrix kmat_select_cols(const KMatrix& A, const std::vector<std::size_t>& cols) {
    KMatrix C(A.rows, cols.size());
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) C.at(i, j) = A.at(i, cols[j]);
    return C;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& k, KMatrix& m, std::size_t lead_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lead_cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = k.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) = k.mul(m.at(row, j), inv);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                if (!m.at(row, j).is_zero())
                    m.at(r, j) = k.sub(m.at(r, j), k.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t kmat_rank(const Field& k, KMatrix A) { return rref(k, A, A.cols).size(); }

KMatrix kernel_basis(const Field& k, KMatrix A) {
    std::size_t n = A.cols;
    std::vector<std::size_t> pivots = rref(k, A, n);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    KMatrix K(n, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::size_t fc = free_cols[f];
        K.at(fc, f) = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            K.at(pivots[r], f) = k.neg(A.at(r, fc));
    }
    return K;
}

Solver::Solver(const Field& k, KMatrix A) : k_(k), rows_(A.rows), cols_(A.cols) {
    red_ = KMatrix(A.rows, A.cols + A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) red_.at(i, j) = A.at(i, j);
        red_.at(i, A.cols + i) = Scalar(1);
    }
    pivots_ = rref(k_, red_, cols_);
}

std::optional<std::vector<Scalar>> Solver::solve(const std::vector<Scalar>& b) const {
    require(b.size() == rows_, "Solver::solve: rhs length mismatch");
    // transformed rhs: T*b where T is the recorded row transform
    std::vector<Scalar> tb(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j)
            if (!red_.at(i, cols_ + j).is_zero() && !b[j].is_zero())
                k_.mul_add(tb[i], red_.at(i, cols_ + j), b[j]);
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!tb[i].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols_, Scalar(0));
    for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = tb[r];
    return x;
}

std::optional<std::vector<Scalar>> solve_linear(const Field& k, const KMatrix& A,
                                                const std::vector<Scalar>& b) {
    return Solver(k, A).solve(b);
}

} // namespace mcdg
