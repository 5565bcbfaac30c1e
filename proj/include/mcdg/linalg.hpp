#pragma once

#include <optional>
#include <vector>

#include "mcdg/scalar.hpp"

namespace mcdg {

/// Dense matrix over a field, row-major. All elimination is exact.
struct KMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    KMatrix() = default;
    KMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Scalar(0)) {}

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    bool operator==(const KMatrix& o) const = default;
};

KMatrix kmat_identity(std::size_t n);
KMatrix kmat_mul(const Field& k, const KMatrix& A, const KMatrix& B);
KMatrix kmat_add(const Field& k, const KMatrix& A, const KMatrix& B);
KMatrix kmat_sub(const Field& k, const KMatrix& A, const KMatrix& B);
/// Kronecker product (A entries scale B blocks).
KMatrix kmat_kron(const Field& k, const KMatrix& A, const KMatrix& B);
bool kmat_is_zero(const KMatrix& A);
std::vector<Scalar> kmat_apply(const Field& k, const KMatrix& A, const std::vector<Scalar>& x);
/// Horizontal selection of columns.
KMatrix kmat_select_cols(const KMatrix& A, const std::vector<std::size_t>& cols);

std::size_t kmat_rank(const Field& k, KMatrix A);

/// Columns form a basis of the kernel of A (deterministic: free variables in
/// ascending column order, pivot entries back-substituted).
KMatrix kernel_basis(const Field& k, KMatrix A);

/// Prepared exact solver for repeated right-hand sides against a fixed A:
/// factors [A | I] once; solve() returns the particular solution whose free
/// variables are zero, or nullopt when the system is inconsistent.
class Solver {
public:
    Solver() = default;
    Solver(const Field& k, KMatrix A);
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    Field k_ = Field::rationals();
    std::size_t rows_ = 0, cols_ = 0;
    KMatrix red_;                      // reduced [A | I]
    std::vector<std::size_t> pivots_;  // pivot column per eliminated row
};

std::optional<std::vector<Scalar>> solve_linear(const Field& k, const KMatrix& A,
                                                const std::vector<Scalar>& b);

} // namespace mcdg
