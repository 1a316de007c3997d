#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "core/field.hpp"

namespace arrowsmith {

/// Dense matrix over an exact field.  Row-major.  Matrices with zero rows
/// or zero columns are legal and represent maps in or out of the zero
/// space; every operation below handles them.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix column(Field field, const std::vector<Scalar>& entries);
    static Matrix row(Field field, const std::vector<Scalar>& entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& v) {
        entries_[i * cols_ + j] = field_.reduce(v);
    }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& other) const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;

    Matrix transpose() const;
    Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    Matrix take_columns(std::size_t col0, std::size_t ncols) const {
        return submatrix(0, col0, rows_, ncols);
    }
    Matrix col(std::size_t j) const { return take_columns(j, 1); }
    void set_block(std::size_t row0, std::size_t col0, const Matrix& block);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row-echelon form (Gauss-Jordan with exact pivoting).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of { v : Mv = 0 } as matrix columns.  The basis is the canonical
/// one read off the rref free columns, so it depends only on the kernel
/// subspace, not on the presentation M.
Matrix kernel_basis(const Matrix& m);

/// Surjection Q : k^m -> k^(m-rank) with QM = 0, presenting the quotient
/// by the column space.  Quotient coordinates are the codomain coordinates
/// not hit by pivots of the column-reduced image, which makes Q depend
/// only on Im(M).
Matrix cokernel_projection(const Matrix& m);

/// Basis of the column space: the columns of M sitting at rref pivot
/// positions.
Matrix image_basis(const Matrix& m);

/// Unique B with B Q = A, for Q a surjection killing ker(A).
/// Throws NoFactorizationError when A does not vanish on ker(Q).
Matrix factor_through_cokernel(const Matrix& q, const Matrix& a);

/// Unique B with K B = A, for K injective with Im(A) inside span(K).
/// Throws NoFactorizationError when a column of A leaves span(K).
Matrix factor_through_kernel(const Matrix& k, const Matrix& a);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct PushoutResult {
    std::size_t dim;    // dim of the pushout object
    Matrix into_left;   // codomain(f) -> P
    Matrix into_right;  // codomain(g) -> P
};

/// Pushout of (f : A -> B, g : A -> C): P = (B + C) / Im(f, -g).
PushoutResult pushout(const Matrix& f, const Matrix& g);

bool is_mono(const Matrix& m);
bool is_epi(const Matrix& m);
bool is_iso(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// One solution X of A X = B (free variables set to zero), or nullopt if
/// the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Commutation permutation tau : k^(m*n) -> k^(n*m) with
/// tau(e_i (x) e_j) = e_j (x) e_i under row-major Kronecker indexing.
Matrix commutation(Field field, std::size_t m, std::size_t n);

/// Row-major vectorization helpers: rvec(A F B) = (A (x) B^T) rvec(F).
Matrix rvec(const Matrix& m);
Matrix unrvec(Field field, std::size_t rows, std::size_t cols, const Matrix& column);

}  // namespace arrowsmith
