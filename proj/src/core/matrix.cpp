#include "core/matrix.hpp"

#include <algorithm>
#include <string>

#include "core/errors.hpp"

namespace arrowsmith {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (!(a.field() == b.field()))
        throw FieldMismatchError(std::string(op) + " needs both matrices over the same field");
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& pivots, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(n - pivots.size());
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (next < pivots.size() && pivots[next] == j)
            ++next;
        else
            out.push_back(j);
    }
    return out;
}

}  // namespace

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeMismatchError("ragged row list");
        std::size_t j = 0;
        for (long v : row) m.set(i, j++, Scalar(v));
        ++i;
    }
    return m;
}

Matrix Matrix::column(Field field, const std::vector<Scalar>& entries) {
    Matrix m(field, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
    return m;
}

Matrix Matrix::row(Field field, const std::vector<Scalar>& entries) {
    Matrix m(field, 1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m.set(0, j, entries[j]);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& v) { return Field::is_zero(v); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

Matrix Matrix::operator*(const Matrix& other) const {
    require_same_field(*this, other, "product");
    if (cols_ != other.rows_)
        throw ShapeMismatchError("product of " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_) + " with " + std::to_string(other.rows_) +
                                 "x" + std::to_string(other.cols_));
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& f = at(i, k);
            if (Field::is_zero(f)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Scalar& g = other.at(k, j);
                if (Field::is_zero(g)) continue;
                out.entries_[i * out.cols_ + j] += f * g;
            }
        }
    }
    if (!field_.is_rationals())
        for (auto& e : out.entries_) e = field_.reduce(e);
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    require_same_field(*this, other, "sum");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatchError("sum");
    Matrix out(field_, rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t)
        out.entries_[t] = field_.add(entries_[t], other.entries_[t]);
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    require_same_field(*this, other, "difference");
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatchError("difference");
    Matrix out(field_, rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t)
        out.entries_[t] = field_.sub(entries_[t], other.entries_[t]);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = field_.neg(entries_[t]);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = field_.mul(entries_[t], c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
    return out;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                         std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ShapeMismatchError("submatrix");
    Matrix out(field_, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            out.entries_[i * ncols + j] = at(row0 + i, col0 + j);
    return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& block) {
    if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_)
        throw ShapeMismatchError("set_block");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            entries_[(row0 + i) * cols_ + (col0 + j)] = block.at(i, j);
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "hcat");
    if (a.rows() != b.rows()) throw ShapeMismatchError("hcat row counts differ");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "vcat");
    if (a.cols() != b.cols()) throw ShapeMismatchError("vcat column counts differ");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
        std::size_t sel = r.rows();
        for (std::size_t i = pr; i < r.rows(); ++i)
            if (!Field::is_zero(r.at(i, c))) {
                sel = i;
                break;
            }
        if (sel == r.rows()) continue;
        if (sel != pr)
            for (std::size_t j = c; j < r.cols(); ++j) {
                Scalar tmp = r.at(pr, j);
                r.set(pr, j, r.at(sel, j));
                r.set(sel, j, tmp);
            }
        Scalar piv_inv = f.inv(r.at(pr, c));
        for (std::size_t j = c; j < r.cols(); ++j) r.set(pr, j, f.mul(r.at(pr, j), piv_inv));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pr) continue;
            Scalar factor = r.at(i, c);
            if (Field::is_zero(factor)) continue;
            for (std::size_t j = c; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(pr, j))));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    auto free_cols = complement(pivots, m.cols());
    Matrix k(m.field(), m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        k.set(free_cols[t], t, m.field().one());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            k.set(pivots[i], t, m.field().neg(r.at(i, free_cols[t])));
    }
    return k;
}

Matrix cokernel_projection(const Matrix& m) {
    auto [r, pivots] = rref(m.transpose());
    auto quot = complement(pivots, m.rows());
    Matrix q(m.field(), quot.size(), m.rows());
    for (std::size_t t = 0; t < quot.size(); ++t) {
        q.set(t, quot[t], m.field().one());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            q.set(t, pivots[i], m.field().neg(r.at(i, quot[t])));
    }
    return q;
}

Matrix image_basis(const Matrix& m) {
    auto pivots = rref(m).pivots;
    Matrix out(m.field(), m.rows(), pivots.size());
    for (std::size_t t = 0; t < pivots.size(); ++t)
        for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, t, m.at(i, pivots[t]));
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "solve");
    if (a.rows() != b.rows()) throw ShapeMismatchError("solve row counts differ");
    auto [r, pivots] = rref(hcat(a, b));
    for (std::size_t p : pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[i], j, r.at(i, a.cols() + j));
    return x;
}

Matrix factor_through_cokernel(const Matrix& q, const Matrix& a) {
    require_same_field(q, a, "factor_through_cokernel");
    if (q.cols() != a.cols()) throw ShapeMismatchError("factor_through_cokernel domains differ");
    auto bt = solve(q.transpose(), a.transpose());
    if (!bt) throw NoFactorizationError("map does not vanish on ker of the projection");
    return bt->transpose();
}

Matrix factor_through_kernel(const Matrix& k, const Matrix& a) {
    require_same_field(k, a, "factor_through_kernel");
    if (k.rows() != a.rows()) throw ShapeMismatchError("factor_through_kernel codomains differ");
    auto b = solve(k, a);
    if (!b) throw NoFactorizationError("column leaves the span of the kernel");
    return *b;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "kronecker");
    const Field& f = a.field();
    Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& v = a.at(i, j);
            if (Field::is_zero(v)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.set(i * b.rows() + k, j * b.cols() + l, f.mul(v, b.at(k, l)));
        }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "direct_sum");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

PushoutResult pushout(const Matrix& f, const Matrix& g) {
    require_same_field(f, g, "pushout");
    if (f.cols() != g.cols()) throw ShapeMismatchError("pushout legs must share their domain");
    Matrix q = cokernel_projection(vcat(f, -g));
    return {q.rows(), q.take_columns(0, f.rows()), q.take_columns(f.rows(), g.rows())};
}

bool is_mono(const Matrix& m) { return rank(m) == m.cols(); }
bool is_epi(const Matrix& m) { return rank(m) == m.rows(); }
bool is_iso(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (!is_iso(m)) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix commutation(Field field, std::size_t m, std::size_t n) {
    Matrix tau(field, m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) tau.set(j * m + i, i * n + j, field.one());
    return tau;
}

Matrix rvec(const Matrix& m) {
    Matrix out(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i * m.cols() + j, 0, m.at(i, j));
    return out;
}

Matrix unrvec(Field field, std::size_t rows, std::size_t cols, const Matrix& column) {
    if (column.cols() != 1 || column.rows() != rows * cols) throw ShapeMismatchError("unrvec");
    Matrix out(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.set(i, j, column.at(i * cols + j, 0));
    return out;
}

}  // namespace arrowsmith
