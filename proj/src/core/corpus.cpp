#include "core/corpus.hpp"

#include <stdexcept>

#include "core/errors.hpp"

namespace arrowsmith {

Scalar Rng::scalar(const Field& field) {
    if (field.is_rationals()) return Scalar(int_in(-4, 4));
    return Scalar(static_cast<long>(below(field.characteristic())));
}

AugmentedAlgebra truncated_polynomial(Field field, std::size_t n) {
    if (n < 1) throw std::invalid_argument("truncated_polynomial needs n >= 1");
    std::vector<MultTriple> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) triples.push_back({i, j, i + j, field.one()});
    NonUnitalAlgebra base(field, n, std::move(triples));
    Matrix unit(field, n, 1);
    unit.set(0, 0, field.one());
    Matrix eps(field, 1, n);
    eps.set(0, 0, field.one());
    return AugmentedAlgebra(UnitalAlgebra(std::move(base), std::move(unit)), std::move(eps));
}

AugmentedAlgebra upper_triangular(Field field, std::size_t n) {
    if (n < 1) throw std::invalid_argument("upper_triangular needs n >= 1");
    // basis E_(r,s) for r <= s, ordered by (r, s)
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r; s < n; ++s) basis.emplace_back(r, s);
    auto index = [&](std::size_t r, std::size_t s) {
        // offset of row r = sum_(t<r) (n-t), then s-r
        std::size_t off = r * n - r * (r - 1) / 2;
        return off + (s - r);
    };
    std::vector<MultTriple> triples;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto [r, s] = basis[a];
            auto [t, u] = basis[b];
            if (s == t) triples.push_back({a, b, index(r, u), field.one()});
        }
    NonUnitalAlgebra base(field, basis.size(), std::move(triples));
    Matrix unit(field, basis.size(), 1);
    for (std::size_t r = 0; r < n; ++r) unit.set(index(r, r), 0, field.one());
    Matrix eps(field, 1, basis.size());
    eps.set(0, index(0, 0), field.one());
    return AugmentedAlgebra(UnitalAlgebra(std::move(base), std::move(unit)), std::move(eps));
}

AugmentedAlgebra cyclic_group_algebra(Field field, std::size_t n) {
    if (n < 1) throw std::invalid_argument("cyclic_group_algebra needs n >= 1");
    std::vector<MultTriple> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) triples.push_back({i, j, (i + j) % n, field.one()});
    NonUnitalAlgebra base(field, n, std::move(triples));
    Matrix unit(field, n, 1);
    unit.set(0, 0, field.one());
    Matrix eps(field, 1, n);
    for (std::size_t i = 0; i < n; ++i) eps.set(0, i, field.one());
    return AugmentedAlgebra(UnitalAlgebra(std::move(base), std::move(unit)), std::move(eps));
}

NonUnitalAlgebra square_zero(Field field, std::size_t n) {
    return NonUnitalAlgebra(field, n, {});
}

Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols) {
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.scalar(field));
    return m;
}

Matrix random_invertible(Rng& rng, Field field, std::size_t n) {
    Matrix lower = Matrix::identity(field, n);
    Matrix upper = Matrix::identity(field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower.set(i, j, rng.scalar(field));
            upper.set(j, i, rng.scalar(field));
        }
    Matrix perm(field, n, n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i) perm.set(order[i], i, field.one());
    return perm * lower * upper;
}

AugmentedAlgebra conjugate(const AugmentedAlgebra& b, const Matrix& p) {
    const Field& field = b.field();
    Matrix pinv = inverse(p).value();
    Matrix mult = pinv * b.base().multiplication_matrix() * kronecker(p, p);
    std::vector<MultTriple> triples;
    const std::size_t n = b.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!Field::is_zero(mult.at(k, i * n + j)))
                    triples.push_back({i, j, k, mult.at(k, i * n + j)});
    NonUnitalAlgebra base(field, n, std::move(triples));
    return AugmentedAlgebra(UnitalAlgebra(std::move(base), pinv * b.unit()), b.eps() * p);
}

ArrowObject random_arrow(Rng& rng, Field field, std::size_t max_dim) {
    std::size_t dom = rng.below(max_dim + 1);
    std::size_t cod = rng.below(max_dim + 1);
    return {random_matrix(rng, field, cod, dom)};
}

ArrowObject random_arrow(std::uint64_t seed, Field field, std::size_t max_dim) {
    Rng rng(seed);
    return random_arrow(rng, field, max_dim);
}

ArrowMorphism random_arrow_morphism(Rng& rng, const ArrowObject& a, const ArrowObject& b) {
    Matrix basis = arrow_hom_basis(a, b);
    Matrix coeffs(a.field(), basis.cols(), 1);
    for (std::size_t t = 0; t < basis.cols(); ++t) coeffs.set(t, 0, rng.scalar(a.field()));
    return arrow_hom_from_vector(a, b, basis * coeffs);
}

ChainComplex random_complex(Rng& rng, Field field, int lo, int hi, std::size_t max_dim) {
    if (lo > hi) return ChainComplex::zero(field);
    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(rng.below(max_dim + 1));
    std::map<int, Matrix> diffs;
    Matrix prev(field, 0, dims[0]);  // d_lo
    for (int n = lo + 1; n <= hi; ++n) {
        Matrix kb = kernel_basis(prev);  // inside C_(n-1)
        Matrix coeff = random_matrix(rng, field, kb.cols(), dims[n - lo]);
        Matrix dn = kb * coeff;
        diffs.emplace(n, dn);
        prev = std::move(dn);
    }
    return ChainComplex(field, lo, std::move(dims), std::move(diffs));
}

ChainComplex random_complex(std::uint64_t seed, Field field, int lo, int hi,
                            std::size_t max_dim) {
    Rng rng(seed);
    return random_complex(rng, field, lo, hi, max_dim);
}

ChainMap random_chain_map(Rng& rng, Field field, int lo, int hi, std::size_t max_dim) {
    ChainComplex src = random_complex(rng, field, lo, hi, max_dim);
    ChainComplex dst = random_complex(rng, field, lo, hi, max_dim);
    Matrix basis = chain_hom_basis(src, dst);
    Matrix coeffs(field, basis.cols(), 1);
    for (std::size_t t = 0; t < basis.cols(); ++t) coeffs.set(t, 0, rng.scalar(field));
    return chain_map_from_vector(src, dst, basis * coeffs);
}

ChainMap random_chain_map(std::uint64_t seed, Field field, int lo, int hi, std::size_t max_dim) {
    Rng rng(seed);
    return random_chain_map(rng, field, lo, hi, max_dim);
}

std::vector<AugmentedAlgebra> standard_augmented_corpus() {
    std::vector<AugmentedAlgebra> out;
    for (Field field : {Field::rationals(), Field::prime(5)}) {
        for (std::size_t n = 1; n <= 4; ++n) out.push_back(truncated_polynomial(field, n));
        for (std::size_t n = 1; n <= 3; ++n) out.push_back(upper_triangular(field, n));
        for (std::size_t n = 1; n <= 4; ++n) out.push_back(cyclic_group_algebra(field, n));
    }
    return out;
}

std::vector<NonUnitalAlgebra> standard_nonunital_corpus() {
    Field q = Field::rationals(), f5 = Field::prime(5);
    std::vector<NonUnitalAlgebra> out;
    out.push_back(square_zero(q, 0));
    out.push_back(square_zero(q, 1));
    out.push_back(square_zero(q, 3));
    out.push_back(square_zero(f5, 2));
    out.push_back(square_zero(f5, 4));
    out.push_back(augmentation_kernel(truncated_polynomial(q, 3)).first);
    out.push_back(augmentation_kernel(truncated_polynomial(f5, 4)).first);
    out.push_back(augmentation_kernel(upper_triangular(q, 2)).first);
    out.push_back(augmentation_kernel(upper_triangular(f5, 3)).first);
    out.push_back(augmentation_kernel(cyclic_group_algebra(q, 3)).first);
    out.push_back(augmentation_kernel(cyclic_group_algebra(f5, 4)).first);
    return out;
}

std::vector<DGAlgebraNU> standard_dg_corpus() {
    Field q = Field::rationals(), f5 = Field::prime(5);
    std::vector<DGAlgebraNU> out;
    // square-zero in degree 1: free generators of odd degree
    for (auto [field, n] :
         {std::pair{q, std::size_t{1}}, {q, std::size_t{2}}, {f5, std::size_t{1}}}) {
        ChainComplex carrier = ChainComplex::concentrated(field, 1, n);
        ChainMap mult = ChainMap::zero(tensor_complex(carrier, carrier), carrier);
        out.push_back({std::move(carrier), std::move(mult)});
    }
    for (const auto& a : standard_nonunital_corpus()) out.push_back(dg_from_algebra(a));
    return out;
}

}  // namespace arrowsmith
