#include "core/algebra.hpp"

#include <algorithm>
#include <string>

#include "core/errors.hpp"

namespace arrowsmith {

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Matrix basis_vector(Field f, std::size_t dim, std::size_t i) {
    Matrix e(f, dim, 1);
    e.set(i, 0, f.one());
    return e;
}

}  // namespace

NonUnitalAlgebra::NonUnitalAlgebra(Field field, std::size_t dim, std::vector<MultTriple> triples)
    : field_(field), dim_(dim), triples_(std::move(triples)), mult_matrix_(field, dim, dim * dim) {
    for (auto& t : triples_) {
        if (t.i >= dim_ || t.j >= dim_ || t.k >= dim_)
            throw ShapeMismatchError("structure constant index out of range at " +
                                     triple_str(t.i, t.j, t.k));
        t.c = field_.reduce(t.c);
    }
    std::sort(triples_.begin(), triples_.end(), [](const MultTriple& a, const MultTriple& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    // merge duplicates, drop zeros
    std::vector<MultTriple> merged;
    for (const auto& t : triples_) {
        if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j &&
            merged.back().k == t.k)
            merged.back().c = field_.add(merged.back().c, t.c);
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const MultTriple& t) { return Field::is_zero(t.c); });
    triples_ = std::move(merged);
    for (const auto& t : triples_) mult_matrix_.set(t.k, t.i * dim_ + t.j, t.c);
}

Matrix NonUnitalAlgebra::multiply(const Matrix& x, const Matrix& y) const {
    return mult_matrix_ * kronecker(x, y);
}

Report check_associativity(const NonUnitalAlgebra& a) {
    Report rep("associativity");
    const std::size_t n = a.dim();
    bool all_ok = true;
    for (std::size_t i = 0; i < n && all_ok; ++i) {
        Matrix ei = basis_vector(a.field(), n, i);
        for (std::size_t j = 0; j < n && all_ok; ++j) {
            Matrix ej = basis_vector(a.field(), n, j);
            Matrix eij = a.multiply(ei, ej);
            for (std::size_t l = 0; l < n; ++l) {
                Matrix el = basis_vector(a.field(), n, l);
                if (!(a.multiply(eij, el) == a.multiply(ei, a.multiply(ej, el)))) {
                    rep.add("associative", false,
                            "(e_i e_j) e_l != e_i (e_j e_l) at " + triple_str(i, j, l));
                    all_ok = false;
                    break;
                }
            }
        }
    }
    if (all_ok) rep.add("associative", true);
    return rep;
}

bool is_associative(const NonUnitalAlgebra& a) { return check_associativity(a).ok(); }

bool is_multiplicative(const AlgebraMorphism& m) {
    // phi(e_i e_j) = phi(e_i) phi(e_j), all basis pairs at once:
    // matrix * mult_src = mult_dst * (matrix (x) matrix).
    return m.matrix * m.src.multiplication_matrix() ==
           m.dst.multiplication_matrix() * kronecker(m.matrix, m.matrix);
}

bool preserves_unit(const Matrix& unit_src, const Matrix& unit_dst, const Matrix& m) {
    return m * unit_src == unit_dst;
}

bool preserves_augmentation(const Matrix& eps_src, const Matrix& eps_dst, const Matrix& m) {
    return eps_dst * m == eps_src;
}

Report validate(const NonUnitalAlgebra& a) {
    Report rep("non-unital algebra");
    rep.absorb("", check_associativity(a));
    return rep;
}

Report validate(const UnitalAlgebra& a) {
    Report rep("unital algebra");
    rep.absorb("", check_associativity(a.base()));
    const std::size_t n = a.dim();
    bool unital = true;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ei = basis_vector(a.field(), n, i);
        if (!(a.base().multiply(a.unit(), ei) == ei) ||
            !(a.base().multiply(ei, a.unit()) == ei)) {
            rep.add("unit", false, "e x != x or x e != x at basis " + std::to_string(i));
            unital = false;
            break;
        }
    }
    if (unital) rep.add("unit", true);
    return rep;
}

Report validate(const AugmentedAlgebra& b) {
    Report rep("augmented algebra");
    rep.absorb("", validate(b.alg()));
    const std::size_t n = b.dim();
    bool mult_ok = true;
    for (std::size_t i = 0; i < n && mult_ok; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix ei = basis_vector(b.field(), n, i), ej = basis_vector(b.field(), n, j);
            Scalar lhs = (b.eps() * b.base().multiply(ei, ej)).at(0, 0);
            Scalar rhs = b.field().mul(b.eps().at(0, i), b.eps().at(0, j));
            if (lhs != rhs) {
                rep.add("augmentation multiplicative", false,
                        "eps(e_i e_j) != eps(e_i) eps(e_j) at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
                mult_ok = false;
                break;
            }
        }
    if (mult_ok) rep.add("augmentation multiplicative", true);
    rep.add("augmentation splits unit", (b.eps() * b.unit()).is_identity(),
            "eps(e) != 1");
    return rep;
}

UnitalAlgebra::UnitalAlgebra(NonUnitalAlgebra base, Matrix unit)
    : base_(std::move(base)), unit_(std::move(unit)) {
    if (unit_.rows() != base_.dim() || unit_.cols() != 1)
        throw ShapeMismatchError("unit vector has wrong shape");
}

AugmentedAlgebra::AugmentedAlgebra(UnitalAlgebra alg, Matrix eps)
    : alg_(std::move(alg)), eps_(std::move(eps)) {
    if (eps_.rows() != 1 || eps_.cols() != alg_.dim())
        throw ShapeMismatchError("augmentation functional has wrong shape");
}

AugmentedAlgebra unitalize(const NonUnitalAlgebra& a) {
    Report assoc = check_associativity(a);
    if (!assoc.ok()) throw NotAssociativeError(assoc.records().front().witness);
    const std::size_t n = a.dim();
    const Field& f = a.field();
    std::vector<MultTriple> triples;
    triples.push_back({0, 0, 0, f.one()});
    for (std::size_t i = 0; i < n; ++i) {
        triples.push_back({0, i + 1, i + 1, f.one()});
        triples.push_back({i + 1, 0, i + 1, f.one()});
    }
    for (const auto& t : a.triples()) triples.push_back({t.i + 1, t.j + 1, t.k + 1, t.c});
    NonUnitalAlgebra carrier(f, n + 1, std::move(triples));
    Matrix unit = basis_vector(f, n + 1, 0);
    Matrix eps(f, 1, n + 1);
    eps.set(0, 0, f.one());
    return AugmentedAlgebra(UnitalAlgebra(std::move(carrier), std::move(unit)), std::move(eps));
}

std::pair<NonUnitalAlgebra, AlgebraMorphism> augmentation_kernel(const AugmentedAlgebra& b) {
    const Field& f = b.field();
    Matrix incl = kernel_basis(b.eps());  // dim x (dim-1)
    const std::size_t m = incl.cols();
    std::vector<MultTriple> triples;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Matrix prod = b.base().multiply(incl.col(i), incl.col(j));
            Matrix coords = factor_through_kernel(incl, prod);
            for (std::size_t k = 0; k < m; ++k)
                if (!Field::is_zero(coords.at(k, 0))) triples.push_back({i, j, k, coords.at(k, 0)});
        }
    NonUnitalAlgebra kernel(f, m, std::move(triples));
    AlgebraMorphism inclusion{kernel, b.base(), incl};
    return {std::move(kernel), std::move(inclusion)};
}

AlgebraMorphism roundtrip_nu(const NonUnitalAlgebra& a) {
    auto [kernel, incl] = augmentation_kernel(unitalize(a));
    return {a, kernel, Matrix::identity(a.field(), a.dim())};
}

AlgebraMorphism roundtrip_aug(const AugmentedAlgebra& b) {
    auto [kernel, incl] = augmentation_kernel(b);
    NonUnitalAlgebra src = unitalize(kernel).base();
    return {src, b.base(), hcat(b.unit(), incl.matrix)};
}

Report roundtrip_nu_report(const NonUnitalAlgebra& a) {
    Report rep("roundtrip A -> Ker(eps of V+A)");
    AlgebraMorphism iso = roundtrip_nu(a);
    rep.add("coordinates identical", iso.matrix.is_identity(), "kernel basis moved");
    rep.add("tables identical", iso.src == iso.dst, "structure constants differ");
    rep.add("invertible", is_iso(iso.matrix));
    rep.add("multiplicative", is_multiplicative(iso));
    return rep;
}

Report roundtrip_aug_report(const AugmentedAlgebra& b) {
    Report rep("roundtrip V+Ker(eps) -> B");
    auto [kernel, incl] = augmentation_kernel(b);
    rep.add("kernel dimension", kernel.dim() + 1 == b.dim(), "dim Ker(eps) != dim B - 1");
    AugmentedAlgebra source = unitalize(kernel);
    AlgebraMorphism iso = roundtrip_aug(b);
    rep.add("invertible", is_iso(iso.matrix));
    rep.add("multiplicative", is_multiplicative(iso));
    rep.add("preserves unit", preserves_unit(source.unit(), b.unit(), iso.matrix));
    rep.add("preserves augmentation", preserves_augmentation(source.eps(), b.eps(), iso.matrix));
    return rep;
}

}  // namespace arrowsmith
