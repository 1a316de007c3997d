#include "core/arrow.hpp"

#include <stdexcept>

#include "core/errors.hpp"

namespace arrowsmith {

namespace {

void require_square(const ArrowMorphism& m, const char* who) {
    if (!m.commutes()) throw NoFactorizationError(std::string(who) + ": square does not commute");
}

}  // namespace

ArrowMorphism identity_morphism(const ArrowObject& a) {
    return {a, a, Matrix::identity(a.field(), a.dom_dim()), Matrix::identity(a.field(), a.cod_dim())};
}

ArrowMorphism compose(const ArrowMorphism& outer, const ArrowMorphism& inner) {
    if (!(inner.dst == outer.src)) throw ShapeMismatchError("arrow morphisms do not compose");
    return {inner.src, outer.dst, outer.comp0 * inner.comp0, outer.comp1 * inner.comp1};
}

ArrowObject unit_tensor(Field field) { return {Matrix::identity(field, 1)}; }

ArrowObject unit_box(Field field) { return {Matrix(field, 1, 0)}; }

ArrowObject tensor_arrow(const ArrowObject& f, const ArrowObject& g) {
    return {kronecker(f.map, g.map)};
}

BoxProduct pushout_product(const ArrowObject& f, const ArrowObject& g) {
    const Field& fld = f.field();
    if (!(fld == g.field())) throw FieldMismatchError("pushout_product");
    Matrix to01 = kronecker(Matrix::identity(fld, f.dom_dim()), g.map);  // X0Y0 -> X0Y1
    Matrix to10 = kronecker(f.map, Matrix::identity(fld, g.dom_dim()));  // X0Y0 -> X1Y0
    PushoutResult po = pushout(to01, to10);
    Matrix present = hcat(po.into_left, po.into_right);
    Matrix target = hcat(kronecker(f.map, Matrix::identity(fld, g.cod_dim())),
                         kronecker(Matrix::identity(fld, f.cod_dim()), g.map));
    Matrix induced = factor_through_cokernel(present, target);
    return {ArrowObject{induced}, po.into_left, po.into_right};
}

ArrowMorphism box_morphism(const ArrowMorphism& alpha, const ArrowMorphism& beta) {
    BoxProduct src = pushout_product(alpha.src, beta.src);
    BoxProduct dst = pushout_product(alpha.dst, beta.dst);
    Matrix comp1 = kronecker(alpha.comp1, beta.comp1);
    Matrix on01 = dst.from01 * kronecker(alpha.comp0, beta.comp1);
    Matrix on10 = dst.from10 * kronecker(alpha.comp1, beta.comp0);
    Matrix comp0 = factor_through_cokernel(hcat(src.from01, src.from10), hcat(on01, on10));
    return {src.arrow, dst.arrow, comp0, comp1};
}

ArrowMorphism box_swap(const ArrowObject& f, const ArrowObject& g) {
    const Field& fld = f.field();
    BoxProduct fg = pushout_product(f, g);
    BoxProduct gf = pushout_product(g, f);
    Matrix comp1 = commutation(fld, f.cod_dim(), g.cod_dim());
    Matrix on01 = gf.from10 * commutation(fld, f.dom_dim(), g.cod_dim());
    Matrix on10 = gf.from01 * commutation(fld, f.cod_dim(), g.dom_dim());
    Matrix comp0 = factor_through_cokernel(hcat(fg.from01, fg.from10), hcat(on01, on10));
    return {fg.arrow, gf.arrow, comp0, comp1};
}

ArrowObject cok(const ArrowObject& f) { return {cokernel_projection(f.map)}; }

ArrowObject ker(const ArrowObject& f) { return {kernel_basis(f.map)}; }

ArrowMorphism cok_morphism(const ArrowMorphism& alpha) {
    require_square(alpha, "cok_morphism");
    ArrowObject src = cok(alpha.src), dst = cok(alpha.dst);
    Matrix comp1 = factor_through_cokernel(src.map, dst.map * alpha.comp1);
    return {src, dst, alpha.comp1, comp1};
}

ArrowMorphism ker_morphism(const ArrowMorphism& alpha) {
    require_square(alpha, "ker_morphism");
    ArrowObject src = ker(alpha.src), dst = ker(alpha.dst);
    Matrix comp0 = factor_through_kernel(dst.map, alpha.comp0 * src.map);
    return {src, dst, comp0, alpha.comp0};
}

ArrowMorphism adjunction_unit(const ArrowObject& f) {
    ArrowObject image = ker(cok(f));
    Matrix comp0 = factor_through_kernel(image.map, f.map);
    return {f, image, comp0, Matrix::identity(f.field(), f.cod_dim())};
}

ArrowMorphism adjunction_counit(const ArrowObject& g) {
    ArrowObject coimage = cok(ker(g));
    Matrix comp1 = factor_through_cokernel(coimage.map, g.map);
    return {coimage, g, Matrix::identity(g.field(), g.dom_dim()), comp1};
}

ArrowMorphism adjoint_transpose_fwd(const ArrowObject& f, const ArrowObject& g,
                                    const ArrowMorphism& phi) {
    if (!(phi.src == cok(f)) || !(phi.dst == g))
        throw ShapeMismatchError("adjoint_transpose_fwd expects phi : cok(f) -> g");
    require_square(phi, "adjoint_transpose_fwd");
    ArrowObject kg = ker(g);
    Matrix comp0 = factor_through_kernel(kg.map, phi.comp0 * f.map);
    return {f, kg, comp0, phi.comp0};
}

ArrowMorphism adjoint_transpose_bwd(const ArrowObject& f, const ArrowObject& g,
                                    const ArrowMorphism& psi) {
    if (!(psi.src == f) || !(psi.dst == ker(g)))
        throw ShapeMismatchError("adjoint_transpose_bwd expects psi : f -> ker(g)");
    require_square(psi, "adjoint_transpose_bwd");
    ArrowObject cf = cok(f);
    Matrix comp1 = factor_through_cokernel(cf.map, g.map * psi.comp1);
    return {cf, g, psi.comp1, comp1};
}

ArrowMorphism strong_monoidal_comparison(const ArrowObject& f, const ArrowObject& g) {
    BoxProduct box = pushout_product(f, g);
    ArrowObject src = cok(box.arrow);
    ArrowObject dst = tensor_arrow(cok(f), cok(g));
    Matrix comp1 = factor_through_cokernel(src.map, dst.map);
    ArrowMorphism cmp{src, dst, Matrix::identity(f.field(), src.dom_dim()), comp1};
    if (!cmp.is_isomorphism())
        throw ComparisonNotIsoError("cok(f [] g) -> cok(f) (x) cok(g)");
    return cmp;
}

ArrowMorphism lax_comparison(const ArrowObject& f, const ArrowObject& g) {
    const Field& fld = f.field();
    ArrowObject kf = ker(f), kg = ker(g);
    BoxProduct box = pushout_product(kf, kg);
    ArrowObject dst = ker(tensor_arrow(f, g));
    Matrix joint = hcat(kronecker(kf.map, Matrix::identity(fld, g.dom_dim())),
                        kronecker(Matrix::identity(fld, f.dom_dim()), kg.map));
    Matrix into_kernel = factor_through_kernel(dst.map, joint);
    Matrix comp0 = factor_through_cokernel(hcat(box.from01, box.from10), into_kernel);
    return {box.arrow, dst, comp0, Matrix::identity(fld, f.dom_dim() * g.dom_dim())};
}

ArrowObject im(const ArrowObject& f) { return ker(cok(f)); }

ArrowObject coim(const ArrowObject& f) { return cok(ker(f)); }

ImageLocalization l_im(const ArrowObject& f) { return {im(f), adjunction_unit(f)}; }

namespace {

// Invertible (E, P) with E * m * P = [[I_r, 0], [0, 0]].
struct NormalForm {
    Matrix row_ops;    // E
    Matrix basis;      // P: pivot unit columns then kernel basis
};

NormalForm normal_form(const Matrix& m) {
    const Field& fld = m.field();
    auto [r, pivots] = rref(hcat(m, Matrix::identity(fld, m.rows())));
    Matrix row_ops = r.take_columns(m.cols(), m.rows());
    Matrix kb = kernel_basis(m);
    Matrix basis(fld, m.cols(), m.cols());
    std::size_t t = 0;
    for (std::size_t p : pivots) {
        if (p >= m.cols()) break;
        basis.set(p, t, fld.one());
        ++t;
    }
    basis.set_block(0, t, kb);
    return {row_ops, basis};
}

}  // namespace

std::optional<ArrowMorphism> arrow_iso(const ArrowObject& f, const ArrowObject& g) {
    if (!(f.field() == g.field())) return std::nullopt;
    if (f.dom_dim() != g.dom_dim() || f.cod_dim() != g.cod_dim()) return std::nullopt;
    if (rank(f.map) != rank(g.map)) return std::nullopt;
    NormalForm nf = normal_form(f.map), ng = normal_form(g.map);
    Matrix comp0 = ng.basis * inverse(nf.basis).value();
    Matrix comp1 = inverse(ng.row_ops).value() * nf.row_ops;
    ArrowMorphism witness{f, g, comp0, comp1};
    if (!witness.commutes() || !witness.is_isomorphism())
        throw std::logic_error("arrow_iso produced a bad witness");
    return witness;
}

Matrix arrow_hom_basis(const ArrowObject& a, const ArrowObject& b) {
    const Field& fld = a.field();
    // Unknowns: rvec(comp0) then rvec(comp1); constraint b.map comp0 = comp1 a.map.
    Matrix lhs = kronecker(b.map, Matrix::identity(fld, a.dom_dim()));
    Matrix rhs = kronecker(Matrix::identity(fld, b.cod_dim()), a.map.transpose());
    return kernel_basis(hcat(lhs, -rhs));
}

ArrowMorphism arrow_hom_from_vector(const ArrowObject& a, const ArrowObject& b,
                                    const Matrix& coords) {
    std::size_t n0 = b.dom_dim() * a.dom_dim();
    Matrix comp0 = unrvec(a.field(), b.dom_dim(), a.dom_dim(), coords.submatrix(0, 0, n0, 1));
    Matrix comp1 = unrvec(a.field(), b.cod_dim(), a.cod_dim(),
                          coords.submatrix(n0, 0, b.cod_dim() * a.cod_dim(), 1));
    return {a, b, comp0, comp1};
}

}  // namespace arrowsmith
