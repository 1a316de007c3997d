#pragma once

#include <optional>

#include "core/matrix.hpp"

namespace arrowsmith {

/// An object of the arrow category of finite-dimensional vector spaces:
/// a linear map between chosen-basis spaces k^dom -> k^cod.
struct ArrowObject {
    Matrix map;  // cod_dim x dom_dim

    std::size_t dom_dim() const { return map.cols(); }
    std::size_t cod_dim() const { return map.rows(); }
    const Field& field() const { return map.field(); }

    bool operator==(const ArrowObject&) const = default;
};

/// A commuting square: comp0 between domains, comp1 between codomains,
/// with dst.map * comp0 == comp1 * src.map.
struct ArrowMorphism {
    ArrowObject src, dst;
    Matrix comp0, comp1;

    bool commutes() const { return dst.map * comp0 == comp1 * src.map; }
    bool is_isomorphism() const { return is_iso(comp0) && is_iso(comp1); }

    bool operator==(const ArrowMorphism&) const = default;
};

ArrowMorphism identity_morphism(const ArrowObject& a);
ArrowMorphism compose(const ArrowMorphism& outer, const ArrowMorphism& inner);

/// Units of the two monoidal structures: id_k for the tensor structure,
/// 0 -> k for the pushout-product structure.
ArrowObject unit_tensor(Field field);
ArrowObject unit_box(Field field);

ArrowObject tensor_arrow(const ArrowObject& f, const ArrowObject& g);

struct BoxProduct {
    ArrowObject arrow;  // induced map P -> X1 (x) Y1
    Matrix from01;      // X0 (x) Y1 -> P
    Matrix from10;      // X1 (x) Y0 -> P
};

/// Pushout product f [] g. The domain P is the pushout of
/// id (x) g : X0 (x) Y0 -> X0 (x) Y1 against f (x) id : X0 (x) Y0 -> X1 (x) Y0.
BoxProduct pushout_product(const ArrowObject& f, const ArrowObject& g);

/// Functorial action of [] on squares.
ArrowMorphism box_morphism(const ArrowMorphism& alpha, const ArrowMorphism& beta);

/// The canonical symmetry f [] g -> g [] f (both components invertible).
ArrowMorphism box_swap(const ArrowObject& f, const ArrowObject& g);

ArrowObject cok(const ArrowObject& f);  // X1 -> Coker(f)
ArrowObject ker(const ArrowObject& f);  // Ker(f) -> X0

ArrowMorphism cok_morphism(const ArrowMorphism& alpha);
ArrowMorphism ker_morphism(const ArrowMorphism& alpha);

/// Unit f -> ker(cok(f)) and counit cok(ker(g)) -> g of the cok -| ker
/// adjunction, realized as explicit squares.
ArrowMorphism adjunction_unit(const ArrowObject& f);
ArrowMorphism adjunction_counit(const ArrowObject& g);

/// Adjoint transposes: Hom(cok f, g) <-> Hom(f, ker g), mutually inverse.
ArrowMorphism adjoint_transpose_fwd(const ArrowObject& f, const ArrowObject& g,
                                    const ArrowMorphism& phi);
ArrowMorphism adjoint_transpose_bwd(const ArrowObject& f, const ArrowObject& g,
                                    const ArrowMorphism& psi);

/// cok(f [] g) -> cok(f) (x) cok(g).  Throws ComparisonNotIsoError if a
/// component fails to be invertible (never expected).
ArrowMorphism strong_monoidal_comparison(const ArrowObject& f, const ArrowObject& g);

/// ker(f) [] ker(g) -> ker(f (x) g).  Well-formed but usually not an iso.
ArrowMorphism lax_comparison(const ArrowObject& f, const ArrowObject& g);

ArrowObject im(const ArrowObject& f);    // ker . cok
ArrowObject coim(const ArrowObject& f);  // cok . ker

struct ImageLocalization {
    ArrowObject image;
    ArrowMorphism unit;  // f -> im(f)
};
ImageLocalization l_im(const ArrowObject& f);

/// Explicit isomorphism witness f ~= g, or nullopt.  Arrows between
/// based spaces are isomorphic iff the dimension pair and the rank agree;
/// the witness is assembled from rref normal forms, checked, and returned.
std::optional<ArrowMorphism> arrow_iso(const ArrowObject& f, const ArrowObject& g);

/// Basis of the space of squares a -> b.  Columns are stacked
/// (rvec comp0 | rvec comp1) coordinate vectors.
Matrix arrow_hom_basis(const ArrowObject& a, const ArrowObject& b);
ArrowMorphism arrow_hom_from_vector(const ArrowObject& a, const ArrowObject& b,
                                    const Matrix& coords);

}  // namespace arrowsmith
