#include "core/smith.hpp"

#include <string>

#include "core/errors.hpp"

namespace arrowsmith {

namespace {

// First differing entry, with the column decoded as a tensor basis index.
std::string diff_witness(const Matrix& got, const Matrix& want,
                         const std::vector<std::size_t>& col_shape) {
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j) {
            if (got.at(i, j) == want.at(i, j)) continue;
            std::string basis;
            std::size_t rem = j;
            for (std::size_t t = col_shape.size(); t-- > 0;) {
                std::size_t idx = col_shape[t] == 0 ? 0 : rem % col_shape[t];
                rem /= col_shape[t] == 0 ? 1 : col_shape[t];
                basis = std::to_string(idx) + (basis.empty() ? "" : "(x)" + basis);
            }
            return "basis e_" + basis + ", output coordinate " + std::to_string(i);
        }
    return "";
}

bool check_equal(Report& rep, const std::string& name, const Matrix& got, const Matrix& want,
                 const std::vector<std::size_t>& col_shape) {
    bool ok = got == want;
    rep.add(name, ok, ok ? "" : diff_witness(got, want, col_shape));
    return ok;
}

}  // namespace

SmithIdealVect smith_from_augmented(const AugmentedAlgebra& b) {
    const Field& fld = b.field();
    const std::size_t n = b.dim();
    Matrix incl = kernel_basis(b.eps());
    ArrowObject j{incl};

    // Ideal closure: eps kills products with one factor in the kernel.
    const Matrix& mult = b.base().multiplication_matrix();
    Matrix eye = Matrix::identity(fld, n);
    if (!(b.eps() * (mult * kronecker(incl, eye))).is_zero() ||
        !(b.eps() * (mult * kronecker(eye, incl))).is_zero())
        throw NoFactorizationError("augmentation kernel is not closed under multiplication");

    BoxProduct box = pushout_product(j, j);
    Matrix mu0 = factor_through_kernel(incl, mult * box.arrow.map);
    ArrowMorphism mu{box.arrow, j, mu0, mult};

    ArrowObject e = unit_box(fld);
    ArrowMorphism eta{e, j, Matrix(fld, incl.cols(), 0), b.unit()};
    return {j, mu, eta};
}

Report verify_smith_ideal(const SmithIdealVect& s, bool check_commutative) {
    Report rep("smith ideal");
    const Field& fld = s.j.field();
    const std::size_t i_dim = s.j.dom_dim();
    const std::size_t r_dim = s.j.cod_dim();
    Matrix id_i = Matrix::identity(fld, i_dim);
    Matrix id_r = Matrix::identity(fld, r_dim);

    BoxProduct box = pushout_product(s.j, s.j);
    bool shapes_ok = s.mu.src == box.arrow && s.mu.dst == s.j &&
                     s.eta.src == unit_box(fld) && s.eta.dst == s.j;
    rep.add("shapes", shapes_ok, "mu/eta not typed against j [] j -> j and unit -> j");
    if (!shapes_ok) return rep;

    rep.add("mu square commutes", s.mu.commutes(),
            diff_witness(s.j.map * s.mu.comp0, s.mu.comp1 * box.arrow.map, {box.arrow.dom_dim()}));
    rep.add("eta square commutes", s.eta.commutes(), "unit square");

    // Strict unitors: the ambient conventions make (0 -> k) [] j equal j
    // on the nose, with the structure map from k (x) I the identity.
    BoxProduct left = pushout_product(unit_box(fld), s.j);
    BoxProduct right = pushout_product(s.j, unit_box(fld));
    rep.add("strict unitors", left.arrow == s.j && left.from10.is_identity() &&
                                  right.arrow == s.j && right.from01.is_identity(),
            "pushout-product units are not strict (internal convention bug)");

    check_equal(rep, "left unit law (ideal part)",
                s.mu.comp0 * (box.from10 * kronecker(s.eta.comp1, id_i)), id_i, {i_dim});
    check_equal(rep, "left unit law (ring part)", s.mu.comp1 * kronecker(s.eta.comp1, id_r), id_r,
                {r_dim});
    check_equal(rep, "right unit law (ideal part)",
                s.mu.comp0 * (box.from01 * kronecker(id_i, s.eta.comp1)), id_i, {i_dim});
    check_equal(rep, "right unit law (ring part)", s.mu.comp1 * kronecker(id_r, s.eta.comp1), id_r,
                {r_dim});

    // Corner injections of ((j [] j) [] j) are jointly epimorphic, which
    // legitimizes checking associativity on the three corners only.
    BoxProduct cube = pushout_product(box.arrow, s.j);
    Matrix inj1 = cube.from01 * kronecker(box.from01, id_r);  // I (x) R (x) R
    Matrix inj2 = cube.from01 * kronecker(box.from10, id_r);  // R (x) I (x) R
    const Matrix& inj3 = cube.from10;                         // R (x) R (x) I
    rep.add("cube injections jointly epi",
            rank(hcat(hcat(inj1, inj2), inj3)) == cube.arrow.dom_dim(),
            "corner injections do not cover dom((j[]j)[]j)");

    Matrix on01 = s.mu.comp0 * box.from01;  // I (x) R -> I
    Matrix on10 = s.mu.comp0 * box.from10;  // R (x) I -> I
    check_equal(rep, "associativity corner I(x)R(x)R", on01 * kronecker(on01, id_r),
                on01 * kronecker(id_i, s.mu.comp1), {i_dim, r_dim, r_dim});
    check_equal(rep, "associativity corner R(x)I(x)R", on01 * kronecker(on10, id_r),
                on10 * kronecker(id_r, on01), {r_dim, i_dim, r_dim});
    check_equal(rep, "associativity corner R(x)R(x)I", on10 * kronecker(s.mu.comp1, id_i),
                on10 * kronecker(id_r, on10), {r_dim, r_dim, i_dim});
    check_equal(rep, "associativity (ring part)", s.mu.comp1 * kronecker(s.mu.comp1, id_r),
                s.mu.comp1 * kronecker(id_r, s.mu.comp1), {r_dim, r_dim, r_dim});

    if (check_commutative) {
        ArrowMorphism swap = box_swap(s.j, s.j);
        check_equal(rep, "commutativity (ideal part)", s.mu.comp0 * swap.comp0, s.mu.comp0,
                    {box.arrow.dom_dim()});
        check_equal(rep, "commutativity (ring part)", s.mu.comp1 * swap.comp1, s.mu.comp1,
                    {r_dim, r_dim});
    }
    return rep;
}

bool is_unit_cokernel(const SmithIdealVect& s) {
    Matrix q = cokernel_projection(s.j.map);
    if (q.rows() != 1) return false;
    Matrix lam = q * s.eta.comp1;  // 1x1
    if (Field::is_zero(lam.at(0, 0))) return false;
    Matrix eps = q.scaled(s.j.field().inv(lam.at(0, 0)));
    return eps * s.mu.comp1 == kronecker(eps, eps);
}

AugmentedAlgebra cok_smith(const SmithIdealVect& s) {
    if (!is_unit_cokernel(s))
        throw NotUnitCokernelError("cok(j) is not a one-dimensional augmentation");
    const Field& fld = s.j.field();
    const std::size_t n = s.j.cod_dim();
    std::vector<MultTriple> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = s.mu.comp1.at(k, i * n + j);
                if (!Field::is_zero(c)) triples.push_back({i, j, k, c});
            }
    NonUnitalAlgebra carrier(fld, n, std::move(triples));
    Matrix q = cokernel_projection(s.j.map);
    Matrix lam = q * s.eta.comp1;
    Matrix eps = q.scaled(fld.inv(lam.at(0, 0)));
    return AugmentedAlgebra(UnitalAlgebra(std::move(carrier), s.eta.comp1), std::move(eps));
}

SmithIdealVect nu_algebra_as_smith(const NonUnitalAlgebra& a) {
    SmithIdealVect s = smith_from_augmented(unitalize(a));
    if (!is_mono(s.j.map) || !adjunction_unit(s.j).is_isomorphism())
        throw std::logic_error("constructed ideal is not in the image localization");
    return s;
}

Report smith_agreement_report(const SmithIdealVect& s) {
    Report rep("smith ideal characterizations");
    rep.absorb("monoid.", verify_smith_ideal(s));
    rep.add("unit cokernel", is_unit_cokernel(s), "cok(j) is not an augmentation");
    rep.add("localized: unit j -> im(j) iso", adjunction_unit(s.j).is_isomorphism(),
            "j is not in the image localization");
    if (!rep.ok()) return rep;

    AugmentedAlgebra b = cok_smith(s);
    rep.absorb("cok_smith.", validate(b));
    SmithIdealVect s2 = smith_from_augmented(b);

    // The comparison j -> j' over the identity of R.
    Matrix change = factor_through_kernel(s2.j.map, s.j.map);
    rep.add("kernel-functor image reached", is_iso(change),
            "Ker(eps) and I differ as subspaces of R");
    if (!is_iso(change)) return rep;

    ArrowMorphism alpha{s.j, s2.j, change, Matrix::identity(s.j.field(), s.j.cod_dim())};
    rep.add("comparison square commutes", alpha.commutes(), "change of basis misaligned");
    ArrowMorphism boxed = box_morphism(alpha, alpha);
    rep.add("comparison respects mu", compose(alpha, s.mu) == compose(s2.mu, boxed),
            "multiplications disagree under the comparison");
    rep.add("comparison respects eta", compose(alpha, s.eta) == s2.eta,
            "units disagree under the comparison");
    return rep;
}

}  // namespace arrowsmith
