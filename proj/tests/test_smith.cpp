#include "doctest.h"

#include "core/corpus.hpp"
#include "core/errors.hpp"
#include "core/smith.hpp"

using namespace arrowsmith;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

// the []-unit (0 -> k) with its canonical monoid structure
SmithIdealVect box_unit_ideal(Field field) {
    ArrowObject e = unit_box(field);
    BoxProduct ee = pushout_product(e, e);
    REQUIRE(ee.arrow == e);  // strict unitality
    ArrowMorphism mu = identity_morphism(e);
    return {e, mu, identity_morphism(e)};
}

SmithIdealVect corrupt_mu(SmithIdealVect s, Rng& rng) {
    bool hit_comp1 = s.mu.comp0.rows() * s.mu.comp0.cols() == 0 || rng.below(2) == 0;
    Matrix& target = hit_comp1 ? s.mu.comp1 : s.mu.comp0;
    std::size_t i = rng.below(target.rows());
    std::size_t j = rng.below(target.cols());
    const Field& f = target.field();
    Scalar delta = f.is_rationals() ? Scalar(1 + (long)rng.below(3))
                                    : Scalar(1 + (long)rng.below(f.characteristic() - 1));
    target.set(i, j, f.add(target.at(i, j), delta));
    return s;
}
}  // namespace

TEST_CASE("smith ideal from k[x]/(x^3)") {
    AugmentedAlgebra b = truncated_polynomial(Q, 3);
    SmithIdealVect s = smith_from_augmented(b);
    CHECK(s.j.dom_dim() == 2);  // span(x, x^2)
    CHECK(s.j.cod_dim() == 3);
    Report rep = verify_smith_ideal(s);
    CHECK(rep.ok());

    // the ideal multiplication table: x*x = x^2, everything else 0
    // (in kernel coordinates e_0 = x, e_1 = x^2)
    Matrix x = Matrix::from_rows(Q, {{1}, {0}});
    Matrix prod = s.mu.comp0 * (pushout_product(s.j, s.j).from01 *
                                kronecker(x, s.j.map * x));
    CHECK(prod == Matrix::from_rows(Q, {{0}, {1}}));

    CHECK(is_unit_cokernel(s));
    CHECK(cok_smith(s) == b);
}

TEST_CASE("the box unit is a Smith ideal") {
    SmithIdealVect s = box_unit_ideal(Q);
    CHECK(verify_smith_ideal(s).ok());
    CHECK(is_unit_cokernel(s));
    AugmentedAlgebra b = cok_smith(s);
    CHECK(b.dim() == 1);
    CHECK(validate(b).ok());

    // the base field itself produces the box unit
    SmithIdealVect t = smith_from_augmented(truncated_polynomial(Q, 1));
    CHECK(t.j == unit_box(Q));
    CHECK(verify_smith_ideal(t).ok());
}

TEST_CASE("verify_smith_ideal rejects corrupted multiplications") {
    AugmentedAlgebra b = truncated_polynomial(Q, 3);
    SmithIdealVect good = smith_from_augmented(b);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        SmithIdealVect bad = corrupt_mu(good, rng);
        Report rep = verify_smith_ideal(bad);
        CHECK_FALSE(rep.ok());
        bool witnessed = false;
        for (const auto& r : rep.records())
            if (!r.pass && !r.witness.empty()) witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("is_unit_cokernel rejects the zero ideal in k x k") {
    // j = (0 -> k^2) with R = k x k: a Smith ideal whose cokernel is 2-dim
    NonUnitalAlgebra kk(Q, 2, {{0, 0, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}});
    ArrowObject j{Matrix(Q, 2, 0)};
    BoxProduct box = pushout_product(j, j);
    ArrowMorphism mu{box.arrow, j, Matrix(Q, 0, 0), kk.multiplication_matrix()};
    ArrowMorphism eta{unit_box(Q), j, Matrix(Q, 0, 0), Matrix::from_rows(Q, {{1}, {1}})};
    SmithIdealVect s{j, mu, eta};
    CHECK(verify_smith_ideal(s).ok());
    CHECK_FALSE(is_unit_cokernel(s));
    CHECK_THROWS_AS(cok_smith(s), NotUnitCokernelError);
}

TEST_CASE("nu_algebra_as_smith") {
    SmithIdealVect dual = nu_algebra_as_smith(square_zero(Q, 1));
    CHECK(verify_smith_ideal(dual).ok());
    CHECK(dual.j.cod_dim() == 2);
    CHECK(adjunction_unit(dual.j).is_isomorphism());

    SmithIdealVect unit_ideal = nu_algebra_as_smith(square_zero(F5, 0));
    CHECK(unit_ideal.j == unit_box(F5));

    NonUnitalAlgebra x2 = augmentation_kernel(truncated_polynomial(Q, 2)).first;
    SmithIdealVect s = nu_algebra_as_smith(x2);
    CHECK(verify_smith_ideal(s).ok());
    CHECK(is_unit_cokernel(s));
}

TEST_CASE("agreement of the two non-unital descriptions") {
    for (const auto& b : {truncated_polynomial(Q, 3), cyclic_group_algebra(F5, 3),
                          upper_triangular(Q, 2)}) {
        SmithIdealVect s = smith_from_augmented(b);
        Report rep = smith_agreement_report(s);
        CHECK(rep.ok());
    }
}

TEST_CASE("smith ideals survive a change of basis") {
    Rng rng(11);
    AugmentedAlgebra b = conjugate(truncated_polynomial(Q, 3), random_invertible(rng, Q, 3));
    REQUIRE(validate(b).ok());
    SmithIdealVect s = smith_from_augmented(b);
    CHECK(verify_smith_ideal(s).ok());
    CHECK(is_unit_cokernel(s));
    CHECK(cok_smith(s) == b);
    CHECK(smith_agreement_report(s).ok());
}

TEST_CASE("commutativity flag") {
    // k[x]/(x^3) is commutative
    SmithIdealVect s = smith_from_augmented(truncated_polynomial(Q, 3));
    CHECK(verify_smith_ideal(s, true).ok());
    // upper triangular 2x2 is not
    SmithIdealVect t = smith_from_augmented(upper_triangular(Q, 2));
    CHECK(verify_smith_ideal(t, false).ok());
    Report rep = verify_smith_ideal(t, true);
    CHECK_FALSE(rep.ok());
}
