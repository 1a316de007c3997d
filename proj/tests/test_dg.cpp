#include "doctest.h"

#include "core/corpus.hpp"
#include "core/dg.hpp"
#include "core/errors.hpp"

using namespace arrowsmith;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

DGAlgebraNU square_zero_in_degree(Field f, int degree, std::size_t n) {
    ChainComplex carrier = ChainComplex::concentrated(f, degree, n);
    return {carrier, ChainMap::zero(tensor_complex(carrier, carrier), carrier)};
}
}  // namespace

TEST_CASE("degree-0 dg algebras agree with the vector-space module") {
    for (const auto& a : standard_nonunital_corpus()) {
        DGAlgebraNU dga = dg_from_algebra(a);
        CHECK(validate(dga).ok());
        AugmentedDGAlgebra b = dg_unitalize(dga);
        AugmentedAlgebra vect = unitalize(a);
        CHECK(b.carrier.dim(0) == vect.dim());
        CHECK(b.mult.component(0) == vect.base().multiplication_matrix());
        CHECK(b.unit.component(0) == vect.unit());
        CHECK(b.eps.component(0) == vect.eps());
        auto [kernel, incl] = dg_augmentation_kernel(b);
        CHECK(kernel.mult.component(0) ==
              augmentation_kernel(vect).first.multiplication_matrix());
    }
}

TEST_CASE("unitalizing the odd square-zero line gives the exterior algebra") {
    DGAlgebraNU a = square_zero_in_degree(Q, 1, 1);
    AugmentedDGAlgebra b = dg_unitalize(a);
    CHECK(validate(b).ok());
    CHECK(b.carrier.dim(0) == 1);
    CHECK(b.carrier.dim(1) == 1);
    CHECK(b.carrier.dim(2) == 0);  // x^2 has nowhere to live
    // 1*x and x*1 are both x
    CHECK(b.mult.component(1) == Matrix::from_rows(Q, {{1, 1}}));
    // eps kills x
    CHECK(b.eps.component(1) == Matrix(Q, 0, 1));

    auto [back, incl] = dg_augmentation_kernel(b);
    CHECK(back.carrier == a.carrier);
    CHECK(back.mult == a.mult);
}

TEST_CASE("dg unitalization of the empty algebra is the base field") {
    DGAlgebraNU zero = square_zero_in_degree(F5, 0, 0);
    AugmentedDGAlgebra b = dg_unitalize(zero);
    CHECK(b.carrier.dim(0) == 1);
    CHECK(validate(b).ok());
}

TEST_CASE("dg roundtrips are the identity on the nose") {
    for (const auto& a : standard_dg_corpus()) CHECK(dg_roundtrip_report(a).ok());
}

TEST_CASE("a dg algebra with a differential roundtrips too") {
    // carrier k --id--> k in degrees 1,0 with zero multiplication beyond
    // the required: actually take the square-zero multiplication
    ChainComplex carrier(Q, 0, {1, 1}, {{1, Matrix::identity(Q, 1)}});
    DGAlgebraNU a{carrier, ChainMap::zero(tensor_complex(carrier, carrier), carrier)};
    REQUIRE(validate(a).ok());
    CHECK(dg_roundtrip_report(a).ok());
    CHECK(main_theorem_check(a).ok());
}

TEST_CASE("non-associative dg multiplication is rejected") {
    // degree-0: x*x^2 = 1 corruption as in the algebra tests
    std::vector<MultTriple> triples;
    for (std::size_t j = 0; j < 3; ++j) {
        triples.push_back({0, j, j, Scalar(1)});
        if (j > 0) triples.push_back({j, 0, j, Scalar(1)});
    }
    triples.push_back({1, 1, 2, Scalar(1)});
    triples.push_back({1, 2, 0, Scalar(1)});
    NonUnitalAlgebra bad(Q, 3, std::move(triples));
    DGAlgebraNU dga = dg_from_algebra(bad);
    CHECK_FALSE(validate(dga).ok());
    CHECK_THROWS_AS(dg_unitalize(dga), NotAssociativeError);
}

TEST_CASE("main theorem desk check over the dg corpus") {
    for (const auto& a : standard_dg_corpus()) {
        Report rep = main_theorem_check(a);
        CHECK(rep.ok());
    }
}

TEST_CASE("main theorem check details on the dual numbers") {
    DGAlgebraNU a = square_zero_in_degree(Q, 0, 1);
    Report rep = main_theorem_check(a);
    REQUIRE(rep.ok());

    AugmentedDGAlgebra b = dg_unitalize(a);
    ChainMap j = dg_unit_inclusion(a, b);
    ConeResult hocofib = cone(j);
    CHECK(homology_dim(hocofib.cone, 0) == 1);
    CHECK(homology_dim(hocofib.cone, 1) == 0);
}
