#include "doctest.h"

#include "core/algebra.hpp"
#include "core/corpus.hpp"
#include "core/errors.hpp"

using namespace arrowsmith;

namespace {
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

// k x k with eps the first projection
AugmentedAlgebra k_times_k() {
    NonUnitalAlgebra base(Q, 2, {{0, 0, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}});
    Matrix unit = Matrix::from_rows(Q, {{1}, {1}});
    Matrix eps = Matrix::from_rows(Q, {{1, 0}});
    return AugmentedAlgebra(UnitalAlgebra(std::move(base), std::move(unit)), std::move(eps));
}
}  // namespace

TEST_CASE("associativity checking") {
    CHECK(is_associative(square_zero(Q, 4)));
    CHECK(is_associative(truncated_polynomial(F5, 3).base()));

    // corrupt k[x]/(x^3) by declaring x * x^2 = 1: then (xx)x^2 = 0 but
    // x(xx^2) = x
    std::vector<MultTriple> triples;
    for (std::size_t j = 0; j < 3; ++j) {
        triples.push_back({0, j, j, Scalar(1)});
        if (j > 0) triples.push_back({j, 0, j, Scalar(1)});
    }
    triples.push_back({1, 1, 2, Scalar(1)});
    triples.push_back({1, 2, 0, Scalar(1)});
    NonUnitalAlgebra bad(Q, 3, std::move(triples));
    Report rep = check_associativity(bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.records().front().witness.find("(") != std::string::npos);
}

TEST_CASE("unitalize") {
    // 0-dim algebra gives the base field
    AugmentedAlgebra field_alg = unitalize(square_zero(Q, 0));
    CHECK(field_alg.dim() == 1);
    CHECK(validate(field_alg).ok());
    CHECK(field_alg.eps() == Matrix::from_rows(Q, {{1}}));

    // square-zero in dim 1 gives the dual numbers = k[x]/(x^2) on the nose
    AugmentedAlgebra duals = unitalize(square_zero(Q, 1));
    CHECK(duals == truncated_polynomial(Q, 2));

    // the defining formula (m,a)(n,b) = (mn, na+mb+ab) on random elements
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        NonUnitalAlgebra a = augmentation_kernel(upper_triangular(Q, 2)).first;
        AugmentedAlgebra va = unitalize(a);
        Matrix x_a = random_matrix(rng, Q, a.dim(), 1), y_a = random_matrix(rng, Q, a.dim(), 1);
        Scalar m = rng.scalar(Q), n = rng.scalar(Q);
        Matrix x(Q, a.dim() + 1, 1), y(Q, a.dim() + 1, 1);
        x.set(0, 0, m);
        y.set(0, 0, n);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            x.set(i + 1, 0, x_a.at(i, 0));
            y.set(i + 1, 0, y_a.at(i, 0));
        }
        Matrix got = va.base().multiply(x, y);
        Matrix want(Q, a.dim() + 1, 1);
        want.set(0, 0, Q.mul(m, n));
        Matrix tail = x_a.scaled(n) + y_a.scaled(m) + a.multiply(x_a, y_a);
        for (std::size_t i = 0; i < a.dim(); ++i) want.set(i + 1, 0, tail.at(i, 0));
        CHECK(got == want);
    }

    // embedded structure constants are unchanged
    NonUnitalAlgebra a = augmentation_kernel(cyclic_group_algebra(Q, 3)).first;
    AugmentedAlgebra va = unitalize(a);
    for (const auto& t : a.triples()) {
        bool found = false;
        for (const auto& s : va.base().triples())
            if (s.i == t.i + 1 && s.j == t.j + 1 && s.k == t.k + 1 && s.c == t.c) found = true;
        CHECK(found);
    }

    // non-associative input is rejected
    NonUnitalAlgebra bad(Q, 2, {{0, 0, 1, Scalar(1)}, {1, 0, 0, Scalar(1)}});
    CHECK_FALSE(is_associative(bad));
    CHECK_THROWS_AS(unitalize(bad), NotAssociativeError);
}

TEST_CASE("augmentation_kernel") {
    // kernel of a unitalization is the original algebra on the nose
    NonUnitalAlgebra a = square_zero(F5, 2);
    auto [back, incl] = augmentation_kernel(unitalize(a));
    CHECK(back == a);
    CHECK(is_mono(incl.matrix));
    CHECK(is_multiplicative(incl));

    // dual numbers: kernel is 1-dim square-zero
    auto [dk, dincl] = augmentation_kernel(truncated_polynomial(Q, 2));
    CHECK(dk.dim() == 1);
    CHECK(dk.triples().empty());

    // k x k with the first projection: kernel generated by y with y^2 = y
    auto [yk, yincl] = augmentation_kernel(k_times_k());
    CHECK(yk.dim() == 1);
    REQUIRE(yk.triples().size() == 1);
    CHECK(yk.triples()[0].c == Scalar(1));
}

TEST_CASE("roundtrips") {
    CHECK(roundtrip_nu_report(square_zero(Q, 3)).ok());
    CHECK(roundtrip_nu_report(augmentation_kernel(upper_triangular(F5, 3)).first).ok());

    // k x k: the iso has columns (unit, kernel basis)
    AlgebraMorphism iso = roundtrip_aug(k_times_k());
    CHECK(iso.matrix == Matrix::from_rows(Q, {{1, 0}, {1, 1}}));
    CHECK(roundtrip_aug_report(k_times_k()).ok());

    // upper triangular 2x2: 3-dim iso by the same recipe
    Report ut = roundtrip_aug_report(upper_triangular(Q, 2));
    CHECK(ut.ok());

    // cyclic C2 over Q splits as k x k; the idempotents (1 +- g)/2
    AugmentedAlgebra c2 = cyclic_group_algebra(Q, 2);
    Matrix ep = Matrix::column(Q, {Scalar(1, 2), Scalar(1, 2)});
    Matrix em = Matrix::column(Q, {Scalar(1, 2), Scalar(-1, 2)});
    CHECK(c2.base().multiply(ep, ep) == ep);
    CHECK(c2.base().multiply(em, em) == em);
    CHECK(c2.base().multiply(ep, em).is_zero());
    CHECK(ep + em == c2.unit());
    CHECK(roundtrip_aug_report(c2).ok());
}

TEST_CASE("validate reports broken invariants") {
    CHECK(validate(truncated_polynomial(Q, 4)).ok());
    CHECK(validate(upper_triangular(F5, 3)).ok());

    // wrong unit
    UnitalAlgebra bad_unit(truncated_polynomial(Q, 2).base(),
                           Matrix::from_rows(Q, {{0}, {1}}));
    CHECK_FALSE(validate(bad_unit).ok());

    // eps not multiplicative: eps(x) = 1 on the dual numbers
    AugmentedAlgebra bad_eps(truncated_polynomial(Q, 2).alg(), Matrix::from_rows(Q, {{1, 1}}));
    CHECK_FALSE(validate(bad_eps).ok());

    // eps not splitting the unit
    AugmentedAlgebra bad_split(truncated_polynomial(Q, 2).alg(),
                               Matrix::from_rows(Q, {{2, 0}}));
    CHECK_FALSE(validate(bad_split).ok());
}

TEST_CASE("section property eps o unit = id") {
    for (const auto& b : standard_augmented_corpus())
        CHECK((b.eps() * b.unit()).is_identity());
}
