#pragma once

#include <utility>
#include <vector>

#include "core/matrix.hpp"
#include "core/report.hpp"

namespace arrowsmith {

struct MultTriple {
    std::size_t i, j, k;
    Scalar c;

    bool operator==(const MultTriple&) const = default;
};

/// Associative algebra without an assumed unit, presented by structure
/// constants: e_i e_j = sum_k c[i][j][k] e_k.  Stored as sorted sparse
/// triples; validation runs the full n^3 loop.
class NonUnitalAlgebra {
public:
    NonUnitalAlgebra(Field field, std::size_t dim, std::vector<MultTriple> triples);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<MultTriple>& triples() const { return triples_; }

    /// The multiplication as a matrix A (x) A -> A: column i*dim+j holds
    /// the coordinates of e_i e_j.
    const Matrix& multiplication_matrix() const { return mult_matrix_; }

    Matrix multiply(const Matrix& x, const Matrix& y) const;  // column vectors

    bool operator==(const NonUnitalAlgebra&) const = default;

private:
    Field field_;
    std::size_t dim_;
    std::vector<MultTriple> triples_;
    Matrix mult_matrix_;
};

class UnitalAlgebra {
public:
    UnitalAlgebra(NonUnitalAlgebra base, Matrix unit);  // unit is dim x 1

    const NonUnitalAlgebra& base() const { return base_; }
    const Matrix& unit() const { return unit_; }
    const Field& field() const { return base_.field(); }
    std::size_t dim() const { return base_.dim(); }

    bool operator==(const UnitalAlgebra&) const = default;

private:
    NonUnitalAlgebra base_;
    Matrix unit_;
};

class AugmentedAlgebra {
public:
    AugmentedAlgebra(UnitalAlgebra alg, Matrix eps);  // eps is 1 x dim

    const UnitalAlgebra& alg() const { return alg_; }
    const Matrix& eps() const { return eps_; }
    const NonUnitalAlgebra& base() const { return alg_.base(); }
    const Matrix& unit() const { return alg_.unit(); }
    const Field& field() const { return alg_.field(); }
    std::size_t dim() const { return alg_.dim(); }

    bool operator==(const AugmentedAlgebra&) const = default;

private:
    UnitalAlgebra alg_;
    Matrix eps_;
};

/// A linear map between structure-constant algebras, to be checked for
/// multiplicativity (and unit/augmentation preservation where typed).
struct AlgebraMorphism {
    NonUnitalAlgebra src, dst;
    Matrix matrix;  // dst.dim x src.dim
};

Report check_associativity(const NonUnitalAlgebra& a);
bool is_associative(const NonUnitalAlgebra& a);

bool is_multiplicative(const AlgebraMorphism& m);
bool preserves_unit(const Matrix& unit_src, const Matrix& unit_dst, const Matrix& m);
bool preserves_augmentation(const Matrix& eps_src, const Matrix& eps_dst, const Matrix& m);

Report validate(const NonUnitalAlgebra& a);
Report validate(const UnitalAlgebra& a);
Report validate(const AugmentedAlgebra& a);

/// V + A with multiplication (m,a)(n,b) = (mn, na+mb+ab); the unit is the
/// new coordinate 0 and the augmentation projects onto it.
AugmentedAlgebra unitalize(const NonUnitalAlgebra& a);  // throws NotAssociativeError

/// Kernel of the augmentation with its restricted multiplication, plus
/// the inclusion into B.
std::pair<NonUnitalAlgebra, AlgebraMorphism> augmentation_kernel(const AugmentedAlgebra& b);

/// The two directions of the equivalence: A -> Ker(eps of V+A), and
/// V + Ker(eps) -> B via (m, a) |-> m e + a.
AlgebraMorphism roundtrip_nu(const NonUnitalAlgebra& a);
AlgebraMorphism roundtrip_aug(const AugmentedAlgebra& b);

/// Full verification of both roundtrips as reports (isomorphism,
/// multiplicativity, unit and augmentation preservation).
Report roundtrip_nu_report(const NonUnitalAlgebra& a);
Report roundtrip_aug_report(const AugmentedAlgebra& b);

}  // namespace arrowsmith
