#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/algebra.hpp"
#include "core/arrow.hpp"
#include "core/chain.hpp"
#include "core/dg.hpp"

namespace arrowsmith {

/// Deterministic generator: identical seeds give bit-identical instances.
/// Raw engine words are reduced by modulo instead of going through
/// std distributions, whose outputs are not pinned by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t word() { return engine_(); }
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : word() % bound; }
    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// Small integer over Q (range -4..4), uniform residue over F_p.
    Scalar scalar(const Field& field);

private:
    std::mt19937_64 engine_;
};

/// k[x]/(x^n) with eps(x) = 0.
AugmentedAlgebra truncated_polynomial(Field field, std::size_t n);

/// Upper-triangular n x n matrices on the matrix-unit basis (row-major
/// order of pairs r <= s); eps is the (1,1) entry.
AugmentedAlgebra upper_triangular(Field field, std::size_t n);

/// Group algebra of Z/n with eps(g) = 1.
AugmentedAlgebra cyclic_group_algebra(Field field, std::size_t n);

/// Zero multiplication in dimension n.
NonUnitalAlgebra square_zero(Field field, std::size_t n);

Matrix random_matrix(Rng& rng, Field field, std::size_t rows, std::size_t cols);

/// Product of unitriangular factors and a permutation; always invertible.
Matrix random_invertible(Rng& rng, Field field, std::size_t n);

/// Conjugate an augmented algebra by a change of basis (columns of p are
/// the new basis vectors in old coordinates).
AugmentedAlgebra conjugate(const AugmentedAlgebra& b, const Matrix& p);

ArrowObject random_arrow(std::uint64_t seed, Field field, std::size_t max_dim);
ArrowObject random_arrow(Rng& rng, Field field, std::size_t max_dim);

/// Random morphism between two arrows, drawn from the exact solution
/// space of the commuting-square constraint.
ArrowMorphism random_arrow_morphism(Rng& rng, const ArrowObject& a, const ArrowObject& b);

/// Differentials are built downward through kernel bases, so d o d = 0
/// holds by construction.
ChainComplex random_complex(std::uint64_t seed, Field field, int lo, int hi, std::size_t max_dim);
ChainComplex random_complex(Rng& rng, Field field, int lo, int hi, std::size_t max_dim);

/// Random chain map between two fresh random complexes, drawn from the
/// exact solution space of the chain condition.
ChainMap random_chain_map(std::uint64_t seed, Field field, int lo, int hi, std::size_t max_dim);
ChainMap random_chain_map(Rng& rng, Field field, int lo, int hi, std::size_t max_dim);

/// The named-family corpora driving the acceptance suites.
std::vector<AugmentedAlgebra> standard_augmented_corpus();
std::vector<NonUnitalAlgebra> standard_nonunital_corpus();
std::vector<DGAlgebraNU> standard_dg_corpus();

}  // namespace arrowsmith
