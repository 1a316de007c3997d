#pragma once

#include "core/algebra.hpp"
#include "core/arrow.hpp"
#include "core/report.hpp"

namespace arrowsmith {

/// A candidate monoid object (j, mu, eta) of the arrow category under the
/// pushout-product structure: an ideal inclusion j : I -> R with
/// multiplication mu : j [] j -> j and unit eta : (0 -> k) -> j.
struct SmithIdealVect {
    ArrowObject j;
    ArrowMorphism mu;
    ArrowMorphism eta;
};

/// Ker(eps) -> B as a Smith ideal; mu restricts B's multiplication along
/// the pushout-product structure maps (checked to be well defined).
SmithIdealVect smith_from_augmented(const AugmentedAlgebra& b);

/// Exact verification of every monoid axiom.  Unit laws compare against
/// the strict unitors; associativity is checked after precomposition with
/// the three jointly-epimorphic corner injections of the iterated
/// pushout-product cube, whose joint surjectivity is itself asserted by a
/// rank computation.
Report verify_smith_ideal(const SmithIdealVect& s, bool check_commutative = false);

/// dim Coker(j) = 1 and the cokernel projection, normalized by eta, is an
/// algebra map splitting the unit.
bool is_unit_cokernel(const SmithIdealVect& s);

/// Reads the augmented algebra off a unit-cokernel Smith ideal: carrier
/// R, multiplication mu.comp1, unit eta.comp1, augmentation the
/// normalized cokernel of j.  Throws NotUnitCokernelError.
AugmentedAlgebra cok_smith(const SmithIdealVect& s);

SmithIdealVect nu_algebra_as_smith(const NonUnitalAlgebra& a);

/// Agreement of the two descriptions of non-unital algebra objects on one
/// instance: s is a verified localized unit-cokernel ideal, and s is
/// isomorphic as a monoid object to smith_from_augmented(cok_smith(s)).
Report smith_agreement_report(const SmithIdealVect& s);

}  // namespace arrowsmith
