#pragma once

#include <utility>

#include "core/algebra.hpp"
#include "core/chain.hpp"
#include "core/report.hpp"

namespace arrowsmith {

/// Strictly associative multiplication on a bounded complex, no unit
/// assumed.  Associativity is checked through the triple-tensor
/// regrouping permutation.
struct DGAlgebraNU {
    ChainComplex carrier;
    ChainMap mult;  // carrier (x) carrier -> carrier
};

struct AugmentedDGAlgebra {
    ChainComplex carrier;
    ChainMap mult;
    ChainMap unit;  // k[0] -> carrier
    ChainMap eps;   // carrier -> k[0]
};

Report validate(const DGAlgebraNU& a);
Report validate(const AugmentedDGAlgebra& b);

/// k[0] + A with the unitalization formula applied degreewise; the unit
/// coordinate sits first in degree 0.
AugmentedDGAlgebra dg_unitalize(const DGAlgebraNU& a);  // throws NotAssociativeError

/// Strict degreewise kernel of eps with restricted multiplication, plus
/// the inclusion.
std::pair<DGAlgebraNU, ChainMap> dg_augmentation_kernel(const AugmentedDGAlgebra& b);

/// The inclusion A -> k[0] + A as a chain map.
ChainMap dg_unit_inclusion(const DGAlgebraNU& a, const AugmentedDGAlgebra& b);

/// dg_augmentation_kernel(dg_unitalize(A)) returns A itself, matrices and
/// all; verified here together with validity of both sides.
Report dg_roundtrip_report(const DGAlgebraNU& a);

/// The stable correspondence at desk scale: j = (A -> k[0] + A) has
/// homotopy cokernel weakly equivalent to the unit k[0], and the unit
/// comparison j -> hofib(hocofib(j)) is a componentwise weak equivalence.
Report main_theorem_check(const DGAlgebraNU& a);

/// Degree-0 embedding of a structure-constant algebra.
DGAlgebraNU dg_from_algebra(const NonUnitalAlgebra& a);

}  // namespace arrowsmith
