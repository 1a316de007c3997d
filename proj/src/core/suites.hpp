#pragma once

#include <cstdint>

#include "core/io.hpp"
#include "core/report.hpp"

namespace arrowsmith {

/// Randomized arrow-category suite: strong monoidal comparison, triangle
/// identities, transpose roundtrips, unit laws, symmetry, image
/// localization, cube injections.  Instance i draws from seed + i and
/// contributes one record.
Report monoidal_suite(Field field, std::uint64_t seed, long count);

/// Randomized stability suite over bounded complexes: unit and counit
/// comparisons are quasi-isomorphisms, cone(id) is acyclic, tensor units
/// are strict, pushout products of injective pairs have the expected
/// degreewise dimensions.
Report stable_suite(Field field, std::uint64_t seed, long count);

/// Per-document dispatch used by the CLI-facing interface.  Throws
/// std::invalid_argument when the document kind does not fit the check.
Report roundtrip_check(const Document& doc);
Report smith_check(const Document& doc);
Report dg_roundtrip_check(const Document& doc);
Report main_theorem_check_doc(const Document& doc);

/// One explicit arrow pair through the monoidal identities.
Report monoidal_pair_check(const ArrowObject& f, const ArrowObject& g);

}  // namespace arrowsmith
