#pragma once

#include <string>
#include <variant>

#include "core/algebra.hpp"
#include "core/arrow.hpp"
#include "core/chain.hpp"
#include "core/dg.hpp"
#include "core/report.hpp"

namespace arrowsmith {

/// A chain endomorphism: MAP blocks in a complex file describe a map from
/// the listed complex to itself.
struct ChainMapDoc {
    ChainMap map;
};

using Document = std::variant<NonUnitalAlgebra, UnitalAlgebra, AugmentedAlgebra, ArrowObject,
                              ChainComplex, ChainMapDoc, DGAlgebraNU>;

/// "nonunital-algebra", "unital-algebra", "augmented-algebra", "arrow",
/// "chain-complex", "chain-map", "dg-algebra".
std::string document_kind(const Document& doc);

/// Line-oriented formats, '#' comments.  Throws ParseError with the
/// offending line number.  Structural invariants (associativity, d o d,
/// chain conditions) are NOT enforced here; validate_document reports
/// them.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);  // ParseError / std::runtime_error on IO

std::string emit_document(const Document& doc);
void write_document(const Document& doc, const std::string& path);

/// Type-dispatched invariant checks for every document kind.
Report validate_document(const Document& doc);

/// `rows cols ; e11 e12 ... ; e21 ...`
Matrix parse_matrix_literal(const Field& field, const std::string& text, int line);
std::string emit_matrix_literal(const Matrix& m);

}  // namespace arrowsmith
