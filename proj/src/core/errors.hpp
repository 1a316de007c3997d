#pragma once

#include <stdexcept>
#include <string>

namespace arrowsmith {

struct FieldMismatchError : std::invalid_argument {
    explicit FieldMismatchError(const std::string& what)
        : std::invalid_argument("field mismatch: " + what) {}
};

struct ShapeMismatchError : std::invalid_argument {
    explicit ShapeMismatchError(const std::string& what)
        : std::invalid_argument("shape mismatch: " + what) {}
};

// A diagram that was supposed to commute does not: some map refuses to
// factor through a kernel or cokernel.
struct NoFactorizationError : std::runtime_error {
    explicit NoFactorizationError(const std::string& what)
        : std::runtime_error("no factorization: " + what) {}
};

struct NotAssociativeError : std::runtime_error {
    explicit NotAssociativeError(const std::string& what)
        : std::runtime_error("multiplication table is not associative: " + what) {}
};

struct NotUnitCokernelError : std::runtime_error {
    explicit NotUnitCokernelError(const std::string& what)
        : std::runtime_error("not a unit-cokernel ideal: " + what) {}
};

// The comparison map cok(f [] g) -> cok(f) (x) cok(g) failed to be an
// isomorphism.  That map is always invertible here, so this only fires on
// an internal bug.
struct ComparisonNotIsoError : std::logic_error {
    explicit ComparisonNotIsoError(const std::string& what)
        : std::logic_error("monoidal comparison is not an isomorphism: " + what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& reason)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + reason),
          line(line_) {}
};

}  // namespace arrowsmith
