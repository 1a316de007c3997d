#pragma once

#include <gmpxx.h>

#include <string>

namespace arrowsmith {

/// Exact scalars.  Rationals are kept canonical by GMP; prime-field
/// elements are stored as canonical residues 0..p-1 with denominator 1.
using Scalar = mpq_class;

/// The base field: either Q or F_p for a prime p.  Every arithmetic
/// operation on matrix entries goes through a Field so residues stay
/// canonical.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(unsigned long p);  // throws std::invalid_argument unless p is prime

    /// Accepts "Q", "FP <p>" and "FP:<p>".
    static Field parse_spec(const std::string& spec);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    unsigned long characteristic() const { return p_; }

    bool operator==(const Field&) const = default;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long v) const;

    /// Canonical representative of an arbitrary rational in this field.
    /// In F_p this interprets num/den via the modular inverse of den and
    /// throws std::domain_error when p divides den.
    Scalar reduce(const Scalar& a) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws std::domain_error on zero
    Scalar div(const Scalar& a, const Scalar& b) const;

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
    static bool is_one(const Scalar& a) { return a == 1; }

    /// Parses "p/q" or an integer token; result is reduced into the field.
    Scalar parse_scalar(const std::string& token) const;
    std::string format_scalar(const Scalar& a) const;

    /// "Q" or "FP <p>", matching the file-format FIELD line.
    std::string spec_string() const;

private:
    Field(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

    Kind kind_;
    unsigned long p_;
};

}  // namespace arrowsmith
