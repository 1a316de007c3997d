#include "core/field.hpp"

#include <stdexcept>

namespace arrowsmith {

Field Field::prime(unsigned long p) {
    mpz_class pz(p);
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("FP modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

Field Field::parse_spec(const std::string& spec) {
    if (spec == "Q") return rationals();
    std::string body;
    if (spec.rfind("FP:", 0) == 0)
        body = spec.substr(3);
    else if (spec.rfind("FP ", 0) == 0)
        body = spec.substr(3);
    else
        throw std::invalid_argument("unknown field spec '" + spec + "' (expected Q or FP:<p>)");
    std::size_t pos = 0;
    unsigned long p = std::stoul(body, &pos);
    if (pos != body.size()) throw std::invalid_argument("bad FP modulus '" + body + "'");
    return prime(p);
}

Scalar Field::from_long(long v) const { return reduce(Scalar(v)); }

Scalar Field::reduce(const Scalar& a) const {
    if (kind_ == Kind::rationals) {
        Scalar r = a;
        r.canonicalize();
        return r;
    }
    mpz_class p(p_);
    mpz_class num = a.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = a.get_den() % p;
    if (den == 0) throw std::domain_error("denominator divisible by " + std::to_string(p_));
    if (den != 1) {
        mpz_class di;
        mpz_invert(di.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num = (num * di) % p;
    }
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return a + b;
    return reduce(Scalar(a + b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return a - b;
    return reduce(Scalar(a - b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::rationals) return a * b;
    return reduce(Scalar(a * b));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::rationals) return -a;
    return reduce(Scalar(-a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (kind_ == Kind::rationals) return 1 / a;
    mpz_class p(p_), ai;
    mpz_invert(ai.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(ai);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::parse_scalar(const std::string& token) const {
    Scalar a;
    try {
        a = Scalar(token);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad scalar '" + token + "'");
    }
    a.canonicalize();
    return reduce(a);
}

std::string Field::format_scalar(const Scalar& a) const { return a.get_str(); }

std::string Field::spec_string() const {
    return kind_ == Kind::rationals ? "Q" : "FP " + std::to_string(p_);
}

}  // namespace arrowsmith
