#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace torusact {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from numerator/denominator. Throws on zero denominator.
inline Rat makeRat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p" (base 10). Result is canonical.
Rat parseRational(const std::string& text);

/// "p/q" when q != 1, otherwise "p".
std::string toString(const Rat& q);

/// Floor division for arbitrary-precision integers (b != 0).
inline Int floorDiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool isInteger(const Rat& q) { return q.get_den() == 1; }

/// q - floor(q), in [0, 1).
inline Rat fractionalPart(const Rat& q) {
    Int fl = floorDiv(q.get_num(), q.get_den());
    return q - Rat(fl);
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace torusact
