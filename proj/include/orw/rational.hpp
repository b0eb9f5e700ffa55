#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace orw {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every entry point canonicalizes, so all
// construction from raw integer pairs or text goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> rational_from_string(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
std::string to_string(const Rational& q);

/// Exact binomial coefficient C(n, k); zero for k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace orw
