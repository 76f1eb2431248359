#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace vis {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every operation, which is exactly the
// normalization contract the predicates rely on.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Serialized form is "p/q", with "/q" omitted when the denominator is 1.
std::string to_string(const Rational& q);

// Parses "p", "p/q", or a plain decimal like "1.25". Throws on malformed input.
Rational parse_rational(const std::string& s);

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q);

}  // namespace vis
