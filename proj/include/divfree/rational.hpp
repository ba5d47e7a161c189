#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace divfree {

// All coefficient arithmetic in the library is exact. GMP rationals are kept
// in canonical form (coprime numerator/denominator, positive denominator), so
// operator== is a true equality test.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace divfree
