#pragma once

// Exact rational coefficients backed by GMP. mpq_class keeps results of
// arithmetic in lowest terms with a positive denominator; values built from
// raw numerator/denominator pairs go through make_rational to get there too.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nagata {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "3", "-3/2": integer parts only, no decimal point.
inline Rational rational_from_string(std::string_view text) {
    Rational r;
    if (r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace nagata
