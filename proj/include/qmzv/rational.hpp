#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qmzv {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator), which is exactly the invariant we need everywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q".
inline Rational rat_parse(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

} // namespace qmzv
