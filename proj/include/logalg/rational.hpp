#pragma once

// Exact rational scalars. Every symbolic coefficient in the library is a Rat;
// floating point only appears in numeric evaluation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logalg {

using Rat = mpq_class;
using Int = mpz_class;

/// Canonical "p/q" form, or "p" when q == 1. Sign is carried by the numerator.
std::string to_string(const Rat& r);

/// Parses "p", "p/q" or a terminating decimal such as "-0.25".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// r^n for integer n; n < 0 requires r != 0.
Rat pow(const Rat& r, long n);

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace logalg
