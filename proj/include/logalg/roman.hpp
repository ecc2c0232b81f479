#pragma once

// Roman numbers, factorials and coefficients: the integer-indexed scalars of
// the logarithmic algebra.
//
//   roman(n)            = n for n != 0, and 1 for n == 0
//   roman_factorial(n)  satisfies rf(n) = roman(n) * rf(n - 1), rf(0) = 1
//
// so rf(n) = n! for n >= 0 and rf(n) = (-1)^(-n-1) / (-n-1)! for n < 0.

#include "logalg/rational.hpp"

namespace logalg {

Rat roman(long n);

Rat roman_factorial(long n);

/// rf(a) / (rf(b) * rf(a - b)).
Rat roman_coeff(long a, long b);

/// rf(a) / rf(b), by telescoping over roman values between b and a.
Rat roman_ratio(long a, long b);

}  // namespace logalg
