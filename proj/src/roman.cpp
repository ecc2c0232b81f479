#include "logalg/roman.hpp"

namespace logalg {

Rat roman(long n) { return n == 0 ? Rat(1) : Rat(n); }

Rat roman_factorial(long n) {
    if (n >= 0) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
        return Rat(f);
    }
    const unsigned long m = static_cast<unsigned long>(-n - 1);
    Int f;
    mpz_fac_ui(f.get_mpz_t(), m);
    Rat r(Int(m % 2 == 0 ? 1 : -1), f);
    r.canonicalize();
    return r;
}

Rat roman_coeff(long a, long b) {
    return roman_ratio(a, b) / roman_factorial(a - b);
}

Rat roman_ratio(long a, long b) {
    Rat product(1);
    if (a >= b) {
        for (long k = b + 1; k <= a; ++k) product *= roman(k);
        return product;
    }
    for (long k = a + 1; k <= b; ++k) product *= roman(k);
    return 1 / product;
}

}  // namespace logalg
